#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "volterra/errors.hpp"
#include "volterra/fit.hpp"
#include "volterra/matrix.hpp"
#include "volterra/time_grid.hpp"

namespace volterra {

enum class KernelKind { FbmVolterra, RiemannLiouville, Mixture };

/// Which Volterra kernel K(t,s) drives the process, with its parameters.
/// Immutable after construction; all evaluation is pure.
class KernelSpec {
public:
    static KernelSpec fbm(double hurst, double horizon);
    static KernelSpec riemann_liouville(double hurst, double horizon);
    static KernelSpec mixture(std::vector<std::pair<double, KernelSpec>> components, double horizon);

    KernelKind kind() const { return kind_; }
    double hurst() const { return hurst_; }
    double horizon() const { return horizon_; }
    const std::vector<std::pair<double, KernelSpec>>& components() const { return components_; }

    /// True when the kernel certifies the eps^H lower-bound regime without
    /// help: fBm needs H > 1/2, Riemann-Liouville any H, mixtures need some
    /// component in its own regime.
    bool assumption_satisfying() const;

private:
    KernelSpec() = default;
    KernelKind kind_ = KernelKind::FbmVolterra;
    double hurst_ = 0.5;
    double horizon_ = 1.0;
    std::vector<std::pair<double, KernelSpec>> components_;
};

/// kappa_eps^2 = integral of K(t,s)^2 over s in (t-eps, t).
struct LocalVariance {
    double t = 0.0;
    double epsilon = 0.0;
    double value = 0.0;
};

/// Empirical certificate for kappa_eps >= c * eps^H.
struct BoundReport {
    struct Row {
        double t;
        double epsilon;
        double kappa;
    };
    double inf_ratio = 0.0; // inf over the grid of kappa_eps / eps^H
    SlopeFit fit;           // log kappa vs log eps, pooled over t
    std::vector<Row> table;
};

/// K(t,s) for 0 < s < t <= T. Mixtures evaluate to the weighted sum.
double kernel_eval(const KernelSpec& spec, double t, double s);

/// Quadrature of K(t,.)^2 over (t-eps, t); the power behavior at both the
/// s -> t and (for full windows) s -> 0 endpoints is integrated in closed
/// form cell by cell, so Riemann-Liouville windows come out exact.
/// eps == t (full window) is allowed. Throws QuadratureError if the
/// estimated relative error exceeds 1e-8.
LocalVariance local_variance(const KernelSpec& spec, double t, double epsilon,
                             std::size_t quad_points = 64);

BoundReport verify_kernel_lower_bound(const KernelSpec& spec, double hurst,
                                      const std::vector<double>& eps_grid,
                                      const std::vector<double>& t_grid,
                                      std::size_t quad_points = 64);

/// Closed-form fBm covariance (|t|^2H + |s|^2H - |t-s|^2H) / 2.
double fbm_covariance(double hurst, double s, double t);

/// Cov(B_{t_i}, B_{t_j}) on the grid. Pure fBm uses the closed form,
/// everything else the kernel-product quadrature.
Matrix covariance_matrix(const KernelSpec& spec, const TimeGrid& grid,
                         std::size_t quad_points = 64);

/// Cholesky factor with the diagonal-jitter policy: try bare, then
/// 1e-12 * trace/n, then 1e-10 * trace/n; throws NotPositiveDefiniteError
/// if all three fail.
Matrix cholesky_with_jitter(const Matrix& cov);

namespace detail {

/// One primitive kernel with its accumulated mixture weight.
struct KernelComponent {
    double weight = 1.0;
    double hurst = 0.5;
    bool is_fbm = true;
};

std::vector<KernelComponent> flatten(const KernelSpec& spec);

/// Integral over [lo, hi] of K_A(t_a, u) * K_B(t_b, u) du with
/// hi <= min(t_a, t_b); endpoint powers handled in closed form.
double integrate_kernel_product(const std::vector<KernelComponent>& comps_a, double t_a,
                                const std::vector<KernelComponent>& comps_b, double t_b,
                                double lo, double hi, std::size_t mid_cells);

} // namespace detail

} // namespace volterra
