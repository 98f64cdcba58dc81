#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "volterra/errors.hpp"

namespace volterra {

/// Uniform time grid t_i = (i+1)*dt, i = 0..n-1, with t_{n-1} = T.
/// The origin t = 0 is not a grid point; cell i is (t_{i-1}, t_i] with t_{-1} = 0.
class TimeGrid {
public:
    TimeGrid(double horizon, std::size_t n_points) : T_(horizon), n_(n_points) {
        if (!(horizon > 0.0)) throw DomainError("TimeGrid: horizon must be positive");
        if (n_points < 1) throw DomainError("TimeGrid: need at least one point");
        dt_ = horizon / static_cast<double>(n_points);
        points_.resize(n_points);
        for (std::size_t i = 0; i < n_points; ++i)
            points_[i] = static_cast<double>(i + 1) * dt_;
        points_.back() = horizon;
    }

    double horizon() const { return T_; }
    double dt() const { return dt_; }
    std::size_t size() const { return n_; }
    double point(std::size_t i) const { return points_[i]; }
    double cell_midpoint(std::size_t i) const { return (static_cast<double>(i) + 0.5) * dt_; }
    const std::vector<double>& points() const { return points_; }

    /// Index of a grid point equal to t (within one part in 1e-9), or throws.
    std::size_t index_of(double t) const {
        const double x = t / dt_ - 1.0;
        const auto i = static_cast<std::size_t>(x + 0.5);
        if (i >= n_ || std::abs(points_[i] - t) > 1e-9 * T_)
            throw DomainError("time does not lie on the grid");
        return i;
    }

private:
    double T_;
    std::size_t n_;
    double dt_;
    std::vector<double> points_;
};

} // namespace volterra
