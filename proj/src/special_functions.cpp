#include "volterra/special_functions.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>

namespace volterra {

namespace {

constexpr int kMaxTerms = 10000;
constexpr double kTermTol = 1e-14;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::abs(x - std::round(x)) < 1e-12;
}

// Power series sum_k (a)_k (b)_k / (c)_k / k! * w^k on w in [0,1).
// Kahan-compensated; per-term relative stop at kTermTol.
double series_2f1(double a, double b, double c, double w) {
    double sum = 1.0;
    double comp = 0.0;
    double term = 1.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * w;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= kTermTol * std::abs(sum)) return sum;
        if (!std::isfinite(sum))
            throw ConvergenceError("2F1 series overflowed at w=" + std::to_string(w));
    }
    throw ConvergenceError("2F1 series did not converge within " +
                           std::to_string(kMaxTerms) + " terms (w=" + std::to_string(w) + ")");
}

// Signed gamma: Gamma(x) = sign * exp(lg) for non-integer or positive x.
void signed_ln_gamma(double x, double& lg, double& sign) {
    if (x > 0.0) {
        lg = ln_gamma(x);
        sign = 1.0;
        return;
    }
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), x < 0 non-integer.
    const double s = std::sin(M_PI * x);
    lg = std::log(M_PI / std::abs(s)) - ln_gamma(1.0 - x);
    sign = s < 0 ? -1.0 : 1.0;
}

// DLMF 15.8.2 connection formula for z -> -inf, valid for non-integer b-a:
//   F(a,b;c;z) = G1 * (-z)^(-a) F(a, a-c+1; a-b+1; 1/z)
//              + G2 * (-z)^(-b) F(b, b-c+1; b-a+1; 1/z)
// with G1 = Gamma(c)Gamma(b-a)/(Gamma(b)Gamma(c-a)), G2 = G1(a<->b).
double connection_2f1(double a, double b, double c, double z) {
    const double inv = 1.0 / z;
    double lg_c, s_c, lg_ba, s_ba, lg_b, s_b, lg_ca, s_ca;
    double lg_ab, s_ab, lg_a, s_a, lg_cb, s_cb;
    signed_ln_gamma(c, lg_c, s_c);
    signed_ln_gamma(b - a, lg_ba, s_ba);
    signed_ln_gamma(b, lg_b, s_b);
    signed_ln_gamma(c - a, lg_ca, s_ca);
    signed_ln_gamma(a - b, lg_ab, s_ab);
    signed_ln_gamma(a, lg_a, s_a);
    signed_ln_gamma(c - b, lg_cb, s_cb);

    const double t1 = s_c * s_ba / (s_b * s_ca) *
                      std::exp(lg_c + lg_ba - lg_b - lg_ca - a * std::log(-z)) *
                      series_2f1(a, a - c + 1.0, a - b + 1.0, inv);
    const double t2 = s_c * s_ab / (s_a * s_cb) *
                      std::exp(lg_c + lg_ab - lg_a - lg_cb - b * std::log(-z)) *
                      series_2f1(b, b - c + 1.0, b - a + 1.0, inv);
    return t1 + t2;
}

} // namespace

double gauss_2f1(const HypergeometricArgs& args) {
    double a = args.a, b = args.b;
    const double c = args.c, z = args.z;
    if (is_nonpositive_integer(c))
        throw DomainError("2F1: c must not be zero or a negative integer");
    if (z >= 1.0)
        throw DomainError("2F1: argument z >= 1 unsupported");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z))
        throw DomainError("2F1: non-finite argument");

    if (z == 0.0 || a == 0.0 || b == 0.0) return 1.0;
    if (z > 0.0) return series_2f1(a, b, c, z);

    // Negative-integer upper parameter truncates the Pfaff series; keep it in
    // the first slot (F is symmetric in a, b).
    const bool polynomial = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (is_nonpositive_integer(b) && !is_nonpositive_integer(a)) std::swap(a, b);

    // Moderate z: Pfaff transform, series argument w = z/(z-1) in (0, 0.8].
    if (z >= -4.0 || polynomial) {
        const double w = z / (z - 1.0);
        return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w);
    }

    // Large |z|: connection formula needs b-a away from the integers, where
    // its gamma prefactors are singular; in that case fall back to Pfaff and
    // accept the slower series (the iteration cap still applies).
    const double ba = b - a;
    if (std::abs(ba - std::round(ba)) < 1e-8) {
        const double w = z / (z - 1.0);
        return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w);
    }
    return connection_2f1(a, b, c, z);
}

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive");
#if defined(__GLIBC__) || defined(__APPLE__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

double gamma_fn(double x) {
    return std::exp(ln_gamma(x));
}

} // namespace volterra
