#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "volterra/errors.hpp"

namespace volterra {

/// Ordinary least squares line through (log x, log y) points.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<std::pair<double, double>> points; // (log x, log y)
};

/// OLS fit of y = slope*x + intercept over the given points.
inline SlopeFit fit_line(std::vector<std::pair<double, double>> pts) {
    if (pts.size() < 3) throw InsufficientSamplesError("slope fit needs at least 3 points");
    const double n = static_cast<double>(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double vxx = sxx - sx * sx / n;
    const double vxy = sxy - sx * sy / n;
    const double vyy = syy - sy * sy / n;
    SlopeFit fit;
    fit.slope = vxy / vxx;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.r_squared = vyy > 0 ? (vxy * vxy) / (vxx * vyy) : 1.0;
    if (fit.r_squared > 1.0) fit.r_squared = 1.0;
    fit.points = std::move(pts);
    return fit;
}

/// OLS on (log x, log y); inputs must be strictly positive.
inline SlopeFit fit_loglog(const std::vector<std::pair<double, double>>& xy) {
    std::vector<std::pair<double, double>> logged;
    logged.reserve(xy.size());
    for (const auto& [x, y] : xy) {
        if (!(x > 0.0) || !(y > 0.0))
            throw DomainError("log-log fit requires positive coordinates");
        logged.emplace_back(std::log(x), std::log(y));
    }
    return fit_line(std::move(logged));
}

} // namespace volterra
