#pragma once

#include <functional>

namespace sombor {

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0;
    long evaluations = 0;
    int max_depth = 0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b]. Intervals
/// are bisected until the local error estimate meets its share of
/// rel_tol * |integral|, up to max_depth levels. Nodes are interior, so
/// integrable endpoint singularities are tolerated.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, int max_depth = 20);

} // namespace sombor
