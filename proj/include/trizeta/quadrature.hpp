#pragma once

#include <complex>
#include <functional>

namespace trizeta {

/// Adaptive Gauss-Kronrod (15|7) panel integration. Deterministic: fixed
/// bisection order, results accumulated left to right.
struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_floor = 1e-14; // below this scale the error test is absolute
    int max_depth = 13;
};

struct QuadOutcome {
    double value = 0.0;
    double err_estimate = 0.0;
    bool converged = true;
    long evals = 0;
};

QuadOutcome gk_adaptive(const std::function<double(double)>& f, double lo, double hi,
                        const QuadOptions& opt = {});

/// Integral over [x0, +inf): panels [x0,x0+w], [x0+w,x0+3w], ... doubling in
/// width until a panel contributes less than tail_rel of the running total.
QuadOutcome gk_halfline(const std::function<double(double)>& f, double x0,
                        double first_width, double tail_rel, const QuadOptions& opt = {});

/// Integral over the whole line, panels growing symmetrically from [-w, w].
QuadOutcome gk_line(const std::function<double(double)>& f, double first_width,
                    double tail_rel, const QuadOptions& opt = {});

} // namespace trizeta
