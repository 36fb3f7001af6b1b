#include "trizeta/quadrature.hpp"

#include <cmath>

namespace trizeta {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss rule.
constexpr double kXgk[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kWgk[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double kWg[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct PanelResult {
    double k15;
    double err;
};

PanelResult gk_panel(const std::function<double(double)>& f, double lo, double hi,
                     long& evals) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < 15; ++i) {
        double v = f(c + h * kXgk[i]);
        ++evals;
        k15 += kWgk[i] * v;
        if (i % 2 == 1) g7 += kWg[i / 2] * v;
    }
    k15 *= h;
    g7 *= h;
    double err = std::pow(200.0 * std::abs(k15 - g7), 1.5);
    if (!std::isfinite(err)) err = std::abs(k15 - g7);
    return {k15, err};
}

void gk_recurse(const std::function<double(double)>& f, double lo, double hi, int depth,
                const QuadOptions& opt, QuadOutcome& out) {
    long evals = 0;
    PanelResult r = gk_panel(f, lo, hi, evals);
    out.evals += evals;
    double scale = std::max(std::abs(r.k15), opt.abs_floor);
    if (r.err <= opt.rel_tol * scale || depth >= opt.max_depth) {
        if (depth >= opt.max_depth && r.err > opt.rel_tol * scale) out.converged = false;
        out.value += r.k15;
        out.err_estimate += r.err;
        return;
    }
    double mid = 0.5 * (lo + hi);
    gk_recurse(f, lo, mid, depth + 1, opt, out);
    gk_recurse(f, mid, hi, depth + 1, opt, out);
}

} // namespace

QuadOutcome gk_adaptive(const std::function<double(double)>& f, double lo, double hi,
                        const QuadOptions& opt) {
    QuadOutcome out;
    gk_recurse(f, lo, hi, 0, opt, out);
    return out;
}

QuadOutcome gk_halfline(const std::function<double(double)>& f, double x0,
                        double first_width, double tail_rel, const QuadOptions& opt) {
    QuadOutcome out;
    double lo = x0;
    double w = first_width;
    for (int panel = 0; panel < 64; ++panel) {
        QuadOutcome piece = gk_adaptive(f, lo, lo + w, opt);
        out.value += piece.value;
        out.err_estimate += piece.err_estimate;
        out.evals += piece.evals;
        out.converged = out.converged && piece.converged;
        lo += w;
        if (panel >= 2 && std::abs(piece.value) <=
                              tail_rel * std::max(std::abs(out.value), opt.abs_floor))
            return out;
        w *= 2.0;
    }
    out.converged = false;
    return out;
}

QuadOutcome gk_line(const std::function<double(double)>& f, double first_width,
                    double tail_rel, const QuadOptions& opt) {
    QuadOutcome out = gk_adaptive(f, -first_width, first_width, opt);
    double lo = first_width;
    double w = first_width;
    for (int panel = 0; panel < 64; ++panel) {
        QuadOutcome right = gk_adaptive(f, lo, lo + w, opt);
        QuadOutcome left = gk_adaptive(f, -lo - w, -lo, opt);
        out.value += right.value + left.value;
        out.err_estimate += right.err_estimate + left.err_estimate;
        out.evals += right.evals + left.evals;
        out.converged = out.converged && right.converged && left.converged;
        lo += w;
        double piece = std::abs(right.value) + std::abs(left.value);
        if (panel >= 2 &&
            piece <= tail_rel * std::max(std::abs(out.value), opt.abs_floor))
            return out;
        w *= 2.0;
    }
    out.converged = false;
    return out;
}

} // namespace trizeta
