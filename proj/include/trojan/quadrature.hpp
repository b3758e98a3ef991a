#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace trojan {

/// Outcome of an adaptive integration. `error` is the accumulated
/// Gauss-Kronrod error estimate; `converged` drops to false only when the
/// recursion depth ran out on a panel that still exceeded its tolerance.
template <class Value>
struct QuadratureResult {
    Value value{};
    double error = 0.0;
    long evaluations = 0;
    bool converged = true;
};

namespace quadrature_detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Odd-indexed nodes (plus the center) are the embedded Gauss nodes.
inline constexpr double kronrod_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};

inline constexpr double kronrod_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class Value>
struct Panel {
    Value integral{};
    double error = 0.0;
    double resabs = 0.0;  // integral of |f|, roundoff reference
};

template <class F, class Value>
Panel<Value> evaluate_panel(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const Value fc = f(mid);
    Value kronrod = kronrod_weights[7] * fc;
    Value gauss = gauss_weights[3] * fc;
    double resabs = kronrod_weights[7] * std::abs(fc);

    for (int i = 0; i < 7; ++i) {
        const double dx = half * kronrod_nodes[i];
        const Value lo = f(mid - dx);
        const Value hi = f(mid + dx);
        kronrod += kronrod_weights[i] * (lo + hi);
        resabs += kronrod_weights[i] * (std::abs(lo) + std::abs(hi));
        if (i % 2 == 1) gauss += gauss_weights[i / 2] * (lo + hi);
    }

    Panel<Value> panel;
    panel.integral = half * kronrod;
    panel.error = half * std::abs(kronrod - gauss);
    panel.resabs = half * resabs;
    return panel;
}

template <class F, class Value>
void refine(F& f, double a, double b, double tol, int depth,
            QuadratureResult<Value>& out) {
    const Panel<Value> panel = evaluate_panel<F, Value>(f, a, b);
    out.evaluations += 15;
    const double roundoff_floor =
        50.0 * std::numeric_limits<double>::epsilon() * panel.resabs;
    if (panel.error <= tol || panel.error <= roundoff_floor || depth <= 0) {
        out.value += panel.integral;
        out.error += panel.error;
        if (depth <= 0 && panel.error > tol && panel.error > roundoff_floor)
            out.converged = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    refine(f, a, mid, 0.5 * tol, depth - 1, out);
    refine(f, mid, b, 0.5 * tol, depth - 1, out);
}

} // namespace quadrature_detail

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b]. Works for
/// real- and complex-valued integrands. The target tolerance is
/// max(abs_tol, rel_tol * |first whole-interval estimate|), split in half at
/// every bisection so panel errors sum to at most the target.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, double abs_tol = 1e-12,
                        double rel_tol = 0.0, int max_depth = 48) {
    using Value = std::decay_t<decltype(f(0.5 * (a + b)))>;
    if (!(a < b))
        throw std::invalid_argument("integration bounds must satisfy a < b");
    if (!(abs_tol > 0.0) && !(rel_tol > 0.0))
        throw std::invalid_argument("integration needs a positive tolerance");

    auto& fn = f;
    const auto first = quadrature_detail::evaluate_panel<decltype(fn), Value>(fn, a, b);
    const double tol = std::max(abs_tol, rel_tol * std::abs(first.integral));

    QuadratureResult<Value> out;
    out.evaluations = 15;
    quadrature_detail::refine(fn, a, b, tol, max_depth, out);
    return out;
}

} // namespace trojan
