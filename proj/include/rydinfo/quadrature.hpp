#pragma once

// Adaptive panelized Gauss-Legendre integration. Each panel is measured with
// the 15-point rule against the embedded estimate of the 7-point rule; panels
// that miss their error budget are bisected with the budget halved, to a depth
// cap of 60. Oscillatory integrands are handled by seeding the panelization
// with the integrand's sign-change structure (polynomial roots upstream).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rydinfo/core.hpp"

namespace rydinfo::quadrature {

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;       // accumulated panel error estimates
    long evaluations = 0;
    bool accuracy_warning = false;  // some panel hit the depth cap over budget
};

// Interior split points, typically the roots of the polynomial factor.
struct Panelization {
    std::vector<double> breakpoints;
};

namespace detail {

struct Rule {
    std::vector<double> x, w;
};

inline Rule legendre_rule(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    constexpr double pi = 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = -p1 / dp;
            x += dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        r.x[n - 1 - i] = x;
        r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

inline const Rule& rule7() {
    static const Rule r = legendre_rule(7);
    return r;
}
inline const Rule& rule15() {
    static const Rule r = legendre_rule(15);
    return r;
}

// Neumaier compensated accumulator; panel contributions are added in
// left-to-right order so results are bit-reproducible.
struct Neumaier {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        comp += std::fabs(sum) >= std::fabs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    double get() const { return sum + comp; }
};

class Engine {
  public:
    Engine(std::function<double(double)> f, QuadResult& out) : f_(std::move(f)), out_(out) {}

    void run(double u, double v, double budget) { panel(u, v, budget, 0); }

    void finish() {
        out_.value = value_.get();
        out_.abs_err = err_.get();
    }

  private:
    double sample(double x) {
        const double y = f_(x);
        ++out_.evaluations;
        if (!std::isfinite(y)) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "quadrature: integrand returned a non-finite value at x = %.17g", x);
            throw std::runtime_error(buf);
        }
        return y;
    }

    void panel(double u, double v, double budget, int depth) {
        ++panels_;
        const double mid = 0.5 * (u + v), half = 0.5 * (v - u);
        const Rule& r7 = rule7();
        const Rule& r15 = rule15();
        double g7 = 0.0, g15 = 0.0;
        for (int i = 0; i < 7; ++i) g7 += r7.w[i] * sample(mid + half * r7.x[i]);
        for (int i = 0; i < 15; ++i) g15 += r15.w[i] * sample(mid + half * r15.x[i]);
        g7 *= half;
        g15 *= half;
        const double est = std::fabs(g15 - g7);
        // Stopping rules besides the budget: the estimate reaching the
        // machine-noise floor of the panel value (the budget keeps halving
        // but rounding noise cannot), the global panel cap, which bounds
        // work on strong interior singularities whose local error decays
        // slower than the bisection budget, and a width floor. The floor
        // matters for endpoint singularities: once a panel is narrower than
        // ~2000 ulp of its endpoints, the children's Gauss nodes would round
        // onto the endpoints themselves, where singular integrands are not
        // evaluable.
        const bool converged =
            est <= budget || est <= 50.0 * std::numeric_limits<double>::epsilon() * std::fabs(g15);
        const double width_floor = 2048.0 * std::numeric_limits<double>::epsilon() *
                                   std::max(std::fabs(u), std::fabs(v));
        if (converged || depth >= 60 || panels_ > 200000 || v - u <= width_floor ||
            mid <= u || mid >= v) {
            if (!converged) out_.accuracy_warning = true;
            value_.add(g15);
            err_.add(est);
            return;
        }
        panel(u, mid, 0.5 * budget, depth + 1);
        panel(mid, v, 0.5 * budget, depth + 1);
    }

    std::function<double(double)> f_;
    QuadResult& out_;
    Neumaier value_, err_;
    long panels_ = 0;
};

inline std::vector<double> segment_points(double a, double b, const Panelization& p) {
    std::vector<double> pts{a};
    std::vector<double> inner;
    for (double x : p.breakpoints)
        if (x > a && x < b) inner.push_back(x);
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    pts.insert(pts.end(), inner.begin(), inner.end());
    pts.push_back(b);
    return pts;
}

}  // namespace detail

inline QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                   const Panelization& panels, double tol) {
    if (!(a < b)) throw std::domain_error("integrate_finite: requires a < b");
    if (!(tol > 0.0)) throw std::domain_error("integrate_finite: requires tol > 0");
    QuadResult out;
    detail::Engine eng(f, out);
    const auto pts = detail::segment_points(a, b, panels);
    const double budget = tol / static_cast<double>(pts.size() - 1);
    for (size_t i = 0; i + 1 < pts.size(); ++i) eng.run(pts[i], pts[i + 1], budget);
    eng.finish();
    return out;
}

// Integral over [0, inf). The finite head [0, L] is panelized as usual with
// L = 2 * (largest breakpoint) + 60 * tail_scale; the tail is folded onto
// [0, 1) by x = L + tail_scale * t / (1 - t).
inline QuadResult integrate_semiinf(const std::function<double(double)>& f,
                                    const Panelization& panels, double tol,
                                    double tail_scale = 1.0) {
    if (!(tol > 0.0)) throw std::domain_error("integrate_semiinf: requires tol > 0");
    if (!(tail_scale > 0.0)) throw std::domain_error("integrate_semiinf: requires tail_scale > 0");
    double max_bp = 0.0;
    for (double x : panels.breakpoints) max_bp = std::max(max_bp, x);
    const double L = 2.0 * max_bp + 60.0 * tail_scale;

    QuadResult out;
    detail::Engine eng(f, out);
    const auto pts = detail::segment_points(0.0, L, panels);
    const double budget = tol / static_cast<double>(pts.size());
    for (size_t i = 0; i + 1 < pts.size(); ++i) eng.run(pts[i], pts[i + 1], budget);
    eng.finish();

    QuadResult tail;
    auto mapped = [&](double t) {
        const double om = 1.0 - t;
        return f(L + tail_scale * t / om) * tail_scale / (om * om);
    };
    detail::Engine teng(mapped, tail);
    teng.run(0.0, 1.0, budget);
    teng.finish();

    out.value += tail.value;
    out.abs_err += tail.abs_err;
    out.evaluations += tail.evaluations;
    out.accuracy_warning = out.accuracy_warning || tail.accuracy_warning;
    return out;
}

// Two-pass relative-tolerance driver: a cheap pass fixes the magnitude, the
// second pass reruns with the implied absolute budget.
inline QuadResult integrate_to_rel(const std::function<QuadResult(double)>& run_at, double rel_tol) {
    if (!(rel_tol > 0.0)) throw std::domain_error("integrate_to_rel: requires rel_tol > 0");
    const QuadResult first = run_at(1e-2);
    const double scale = std::fabs(first.value);
    if (scale == 0.0) return first;
    QuadResult second = run_at(rel_tol * scale);
    second.evaluations += first.evaluations;
    return second;
}

inline QuadResult integrate_finite_rel(const std::function<double(double)>& f, double a, double b,
                                       const Panelization& panels, double rel_tol) {
    return integrate_to_rel(
        [&](double tol) { return integrate_finite(f, a, b, panels, tol); }, rel_tol);
}

inline QuadResult integrate_semiinf_rel(const std::function<double(double)>& f,
                                        const Panelization& panels, double rel_tol,
                                        double tail_scale = 1.0) {
    return integrate_to_rel(
        [&](double tol) { return integrate_semiinf(f, panels, tol, tail_scale); }, rel_tol);
}

}  // namespace rydinfo::quadrature
