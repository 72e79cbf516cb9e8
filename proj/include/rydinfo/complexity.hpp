#pragma once

// Cramer-Rao, Fisher-Shannon and LMC complexity measures in both spaces.
//
//   C_CR  = V x I          variance times Fisher information, exact
//   C_FS  = I x (1/2 pi e) exp((2/3) S)   Fisher times entropy power
//   C_LMC = D x exp(S)     disequilibrium times entropy power
//
// All three are dimensionless, Z-free and bounded below by 1. The position
// disequilibrium D[rho] = Int rho^2 has an exact representation as a k-sum of
// squared binomials and gamma ratios times an angular sum of squared Wigner
// 3j symbols; the terms are assembled in log space because the factorials
// overflow long before the cap on n. The momentum disequilibrium has no such
// closed form and is quadrature-only here.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rydinfo/core.hpp"
#include "rydinfo/entropy.hpp"
#include "rydinfo/fisher.hpp"
#include "rydinfo/moments.hpp"
#include "rydinfo/quadrature.hpp"
#include "rydinfo/specfun.hpp"
#include "rydinfo/states.hpp"

namespace rydinfo::complexity {

struct ComplexityEntry {
    double value = 0.0;
    Method method = Method::Exact;
};

struct ComplexityTriple {
    ComplexityEntry cramer_rao;
    ComplexityEntry fisher_shannon;
    ComplexityEntry lmc;
};

// V = <r^2> (the centroid vanishes by parity) resp. <p^2>, both exact.
inline double variance(const states::QuantumState& s, Space space) {
    const double n = s.n;
    if (space == Space::Position)
        return n * n / (2.0 * s.Z * s.Z) * (5.0 * n * n - 3.0 * s.l * (s.l + 1.0) + 1.0);
    return s.Z * s.Z / (n * n);
}

inline double cramer_rao(const states::QuantumState& s, Space space) {
    const double n = s.n;
    const double core = 5.0 * n * n - 3.0 * s.l * (s.l + 1.0) + 1.0;
    if (space == Space::Position) return 2.0 / n * core * (n - std::abs(s.m));
    return 2.0 * (core - std::abs(s.m) * (8.0 * n - 6.0 * s.l - 3.0));
}

inline quadrature::QuadResult fisher_shannon(const states::QuantumState& s, Space space,
                                             double rel_tol = 1e-9) {
    const double info = space == Space::Position ? fisher::fisher_position(s)
                                                 : fisher::fisher_momentum(s);
    const auto ent = entropy::shannon(s, space, rel_tol);
    quadrature::QuadResult out;
    out.value = info / (2.0 * std::numbers::pi * std::numbers::e) *
                std::exp(2.0 / 3.0 * ent.value);
    out.abs_err = out.value * (2.0 / 3.0) * ent.abs_err;
    out.evaluations = ent.evaluations;
    out.accuracy_warning = ent.accuracy_warning;
    return out;
}

// Leading term at fixed (l, m); the angular entropy enters through exp(2S/3).
inline AsymptoticValue fisher_shannon_asymptotic(Space space, int l, int m, int n) {
    moments::detail::check_state_numbers(1.0, n, l, "fisher_shannon_asymptotic");
    if (std::abs(m) > l)
        throw std::invalid_argument("fisher_shannon_asymptotic: requires |m| <= l");
    const double sy = entropy::angular_entropy(l, m).value;
    const double nn = n;
    double coeff;
    if (space == Space::Position)
        coeff = std::cbrt(2.0 / std::numbers::pi) * std::exp(-1.0 + 2.0 / 3.0 * sy);
    else
        coeff = 20.0 / std::cbrt(std::numbers::pi) * std::exp(-13.0 / 3.0 + 2.0 / 3.0 * sy);
    return {coeff * nn * nn, ErrorOrder::o_n2};
}

namespace detail {

inline double ln_binomial(double a, double b) {
    return specfun::ln_gamma(a + 1.0) - specfun::ln_gamma(b + 1.0) -
           specfun::ln_gamma(a - b + 1.0);
}

// Sum over l' of (2l'+1) 3j(l,l,l';0,0,0)^2 3j(l,l,l';m,m,-2m)^2; odd l'
// terms vanish through the parity zero of the first symbol.
inline double angular_product_sum(int l, int m) {
    double sum = 0.0;
    for (int lp = 0; lp <= 2 * l; ++lp) {
        if (2 * std::abs(m) > lp) continue;  // third column out of range, symbol is 0
        const double zero = specfun::wigner3j(l, l, lp, 0, 0, 0);
        if (zero == 0.0) continue;
        const double mm = specfun::wigner3j(l, l, lp, m, m, -2 * m);
        sum += (2.0 * lp + 1.0) * zero * zero * mm * mm;
    }
    return sum;
}

// Int |Y_lm|^4 dOmega.
inline double angular_fourth_norm(int l, int m) {
    const double line = 2.0 * l + 1.0;
    return line * line / (4.0 * std::numbers::pi) * angular_product_sum(l, m);
}

}  // namespace detail

// Exact position disequilibrium. Known only in position space.
inline double disequilibrium_exact(const states::QuantumState& s) {
    const int nr = s.n - s.l - 1;
    const double l = s.l;
    std::vector<double> exponents(nr + 1);
    for (int k = 0; k <= nr; ++k) {
        exponents[k] = 2.0 * detail::ln_binomial(2.0 * (nr - k), double(nr - k)) +
                       detail::ln_binomial(2.0 * k, double(k)) +
                       specfun::ln_gamma(4.0 * l + 2.0 * k + 3.0) -
                       2.0 * specfun::ln_gamma(2.0 * l + k + 2.0);
    }
    const double top = *std::max_element(exponents.begin(), exponents.end());
    double ksum = 0.0;
    for (double e : exponents) ksum += std::exp(e - top);
    const double n = s.n;
    const double log_value = 2.0 * std::log(2.0 * l + 1.0) -
                             4.0 * n * std::numbers::ln2 - std::log(std::numbers::pi) -
                             5.0 * std::log(n) + top + std::log(ksum) +
                             3.0 * std::log(s.Z);
    if (log_value > 700.0)
        throw std::overflow_error("disequilibrium_exact: log-space total overflows");
    return std::exp(log_value) * detail::angular_product_sum(s.l, s.m);
}

// Int density^2 by quadrature: a radial fourth-power integral times the
// fourth norm of the spherical harmonic.
inline quadrature::QuadResult disequilibrium(const states::QuantumState& s, Space space,
                                             double rel_tol = 1e-10) {
    quadrature::QuadResult radial;
    double scale;
    if (space == Space::Position) {
        // Int R^4 r^2 dr = (2Z/n)^3 Int w(x)^2 x^-2 dx
        scale = std::pow(2.0 * s.Z / s.n, 3.0);
        auto f = [&s](double x) {
            const double m = states::position_measure_log(s, x);
            if (std::isinf(m)) return 0.0;
            return std::exp(2.0 * (m - std::log(x)));
        };
        radial = quadrature::integrate_semiinf_rel(f, moments::detail::position_panels(s),
                                                   rel_tol);
    } else {
        // Int M^4 p^2 dp = (n/Z)^3 Int m(th)^2 2 cos^4(th/2) / sin^2(th/2) dth
        scale = std::pow(s.n / s.Z, 3.0);
        auto f = [&s](double theta) {
            const double st = std::sin(theta);
            const double ch = std::cos(0.5 * theta);
            if (st == 0.0 || ch == 0.0) return 0.0;
            const double m = states::momentum_measure_log(s, std::cos(theta)) + std::log(st);
            if (std::isinf(m)) return 0.0;
            return std::exp(2.0 * m + std::numbers::ln2 + 4.0 * std::log(ch) -
                            2.0 * std::log(std::sin(0.5 * theta)));
        };
        radial = quadrature::integrate_finite_rel(f, 0.0, std::numbers::pi,
                                                  moments::detail::momentum_panels(s),
                                                  rel_tol);
    }
    auto ang = [&s](double theta) {
        const double q = specfun::ln_sph_harm_sq(s.l, s.m, theta);
        if (std::isinf(q)) return 0.0;
        return std::exp(2.0 * q) * std::sin(theta);
    };
    const auto angular = quadrature::integrate_finite_rel(
        ang, 0.0, std::numbers::pi,
        quadrature::Panelization{states::angular_breakpoints(s.l, s.m)}, rel_tol);
    const double a4 = 2.0 * std::numbers::pi * angular.value;
    quadrature::QuadResult out;
    out.value = scale * radial.value * a4;
    out.abs_err = scale * (radial.abs_err * a4 +
                           radial.value * 2.0 * std::numbers::pi * angular.abs_err);
    out.evaluations = radial.evaluations + angular.evaluations;
    out.accuracy_warning = radial.accuracy_warning || angular.accuracy_warning;
    return out;
}

inline quadrature::QuadResult lmc(const states::QuantumState& s, Space space,
                                  double rel_tol = 1e-9) {
    const auto d = disequilibrium(s, space, rel_tol);
    const auto ent = entropy::shannon(s, space, rel_tol);
    const double power = std::exp(ent.value);
    quadrature::QuadResult out;
    out.value = d.value * power;
    out.abs_err = power * (d.abs_err + d.value * ent.abs_err);
    out.evaluations = d.evaluations + ent.evaluations;
    out.accuracy_warning = d.accuracy_warning || ent.accuracy_warning;
    return out;
}

inline ComplexityTriple complexities(const states::QuantumState& s, Space space) {
    ComplexityTriple t;
    t.cramer_rao = {cramer_rao(s, space), Method::Exact};
    t.fisher_shannon = {fisher_shannon(s, space).value, Method::Quadrature};
    t.lmc = {lmc(s, space).value, Method::Quadrature};
    return t;
}

}  // namespace rydinfo::complexity
