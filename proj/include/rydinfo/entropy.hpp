#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rydinfo/core.hpp"
#include "rydinfo/moments.hpp"
#include "rydinfo/quadrature.hpp"
#include "rydinfo/specfun.hpp"
#include "rydinfo/states.hpp"

// Shannon entropies S = -Int f ln f of the position and momentum densities by
// three routes: direct quadrature of the separated radial and angular parts,
// the exact decomposition
//
//   S[rho]   = A_{n,l} + E1[poly]/(2n) + S(Y_{l,m}) - 3 ln Z
//   S[gamma] = B_{n,l} + E0[poly]     + S(Y_{l,m}) + 3 ln Z
//
// built from closed-form coefficients plus entropic polynomial integrals, and
// the large-n leading terms. Both routes share the angular entropy S(Y_{l,m}),
// which is cached per (l, |m|).

namespace rydinfo::entropy {

// Which power of x multiplies the weight inside the entropic integral.
enum class KExponent { E0, E1 };

// Exact decomposition of one entropy value into its closed-form coefficient,
// the entropic polynomial integral, the angular entropy and the charge term.
struct EntropyBreakdown {
    double coefficient = 0.0;
    double polynomial_term = 0.0;
    double angular = 0.0;
    double z_term = 0.0;
    double total = 0.0;
};

inline double A_coeff(int n, int l) {
    moments::detail::check_state_numbers(1.0, n, l, "A_coeff");
    const double nn = n;
    return -std::log(4.0 / (nn * nn * nn * nn)) + (3.0 * nn * nn - l * (l + 1.0)) / nn -
           2.0 * l * ((2.0 * nn - 2.0 * l - 1.0) / (2.0 * nn) +
                      specfun::digamma(nn + l + 1.0));
}

inline double B_coeff(int n, int l) {
    moments::detail::check_state_numbers(1.0, n, l, "B_coeff");
    const double nn = n;
    return -std::log(nn * nn * nn / std::exp2(2.0 * l + 4.0)) -
           (2.0 * l + 4.0) * (specfun::digamma(nn + l + 1.0) - specfun::digamma(nn)) +
           (l + 2.0) / nn - 4.0 * (1.0 - 2.0 * nn * (2.0 * l + 1.0) / (4.0 * nn * nn - 1.0));
}

// Entropic integral E_k[y] = -Int x^k w(x) y^2 ln y^2 dx of the orthonormal
// polynomial of the given degree. Only the two combinations that appear in
// the entropy decompositions are supported: E1 with a Laguerre family and E0
// with a Gegenbauer family (evaluated in theta, x = cos theta). The integrand
// is 0 at exact polynomial zeros (t ln t -> 0).
inline quadrature::QuadResult entropic_integral(const specfun::PolyFamily& family,
                                                int degree, KExponent k,
                                                double rel_tol = 1e-10) {
    if (degree < 0) throw std::domain_error("entropic_integral: requires degree >= 0");
    const auto& roots = states::detail::cached_roots(family.kind, degree, family.param);
    if (k == KExponent::E1) {
        if (family.kind != specfun::PolyKind::Laguerre)
            throw std::domain_error("entropic_integral: E1 is used with Laguerre weights only");
        std::vector<double> pts = roots;
        pts.push_back(2.0 * (family.param + 1.0));
        pts.push_back(4.0 * degree + 2.0 * family.param + 6.0);
        auto f = [&family, degree](double x) {
            const auto pv = specfun::poly_eval_scaled(family, degree, x);
            if (pv.sign() == 0) return 0.0;
            const double ln_y2 = 2.0 * pv.log_abs();
            return -std::exp((family.param + 1.0) * std::log(x) - x + ln_y2) * ln_y2;
        };
        return quadrature::integrate_semiinf_rel(f, quadrature::Panelization{std::move(pts)},
                                                 rel_tol);
    }
    if (family.kind != specfun::PolyKind::Gegenbauer)
        throw std::domain_error("entropic_integral: E0 is used with Gegenbauer weights only");
    std::vector<double> pts;
    for (double r : roots) pts.push_back(std::acos(r));
    auto f = [&family, degree](double theta) {
        const double st = std::sin(theta);
        if (st == 0.0) return 0.0;
        const auto pv = specfun::poly_eval_scaled(family, degree, std::cos(theta));
        if (pv.sign() == 0) return 0.0;
        const double ln_y2 = 2.0 * pv.log_abs();
        return -std::exp(2.0 * family.param * std::log(st) + ln_y2) * ln_y2;
    };
    return quadrature::integrate_finite_rel(f, 0.0, specfun::pi,
                                            quadrature::Panelization{std::move(pts)}, rel_tol);
}

// Large-degree leading terms of the two entropic integrals. The Laguerre E1
// term carries an o(n) remainder, the Gegenbauer E0 term o(1).
inline AsymptoticValue entropic_integral_asymptotic(const specfun::PolyFamily& family,
                                                    int degree, KExponent k) {
    const double a = family.param;
    if (k == KExponent::E1) {
        if (family.kind != specfun::PolyKind::Laguerre)
            throw std::domain_error(
                "entropic_integral_asymptotic: E1 is used with Laguerre weights only");
        if (degree < 1)
            throw std::domain_error("entropic_integral_asymptotic: E1 requires degree >= 1");
        const double nn = degree;
        const double value = -6.0 * nn * nn + 2.0 * (a + 1.0) * nn * std::log(nn) +
                             2.0 * nn * (std::log(2.0 * specfun::pi) - 2.0 * a - 4.0);
        return AsymptoticValue{value, ErrorOrder::o_n};
    }
    if (family.kind != specfun::PolyKind::Gegenbauer)
        throw std::domain_error(
            "entropic_integral_asymptotic: E0 is used with Gegenbauer weights only");
    if (degree < 0)
        throw std::domain_error("entropic_integral_asymptotic: requires degree >= 0");
    return AsymptoticValue{std::log(specfun::pi) + (1.0 - 2.0 * a) * std::numbers::ln2 - 1.0,
                           ErrorOrder::o1};
}

// Angular entropy S(Y_{l,m}) = -Int |Y|^2 ln |Y|^2 dOmega, evaluated through
// the decomposition D_{l,m} + E0[C of degree l-|m|, parameter |m|+1/2] and
// cached per (l, |m|).
inline quadrature::QuadResult angular_entropy(int l, int m, double rel_tol = 1e-10) {
    if (l < 0 || std::abs(m) > l)
        throw std::invalid_argument("angular_entropy: requires l >= 0 and |m| <= l");
    const int mm = std::abs(m);
    static std::mutex guard;
    static std::map<std::pair<int, int>, quadrature::QuadResult> cache;
    {
        std::lock_guard<std::mutex> lock(guard);
        auto it = cache.find({l, mm});
        if (it != cache.end()) return it->second;
    }
    const double d_lm =
        std::log(2.0 * specfun::pi) -
        2.0 * mm *
            (specfun::digamma(l + mm + 1.0) - specfun::digamma(l + 0.5) -
             std::numbers::ln2 - 1.0 / (2.0 * l + 1.0));
    auto res = entropic_integral(specfun::gegenbauer(mm + 0.5), l - mm, KExponent::E0,
                                 rel_tol);
    res.value += d_lm;
    std::lock_guard<std::mutex> lock(guard);
    cache.insert({{l, mm}, res});
    return res;
}

// Closed forms of the angular entropy, known for |m| = l and |m| = l-1 only.
inline double angular_entropy_closed(int l, int m) {
    if (l < 0 || std::abs(m) > l)
        throw std::invalid_argument("angular_entropy_closed: requires l >= 0 and |m| <= l");
    const int mm = std::abs(m);
    using specfun::digamma;
    using specfun::ln_gamma;
    const double ln_pi = std::log(specfun::pi);
    if (mm == l)
        return (2.0 * l + 1.0) * std::numbers::ln2 + 1.5 * ln_pi + ln_gamma(l + 1.0) -
               ln_gamma(l + 1.5) -
               2.0 * l * (digamma(2.0 * l + 1.0) - digamma(l + 0.5) - 1.0 / (2.0 * l + 1.0));
    if (mm == l - 1)
        return 2.0 * l * std::numbers::ln2 + 1.5 * ln_pi + ln_gamma(double(l)) -
               ln_gamma(l + 1.5) - 2.0 + specfun::euler_gamma + digamma(l + 1.5) -
               2.0 * (l - 1.0) *
                   (digamma(2.0 * l) - digamma(l + 0.5) - 1.0 / (2.0 * l + 1.0));
    throw std::domain_error("angular_entropy_closed: known only for |m| = l and |m| = l-1");
}

// Which angular-entropy family a large-l leading term refers to.
enum class AngularKind { MEqL, MEqLMinusOne, MEqZero };

inline AsymptoticValue angular_entropy_asymptotic(AngularKind kind, int l) {
    if (l < 1) throw std::invalid_argument("angular_entropy_asymptotic: requires l >= 1");
    const double ln_pi = std::log(specfun::pi);
    switch (kind) {
        case AngularKind::MEqL:
            return AsymptoticValue{std::numbers::ln2 + 1.5 * ln_pi + 0.5 -
                                       0.5 * std::log(double(l)),
                                   ErrorOrder::O_inv_n};
        case AngularKind::MEqLMinusOne:
            return AsymptoticValue{2.0 * std::numbers::ln2 + 1.5 * ln_pi +
                                       specfun::euler_gamma - 0.5 -
                                       0.5 * std::log(double(l)),
                                   ErrorOrder::O_inv_n};
        default:
            return AsymptoticValue{std::numbers::ln2 + 2.0 * ln_pi - 1.0, ErrorOrder::o1};
    }
}

namespace detail {

// -Int w_pos(x) ln D(r(x)) dx where D is the radial position density;
// ln D = measure_log(x) - 2 ln x - 3 ln(n/2Z).
inline quadrature::QuadResult radial_entropy_position(const states::QuantumState& s,
                                                      double rel_tol) {
    const double u = std::log(s.n / (2.0 * s.Z));
    const auto panels = moments::detail::position_panels(s);
    auto f = [&s, u](double x) {
        const double m = states::position_measure_log(s, x);
        if (std::isinf(m)) return 0.0;
        return std::exp(m) * (2.0 * std::log(x) + 3.0 * u - m);
    };
    return quadrature::integrate_semiinf_rel(f, panels, rel_tol);
}

// Same for momentum in theta form; ln D picks up the tan(theta/2) Jacobian:
// ln D = measure_log + ln sin(theta) - 3 ln(Z/n) + ln 2
//        - 2 ln sin(theta/2) + 4 ln cos(theta/2).
inline quadrature::QuadResult radial_entropy_momentum(const states::QuantumState& s,
                                                      double rel_tol) {
    const double u = std::log(s.Z / s.n);
    const auto panels = moments::detail::momentum_panels(s);
    auto f = [&s, u](double theta) {
        const double st = std::sin(theta);
        if (st == 0.0) return 0.0;
        const double m = states::momentum_measure_log(s, std::cos(theta)) + std::log(st);
        if (std::isinf(m)) return 0.0;
        const double ln_d = m - 3.0 * u + std::numbers::ln2 -
                            2.0 * std::log(std::sin(0.5 * theta)) +
                            4.0 * std::log(std::cos(0.5 * theta));
        return -std::exp(m) * ln_d;
    };
    return quadrature::integrate_finite_rel(f, 0.0, specfun::pi, panels, rel_tol);
}

// Direct quadrature of S(Y_{l,m}), independent of the decomposition route.
inline quadrature::QuadResult angular_entropy_direct(int l, int m, double rel_tol) {
    const auto panels = quadrature::Panelization{states::angular_breakpoints(l, m)};
    auto f = [l, m](double theta) {
        const double st = std::sin(theta);
        if (st == 0.0) return 0.0;
        const double q = specfun::ln_sph_harm_sq(l, m, theta);
        if (std::isinf(q)) return 0.0;
        return -2.0 * specfun::pi * std::exp(q) * q * st;
    };
    return quadrature::integrate_finite_rel(f, 0.0, specfun::pi, panels, rel_tol);
}

}  // namespace detail

// S = -Int f ln f by direct quadrature: radial part plus the angular part,
// both panelized at the respective polynomial roots.
inline quadrature::QuadResult shannon(const states::QuantumState& s, Space space,
                                      double rel_tol = 1e-9) {
    auto radial = space == Space::Position ? detail::radial_entropy_position(s, rel_tol)
                                           : detail::radial_entropy_momentum(s, rel_tol);
    auto angular = detail::angular_entropy_direct(s.l, s.m, rel_tol);
    radial.value += angular.value;
    radial.abs_err += angular.abs_err;
    radial.evaluations += angular.evaluations;
    radial.accuracy_warning = radial.accuracy_warning || angular.accuracy_warning;
    return radial;
}

// The exact decomposition route; total is the plain sum of the four parts.
inline EntropyBreakdown shannon_breakdown(const states::QuantumState& s, Space space,
                                          double rel_tol = 1e-10) {
    EntropyBreakdown b;
    const int k = states::radial_degree(s);
    b.angular = angular_entropy(s.l, s.m).value;
    if (space == Space::Position) {
        b.coefficient = A_coeff(s.n, s.l);
        b.polynomial_term =
            entropic_integral(states::position_family(s), k, KExponent::E1, rel_tol).value /
            (2.0 * s.n);
        b.z_term = -3.0 * std::log(s.Z);
    } else {
        b.coefficient = B_coeff(s.n, s.l);
        b.polynomial_term =
            entropic_integral(states::momentum_family(s), k, KExponent::E0, rel_tol).value;
        b.z_term = 3.0 * std::log(s.Z);
    }
    b.total = b.coefficient + b.polynomial_term + b.angular + b.z_term;
    return b;
}

// Leading terms for n -> inf at fixed (l, m); the angular entropy enters
// exactly. Both remainders are o(1).
inline AsymptoticValue shannon_asymptotic(const states::QuantumState& s, Space space) {
    const double ang = angular_entropy(s.l, s.m).value;
    const double ln_n = std::log(double(s.n));
    const double ln_pi = std::log(specfun::pi);
    double value;
    if (space == Space::Position)
        value = 6.0 * ln_n - std::numbers::ln2 + ln_pi - 3.0 * std::log(s.Z) + ang;
    else
        value = -3.0 * ln_n + 3.0 * std::numbers::ln2 + ln_pi - 5.0 + 3.0 * std::log(s.Z) +
                ang;
    return AsymptoticValue{value, ErrorOrder::o1};
}

// Entropic uncertainty relation S[rho] + S[gamma] >= 3(1 + ln pi), with the
// left side computed by direct quadrature.
inline AuditRecord entropic_sum_audit(const states::QuantumState& s) {
    const double left =
        shannon(s, Space::Position).value + shannon(s, Space::Momentum).value;
    const double bound = 3.0 * (1.0 + std::log(specfun::pi));
    return make_bound_audit("S[rho] + S[gamma] >= 3(1 + ln pi)", left, bound, 1e-8);
}

}  // namespace rydinfo::entropy
