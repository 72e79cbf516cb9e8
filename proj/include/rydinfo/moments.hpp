#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "rydinfo/core.hpp"
#include "rydinfo/quadrature.hpp"
#include "rydinfo/specfun.hpp"
#include "rydinfo/states.hpp"

// Radial and logarithmic expectation values of hydrogenic states, in both
// spaces, as quadratures over the normalized working measures:
//
//   <r^alpha>  = (n/2Z)^alpha Int_0^inf  w_pos(x) x^alpha dx,   alpha > -(2l+3)
//   <p^alpha>  = (Z/n)^alpha  Int_-1^+1  w_mom(t) ((1-t)/(1+t))^{alpha/2} dt,
//                                        -(2l+3) < alpha < 2l+5
//
// plus the large-n leading terms with their declared remainder classes and
// the logarithmic uncertainty-sum audit.

namespace rydinfo::moments {

// Which logarithmic expectation a leading-term request refers to.
enum class LogMomentTarget { Position, Momentum, Sum };

namespace detail {

inline void check_state_numbers(double Z, int n, int l, const char* who) {
    if (n < 1 || l < 0 || l > n - 1 || !(Z > 0.0))
        throw std::invalid_argument(std::string(who) +
                                    ": requires n >= 1, 0 <= l <= n-1, Z > 0");
}

inline std::string window_message(const char* who, int l, double alpha) {
    return std::string(who) + ": integral diverges at alpha = " +
           std::to_string(alpha) + " for l = " + std::to_string(l);
}

// Head-interval breakpoints for the x-integral. Polynomial roots resolve the
// oscillation; the two extra points keep the envelope peak inside the head
// interval when the degree is small (circular states have no roots at all).
inline quadrature::Panelization position_panels(const states::QuantumState& s) {
    std::vector<double> pts = states::position_roots(s);
    pts.push_back(2.0 * (s.l + 1));
    pts.push_back(4.0 * s.n);
    return quadrature::Panelization{std::move(pts)};
}

// The t-integrals are evaluated after the substitution t = cos(theta): the
// weight (1-t^2)^{l+1/2} dt becomes the smooth (sin theta)^{2l+2} d(theta),
// and p maps to (Z/n) tan(theta/2). Breakpoints are the polynomial roots in
// the theta variable plus the sign change of ln tan(theta/2).
inline quadrature::Panelization momentum_panels(const states::QuantumState& s) {
    std::vector<double> pts;
    for (double t : states::momentum_roots(s)) pts.push_back(std::acos(t));
    pts.push_back(0.5 * specfun::pi);
    return quadrature::Panelization{std::move(pts)};
}

}  // namespace detail

// <r^alpha> by quadrature. Converges iff alpha > -(2l+3).
inline quadrature::QuadResult r_moment(const states::QuantumState& s, double alpha,
                                       double rel_tol = 1e-11) {
    if (!(alpha > -(2.0 * s.l + 3.0)))
        throw std::domain_error(detail::window_message("r_moment", s.l, alpha));
    const auto panels = detail::position_panels(s);
    auto f = [&s, alpha](double x) {
        return std::exp(states::position_measure_log(s, x) + alpha * std::log(x));
    };
    auto res = quadrature::integrate_semiinf_rel(f, panels, rel_tol);
    const double pref = std::pow(s.n / (2.0 * s.Z), alpha);
    res.value *= pref;
    res.abs_err *= pref;
    return res;
}

// <p^alpha> by quadrature on the finite t-form. Converges iff
// -(2l+3) < alpha < 2l+5.
inline quadrature::QuadResult p_moment(const states::QuantumState& s, double alpha,
                                       double rel_tol = 1e-11) {
    if (!(alpha > -(2.0 * s.l + 3.0) && alpha < 2.0 * s.l + 5.0))
        throw std::domain_error(detail::window_message("p_moment", s.l, alpha));
    const auto panels = detail::momentum_panels(s);
    auto f = [&s, alpha](double theta) {
        const double st = std::sin(theta);
        if (st == 0.0) return 0.0;  // measure-zero endpoint
        return std::exp(states::momentum_measure_log(s, std::cos(theta)) +
                        std::log(st) + alpha * std::log(std::tan(0.5 * theta)));
    };
    auto res = quadrature::integrate_finite_rel(f, 0.0, specfun::pi, panels, rel_tol);
    const double pref = std::pow(s.Z / s.n, alpha);
    res.value *= pref;
    res.abs_err *= pref;
    return res;
}

// <ln r> by quadrature: ln(n/2Z) + Int w_pos(x) ln x dx.
inline quadrature::QuadResult log_r_moment(const states::QuantumState& s,
                                           double rel_tol = 1e-11) {
    auto panels = detail::position_panels(s);
    panels.breakpoints.push_back(1.0);  // sign change of the integrand
    auto f = [&s](double x) {
        return std::exp(states::position_measure_log(s, x)) * std::log(x);
    };
    auto res = quadrature::integrate_semiinf_rel(f, panels, rel_tol);
    res.value += std::log(s.n / (2.0 * s.Z));
    return res;
}

// <ln p> by quadrature: ln(Z/n) + (1/2) Int w_mom(t) [ln(1-t) - ln(1+t)] dt.
inline quadrature::QuadResult log_p_moment(const states::QuantumState& s,
                                           double rel_tol = 1e-11) {
    const auto panels = detail::momentum_panels(s);
    auto f = [&s](double theta) {
        const double st = std::sin(theta);
        if (st == 0.0) return 0.0;  // limit of measure * log factor
        return std::exp(states::momentum_measure_log(s, std::cos(theta)) +
                        std::log(st)) *
               std::log(std::tan(0.5 * theta));
    };
    auto res = quadrature::integrate_finite_rel(f, 0.0, specfun::pi, panels, rel_tol);
    res.value += std::log(s.Z / s.n);
    return res;
}

// Leading term of <r^alpha> for n -> inf at fixed (l, m). Two branches meeting
// at alpha = -3/2, where no leading term is known (open problem). No remainder
// rate is declared for either branch.
inline AsymptoticValue r_moment_asymptotic(double Z, int n, int l, double alpha) {
    detail::check_state_numbers(Z, n, l, "r_moment_asymptotic");
    if (!(alpha > -(2.0 * l + 3.0)))
        throw std::domain_error(detail::window_message("r_moment_asymptotic", l, alpha));
    if (alpha == -1.5)
        throw std::domain_error(
            "r_moment_asymptotic: the leading term at alpha = -3/2 is an open problem");
    using specfun::ln_gamma;
    const double ln_pi = std::log(specfun::pi);
    double value;
    if (alpha > -1.5) {
        const double c = std::exp((alpha + 1.0) * std::numbers::ln2 +
                                  ln_gamma(alpha + 1.5) - 0.5 * ln_pi -
                                  ln_gamma(alpha + 2.0));
        value = c * std::pow(static_cast<double>(n) * n / Z, alpha);
    } else {
        const double c = std::exp(ln_gamma(2.0 * l + 3.0 + alpha) -
                                  ln_gamma(2.0 * l - alpha) -
                                  (3.0 * alpha + 5.0) * std::numbers::ln2 +
                                  ln_gamma(-alpha - 1.5) - 0.5 * ln_pi -
                                  ln_gamma(-alpha - 1.0));
        value = c * std::pow(Z, -alpha) / (static_cast<double>(n) * n * n);
    }
    return AsymptoticValue{value, ErrorOrder::o1};
}

// Leading term of <p^alpha> for n -> inf. Known only on -1 < alpha < 3; the
// rest of the convergence window is an open problem. The Gamma form is
// regular at alpha = 1, where it reduces to 2Z/(pi n).
inline AsymptoticValue p_moment_asymptotic(double Z, int n, double alpha) {
    detail::check_state_numbers(Z, n, 0, "p_moment_asymptotic");
    if (!(alpha > -1.0 && alpha < 3.0))
        throw std::domain_error(
            "p_moment_asymptotic: the leading term is known only for -1 < alpha < 3; "
            "the remainder of the window is an open problem");
    if (alpha == 1.0)
        return AsymptoticValue{2.0 * Z / (specfun::pi * n), ErrorOrder::o1};
    const double c = (2.0 / specfun::pi) *
                     std::exp(specfun::ln_gamma(0.5 * (alpha + 1.0)) +
                              specfun::ln_gamma(0.5 * (3.0 - alpha)));
    return AsymptoticValue{c * std::pow(Z / n, alpha), ErrorOrder::o1};
}

// Leading behaviour of the logarithmic expectation values; all three carry an
// O(n^-2) remainder. The sum is independent of Z.
inline AsymptoticValue log_moment_asymptotic(double Z, int n, int l,
                                             LogMomentTarget target) {
    detail::check_state_numbers(Z, n, l, "log_moment_asymptotic");
    const double ln_n = std::log(static_cast<double>(n));
    double value;
    switch (target) {
        case LogMomentTarget::Position:
            value = 2.0 * ln_n + 1.0 - std::numbers::ln2 - std::log(Z);
            break;
        case LogMomentTarget::Momentum:
            value = -ln_n - 1.0 + (l + 0.5) / n + std::log(Z);
            break;
        default:
            value = ln_n - std::numbers::ln2 + (l + 0.5) / n;
            break;
    }
    return AsymptoticValue{value, ErrorOrder::O_inv_n2};
}

// Leading term of the uncertainty product <r^alpha>^{2/alpha} <p^beta>^{2/beta}:
// the Z-dependence cancels and the product grows like C(alpha, beta) n^2 with
// remainder o(n^2).
inline AsymptoticValue heisenberg_product_asymptotic(double alpha, double beta, int n) {
    if (n < 1)
        throw std::invalid_argument("heisenberg_product_asymptotic: requires n >= 1");
    if (alpha == 0.0 || beta == 0.0)
        throw std::domain_error(
            "heisenberg_product_asymptotic: exponents 2/alpha, 2/beta need nonzero orders");
    if (!(alpha > -1.5))
        throw std::domain_error("heisenberg_product_asymptotic: requires alpha > -3/2");
    if (!(beta > -1.0 && beta < 3.0))
        throw std::domain_error("heisenberg_product_asymptotic: requires -1 < beta < 3");
    using specfun::ln_gamma;
    const double ln_pi = std::log(specfun::pi);
    const double ln_cr = (alpha + 1.0) * std::numbers::ln2 + ln_gamma(alpha + 1.5) -
                         0.5 * ln_pi - ln_gamma(alpha + 2.0);
    const double ln_cp = std::numbers::ln2 - ln_pi + ln_gamma(0.5 * (1.0 + beta)) +
                         ln_gamma(0.5 * (3.0 - beta));
    const double coeff = std::exp((2.0 / alpha) * ln_cr + (2.0 / beta) * ln_cp);
    return AsymptoticValue{coeff * n * n, ErrorOrder::o_n2};
}

// Central-potential logarithmic uncertainty relation:
// <ln r> + <ln p> >= psi((2l+3)/4) + ln 2. Left side by quadrature.
inline AuditRecord log_uncertainty_audit(const states::QuantumState& s) {
    const double left = log_r_moment(s).value + log_p_moment(s).value;
    const double bound =
        specfun::digamma((2.0 * s.l + 3.0) / 4.0) + std::numbers::ln2;
    return make_bound_audit("<ln r> + <ln p> >= psi((2l+3)/4) + ln 2", left, bound,
                            1e-9);
}

}  // namespace rydinfo::moments
