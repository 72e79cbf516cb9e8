#pragma once

// Closed forms specific to circular (l = |m| = n-1) and quasicircular
// (l = |m| = n-2) states, plus audits of those printed forms against the
// general machinery. Both families admit exact moments, log moments, Fisher
// informations and disequilibria; the circular entropies are fully closed,
// the quasicircular position entropy carries one quadrature term (I_n) and
// the momentum one a closed Gegenbauer integral (I~_n).
//
// Printed forms are implemented verbatim and cross-audited, never silently
// corrected. Known casualties the audits are expected to flag:
//   - the circular momentum entropy display is off by about 8/(4n^2-1)
//     against quadrature (2.667 at n = 1, decaying like 1/n^2);
//   - the circular momentum Fisher-Shannon display carries a stray factor n
//     relative to the assembly I x (1/2 pi e) exp(2S/3) from the same paper's
//     entropy, whose leading term matches the printed asymptotic.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "rydinfo/complexity.hpp"
#include "rydinfo/core.hpp"
#include "rydinfo/entropy.hpp"
#include "rydinfo/fisher.hpp"
#include "rydinfo/quadrature.hpp"
#include "rydinfo/specfun.hpp"
#include "rydinfo/states.hpp"

namespace rydinfo::special {

enum class SpecialKind { Circular, Quasicircular };

inline const char* to_string(SpecialKind k) {
    return k == SpecialKind::Circular ? "circular" : "quasicircular";
}

namespace detail {

inline void check_special(SpecialKind kind, int n, double Z, const char* who) {
    const int n_min = kind == SpecialKind::Circular ? 1 : 2;
    if (n < n_min || !(Z > 0.0))
        throw std::invalid_argument(std::string(who) + ": requires n >= " +
                                    std::to_string(n_min) + " and Z > 0");
}

}  // namespace detail

// Maps to the underlying (n, l, m) state.
inline states::QuantumState special_state(SpecialKind kind, int n, double Z = 1.0) {
    detail::check_special(kind, n, Z, "special_state");
    const int l = kind == SpecialKind::Circular ? n - 1 : n - 2;
    return states::make_state(n, l, l, Z);
}

// ---- moments -------------------------------------------------------------

// <r^alpha> resp. <p^alpha> of the circular state, plain gamma ratios.
inline double circ_moment(int n, double Z, double alpha, Space space) {
    detail::check_special(SpecialKind::Circular, n, Z, "circ_moment");
    if (space == Space::Position) {
        if (!(alpha > -(2.0 * n + 1.0)))
            throw std::domain_error("circ_moment: integral diverges at alpha = " +
                                    std::to_string(alpha));
        return std::pow(0.5 * n / Z, alpha) *
               std::exp(specfun::ln_gamma(2.0 * n + alpha + 1.0) -
                        specfun::ln_gamma(2.0 * n + 1.0));
    }
    if (!(alpha > -(2.0 * n + 1.0)) || !(alpha < 2.0 * n + 3.0))
        throw std::domain_error("circ_moment: integral diverges at alpha = " +
                                std::to_string(alpha));
    return std::pow(Z / n, alpha) *
           std::exp(specfun::ln_gamma(0.5 * (3.0 - alpha) + n) +
                    specfun::ln_gamma(0.5 * (1.0 + alpha) + n) -
                    specfun::ln_gamma(0.5 + n) - specfun::ln_gamma(1.5 + n));
}

// Quasicircular moments; the quadratic prefactors are strictly positive on
// the convergence windows.
inline double quasi_moment(int n, double Z, double alpha, Space space) {
    detail::check_special(SpecialKind::Quasicircular, n, Z, "quasi_moment");
    if (space == Space::Position) {
        if (!(alpha > -(2.0 * n - 1.0)))
            throw std::domain_error("quasi_moment: integral diverges at alpha = " +
                                    std::to_string(alpha));
        return std::pow(0.5 * n / Z, alpha) *
               (2.0 * n + 3.0 * alpha + alpha * alpha) / (2.0 * n) *
               std::exp(specfun::ln_gamma(2.0 * n + alpha - 1.0) -
                        specfun::ln_gamma(2.0 * n - 1.0));
    }
    if (!(alpha > -(2.0 * n - 1.0)) || !(alpha < 2.0 * n + 1.0))
        throw std::domain_error("quasi_moment: integral diverges at alpha = " +
                                std::to_string(alpha));
    const double am1 = alpha - 1.0;
    return std::pow(Z / n, alpha) * (2.0 * n + am1 * am1) / 2.0 *
           std::exp(specfun::ln_gamma(n + 0.5 * am1) + specfun::ln_gamma(n - 0.5 * am1) -
                    specfun::ln_gamma(n - 0.5) - specfun::ln_gamma(n + 1.5));
}

// Shared leading term for both families: <r^alpha> ~ (n^2/Z)^alpha and
// <p^alpha> ~ (Z/n)^alpha, each with a relative O(1/n).
inline AsymptoticValue special_moment_asymptotic(int n, double Z, double alpha,
                                                 Space space) {
    detail::check_special(SpecialKind::Circular, n, Z, "special_moment_asymptotic");
    const double base = space == Space::Position ? double(n) * n / Z : Z / n;
    return {std::pow(base, alpha), ErrorOrder::O_inv_n};
}

// (<ln r>, <ln p>) pairs.
inline std::pair<double, double> circ_log_moments(int n, double Z) {
    detail::check_special(SpecialKind::Circular, n, Z, "circ_log_moments");
    return {std::log(0.5 * n / Z) + specfun::digamma(2.0 * n + 1.0),
            -std::log(double(n) / Z) - 1.0 / (2.0 * n + 1.0)};
}

inline std::pair<double, double> quasi_log_moments(int n, double Z) {
    detail::check_special(SpecialKind::Quasicircular, n, Z, "quasi_log_moments");
    return {std::log(0.5 * n / Z) + 1.5 / n + specfun::digamma(2.0 * n - 1.0),
            -std::log(double(n) / Z) - (6.0 * n - 1.0) / (4.0 * n * n - 1.0)};
}

// ---- circular entropies and complexities ----------------------------------

// Printed closed entropies. The momentum display carries the documented
// defect; circ_shannon_audit reports it.
inline double circ_shannon(int n, double Z, Space space) {
    detail::check_special(SpecialKind::Circular, n, Z, "circ_shannon");
    const double nn = n;
    if (space == Space::Position)
        return std::log(std::numbers::pi * nn * nn * nn * nn / (Z * Z * Z)) +
               2.0 * specfun::ln_gamma(nn) + 2.0 * nn + 1.0 -
               2.0 * (nn - 1.0) * (0.5 / nn + specfun::digamma(nn));
    return std::log(32.0 * std::numbers::pi * std::numbers::pi * Z * Z * Z /
                    (nn * nn * nn * nn)) +
           (nn + 1.0) / nn - 4.0 / (2.0 * nn - 1.0) +
           4.0 * (specfun::digamma(nn) - specfun::digamma(2.0 * nn));
}

inline AsymptoticValue circ_shannon_asymptotic(int n, double Z, Space space) {
    detail::check_special(SpecialKind::Circular, n, Z, "circ_shannon_asymptotic");
    const double nn = n;
    const double pi2 = 2.0 * std::numbers::pi * std::numbers::pi;
    if (space == Space::Position)
        return {5.0 * std::log(nn) + 1.0 + std::log(pi2 / (Z * Z * Z)) + 1.0 / (3.0 * nn),
                ErrorOrder::O_inv_n2};
    return {-4.0 * std::log(nn) - 2.0 / nn + 1.0 + std::log(pi2 * Z * Z * Z),
            ErrorOrder::O_inv_n2};
}

inline AuditRecord circ_shannon_audit(int n, double Z, Space space, double tol = 1e-8) {
    const double closed = circ_shannon(n, Z, space);
    const double quad =
        entropy::shannon(special_state(SpecialKind::Circular, n, Z), space).value;
    return make_formula_audit(
        std::string("formula-vs-quadrature:circ-shannon-") + rydinfo::to_string(space),
        closed, quad, tol);
}

// (I[rho], I[gamma]) = (4Z^2/n^3, 4n^2(n+2)/Z^2).
inline std::pair<double, double> circ_fisher(int n, double Z) {
    detail::check_special(SpecialKind::Circular, n, Z, "circ_fisher");
    const double nn = n;
    return {4.0 * Z * Z / (nn * nn * nn), 4.0 / (Z * Z) * nn * nn * (nn + 2.0)};
}

inline double circ_cramer_rao(int n, double Z, Space space) {
    detail::check_special(SpecialKind::Circular, n, Z, "circ_cramer_rao");
    const double nn = n;
    return space == Space::Position ? 4.0 * nn + 6.0 + 2.0 / nn : 4.0 * nn + 8.0;
}

// Fisher-Shannon assembled from the printed closed entropy (exact in the
// paper's own terms).
inline double circ_fisher_shannon(int n, double Z, Space space) {
    const auto info = circ_fisher(n, Z);
    const double i = space == Space::Position ? info.first : info.second;
    return i / (2.0 * std::numbers::pi * std::numbers::e) *
           std::exp(2.0 / 3.0 * circ_shannon(n, Z, space));
}

// The paper's standalone displays: the position one equals the assembly
// identically, the momentum one is n times it (misprint, see header note).
inline double circ_fisher_shannon_printed(int n, double Z, Space space) {
    detail::check_special(SpecialKind::Circular, n, Z, "circ_fisher_shannon_printed");
    const double nn = n;
    if (space == Space::Position)
        return 2.0 * std::pow(std::numbers::pi * nn, -1.0 / 3.0) *
               std::exp(4.0 / 3.0 * specfun::ln_gamma(nn) +
                        2.0 / 3.0 *
                            (2.0 * nn - 0.5 -
                             2.0 * (nn - 1.0) * (0.5 / nn + specfun::digamma(nn))));
    return 16.0 * std::cbrt(2.0 * std::numbers::pi * nn) * (nn + 2.0) *
           std::exp(2.0 / 3.0 *
                    (-0.5 + 1.0 / nn - 4.0 / (2.0 * nn - 1.0) +
                     4.0 * (specfun::digamma(nn) - specfun::digamma(2.0 * nn))));
}

inline AuditRecord circ_fisher_shannon_audit(int n, double Z, Space space,
                                             double rel_tol = 1e-10) {
    const double printed = circ_fisher_shannon_printed(n, Z, space);
    const double assembly = circ_fisher_shannon(n, Z, space);
    AuditRecord rec;
    rec.relation = std::string("formula-vs-quadrature:circ-fisher-shannon-") +
                   rydinfo::to_string(space);
    rec.left = printed;
    rec.bound_or_reference = assembly;
    rec.margin = -std::fabs(printed - assembly) / std::fabs(assembly);
    rec.tolerance = rel_tol;
    rec.pass = rec.margin >= -rel_tol;
    return rec;
}

// Both spaces share the leading term 2^(5/3) (pi/e)^(1/3) n^(1/3).
inline AsymptoticValue circ_fisher_shannon_asymptotic(int n, Space) {
    detail::check_special(SpecialKind::Circular, n, 1.0, "circ_fisher_shannon_asymptotic");
    return {std::pow(2.0, 5.0 / 3.0) * std::cbrt(std::numbers::pi / std::numbers::e) *
                std::cbrt(double(n)),
            ErrorOrder::O_inv_n23};
}

inline double circ_disequilibrium(int n, double Z, Space space) {
    detail::check_special(SpecialKind::Circular, n, Z, "circ_disequilibrium");
    const double nn = n;
    const double pi = std::numbers::pi;
    if (space == Space::Position)
        return (2.0 * nn - 1.0) *
               std::exp(2.0 * specfun::ln_gamma(nn - 0.5) - 2.0 * specfun::ln_gamma(nn)) *
               Z * Z * Z / (8.0 * pi * pi * nn * nn * nn * nn * nn);
    return nn * nn * nn * nn * (4.0 * nn + 5.0) * (4.0 * nn + 7.0) /
           (16.0 * pi * pi * (4.0 * nn * nn - 1.0) * Z * Z * Z);
}

// The printed LMC forms coincide with D x exp(S) assembled from the printed
// entropies.
inline double circ_lmc(int n, double Z, Space space) {
    detail::check_special(SpecialKind::Circular, n, Z, "circ_lmc");
    const double nn = n;
    const double pi = std::numbers::pi;
    if (space == Space::Position)
        return (2.0 * nn - 1.0) *
               std::exp(2.0 * specfun::ln_gamma(nn - 0.5) + 2.0 * nn + 1.0 -
                        2.0 * (nn - 1.0) * (0.5 / nn + specfun::digamma(nn))) /
               (8.0 * pi * nn);
    return 2.0 * (4.0 * nn + 5.0) * (4.0 * nn + 7.0) / (4.0 * nn * nn - 1.0) *
           std::exp(1.0 + 1.0 / nn - 4.0 / (2.0 * nn - 1.0) +
                    4.0 * (specfun::digamma(nn) - specfun::digamma(2.0 * nn)));
}

inline AsymptoticValue circ_lmc_asymptotic(int n, Space space) {
    detail::check_special(SpecialKind::Circular, n, 1.0, "circ_lmc_asymptotic");
    const double nn = n;
    const double e = std::numbers::e;
    const double value = space == Space::Position ? 0.5 * e + 7.0 * e / (24.0 * nn)
                                                  : 0.5 * e + 0.5 * e / nn;
    return {value, ErrorOrder::O_inv_n2};
}

struct SpecialComplexities {
    complexity::ComplexityTriple position;
    complexity::ComplexityTriple momentum;
};

inline SpecialComplexities circ_complexities(int n, double Z) {
    SpecialComplexities out;
    out.position.cramer_rao = {circ_cramer_rao(n, Z, Space::Position), Method::Exact};
    out.momentum.cramer_rao = {circ_cramer_rao(n, Z, Space::Momentum), Method::Exact};
    out.position.fisher_shannon = {circ_fisher_shannon(n, Z, Space::Position),
                                   Method::Exact};
    out.momentum.fisher_shannon = {circ_fisher_shannon(n, Z, Space::Momentum),
                                   Method::Exact};
    out.position.lmc = {circ_lmc(n, Z, Space::Position), Method::Exact};
    out.momentum.lmc = {circ_lmc(n, Z, Space::Momentum), Method::Exact};
    return out;
}

// ---- quasicircular entropies and complexities ------------------------------

namespace detail {

// I_n / Gamma(2n-1) where
//   I_n = Int_0^inf x^(2n-2) e^-x (2n-2-x)^2 ln((2n-2-x)^2) dx;
// the log singularity at x = 2n-2 is a declared breakpoint.
inline quadrature::QuadResult i_n_scaled(int n, double rel_tol = 1e-11) {
    const double shift = 2.0 * n - 2.0;
    const double lg = specfun::ln_gamma(2.0 * n - 1.0);
    auto f = [shift, lg, n](double x) {
        const double d = shift - x;
        if (d == 0.0) return 0.0;
        const double sq = d * d;
        return std::exp((2.0 * n - 2.0) * std::log(x) - x - lg) * sq * std::log(sq);
    };
    const quadrature::Panelization panels{{shift, 4.0 * n + 4.0}};
    return quadrature::integrate_semiinf_rel(f, panels, rel_tol);
}

}  // namespace detail

// -I_n / (2n Gamma(2n-1)), the quadrature term of the quasicircular position
// entropy; tends to -ln n + gamma_EM - 2.
inline quadrature::QuadResult I_n_term(int n) {
    detail::check_special(SpecialKind::Quasicircular, n, 1.0, "I_n_term");
    auto res = detail::i_n_scaled(n);
    res.value = -res.value / (2.0 * n);
    res.abs_err /= 2.0 * n;
    return res;
}

// Raw I_n by quadrature; only representable while Gamma(2n-1) fits a double.
inline quadrature::QuadResult I_n_quadrature(int n) {
    detail::check_special(SpecialKind::Quasicircular, n, 1.0, "I_n_quadrature");
    const double lg = specfun::ln_gamma(2.0 * n - 1.0);
    if (lg > 700.0)
        throw std::overflow_error("I_n_quadrature: value exceeds double range");
    auto res = detail::i_n_scaled(n);
    const double g = std::exp(lg);
    res.value *= g;
    res.abs_err *= g;
    return res;
}

// The finite-sum form of I_n: hypergeometric pieces with alternating
// binomial weights. Conditioning collapses quickly, hence the small-n cap;
// the quadrature route is the production path.
inline double I_n_hypergeometric(int n) {
    if (n < 2 || n > 10)
        throw std::domain_error(
            "I_n_hypergeometric: usable only for 2 <= n <= 10 (cancellation)");
    const double w = 2.0 * n - 2.0;
    double sum = 0.0;
    for (int k = 0; k <= 2 * n - 2; ++k) {
        const double k3 = k + 3.0;
        double term = 2.0 * std::exp(specfun::ln_gamma(k3)) * specfun::digamma(k3);
        term += std::pow(2.0, k + 4.0) * std::pow(1.0 - n, k3) / (k3 * k3) *
                specfun::hyp2f2(k3, k3, k3 + 1.0, k3 + 1.0, w).value;
        term -= std::pow(2.0 - 2.0 * n, k3) / k3 *
                specfun::hyp1f1(k3, k3 + 1.0, w).value * std::log(w * w);
        sum += std::exp(complexity::detail::ln_binomial(w, double(k)) -
                        k * std::log(w)) *
               term;
    }
    return std::exp(w * std::log(w) - w) * sum;
}

// Position entropy of the quasicircular state: closed terms plus the I_n
// quadrature term.
inline quadrature::QuadResult quasi_shannon_position(int n, double Z) {
    detail::check_special(SpecialKind::Quasicircular, n, Z, "quasi_shannon_position");
    const double nn = n;
    auto res = I_n_term(n);
    res.value += std::log(2.0 * std::numbers::pi / (Z * Z * Z)) + 3.0 * std::log(nn) -
                 std::log1p(-1.0 / nn) + 2.0 * nn + 1.0 + 4.0 / nn - 1.0 / (nn - 1.0) +
                 2.0 * specfun::ln_gamma(nn) - 2.0 * (nn - 2.0) * specfun::digamma(nn);
    return res;
}

inline AsymptoticValue quasi_shannon_position_asymptotic(int n, double Z) {
    detail::check_special(SpecialKind::Quasicircular, n, Z,
                          "quasi_shannon_position_asymptotic");
    const double pi = std::numbers::pi;
    return {5.0 * std::log(double(n)) + std::log(4.0 * pi * pi / (Z * Z * Z)) +
                specfun::euler_gamma,
            ErrorOrder::o1};
}

inline AuditRecord quasi_shannon_position_audit(int n, double Z, double tol = 1e-8) {
    const double closed = quasi_shannon_position(n, Z).value;
    const double quad =
        entropy::shannon(special_state(SpecialKind::Quasicircular, n, Z), Space::Position)
            .value;
    return make_formula_audit("formula-vs-quadrature:quasi-shannon-position", closed,
                              quad, tol);
}

// I~_n closed form: 2 sqrt(pi) (n-1)^2 Gamma(n-1/2)/Gamma(n+1) times the
// bracket [ln(4(n-1)^2) - psi(n) - gamma_EM + 2(1 - ln 2) - 1/n].
inline double I_tilde_closed(int n) {
    detail::check_special(SpecialKind::Quasicircular, n, 1.0, "I_tilde_closed");
    const double nn = n;
    const double bracket = std::log(4.0 * (nn - 1.0) * (nn - 1.0)) -
                           specfun::digamma(nn) - specfun::euler_gamma +
                           2.0 * (1.0 - std::numbers::ln2) - 1.0 / nn;
    return 2.0 * std::sqrt(std::numbers::pi) * (nn - 1.0) * (nn - 1.0) *
           std::exp(specfun::ln_gamma(nn - 0.5) - specfun::ln_gamma(nn + 1.0)) * bracket;
}

// The I~_n contribution -n 2^(2n-3) Gamma(n-1)^2 / (pi Gamma(2n-1)) I~_n,
// evaluated with the gamma ratio in log space.
inline double I_tilde_term(int n) {
    const double nn = n;
    const double ratio =
        std::exp((2.0 * nn - 3.0) * std::numbers::ln2 +
                 2.0 * specfun::ln_gamma(nn - 1.0) - specfun::ln_gamma(2.0 * nn - 1.0));
    return -nn / std::numbers::pi * ratio * I_tilde_closed(n);
}

// Momentum entropy of the quasicircular state, fully closed.
inline double quasi_shannon_momentum(int n, double Z) {
    detail::check_special(SpecialKind::Quasicircular, n, Z, "quasi_shannon_momentum");
    const double nn = n;
    return std::log(64.0 * std::numbers::pi * std::numbers::pi * Z * Z * Z) -
           3.0 * std::log(nn) + std::log1p(-1.0 / nn) + 2.0 - 1.0 / (nn - 1.0) -
           8.0 / (2.0 * nn + 1.0) +
           4.0 * (specfun::digamma(nn) - specfun::digamma(2.0 * nn)) + I_tilde_term(n);
}

inline AsymptoticValue quasi_shannon_momentum_asymptotic(int n, double Z) {
    detail::check_special(SpecialKind::Quasicircular, n, Z,
                          "quasi_shannon_momentum_asymptotic");
    const double pi = std::numbers::pi;
    return {-4.0 * std::log(double(n)) + std::log(4.0 * pi * pi * Z * Z * Z) +
                specfun::euler_gamma - 4.5 / n,
            ErrorOrder::O_inv_n};
}

inline AuditRecord quasi_shannon_momentum_audit(int n, double Z, double tol = 1e-8) {
    const double closed = quasi_shannon_momentum(n, Z);
    const double quad =
        entropy::shannon(special_state(SpecialKind::Quasicircular, n, Z), Space::Momentum)
            .value;
    return make_formula_audit("formula-vs-quadrature:quasi-shannon-momentum", closed,
                              quad, tol);
}

// (I[rho], I[gamma]) = (8Z^2/n^3, 2n^2(4n+13)/Z^2).
inline std::pair<double, double> quasi_fisher(int n, double Z) {
    detail::check_special(SpecialKind::Quasicircular, n, Z, "quasi_fisher");
    const double nn = n;
    return {8.0 * Z * Z / (nn * nn * nn), 2.0 / (Z * Z) * nn * nn * (4.0 * nn + 13.0)};
}

inline double quasi_cramer_rao(int n, double Z, Space space) {
    detail::check_special(SpecialKind::Quasicircular, n, Z, "quasi_cramer_rao");
    const double nn = n;
    return space == Space::Position ? 8.0 * nn + 36.0 - 20.0 / nn : 8.0 * nn + 26.0;
}

// W_2 (disequilibrium) printed gamma-ratio forms.
inline double quasi_disequilibrium(int n, double Z, Space space) {
    detail::check_special(SpecialKind::Quasicircular, n, Z, "quasi_disequilibrium");
    const double nn = n;
    const double pi = std::numbers::pi;
    if (space == Space::Position) {
        const double three_minus_2n = 3.0 - 2.0 * nn;
        return std::exp((2.0 * nn - 9.0) * std::numbers::ln2 +
                        3.0 * specfun::ln_gamma(nn - 1.5) - specfun::ln_gamma(nn - 1.0) -
                        specfun::ln_gamma(2.0 * nn - 1.0)) *
               three_minus_2n * three_minus_2n * (6.0 * nn - 7.0) * Z * Z * Z /
               (std::pow(pi, 2.5) * nn * nn * nn * nn * nn);
    }
    return 3.0 * (nn - 1.0) * nn * nn * nn * nn * (16.0 * nn * (nn + 13.0) + 275.0) /
           (32.0 * pi * pi * (2.0 * nn - 3.0) * (2.0 * nn - 1.0) * (2.0 * nn + 1.0) * Z *
            Z * Z);
}

// Both spaces share the leading term 8 (2 pi)^(1/3) e^(-1+2 gamma_EM/3) n^(1/3).
inline AsymptoticValue quasi_fisher_shannon_asymptotic(int n, Space space) {
    detail::check_special(SpecialKind::Quasicircular, n, 1.0,
                          "quasi_fisher_shannon_asymptotic");
    const double value = 8.0 * std::cbrt(2.0 * std::numbers::pi) *
                         std::exp(-1.0 + 2.0 / 3.0 * specfun::euler_gamma) *
                         std::cbrt(double(n));
    return {value, space == Space::Position ? ErrorOrder::o_n13 : ErrorOrder::O_inv_n23};
}

inline AsymptoticValue quasi_lmc_asymptotic(int n, Space space) {
    detail::check_special(SpecialKind::Quasicircular, n, 1.0, "quasi_lmc_asymptotic");
    const double base = 0.75 * std::exp(specfun::euler_gamma);
    if (space == Space::Position) return {base, ErrorOrder::o1};
    return {base + 9.0 * base / n, ErrorOrder::O_inv_n2};
}

struct QuasiResult {
    double fisher_position = 0.0;
    double fisher_momentum = 0.0;
    SpecialComplexities complexities;
};

// Momentum entries are fully closed; position Fisher-Shannon and LMC carry
// the I_n quadrature through the entropy.
inline QuasiResult quasi_fisher_and_complexities(int n, double Z) {
    QuasiResult out;
    const auto info = quasi_fisher(n, Z);
    out.fisher_position = info.first;
    out.fisher_momentum = info.second;
    auto& c = out.complexities;
    c.position.cramer_rao = {quasi_cramer_rao(n, Z, Space::Position), Method::Exact};
    c.momentum.cramer_rao = {quasi_cramer_rao(n, Z, Space::Momentum), Method::Exact};
    const double s_pos = quasi_shannon_position(n, Z).value;
    const double s_mom = quasi_shannon_momentum(n, Z);
    const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
    c.position.fisher_shannon = {info.first / two_pi_e * std::exp(2.0 / 3.0 * s_pos),
                                 Method::Quadrature};
    c.momentum.fisher_shannon = {info.second / two_pi_e * std::exp(2.0 / 3.0 * s_mom),
                                 Method::Exact};
    c.position.lmc = {quasi_disequilibrium(n, Z, Space::Position) * std::exp(s_pos),
                      Method::Quadrature};
    c.momentum.lmc = {quasi_disequilibrium(n, Z, Space::Momentum) * std::exp(s_mom),
                      Method::Exact};
    return out;
}

}  // namespace rydinfo::special
