#pragma once

// Bound-state labels and the two one-particle densities.
//
// Working variables: x = 2Zr/n on the ray for position quantities and
// t = (1 - u^2)/(1 + u^2) with u = np/Z on [-1, 1] for momentum quantities.
// In these variables both radial factors are a classical weight times the
// square of an orthonormal polynomial (Laguerre parameter 2l+1 and degree
// n-l-1, Gegenbauer parameter l+1 and the same degree), so every radial
// integral downstream shares the panelizations and scaled evaluations here.

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "rydinfo/quadrature.hpp"
#include "rydinfo/specfun.hpp"

namespace rydinfo::states {

// Principal quantum numbers above this need RYDINFO_MAX_N; accuracy of the
// degree-cap choice is covered by the scaled polynomial evaluation up to
// degree ~200, beyond which quadrature budgets have not been validated.
inline int max_principal() {
    static const int cap = [] {
        if (const char* s = std::getenv("RYDINFO_MAX_N")) {
            const long v = std::strtol(s, nullptr, 10);
            if (v >= 1) return static_cast<int>(v);
        }
        return 200;
    }();
    return cap;
}

struct QuantumState {
    int n = 1;
    int l = 0;
    int m = 0;
    double Z = 1.0;
};

inline QuantumState make_state(int n, int l, int m, double Z = 1.0) {
    if (n < 1) throw std::domain_error("make_state: requires n >= 1");
    if (n > max_principal())
        throw std::domain_error("make_state: n exceeds the cap of " +
                                std::to_string(max_principal()) +
                                " (raise RYDINFO_MAX_N to override)");
    if (l < 0 || l > n - 1) throw std::domain_error("make_state: requires 0 <= l <= n-1");
    if (std::abs(m) > l) throw std::domain_error("make_state: requires |m| <= l");
    if (!(Z > 0.0)) throw std::domain_error("make_state: requires Z > 0");
    return {n, l, m, Z};
}

struct DensitySample {
    double radial = 0.0;   // radial factor at the sample point
    double angular = 0.0;  // |Y_lm|^2 at the sample polar angle
    double total = 0.0;    // radial * angular
};

namespace detail {

// Root tables are shared across every module; the cascade locator is O(k^3)
// so results are cached per (family, degree, parameter).
inline const std::vector<double>& cached_roots(specfun::PolyKind kind, int k, double param) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, long>, std::unique_ptr<std::vector<double>>> cache;
    const std::tuple<int, int, long> key{static_cast<int>(kind), k, std::lround(2.0 * param)};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const specfun::PolyFamily fam{kind, param};
        it = cache.emplace(key, std::make_unique<std::vector<double>>(specfun::poly_roots(fam, k)))
                 .first;
    }
    return *it->second;
}

}  // namespace detail

inline int radial_degree(const QuantumState& s) { return s.n - s.l - 1; }

inline specfun::PolyFamily position_family(const QuantumState& s) {
    return specfun::laguerre(2.0 * s.l + 1.0);
}

inline specfun::PolyFamily momentum_family(const QuantumState& s) {
    return specfun::gegenbauer(s.l + 1.0);
}

// Roots of the radial polynomial factor in the working variable; the natural
// quadrature breakpoints.
inline const std::vector<double>& position_roots(const QuantumState& s) {
    return detail::cached_roots(specfun::PolyKind::Laguerre, radial_degree(s), 2.0 * s.l + 1.0);
}

inline const std::vector<double>& momentum_roots(const QuantumState& s) {
    return detail::cached_roots(specfun::PolyKind::Gegenbauer, radial_degree(s), s.l + 1.0);
}

// log of the normalized position measure density in x:
//   (1/2n) x^(2l+2) e^-x [L~_k^(2l+1)(x)]^2,  integral over the ray = 1.
inline double position_measure_log(const QuantumState& s, double x) {
    if (x < 0.0) throw std::domain_error("position_measure_log: requires x >= 0");
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    const auto L = specfun::poly_eval_scaled(position_family(s), radial_degree(s), x);
    if (L.mantissa == 0.0) return -std::numeric_limits<double>::infinity();
    return -std::log(2.0 * s.n) + (2.0 * s.l + 2.0) * std::log(x) - x + 2.0 * L.log_abs();
}

// log of the normalized momentum measure density in t:
//   (1 - t^2)^(l+1/2) (1 + t) [C~_k^(l+1)(t)]^2,  integral over [-1, 1] = 1.
inline double momentum_measure_log(const QuantumState& s, double t) {
    if (!(t >= -1.0 && t <= 1.0))
        throw std::domain_error("momentum_measure_log: requires t in [-1, 1]");
    if (t == -1.0 || t == 1.0) return -std::numeric_limits<double>::infinity();
    const auto C = specfun::poly_eval_scaled(momentum_family(s), radial_degree(s), t);
    if (C.mantissa == 0.0) return -std::numeric_limits<double>::infinity();
    return (s.l + 0.5) * std::log1p(-t * t) + std::log1p(t) + 2.0 * C.log_abs();
}

// p as a function of the interval variable and back.
inline double momentum_from_t(const QuantumState& s, double t) {
    return s.Z / s.n * std::sqrt((1.0 - t) / (1.0 + t));
}

inline double position_radial(const QuantumState& s, double r) {
    if (r < 0.0) throw std::domain_error("rho: requires r >= 0");
    const double x = 2.0 * s.Z * r / s.n;
    const int k = radial_degree(s);
    const double lead = std::log(4.0) + 3.0 * std::log(s.Z) - 4.0 * std::log(double(s.n));
    if (x == 0.0) {
        if (s.l > 0) return 0.0;
        const auto L0 = specfun::poly_eval_scaled(position_family(s), k, 0.0);
        return std::exp(lead + 2.0 * L0.log_abs());
    }
    const auto L = specfun::poly_eval_scaled(position_family(s), k, x);
    if (L.mantissa == 0.0) return 0.0;
    return std::exp(lead + 2.0 * s.l * std::log(x) - x + 2.0 * L.log_abs());
}

inline double momentum_radial(const QuantumState& s, double p) {
    if (p < 0.0) throw std::domain_error("gamma_p: requires p >= 0");
    const double u = s.n * p / s.Z;
    const double t = (1.0 - u * u) / (1.0 + u * u);
    const int k = radial_degree(s);
    const double lead =
        (2.0 * s.l + 4.0) * std::log(2.0) + 3.0 * (std::log(double(s.n)) - std::log(s.Z));
    if (u == 0.0) {
        if (s.l > 0) return 0.0;
        const auto C1 = specfun::poly_eval_scaled(momentum_family(s), k, 1.0);
        return std::exp(lead + 2.0 * C1.log_abs());
    }
    const auto C = specfun::poly_eval_scaled(momentum_family(s), k, std::clamp(t, -1.0, 1.0));
    if (C.mantissa == 0.0) return 0.0;
    return std::exp(lead + 2.0 * s.l * std::log(u) - (2.0 * s.l + 4.0) * std::log1p(u * u) +
                    2.0 * C.log_abs());
}

inline DensitySample rho(const QuantumState& s, double r, double theta) {
    DensitySample d;
    d.radial = position_radial(s, r);
    d.angular = specfun::sph_harm_sq(s.l, s.m, theta);
    d.total = d.radial * d.angular;
    return d;
}

inline DensitySample gamma_p(const QuantumState& s, double p, double theta) {
    DensitySample d;
    d.radial = momentum_radial(s, p);
    d.angular = specfun::sph_harm_sq(s.l, s.m, theta);
    d.total = d.radial * d.angular;
    return d;
}

// Polar-angle breakpoints: the nodes of the Gegenbauer factor of |Y_lm|^2.
inline std::vector<double> angular_breakpoints(int l, int m) {
    const auto& troots = detail::cached_roots(specfun::PolyKind::Gegenbauer, l - std::abs(m),
                                              std::abs(m) + 0.5);
    std::vector<double> th;
    th.reserve(troots.size());
    for (auto it = troots.rbegin(); it != troots.rend(); ++it) th.push_back(std::acos(*it));
    return th;
}

// Full-space norm of the density, radial integral times the solid-angle
// integral, each done with the module quadrature so this doubles as an
// end-to-end accuracy check.
inline quadrature::QuadResult normalization_check(const QuantumState& s, Space space,
                                                  double tol = 1e-10) {
    quadrature::QuadResult rad;
    if (space == Space::Position) {
        const double scale = s.n / (2.0 * s.Z);
        quadrature::Panelization panels;
        for (double x : position_roots(s)) panels.breakpoints.push_back(scale * x);
        auto f = [&](double r) { return position_radial(s, r) * r * r; };
        rad = quadrature::integrate_semiinf(f, panels, 0.5 * tol, scale);
    } else {
        quadrature::Panelization panels;
        for (double t : momentum_roots(s)) panels.breakpoints.push_back(momentum_from_t(s, t));
        auto f = [&](double p) { return momentum_radial(s, p) * p * p; };
        rad = quadrature::integrate_semiinf(f, panels, 0.5 * tol, s.Z / s.n);
    }

    quadrature::Panelization th_panels{angular_breakpoints(s.l, s.m)};
    auto g = [&](double th) {
        return 2.0 * specfun::pi * std::sin(th) * specfun::sph_harm_sq(s.l, s.m, th);
    };
    const auto ang = quadrature::integrate_finite(g, 0.0, specfun::pi, th_panels, 0.5 * tol);

    quadrature::QuadResult out;
    out.value = rad.value * ang.value;
    out.abs_err = std::fabs(rad.value) * ang.abs_err + std::fabs(ang.value) * rad.abs_err;
    out.evaluations = rad.evaluations + ang.evaluations;
    out.accuracy_warning = rad.accuracy_warning || ang.accuracy_warning;
    return out;
}

}  // namespace rydinfo::states
