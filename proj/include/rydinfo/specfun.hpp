#pragma once

// Scalar special functions and orthonormal polynomial evaluation.
//
// Everything downstream (densities, moments, entropies) is built on the
// orthonormal three-term recurrences evaluated here. Polynomial values are
// carried as mantissa * 2^exponent pairs so that degree ~200 with parameters
// up to ~500 never trips double overflow or underflow.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "rydinfo/core.hpp"

namespace rydinfo::specfun {

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;

inline bool is_integer(double x, double tol = 1e-9) {
    return std::fabs(x - std::round(x)) <= tol;
}

// log Gamma on (0, inf).
inline double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
    return std::lgamma(x);
}

// psi(x) on (0, inf): recurrence up to x >= 10, then the Bernoulli tail.
// Absolute error stays below ~1e-14 on the whole range.
inline double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double u = 1.0 / (x * x);
    double tail = 1.0 / 12.0 -
                  u * (1.0 / 120.0 -
                       u * (1.0 / 252.0 -
                            u * (1.0 / 240.0 -
                                 u * (1.0 / 132.0 -
                                      u * (691.0 / 32760.0 - u / 12.0)))));
    return acc + std::log(x) - 0.5 / x - u * tail;
}

// Result of a hypergeometric power series. `condition` is the ratio of the
// sum of term magnitudes to the magnitude of the sum; the warning fires when
// cancellation has plausibly eaten more than six significant digits.
struct SeriesValue {
    double value = 0.0;
    int terms = 0;
    double condition = 1.0;
    bool cancellation_warning = false;
};

namespace detail {

inline SeriesValue sum_hypergeometric(const std::vector<double>& upper,
                                      const std::vector<double>& lower, double z,
                                      const char* name) {
    for (double b : lower) {
        if (b <= 0.0 && is_integer(b, 1e-12))
            throw std::domain_error(std::string(name) + ": lower parameter is a nonpositive integer");
    }
    constexpr int max_terms = 100000;
    double term = 1.0, sum = 1.0, sum_abs = 1.0;
    int k = 0;
    for (; k < max_terms; ++k) {
        double ratio = z / (k + 1.0);
        for (double a : upper) ratio *= a + k;
        for (double b : lower) ratio /= b + k;
        term *= ratio;
        sum += term;
        sum_abs += std::fabs(term);
        if (std::fabs(term) < 1e-16 * std::fabs(sum)) break;
    }
    if (k >= max_terms)
        throw std::runtime_error(std::string(name) + ": series did not converge within 100000 terms");
    SeriesValue out;
    out.value = sum;
    out.terms = k + 2;
    out.condition = sum_abs / std::max(std::fabs(sum), std::numeric_limits<double>::min());
    out.cancellation_warning = out.condition * 1e-16 > 1e-6;
    return out;
}

}  // namespace detail

inline SeriesValue hyp1f1(double a, double b, double z) {
    return detail::sum_hypergeometric({a}, {b}, z, "hyp1f1");
}

inline SeriesValue hyp2f2(double a1, double a2, double b1, double b2, double z) {
    return detail::sum_hypergeometric({a1, a2}, {b1, b2}, z, "hyp2f2");
}

// Upper incomplete Gamma(a, z) for positive integer a and z < 0, the corner
// no common library covers. Uses Gamma(a) - z^a/a * 1F1(a; a+1; -z); with
// z < 0 the series has positive terms only.
inline double upper_incomplete_gamma(double a, double z) {
    if (!(a >= 1.0) || !is_integer(a, 1e-12))
        throw std::domain_error("upper_incomplete_gamma: requires integer a >= 1");
    if (!(z < 0.0)) throw std::domain_error("upper_incomplete_gamma: requires z < 0");
    const long ia = std::lround(a);
    double pow_za = std::pow(-z, a);
    if (ia % 2 != 0) pow_za = -pow_za;
    double lower = pow_za / a * hyp1f1(a, a + 1.0, -z).value;
    return std::exp(ln_gamma(a)) - lower;
}

namespace detail {

// (j1 j2 j3; 0 0 0) for even J = j1+j2+j3.
inline double wigner3j_all_m_zero(double j1, double j2, double j3) {
    const double J = j1 + j2 + j3;
    const double g = J / 2.0;
    double lg = 0.5 * (std::lgamma(J - 2.0 * j1 + 1.0) + std::lgamma(J - 2.0 * j2 + 1.0) +
                       std::lgamma(J - 2.0 * j3 + 1.0) - std::lgamma(J + 2.0)) +
                std::lgamma(g + 1.0) - std::lgamma(g - j1 + 1.0) - std::lgamma(g - j2 + 1.0) -
                std::lgamma(g - j3 + 1.0);
    double v = std::exp(lg);
    return std::lround(g) % 2 != 0 ? -v : v;
}

}  // namespace detail

// Wigner 3j symbol. The all-zero-m case uses the closed product form, which
// is cancellation-free in log space. The general Racah sum alternates with a
// condition number that can reach ~1e40 by j ~ 200, far beyond any floating
// format, so it is summed in exact rational arithmetic and rounded once.
inline double wigner3j(double j1, double j2, double j3, double m1, double m2, double m3) {
    const double js[3] = {j1, j2, j3};
    const double ms[3] = {m1, m2, m3};
    for (int i = 0; i < 3; ++i) {
        if (!(js[i] >= 0.0) || !is_integer(2.0 * js[i]))
            throw std::domain_error("wigner3j: j must be a nonnegative integer or half-integer");
        if (!is_integer(2.0 * ms[i]) || !is_integer(js[i] - ms[i]) || std::fabs(ms[i]) > js[i] + 1e-9)
            throw std::domain_error("wigner3j: m must satisfy |m| <= j with j - m integral");
    }
    if (!is_integer(m1 + m2 + m3) || std::lround(m1 + m2 + m3) != 0) return 0.0;
    if (j3 < std::fabs(j1 - j2) - 1e-9 || j3 > j1 + j2 + 1e-9) return 0.0;
    if (!is_integer(j1 + j2 + j3)) return 0.0;

    if (m1 == 0.0 && m2 == 0.0 && m3 == 0.0) {
        if (std::lround(j1 + j2 + j3) % 2 != 0) return 0.0;
        return detail::wigner3j_all_m_zero(j1, j2, j3);
    }

    const long t_min = std::lround(std::max({0.0, j2 - j3 - m1, j1 - j3 + m2}));
    const long t_max = std::lround(std::min({j1 + j2 - j3, j1 - m1, j2 + m2}));
    if (t_max < t_min) return 0.0;

    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    auto idx = [](double x) { return std::lround(x); };
    std::vector<cpp_int> fact(static_cast<size_t>(idx(j1 + j2 + j3)) + 2, 1);
    for (size_t i = 2; i < fact.size(); ++i) fact[i] = fact[i - 1] * i;
    auto F = [&](double x) -> const cpp_int& { return fact[static_cast<size_t>(idx(x))]; };

    cpp_rational sum = 0;
    for (long t = t_min; t <= t_max; ++t) {
        cpp_int den = F(static_cast<double>(t)) * F(j1 + j2 - j3 - t) * F(j1 - m1 - t) *
                      F(j2 + m2 - t) * F(j3 - j2 + m1 + t) * F(j3 - j1 - m2 + t);
        cpp_rational term(1, den);
        sum += (t % 2 != 0) ? -term : term;
    }
    if (sum == 0) return 0.0;

    cpp_rational pre(F(j1 + j2 - j3) * F(j1 - j2 + j3) * F(-j1 + j2 + j3) * F(j1 - m1) *
                         F(j1 + m1) * F(j2 - m2) * F(j2 + m2) * F(j3 - m3) * F(j3 + m3),
                     F(j1 + j2 + j3 + 1));
    using bigfloat = boost::multiprecision::cpp_bin_float_50;
    const bigfloat v = sqrt(bigfloat(pre)) * bigfloat(sum);
    double result = v.convert_to<double>();
    if (idx(j1 - j2 - m3) % 2 != 0) result = -result;
    return result;
}

// ---------------------------------------------------------------------------
// Orthonormal polynomial families.

enum class PolyKind { Laguerre, Gegenbauer };

// Laguerre: weight x^a e^-x on (0, inf), parameter a > -1.
// Gegenbauer: weight (1-x^2)^(a-1/2) on (-1, 1), parameter a > -1/2.
struct PolyFamily {
    PolyKind kind;
    double param;
};

inline PolyFamily laguerre(double alpha) {
    if (!(alpha > -1.0)) throw std::domain_error("laguerre: requires parameter > -1");
    return {PolyKind::Laguerre, alpha};
}

inline PolyFamily gegenbauer(double lambda) {
    if (!(lambda > -0.5)) throw std::domain_error("gegenbauer: requires parameter > -1/2");
    return {PolyKind::Gegenbauer, lambda};
}

namespace detail {

inline double mu0_log(const PolyFamily& f) {
    if (f.kind == PolyKind::Laguerre) return std::lgamma(f.param + 1.0);
    return 0.5 * std::log(pi) + std::lgamma(f.param + 0.5) - std::lgamma(f.param + 1.0);
}

inline double recur_a(const PolyFamily& f, int k) {
    if (f.kind == PolyKind::Laguerre) return 2.0 * k + f.param + 1.0;
    return 0.0;
}

// b_k in x p_k = sqrt(b_{k+1}) p_{k+1} + a_k p_k + sqrt(b_k) p_{k-1}, k >= 1.
// The Gegenbauer k=1 value is written out to dodge the removable 0/0 at
// parameter 0.
inline double recur_b(const PolyFamily& f, int k) {
    const double a = f.param;
    if (f.kind == PolyKind::Laguerre) return k * (k + a);
    if (k == 1) return 1.0 / (2.0 * (1.0 + a));
    return k * (k + 2.0 * a - 1.0) / (4.0 * (k + a) * (k + a - 1.0));
}

}  // namespace detail

// mantissa * 2^exponent, |mantissa| kept within [2^-400, 2^400].
struct ScaledValue {
    double mantissa = 0.0;
    long exponent = 0;

    double to_double() const {
        if (mantissa == 0.0) return 0.0;
        if (exponent > 1100) return mantissa > 0 ? HUGE_VAL : -HUGE_VAL;
        if (exponent < -1500) return 0.0;
        return std::ldexp(mantissa, static_cast<int>(exponent));
    }
    double log_abs() const {
        if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
        return std::log(std::fabs(mantissa)) + exponent * std::numbers::ln2;
    }
    int sign() const { return (mantissa > 0.0) - (mantissa < 0.0); }
};

inline ScaledValue scaled_from_log(double ln_abs, int sign) {
    if (sign == 0) return {};
    const double l2 = ln_abs / std::numbers::ln2;
    const long e = static_cast<long>(std::floor(l2));
    return {sign * std::exp2(l2 - e), e};
}

// Orthonormal p~_k(x) evaluated by the three-term recurrence, both neighbours
// rescaled together whenever the running value leaves [2^-400, 2^400].
inline ScaledValue poly_eval_scaled(const PolyFamily& f, int k, double x) {
    if (k < 0) throw std::domain_error("poly_eval_scaled: degree must be >= 0");
    if (f.kind == PolyKind::Gegenbauer && !(x >= -1.0 && x <= 1.0))
        throw std::domain_error("poly_eval_scaled: Gegenbauer argument outside [-1, 1]");
    ScaledValue p0 = scaled_from_log(-0.5 * detail::mu0_log(f), 1);
    double prev = 0.0, cur = p0.mantissa;
    long e2 = p0.exponent;
    for (int j = 0; j < k; ++j) {
        const double sb_next = std::sqrt(detail::recur_b(f, j + 1));
        const double sb = j > 0 ? std::sqrt(detail::recur_b(f, j)) : 0.0;
        const double next = ((x - detail::recur_a(f, j)) * cur - sb * prev) / sb_next;
        prev = cur;
        cur = next;
        if (cur != 0.0) {
            int ee = 0;
            std::frexp(cur, &ee);
            if (ee > 400 || ee < -400) {
                cur = std::ldexp(cur, -ee);
                prev = std::ldexp(prev, -ee);
                e2 += ee;
            }
        }
    }
    // classical Laguerre leading coefficient is (-1)^k / k!; the recurrence
    // produces the positive-leading variant, so odd degrees flip.
    if (f.kind == PolyKind::Laguerre && k % 2 != 0) cur = -cur;
    return {cur, e2};
}

inline double poly_eval(const PolyFamily& f, int k, double x) {
    return poly_eval_scaled(f, k, x).to_double();
}

// All k roots, ascending, located by the interlacing cascade: the roots of
// degree d-1 plus the support endpoints bracket exactly one root of degree d
// each, and fixed-count bisection on the sign of the scaled value is immune
// to overflow. Relative accuracy ~1e-14.
inline std::vector<double> poly_roots(const PolyFamily& f, int k) {
    if (k < 0) throw std::domain_error("poly_roots: degree must be >= 0");
    double lo, hi;
    if (f.kind == PolyKind::Laguerre) {
        lo = 0.0;
        hi = 4.0 * k + 2.0 * f.param + 6.0;
    } else {
        lo = -1.0;
        hi = 1.0;
    }
    std::vector<double> roots;
    for (int d = 1; d <= k; ++d) {
        std::vector<double> pts;
        pts.reserve(roots.size() + 2);
        pts.push_back(lo);
        pts.insert(pts.end(), roots.begin(), roots.end());
        pts.push_back(hi);
        std::vector<double> next;
        next.reserve(static_cast<size_t>(d));
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            double u = pts[i], v = pts[i + 1];
            int su = poly_eval_scaled(f, d, u).sign();
            for (int it = 0; it < 90; ++it) {
                const double mid = 0.5 * (u + v);
                if (mid <= u || mid >= v) break;
                const int sm = poly_eval_scaled(f, d, mid).sign();
                if (sm == 0) {
                    u = v = mid;
                    break;
                }
                if (sm == su) u = mid; else v = mid;
            }
            next.push_back(0.5 * (u + v));
        }
        roots = std::move(next);
    }
    return roots;
}

// |Y_lm(theta, .)|^2, via the Gegenbauer form
//   (1/2pi) (sin^2 theta)^|m| [C~_{l-|m|}^{(|m|+1/2)}(cos theta)]^2,
// assembled in log space so large l and |m| cannot underflow prematurely.
inline double ln_sph_harm_sq(int l, int m, double theta) {
    if (l < 0 || std::abs(m) > l) throw std::domain_error("sph_harm_sq: requires 0 <= |m| <= l");
    const int mm = std::abs(m);
    const double c = std::cos(theta), s = std::sin(theta);
    const double s2 = s * s;
    const ScaledValue g = poly_eval_scaled(gegenbauer(mm + 0.5), l - mm, std::clamp(c, -1.0, 1.0));
    if (g.mantissa == 0.0 || (s2 == 0.0 && mm > 0))
        return -std::numeric_limits<double>::infinity();
    double ln = -std::log(2.0 * pi) + 2.0 * g.log_abs();
    if (mm > 0) ln += mm * std::log(s2);
    return ln;
}

inline double sph_harm_sq(int l, int m, double theta) {
    return std::exp(ln_sph_harm_sq(l, m, theta));
}

}  // namespace rydinfo::specfun
