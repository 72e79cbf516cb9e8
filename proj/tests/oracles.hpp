#pragma once

// Independent cross-checks used only by the test suite. These deliberately
// share no code with the library: integration is adaptive Simpson instead of
// Gauss-Legendre, and the 3j oracle runs the Racah sum in exact rational
// arithmetic, so agreement is evidence rather than tautology.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

namespace detail {

inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw std::runtime_error("oracle::integrate: max depth reached");
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Initial uniform split keeps narrowly concentrated integrands from fooling
// the top-level error estimate.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int depth = 48, int panels = 48) {
    double total = 0.0;
    const double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        const double u = a + i * h, v = i + 1 == panels ? b : a + (i + 1) * h;
        const double fu = f(u), fv = f(v), fm = f(0.5 * (u + v));
        const double whole = (v - u) / 6.0 * (fu + 4.0 * fm + fv);
        total += detail::simpson_step(f, u, v, fu, fm, fv, whole, tol / panels, depth);
    }
    return total;
}

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;
using bigfloat = boost::multiprecision::cpp_bin_float_100;

inline bigint factorial(long n) {
    if (n < 0) throw std::domain_error("oracle::factorial: negative argument");
    bigint r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Wigner 3j for integer arguments, Racah sum over exact rationals.
inline double wigner3j_exact(long j1, long j2, long j3, long m1, long m2, long m3) {
    if (m1 + m2 + m3 != 0) return 0.0;
    if (j3 < std::labs(j1 - j2) || j3 > j1 + j2) return 0.0;
    if (std::labs(m1) > j1 || std::labs(m2) > j2 || std::labs(m3) > j3) return 0.0;

    bigrat delta(factorial(j1 + j2 - j3) * factorial(j1 - j2 + j3) * factorial(-j1 + j2 + j3),
                 factorial(j1 + j2 + j3 + 1));
    bigrat msq(factorial(j1 - m1) * factorial(j1 + m1) * factorial(j2 - m2) * factorial(j2 + m2) *
                   factorial(j3 - m3) * factorial(j3 + m3),
               1);

    const long t_min = std::max({0L, j2 - j3 - m1, j1 - j3 + m2});
    const long t_max = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
    if (t_max < t_min) return 0.0;
    bigrat s = 0;
    for (long t = t_min; t <= t_max; ++t) {
        bigint den = factorial(t) * factorial(j1 + j2 - j3 - t) * factorial(j1 - m1 - t) *
                     factorial(j2 + m2 - t) * factorial(j3 - j2 + m1 + t) *
                     factorial(j3 - j1 - m2 + t);
        bigrat term(1, den);
        if (t % 2 != 0) term = -term;
        s += term;
    }

    int sign = s < 0 ? -1 : (s > 0 ? 1 : 0);
    if ((j1 - j2 - m3) % 2 != 0) sign = -sign;
    bigrat sq = delta * msq * s * s;
    bigfloat v = sqrt(bigfloat(sq));
    return sign * v.convert_to<double>();
}

}  // namespace oracle
