#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "rydinfo/moments.hpp"

using namespace rydinfo;
using states::make_state;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("moment windows reject divergent orders", "[moments]") {
    const auto s0 = make_state(3, 0, 0);
    const auto s1 = make_state(5, 1, 1);
    CHECK_THROWS_AS(moments::r_moment(s0, -3.0), std::domain_error);
    CHECK_THROWS_AS(moments::r_moment(s0, -3.5), std::domain_error);
    CHECK_THROWS_AS(moments::r_moment(s1, -5.0), std::domain_error);
    CHECK_THROWS_AS(moments::p_moment(s0, -3.0), std::domain_error);
    CHECK_THROWS_AS(moments::p_moment(s0, 5.0), std::domain_error);
    CHECK_THROWS_AS(moments::p_moment(s1, 7.0), std::domain_error);
    CHECK_THROWS_WITH(moments::r_moment(s0, -3.0),
                      Catch::Matchers::ContainsSubstring("diverges"));
    CHECK_THROWS_WITH(moments::p_moment(s0, 5.0),
                      Catch::Matchers::ContainsSubstring("diverges"));
    // interior orders at the same states are fine
    CHECK_NOTHROW(moments::r_moment(s0, -2.5));
    CHECK_NOTHROW(moments::p_moment(s0, 4.5));
}

TEST_CASE("zeroth moments are exactly one", "[moments]") {
    for (auto s : {make_state(1, 0, 0), make_state(5, 2, 1), make_state(10, 3, 2, 2.7),
                   make_state(30, 29, 29)}) {
        auto r = moments::r_moment(s, 0.0);
        auto p = moments::p_moment(s, 0.0);
        CHECK(r.value == Approx(1.0).margin(1e-10));
        CHECK(p.value == Approx(1.0).margin(1e-10));
        CHECK_FALSE(r.accuracy_warning);
        CHECK_FALSE(p.accuracy_warning);
    }
}

TEST_CASE("negative radial moments match the closed forms", "[moments]") {
    struct Case {
        int n, l, m;
        double Z;
    };
    for (auto [n, l, m, Z] : std::vector<Case>{{3, 0, 0, 1.0},
                                               {4, 1, 1, 1.0},
                                               {7, 3, 2, 2.0},
                                               {12, 5, 0, 1.5},
                                               {9, 8, 8, 1.0}}) {
        const auto s = make_state(n, l, m, Z);
        const double nn = n;
        CHECK(moments::r_moment(s, -1.0).value ==
              Approx(Z / (nn * nn)).epsilon(1e-9));
        if (l >= 1) {
            CHECK(moments::r_moment(s, -2.0).value ==
                  Approx(Z * Z / (nn * nn * nn * (l + 0.5))).epsilon(1e-9));
            CHECK(moments::r_moment(s, -3.0).value ==
                  Approx(std::pow(Z, 3) /
                         (nn * nn * nn * l * (l + 1.0) * (l + 0.5)))
                      .epsilon(1e-9));
        }
    }
}

TEST_CASE("kinetic term and first moments of the ground state", "[moments]") {
    for (auto s : {make_state(1, 0, 0), make_state(6, 2, 1), make_state(30, 29, 29),
                   make_state(8, 4, 3, 3.2)}) {
        const double expect = s.Z * s.Z / (double(s.n) * s.n);
        CHECK(moments::p_moment(s, 2.0).value == Approx(expect).epsilon(1e-9));
    }
    const auto g = make_state(1, 0, 0);
    // Int 4 r^3 e^{-2r} dr = 3/2 and Int_0^inf 32 p^3 / (pi (1+p^2)^4) dp = 8/(3 pi)
    CHECK(moments::r_moment(g, 1.0).value == Approx(1.5).margin(1e-10));
    CHECK(moments::p_moment(g, 1.0).value == Approx(8.0 / (3.0 * pi)).margin(1e-10));
}

TEST_CASE("moments scale with the nuclear charge", "[moments]") {
    const double Z = 3.1;
    for (double alpha : {-1.0, 0.7, 2.0}) {
        const auto ref = make_state(6, 2, 1);
        const auto scaled = make_state(6, 2, 1, Z);
        CHECK(moments::r_moment(scaled, alpha).value ==
              Approx(std::pow(Z, -alpha) * moments::r_moment(ref, alpha).value)
                  .epsilon(1e-10));
        CHECK(moments::p_moment(scaled, alpha).value ==
              Approx(std::pow(Z, alpha) * moments::p_moment(ref, alpha).value)
                  .epsilon(1e-10));
    }
}

TEST_CASE("moment quadrature agrees with an independent integrator", "[moments]") {
    const auto s = make_state(7, 3, 1, 1.3);
    const double ra = oracle::integrate(
        [&](double r) {
            return r <= 0.0 ? 0.0
                            : std::pow(r, 1.7) * states::position_radial(s, r) * r * r;
        },
        0.0, 220.0, 1e-12, 48, 96);
    CHECK(moments::r_moment(s, 1.7).value == Approx(ra).epsilon(1e-9));
    const double pa = oracle::integrate(
        [&](double p) {
            return p <= 0.0 ? 0.0
                            : std::pow(p, 0.8) * states::momentum_radial(s, p) * p * p;
        },
        0.0, 30.0, 1e-12, 48, 96);
    CHECK(moments::p_moment(s, 0.8).value == Approx(pa).epsilon(1e-8));
}

TEST_CASE("logarithmic moments reproduce closed forms", "[moments]") {
    const auto g = make_state(1, 0, 0);
    // <ln r> = psi(3) - ln 2 and <ln p> = -1/3 for the ground state
    CHECK(moments::log_r_moment(g).value ==
          Approx(specfun::digamma(3.0) - std::numbers::ln2).margin(1e-10));
    CHECK(moments::log_p_moment(g).value == Approx(-1.0 / 3.0).margin(1e-10));

    // maximal-l closed forms: <ln r> = ln(n/2Z) + psi(2n+1),
    // <ln p> = -ln(n/Z) - 1/(2n+1)
    const int n = 5;
    const auto c = make_state(n, n - 1, n - 1);
    CHECK(moments::log_r_moment(c).value ==
          Approx(std::log(n / 2.0) + specfun::digamma(2.0 * n + 1.0)).margin(1e-10));
    CHECK(moments::log_p_moment(c).value ==
          Approx(-std::log(double(n)) - 1.0 / (2.0 * n + 1.0)).margin(1e-10));

    // Z enters only through the prefactor: shifts by -+ ln Z
    const auto a = make_state(4, 1, 0);
    const auto b = make_state(4, 1, 0, 2.0);
    CHECK(moments::log_r_moment(b).value ==
          Approx(moments::log_r_moment(a).value - std::numbers::ln2).margin(1e-10));
    CHECK(moments::log_p_moment(b).value ==
          Approx(moments::log_p_moment(a).value + std::numbers::ln2).margin(1e-10));
}

TEST_CASE("radial leading terms and their window", "[moments]") {
    const double Z = 2.0;
    const int n = 50;
    auto a1 = moments::r_moment_asymptotic(Z, n, 0, 1.0);
    CHECK(a1.value == Approx(1.5 * n * n / Z).epsilon(1e-13));
    CHECK(a1.error_order == ErrorOrder::o1);
    CHECK(moments::r_moment_asymptotic(Z, n, 0, 2.0).value ==
          Approx(2.5 * std::pow(double(n) * n / Z, 2)).epsilon(1e-13));
    for (int l : {1, 2, 5}) {
        CHECK(moments::r_moment_asymptotic(Z, n, l, -2.0).value ==
              Approx(Z * Z / (std::pow(double(n), 3) * (l + 0.5))).epsilon(1e-13));
    }
    CHECK_THROWS_WITH(moments::r_moment_asymptotic(1.0, 10, 2, -1.5),
                      Catch::Matchers::ContainsSubstring("open problem"));
    CHECK_THROWS_AS(moments::r_moment_asymptotic(1.0, 10, 0, -3.0), std::domain_error);
    CHECK_THROWS_AS(moments::r_moment_asymptotic(1.0, 0, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(moments::r_moment_asymptotic(1.0, 3, 3, 1.0), std::invalid_argument);
}

TEST_CASE("momentum leading terms and their window", "[moments]") {
    const double Z = 1.7;
    const int n = 40;
    CHECK(moments::p_moment_asymptotic(Z, n, 0.0).value == Approx(1.0).epsilon(1e-13));
    CHECK(moments::p_moment_asymptotic(Z, n, 1.0).value ==
          Approx(2.0 * Z / (pi * n)).epsilon(1e-15));
    auto a2 = moments::p_moment_asymptotic(Z, n, 2.0);
    CHECK(a2.value == Approx(Z * Z / (double(n) * n)).epsilon(1e-13));
    CHECK(a2.error_order == ErrorOrder::o1);
    CHECK_THROWS_WITH(moments::p_moment_asymptotic(1.0, 5, -1.0),
                      Catch::Matchers::ContainsSubstring("open problem"));
    CHECK_THROWS_AS(moments::p_moment_asymptotic(1.0, 5, 3.0), std::domain_error);
    CHECK_THROWS_AS(moments::p_moment_asymptotic(1.0, 5, 4.2), std::domain_error);
}

TEST_CASE("uncertainty product leading coefficient", "[moments]") {
    const int n = 25;
    auto h = moments::heisenberg_product_asymptotic(2.0, 2.0, n);
    CHECK(h.value == Approx(2.5 * n * n).epsilon(1e-13));
    CHECK(h.error_order == ErrorOrder::o_n2);
    for (double alpha : {-1.2, -0.5, 0.5, 1.0, 2.0, 3.5})
        for (double beta : {-0.5, 0.5, 1.0, 2.0, 2.5})
            CHECK(moments::heisenberg_product_asymptotic(alpha, beta, 1).value > 0.0);
    CHECK_THROWS_AS(moments::heisenberg_product_asymptotic(-1.5, 2.0, n),
                    std::domain_error);
    CHECK_THROWS_AS(moments::heisenberg_product_asymptotic(2.0, 3.0, n),
                    std::domain_error);
    CHECK_THROWS_AS(moments::heisenberg_product_asymptotic(0.0, 2.0, n),
                    std::domain_error);
    // n=1 exact values <r^2> = 3, <p^2> = 1 satisfy the product bound 9/4
    const auto g = make_state(1, 0, 0);
    CHECK(moments::r_moment(g, 2.0).value * moments::p_moment(g, 2.0).value >= 2.25);
}

TEST_CASE("logarithmic leading terms", "[moments]") {
    const double Z = 1.9;
    for (int n : {4, 30}) {
        for (int l : {0, 2}) {
            if (l > n - 1) continue;
            auto pos = moments::log_moment_asymptotic(Z, n, l, moments::LogMomentTarget::Position);
            auto mom = moments::log_moment_asymptotic(Z, n, l, moments::LogMomentTarget::Momentum);
            auto sum = moments::log_moment_asymptotic(Z, n, l, moments::LogMomentTarget::Sum);
            CHECK(pos.value ==
                  Approx(2.0 * std::log(double(n)) + 1.0 - std::numbers::ln2 - std::log(Z))
                      .margin(1e-13));
            CHECK(mom.value ==
                  Approx(-std::log(double(n)) - 1.0 + (l + 0.5) / n + std::log(Z))
                      .margin(1e-13));
            CHECK(sum.value == Approx(pos.value + mom.value).margin(1e-13));
            CHECK(sum.value ==
                  moments::log_moment_asymptotic(7.3, n, l, moments::LogMomentTarget::Sum)
                      .value);
            CHECK(sum.error_order == ErrorOrder::O_inv_n2);
        }
    }
    // quadrature sum vs leading term at n = 100, l = 0
    const auto s = make_state(100, 0, 0);
    const double quad = moments::log_r_moment(s, 1e-9).value +
                        moments::log_p_moment(s, 1e-9).value;
    const double lead =
        moments::log_moment_asymptotic(1.0, 100, 0, moments::LogMomentTarget::Sum).value;
    CHECK(std::fabs(quad - lead) <= 5e-3);
}

TEST_CASE("logarithmic uncertainty bound holds", "[moments]") {
    auto g = moments::log_uncertainty_audit(make_state(1, 0, 0));
    CHECK(g.left == Approx(specfun::digamma(3.0) - std::numbers::ln2 - 1.0 / 3.0)
                        .margin(1e-9));
    CHECK(g.bound_or_reference ==
          Approx(specfun::digamma(0.75) + std::numbers::ln2).margin(1e-12));
    CHECK(g.pass);
    CHECK(g.margin > 0.0);
    auto far = moments::log_uncertainty_audit(make_state(50, 0, 0));
    CHECK(far.pass);
    CHECK(far.margin > 0.0);
    // the bound depends on l only
    auto b1 = moments::log_uncertainty_audit(make_state(5, 2, 1));
    auto b2 = moments::log_uncertainty_audit(make_state(80, 2, 1));
    CHECK(b1.bound_or_reference == b2.bound_or_reference);
}

TEST_CASE("quadrature approaches the leading terms", "[moments]") {
    const int l = 1, m = 1;
    for (double alpha : {1.0, 2.0, -1.0}) {
        double first = -1.0;
        for (int n : {20, 40, 80, 160}) {
            const auto s = make_state(n, l, m);
            const double exact = moments::r_moment(s, alpha, 1e-9).value;
            const double lead = moments::r_moment_asymptotic(1.0, n, l, alpha).value;
            const double c = n * std::fabs(exact / lead - 1.0);
            CHECK(c <= 3.0);
            if (first < 0.0)
                first = c;
            else
                CHECK(c <= 1.25 * first + 1e-3);  // no growth of the fitted constant
        }
    }
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (int n : {20, 80}) {
            const auto s = make_state(n, l, m);
            const double exact = moments::p_moment(s, alpha, 1e-9).value;
            const double lead = moments::p_moment_asymptotic(1.0, n, alpha).value;
            CHECK(std::fabs(exact / lead - 1.0) <= 3.0 / n);
        }
    }
}
