#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "cutlab/bounds.hpp"

using namespace cutlab;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {
cpp_int factorial(std::int64_t k) {
    cpp_int v = 1;
    for (std::int64_t i = 2; i <= k; ++i) v *= i;
    return v;
}

// exact value of C(N; a, b, N-a-b) alpha^(a+b) (1-2alpha)^(N-a-b) as a rational,
// for rational alpha = num/den
cpp_rational exact_cell(std::int64_t n, std::int64_t num, std::int64_t den, std::int64_t a,
                        std::int64_t b) {
    std::int64_t c = n - a - b;
    cpp_rational coeff(factorial(n), factorial(a) * factorial(b) * factorial(c));
    cpp_rational alpha(num, den), rest(den - 2 * num, den);
    cpp_rational v = coeff;
    for (std::int64_t i = 0; i < a + b; ++i) v *= alpha;
    for (std::int64_t i = 0; i < c; ++i) v *= rest;
    return v;
}
}  // namespace

TEST_CASE("chernoff tail examples") {
    CHECK(chernoff_tail(100, 0.5, 0, TailSide::upper) == 1.0);
    CHECK(chernoff_tail(100, 0.5, 0, TailSide::lower) == 1.0);
    CHECK(chernoff_tail(100, 0.5, 10, TailSide::upper) ==
          doctest::Approx(std::exp(-100.0 / (2 * (50 + 10.0 / 3)))).epsilon(1e-14));
    CHECK(chernoff_tail(100, 0.5, 10, TailSide::upper) == doctest::Approx(0.3916).epsilon(1e-4));
    CHECK(chernoff_tail(100, 0.5, 10, TailSide::lower) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(chernoff_tail(0, 0.5, 3, TailSide::lower) == 0.0);
    CHECK(chernoff_tail(0, 0.5, 0, TailSide::lower) == 1.0);
    CHECK_THROWS_AS(chernoff_tail(10, 0.5, -1, TailSide::upper), std::invalid_argument);
    CHECK_THROWS_AS(chernoff_tail(10, 1.5, 1, TailSide::upper), std::invalid_argument);
}

TEST_CASE("chernoff tail decreases in t") {
    for (TailSide side : {TailSide::upper, TailSide::lower}) {
        double prev = chernoff_tail(50, 0.3, 0.0, side);
        for (double t = 0.5; t <= 40; t += 0.5) {
            double cur = chernoff_tail(50, 0.3, t, side);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("trinomial term hand-checked cells") {
    auto t0 = trinomial_term(4, 0.25, 0);
    CHECK(t0.value == 0.1875);  // 12 * (1/4)^2 * (1/2)^2, exact in doubles
    CHECK(t0.a == 1);
    CHECK(t0.effective_alpha == 0.25);
    CHECK(t0.d_in_range);
    CHECK(std::exp(t0.log_value) == doctest::Approx(0.1875).epsilon(1e-12));

    auto t1 = trinomial_term(4, 0.25, 1);
    CHECK(t1.value == 0.09375);

    CHECK_THROWS_AS(trinomial_term(4, 0.25, -2), std::invalid_argument);
    CHECK_THROWS_AS(trinomial_term(4, 0.6, 0), std::invalid_argument);
    CHECK(!trinomial_term(4, 0.25, 2).d_in_range);  // past the sqrt(alpha N) window
}

TEST_CASE("trinomial term times alpha*N stays above 0.05 on the sweep") {
    for (std::int64_t n = 8; n <= 400; n += (n < 40 ? 4 : 24)) {
        for (std::int64_t d : {0, 1}) {
            auto t = trinomial_term(n, 0.25, d);
            double v = t.value * (0.25 * double(n));
            CHECK(v >= 0.05);
        }
    }
}

TEST_CASE("trinomial pmf sums to one (exact rational oracle, N <= 12)") {
    for (std::int64_t n : {2, 5, 8, 12}) {
        cpp_rational total = 0;
        double dtotal = 0;
        for (std::int64_t a = 0; a <= n; ++a)
            for (std::int64_t b = 0; a + b <= n; ++b) {
                cpp_rational cell = exact_cell(n, 1, 4, a, b);
                total += cell;
                double lib = trinomial_pmf(n, 0.25, a, b);
                dtotal += lib;
                CHECK(std::abs(lib - double(cpp_rational(cell))) < 1e-15);
            }
        CHECK(total == 1);
        CHECK(std::abs(dtotal - 1.0) < 1e-12);
    }
}

TEST_CASE("parameter formula examples") {
    CHECK(formula_s0(1, 10, 1, 100, 0.25).value == doctest::Approx(200.0).epsilon(1e-14));
    auto ti = formula_t_i(1, 2, 10);
    CHECK(ti.real == doctest::Approx(5.625).epsilon(1e-14));
    CHECK(ti.ceiling == 6);
    CHECK(formula_threshold_m(100).value == doctest::Approx(929.3).epsilon(1e-3));
    CHECK(formula_pittel_factor(100).value == doctest::Approx(30.0).epsilon(1e-14));
    auto xi = formula_x_i(2, 10, ti.real);
    CHECK(xi.real == doctest::Approx(1.0).epsilon(1e-12));  // x inverts t for the same s
    CHECK(formula_s_of_r(8, 1).value == doctest::Approx(4.0 * 16).epsilon(1e-12));
}

TEST_CASE("r0 log form agrees with the direct value where it fits") {
    auto r = formula_r0(0.5, 100);
    CHECK(r.has_log);
    CHECK(r.value == doctest::Approx(std::exp(r.log_value)).epsilon(1e-13));
    CHECK(r.value ==
          doctest::Approx(std::pow(0.5, -12) * std::pow(std::log(100.0), 2)).epsilon(1e-12));
    // tiny p overflows the direct value but the log form stays finite
    auto extreme = formula_r0(1e-30, 1e6);
    CHECK(std::isfinite(extreme.log_value));
    CHECK(extreme.log_value ==
          doctest::Approx(-12 * std::log(1e-30) + 2 * std::log(std::log(1e6))).epsilon(1e-12));
}

TEST_CASE("b bounds ordering and threshold monotonicity") {
    for (double n : {4.0, 10.0, 50.0, 200.0})
        for (double m : {0.0, 1.0, 10.0, 500.0}) {
            auto bb = formula_b_bounds(n, m);
            CHECK(bb.lower <= bb.upper);
            CHECK(bb.lower == m / 2);
        }
    double prev = formula_threshold_m(2).value;
    for (double n = 3; n <= 500; ++n) {
        double cur = formula_threshold_m(n).value;
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("balance, non-edge, and sandwich formulas evaluate as written") {
    CHECK(formula_balance_bound(16, 0.25, 4).value ==
          doctest::Approx(3 * 8 * std::sqrt(2.0) + 4.0).epsilon(1e-12));
    // n=4, M=4, C=1: (1/2)(6-4) - sqrt(1024/4) = 1 - 16
    CHECK(formula_nonedge_bound(4, 4, 1).value == doctest::Approx(-15.0).epsilon(1e-12));
    auto sw = evolution_sandwich(10, 1000, 8);
    CHECK(sw.upper == doctest::Approx(8 * (0.5 + std::sqrt(0.05))).epsilon(1e-12));
    CHECK(sw.lower == doctest::Approx(8 * (0.5 - std::sqrt(0.2))).epsilon(1e-12));
    CHECK(sw.lower <= sw.upper);
}

TEST_CASE("domain violations are rejected by name") {
    CHECK_THROWS_AS(formula_s0(1, 10, 1, -1, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(formula_r0(0.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(formula_r0(0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(formula_t_i(1, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(formula_x_i(10, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(formula_pittel_factor(0), std::invalid_argument);
    CHECK_THROWS_AS(formula_b_bounds(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(formula_balance_bound(10, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(formula_nonedge_bound(10, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(evolution_sandwich(10, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(formula_threshold_m(1), std::invalid_argument);
}

TEST_CASE("reference exponent constants") {
    CHECK(kGapExponentConstant == 1.0 / 250.0);
    CHECK(clique_exponent_constant(3) == doctest::Approx(1.0 / 2700.0).epsilon(1e-15));
}
