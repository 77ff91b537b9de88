#ifndef CUTLAB_BOUNDS_HPP
#define CUTLAB_BOUNDS_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace cutlab {

/// One evaluated closed-form quantity. log_value carries the natural-log
/// form for quantities that under/overflow doubles.
struct BoundReport {
    std::string name;
    std::map<std::string, double> inputs;
    double value = 0;
    double log_value = 0;
    bool has_log = false;
};

/// Proof-side exponent constants with no finite-n operational meaning;
/// exposed for reference only.
inline constexpr double kGapExponentConstant = 1.0 / 250.0;
inline constexpr double clique_exponent_constant(int l) { return 1.0 / (100.0 * l * l * l); }

enum class TailSide { upper, lower };

/// Poisson-style tail bound for Bin(n,p), lambda = np:
/// upper exp(-t^2 / (2(lambda + t/3))), lower exp(-t^2 / (2 lambda)).
/// Reported raw; may exceed nothing but is not clamped below at 0 either.
inline double chernoff_tail(std::int64_t n, double p, double t, TailSide side) {
    if (t < 0) throw std::invalid_argument("chernoff_tail: t must be >= 0");
    if (p < 0 || p > 1) throw std::invalid_argument("chernoff_tail: p must be in [0,1]");
    if (n < 0) throw std::invalid_argument("chernoff_tail: n must be >= 0");
    double lambda = double(n) * p;
    if (t == 0) return 1.0;
    if (side == TailSide::upper) return std::exp(-t * t / (2.0 * (lambda + t / 3.0)));
    if (lambda == 0) return 0.0;  // limit convention for the lower side
    return std::exp(-t * t / (2.0 * lambda));
}

struct TrinomialTerm {
    double value = 0;
    double log_value = 0;
    double effective_alpha = 0;  // a/N after rounding a = round(alpha*N)
    std::int64_t a = 0;          // first cell
    bool d_in_range = true;      // d <= min{sqrt(aN-ish ranges)}, advisory only
};

/// log of N! / (a! b! c!) via lgamma.
inline double log_multinomial(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::lgamma(double(n) + 1) - std::lgamma(double(a) + 1) - std::lgamma(double(b) + 1) -
           std::lgamma(double(c) + 1);
}

namespace detail {
/// N! / (a! b! c!) as an exact integer for small N (fits in uint64 through
/// N = 20); 0 signals "use the log path".
inline std::uint64_t exact_multinomial(std::int64_t n, std::int64_t a, std::int64_t b) {
    if (n > 20) return 0;
    std::uint64_t v = 1;
    std::int64_t next = 1;
    auto choose_in = [&](std::int64_t k) {
        for (std::int64_t i = 1; i <= k; ++i) v = v * std::uint64_t(next++) / std::uint64_t(i);
    };
    choose_in(a);
    choose_in(b);
    choose_in(n - a - b);
    return v;
}
}  // namespace detail

/// One cell of the trinomial pmf with probabilities (alpha, alpha, 1-2alpha):
/// C(N; a, a+d) alpha^(2a+d) (1-2alpha)^(N-2a-d), a = round(alpha*N).
inline TrinomialTerm trinomial_term(std::int64_t n, double alpha, std::int64_t d) {
    if (alpha <= 0 || alpha >= 0.5)
        throw std::invalid_argument("trinomial_term: alpha must be in (0, 1/2)");
    if (n < 1) throw std::invalid_argument("trinomial_term: N must be >= 1");
    TrinomialTerm out;
    out.a = std::llround(alpha * double(n));
    out.effective_alpha = double(out.a) / double(n);
    std::int64_t b = out.a + d;
    std::int64_t c = n - out.a - b;
    if (out.a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("trinomial_term: infeasible cell counts (negative cell)");
    double limit = std::min(std::sqrt(alpha * double(n)), std::sqrt((1 - 2 * alpha) * double(n)));
    out.d_in_range = std::abs(double(d)) <= limit;
    out.log_value = log_multinomial(n, out.a, b, c) + double(out.a + b) * std::log(alpha) +
                    double(c) * std::log1p(-2 * alpha);
    if (auto coeff = detail::exact_multinomial(n, out.a, b))
        out.value = double(coeff) * std::pow(alpha, double(out.a + b)) *
                    std::pow(1.0 - 2.0 * alpha, double(c));
    else
        out.value = std::exp(out.log_value);
    return out;
}

/// Generic cell (a, b) of the same trinomial pmf, used by the sum-to-one
/// property checks.
inline double trinomial_pmf(std::int64_t n, double alpha, std::int64_t a, std::int64_t b) {
    std::int64_t c = n - a - b;
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("trinomial_pmf: infeasible cell");
    if (auto coeff = detail::exact_multinomial(n, a, b))
        return double(coeff) * std::pow(alpha, double(a + b)) *
               std::pow(1.0 - 2.0 * alpha, double(c));
    return std::exp(log_multinomial(n, a, b, c) + double(a + b) * std::log(alpha) +
                    double(c) * std::log1p(-2 * alpha));
}

namespace detail {
inline void require_positive(double x, const char* formula, const char* name) {
    if (!(x > 0))
        throw std::invalid_argument(std::string(formula) + ": " + name + " must be positive");
}
inline BoundReport report(std::string name, std::map<std::string, double> inputs, double value,
                          bool with_log = false, double log_value = 0) {
    BoundReport r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.value = value;
    r.has_log = with_log;
    r.log_value = with_log ? log_value : 0;
    return r;
}
}  // namespace detail

/// s0 = C * omega * r^4 * sqrt(n/p).
inline BoundReport formula_s0(double c, double omega, double r, double n, double p) {
    detail::require_positive(n, "s0", "n");
    detail::require_positive(p, "s0", "p");
    detail::require_positive(omega, "s0", "omega");
    double v = c * omega * std::pow(r, 4) * std::sqrt(n / p);
    return detail::report("s0", {{"C", c}, {"omega", omega}, {"r", r}, {"n", n}, {"p", p}}, v);
}

/// r0 = p^(-12) log^2 n; blows past doubles quickly, so the log form matters.
inline BoundReport formula_r0(double p, double n) {
    detail::require_positive(p, "r0", "p");
    if (!(n > 1)) throw std::invalid_argument("r0: n must exceed 1");
    double ln = std::log(n);
    double logv = -12.0 * std::log(p) + 2.0 * std::log(ln);
    return detail::report("r0", {{"p", p}, {"n", n}}, std::exp(logv), true, logv);
}

/// s(r) = n^(2/3) (r+1)^4.
inline BoundReport formula_s_of_r(double n, double r) {
    detail::require_positive(n, "s_of_r", "n");
    if (r < 0) throw std::invalid_argument("s_of_r: r must be >= 0");
    return detail::report("s_of_r", {{"n", n}, {"r", r}},
                          std::pow(n, 2.0 / 3.0) * std::pow(r + 1, 4));
}

/// threshold_m = (sqrt(3)/4) n^(3/2) sqrt(log n).
inline BoundReport formula_threshold_m(double n) {
    if (!(n > 1)) throw std::invalid_argument("threshold_m: n must exceed 1");
    double v = std::sqrt(3.0) / 4.0 * std::pow(n, 1.5) * std::sqrt(std::log(n));
    return detail::report("threshold_m", {{"n", n}}, v);
}

struct EvolutionStep {
    double real = 0;
    long long ceiling = 0;
};

/// t_i = r^2 n(n-1) / (s_i (n - s_i)).
inline EvolutionStep formula_t_i(double r, double s_i, double n) {
    detail::require_positive(n, "t_i", "n");
    if (!(s_i > 0 && s_i < n)) throw std::invalid_argument("t_i: need 0 < s_i < n");
    EvolutionStep out;
    out.real = r * r * n * (n - 1) / (s_i * (n - s_i));
    out.ceiling = (long long)std::ceil(out.real);
    return out;
}

/// x_i = (s(n-s) / (n(n-1))) t_i.
inline EvolutionStep formula_x_i(double s, double n, double t_i) {
    detail::require_positive(n, "x_i", "n");
    if (!(s > 0 && s < n)) throw std::invalid_argument("x_i: need 0 < s < n");
    EvolutionStep out;
    out.real = s * (n - s) / (n * (n - 1)) * t_i;
    out.ceiling = (long long)std::ceil(out.real);
    return out;
}

/// 3 sqrt(M).
inline BoundReport formula_pittel_factor(double m) {
    detail::require_positive(m, "pittel_factor", "M");
    return detail::report("pittel_factor", {{"M", m}}, 3.0 * std::sqrt(m));
}

struct BBounds {
    double lower = 0;  // M/2
    double upper = 0;  // M/2 + sqrt(4nM)
};

inline BBounds formula_b_bounds(double n, double m) {
    detail::require_positive(n, "b_bounds", "n");
    if (m < 0) throw std::invalid_argument("b_bounds: M must be >= 0");
    return {m / 2.0, m / 2.0 + std::sqrt(4.0 * n * m)};
}

/// 3 n^(3/4) p^(-1/4) + lambda^(1/2) p^(-1/2).
inline BoundReport formula_balance_bound(double n, double p, double lambda) {
    detail::require_positive(n, "balance_bound", "n");
    detail::require_positive(p, "balance_bound", "p");
    if (lambda < 0) throw std::invalid_argument("balance_bound: lambda must be >= 0");
    double v = 3.0 * std::pow(n, 0.75) * std::pow(p, -0.25) + std::sqrt(lambda) / std::sqrt(p);
    return detail::report("balance_bound", {{"n", n}, {"p", p}, {"lambda", lambda}}, v);
}

/// (1/2)(C(n,2) - M) - sqrt(C n^5 / M).
inline BoundReport formula_nonedge_bound(double n, double m, double c) {
    detail::require_positive(n, "nonedge_bound", "n");
    detail::require_positive(m, "nonedge_bound", "M");
    detail::require_positive(c, "nonedge_bound", "C");
    double pairs = n * (n - 1) / 2.0;
    double v = 0.5 * (pairs - m) - std::sqrt(c * std::pow(n, 5) / m);
    return detail::report("nonedge_bound", {{"n", n}, {"M", m}, {"C", c}}, v);
}

/// Sandwich bounds on E[b(G_{n,M+t}) - b(G_{n,M})]: t*(1/2 + sqrt(5n/M))
/// above, t*(1/2 - sqrt(20*Cp*n/M)) below.
struct EvolutionSandwich {
    double lower = 0;
    double upper = 0;
};

inline EvolutionSandwich evolution_sandwich(double n, double m, double t, double cprime = 1.0) {
    if (!(n > 0 && m > 0) || t < 0)
        throw std::invalid_argument("evolution_sandwich: need n, M > 0 and t >= 0");
    return {t * (0.5 - std::sqrt(20.0 * cprime * n / m)), t * (0.5 + std::sqrt(5.0 * n / m))};
}

}  // namespace cutlab

#endif
