#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permpath/automaton.hpp"
#include "permpath/bigint.hpp"
#include "permpath/bijections.hpp"
#include "permpath/paths.hpp"
#include "permpath/permutation.hpp"
#include "permpath/polynomial.hpp"
#include "permpath/series.hpp"

namespace permpath {

inline constexpr int kDefaultBruteBound = 12;

/// Thrown when an enumeration-backed operation is asked to exceed its
/// configured brute-force bound.
struct bound_exceeded : std::runtime_error {
    explicit bound_exceeded(const std::string& what) : std::runtime_error(what) {}
};

inline void check_brute_bound(int n, int bound) {
    if (n > bound)
        throw bound_exceeded("n = " + std::to_string(n) +
                             " exceeds the brute-force bound " + std::to_string(bound));
}

/// The five non-trivial consecutive patterns of length 3 on 3-1-2-avoiders.
enum class Tau { p213, p321, p231, p123, p132 };

inline constexpr std::array<Tau, 5> kAllTau = {Tau::p213, Tau::p321, Tau::p231, Tau::p123,
                                               Tau::p132};

inline std::string to_string(Tau tau) {
    switch (tau) {
        case Tau::p213: return "213";
        case Tau::p321: return "321";
        case Tau::p231: return "231";
        case Tau::p123: return "123";
        case Tau::p132: return "132";
    }
    return "";
}

inline std::optional<Tau> parse_tau(std::string_view s) {
    if (s == "213") return Tau::p213;
    if (s == "321") return Tau::p321;
    if (s == "231") return Tau::p231;
    if (s == "123") return Tau::p123;
    if (s == "132") return Tau::p132;
    return std::nullopt;
}

inline Permutation tau_pattern(Tau tau) {
    switch (tau) {
        case Tau::p213: return Permutation({2, 1, 3});
        case Tau::p321: return Permutation({3, 2, 1});
        case Tau::p231: return Permutation({2, 3, 1});
        case Tau::p123: return Permutation({1, 2, 3});
        case Tau::p132: return Permutation({1, 3, 2});
    }
    throw std::logic_error("unreachable");
}

/// The Dyck-path statistic whose distribution over Dyck n-paths matches the
/// distribution of the consecutive pattern over S_n(3-1-2) under K.
inline Statistic tau_statistic(Tau tau) {
    switch (tau) {
        case Tau::p213: return Statistic::ddu();
        case Tau::p321: return Statistic::ddd();
        case Tau::p231: return Statistic::dudd();
        case Tau::p123: return Statistic::du_run_du();
        case Tau::p132: return Statistic::du_run_dd();
    }
    throw std::logic_error("unreachable");
}

/// Catalan numbers C_0..C_n by the convolution recurrence.
inline std::vector<BigInt> catalan_numbers(int n) {
    std::vector<BigInt> c(static_cast<size_t>(n) + 1);
    c[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt sum = 0;
        for (int i = 0; i < m; ++i)
            sum += c[static_cast<size_t>(i)] * c[static_cast<size_t>(m - 1 - i)];
        c[static_cast<size_t>(m)] = sum;
    }
    return c;
}

/// Motzkin numbers M_0..M_n: M_m = M_{m-1} + sum M_i M_{m-2-i}.
inline std::vector<BigInt> motzkin_numbers(int n) {
    std::vector<BigInt> m(static_cast<size_t>(n) + 1);
    m[0] = 1;
    for (int k = 1; k <= n; ++k) {
        BigInt sum = m[static_cast<size_t>(k - 1)];
        for (int i = 0; i <= k - 2; ++i)
            sum += m[static_cast<size_t>(i)] * m[static_cast<size_t>(k - 2 - i)];
        m[static_cast<size_t>(k)] = sum;
    }
    return m;
}

inline BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    return catalan_numbers(n).back();
}

inline BigInt motzkin(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    return motzkin_numbers(n).back();
}

namespace detail {

// a_{n,k} = 2^{n-2k-1} C_k binom(n-1, 2k)
inline BigInt closed_form_213(long long n, long long k) {
    const BigInt b = binomial(n - 1, 2 * k);
    if (b == 0) return 0;
    return pow2(n - 2 * k - 1) * catalan(static_cast<int>(k)) * b;
}

// a_{n,k} = (1/(n+1)) sum_{j=0}^{k} (-1)^{k-j} binom(n+j,n) binom(n+1,k-j)
//           sum_{i=j}^{floor((n+j)/2)} binom(n+j+1-k, i+1) binom(n-i, i-j)
inline BigInt closed_form_321(long long n, long long k) {
    BigInt total = 0;
    for (long long j = 0; j <= k; ++j) {
        BigInt inner = 0;
        for (long long i = j; i <= (n + j) / 2; ++i)
            inner += binomial(n + j + 1 - k, i + 1) * binomial(n - i, i - j);
        const BigInt term = binomial(n + j, n) * binomial(n + 1, k - j) * inner;
        if ((k - j) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    BigInt q, r;
    boost::multiprecision::divide_qr(total, BigInt(n + 1), q, r);
    if (r != 0) throw std::logic_error("inexact division in the 321 closed form");
    return q;
}

// a_{n,k} = sum_{j=k}^{floor((n-1)/2)} ((-1)^{j-k}/(n-j)) binom(j,k)
//           binom(n-j,j) binom(2n-3j, n-j+1)
inline BigInt closed_form_231(long long n, long long k) {
    BigRat acc = 0;
    for (long long j = k; j <= (n - 1) / 2; ++j) {
        BigRat term(binomial(j, k) * binomial(n - j, j) * binomial(2 * n - 3 * j, n - j + 1),
                    BigInt(n - j));
        if ((j - k) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    if (boost::multiprecision::denominator(acc) != 1)
        throw std::logic_error("inexact division in the 231 closed form");
    return boost::multiprecision::numerator(acc);
}

}  // namespace detail

/// Exact coefficient a^tau_{n,k}: the number of permutations in S_n(3-1-2)
/// containing k occurrences of the consecutive pattern tau. The 123 and 132
/// columns coincide with 321 and 231 respectively. Defined for n >= 1; the
/// n = 0 row is seeded as a_{0,0} = 1 by the table builders.
inline BigInt closed_form(Tau tau, long long n, long long k) {
    if (n == 0) throw std::domain_error("closed form applies for n >= 1; seed a_{0,0} = 1");
    if (n < 0 || k < 0) throw std::domain_error("closed form requires n >= 1, k >= 0");
    switch (tau) {
        case Tau::p213: return detail::closed_form_213(n, k);
        case Tau::p321:
        case Tau::p123: return detail::closed_form_321(n, k);
        case Tau::p231:
        case Tau::p132: return detail::closed_form_231(n, k);
    }
    throw std::logic_error("unreachable");
}

/// |S_n(3-1-2, tau)| with tau read as a consecutive pattern: 2^{n-1} for 213,
/// the Motzkin number for 321 and 123, and the alternating binomial sum for
/// 231 and 132.
inline BigInt avoider_count(Tau tau, long long n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (n == 0) return 1;  // the empty permutation avoids everything
    switch (tau) {
        case Tau::p213: return pow2(n - 1);
        case Tau::p321:
        case Tau::p123: return motzkin(static_cast<int>(n));
        case Tau::p231:
        case Tau::p132: {
            BigRat acc = 0;
            for (long long j = 0; j <= (n - 1) / 2; ++j) {
                BigRat term(binomial(n - j, j) * binomial(2 * n - 3 * j, n - j + 1),
                            BigInt(n - j));
                if (j % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            if (boost::multiprecision::denominator(acc) != 1)
                throw std::logic_error("inexact division in the avoider-count sum");
            return boost::multiprecision::numerator(acc);
        }
    }
    throw std::logic_error("unreachable");
}

namespace detail {

inline void trim_row(std::vector<BigInt>& row) {
    while (row.size() > 1 && row.back() == 0) row.pop_back();
}

}  // namespace detail

/// Exact distribution row a_{n,0..kmax} of a Dyck-path statistic over Dyck
/// n-paths, by dynamic programming over (position, height, automaton state)
/// with polynomial-in-z counts; marked transitions multiply by z.
inline std::vector<BigInt> distribution_dp(const Statistic& s, int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    const MarkedAutomaton a = build_automaton(s);
    const int q_count = a.state_count();
    using Poly = Polynomial<BigInt>;
    // one layer of (height x state) polynomials at a time
    std::vector<std::vector<Poly>> cur(static_cast<size_t>(n) + 1,
                                       std::vector<Poly>(static_cast<size_t>(q_count)));
    std::vector<std::vector<Poly>> next = cur;
    cur[0][static_cast<size_t>(a.start)] = Poly::constant(1);
    for (int pos = 0; pos < 2 * n; ++pos) {
        for (auto& row : next)
            for (auto& p : row) p = Poly::zero();
        const int hmax = std::min(pos, 2 * n - pos);
        for (int h = 0; h <= hmax; ++h) {
            for (int q = 0; q < q_count; ++q) {
                const Poly& val = cur[static_cast<size_t>(h)][static_cast<size_t>(q)];
                if (val.is_zero()) continue;
                if (h + 1 <= 2 * n - pos - 1) {  // up step stays closable
                    const auto& e = a.delta[static_cast<size_t>(q)][0];
                    auto& dst = next[static_cast<size_t>(h + 1)][static_cast<size_t>(e.next)];
                    dst += e.marked ? val.shifted(1) : val;
                }
                if (h > 0) {  // down step
                    const auto& e = a.delta[static_cast<size_t>(q)][1];
                    auto& dst = next[static_cast<size_t>(h - 1)][static_cast<size_t>(e.next)];
                    dst += e.marked ? val.shifted(1) : val;
                }
            }
        }
        std::swap(cur, next);
    }
    Poly total;
    for (int q = 0; q < q_count; ++q) total += cur[0][static_cast<size_t>(q)];
    std::vector<BigInt> row = total.coeffs();
    if (row.empty()) row.push_back(0);
    detail::trim_row(row);
    return row;
}

/// Histogram of consecutive-pattern occurrence counts over S_n(3-1-2) by
/// direct enumeration. Works for any consecutive pattern; refuses n beyond
/// the brute-force bound.
inline std::vector<BigInt> distribution_brute(const Permutation& pattern, int n,
                                              int bound = kDefaultBruteBound) {
    check_brute_bound(n, bound);
    std::vector<BigInt> hist(1);
    for_each_avoider(n, [&](const Permutation& sigma) {
        const auto k = count_consecutive(sigma, pattern).convert_to<size_t>();
        if (k >= hist.size()) hist.resize(k + 1);
        ++hist[k];
    });
    detail::trim_row(hist);
    return hist;
}

inline std::vector<BigInt> distribution_brute(Tau tau, int n, int bound = kDefaultBruteBound) {
    return distribution_brute(tau_pattern(tau), n, bound);
}

/// Truncated expansion of the bivariate generating function A^tau(t, z) up to
/// t^N. The three independent closed expressions cover 213, 321 and 231; 123
/// and 132 alias 321 and 231. Every coefficient is checked to be a
/// polynomial in z with non-negative integer coefficients.
inline BivariateSeries gf_series(Tau tau, int trunc_order) {
    using Poly = Polynomial<BigRat>;
    const int work = trunc_order + 1;  // one spare order for the division by t
    const BigRat one(1), two(2);
    BivariateSeries result(trunc_order);
    switch (tau) {
        case Tau::p123: return gf_series(Tau::p321, trunc_order);
        case Tau::p132: return gf_series(Tau::p231, trunc_order);
        case Tau::p213: {
            // (1 - 2t + 2tz - sqrt((1-2t)^2 - 4 t^2 z)) / (2 t z)
            BivariateSeries rad(work);
            rad.at(0) = Poly::constant(one);
            rad.at(1) = Poly::constant(BigRat(-4));
            if (work >= 2) rad.at(2) = Poly({BigRat(4), BigRat(-4)});
            BivariateSeries num(work);
            num.at(0) = Poly::constant(one);
            num.at(1) = Poly({BigRat(-2), BigRat(2)});
            num -= rad.sqrt();
            result = num.divide_by_t(1).scaled(BigRat(1, 2)).divide_by_z();
            break;
        }
        case Tau::p321: {
            // (1 - t + tz - sqrt(1 - 2t - 3t^2 + tz(tz + 2t - 2))) / (2t (t + z - tz))
            BivariateSeries rad(work);
            rad.at(0) = Poly::constant(one);
            rad.at(1) = Poly({BigRat(-2), BigRat(-2)});
            if (work >= 2) rad.at(2) = Poly({BigRat(-3), BigRat(2), BigRat(1)});
            BivariateSeries num(work);
            num.at(0) = Poly::constant(one);
            num.at(1) = Poly({BigRat(-1), BigRat(1)});
            num -= rad.sqrt();
            BivariateSeries den(trunc_order);  // z + (1 - z) t
            den.at(0) = Poly({BigRat(0), one});
            if (trunc_order >= 1) den.at(1) = Poly({one, BigRat(-1)});
            result = num.divide_by_t(1).scaled(BigRat(1, 2)).divide(den);
            break;
        }
        case Tau::p231: {
            // (1 - (1-z)t^2 - sqrt(((1-z)t^2 + 1)^2 - 4t)) / (2t (1 - (1-z)t))
            BivariateSeries rad(work);
            rad.at(0) = Poly::constant(one);
            rad.at(1) = Poly::constant(BigRat(-4));
            if (work >= 2) rad.at(2) = Poly({two, BigRat(-2)});
            if (work >= 4) rad.at(4) = Poly({one, BigRat(-2), one});  // (1-z)^2
            BivariateSeries num(work);
            num.at(0) = Poly::constant(one);
            if (work >= 2) num.at(2) = Poly({BigRat(-1), one});
            num -= rad.sqrt();
            BivariateSeries den(trunc_order);  // 1 - (1 - z) t
            den.at(0) = Poly::constant(one);
            if (trunc_order >= 1) den.at(1) = Poly({BigRat(-1), one});
            result = num.divide_by_t(1).scaled(BigRat(1, 2)).divide(den);
            break;
        }
    }
    // internal-consistency gate: integer, non-negative, constant term 1
    if (result.coeff(0) != Polynomial<BigRat>::constant(one))
        throw std::logic_error("generating function has constant term != 1");
    for (int n = 0; n <= result.order(); ++n)
        for (const BigRat& c : result.coeff(n).coeffs()) {
            if (boost::multiprecision::denominator(c) != 1)
                throw std::logic_error("non-integer coefficient in generating function");
            if (c < 0) throw std::logic_error("negative coefficient in generating function");
        }
    return result;
}

/// Integer row of a gf_series expansion (n <= truncation order).
inline std::vector<BigInt> gf_row(const BivariateSeries& series, int n) {
    std::vector<BigInt> row;
    const auto& poly = series.coeff(n);
    for (int k = 0; k <= poly.degree(); ++k)
        row.push_back(boost::multiprecision::numerator(poly.coeff(k)));
    if (row.empty()) row.push_back(0);
    detail::trim_row(row);
    return row;
}

using StatTriple = std::array<long long, 3>;
using JointHistogram = std::map<StatTriple, BigInt>;

/// The four triple-statistic histograms over S_n(3-1-2) whose pairwise
/// equality is the joint-equidistribution statement.
struct JointDistribution {
    JointHistogram h321_132_213;
    JointHistogram h123_231_213;
    JointHistogram h321_231_213;
    JointHistogram h123_132_213;
};

inline JointDistribution joint_distribution(int n, int bound = kDefaultBruteBound) {
    check_brute_bound(n, bound);
    const Permutation p123 = Permutation({1, 2, 3});
    const Permutation p132 = Permutation({1, 3, 2});
    const Permutation p213 = Permutation({2, 1, 3});
    const Permutation p231 = Permutation({2, 3, 1});
    const Permutation p321 = Permutation({3, 2, 1});
    JointDistribution out;
    for_each_avoider(n, [&](const Permutation& sigma) {
        const long long c123 = count_consecutive(sigma, p123).convert_to<long long>();
        const long long c132 = count_consecutive(sigma, p132).convert_to<long long>();
        const long long c213 = count_consecutive(sigma, p213).convert_to<long long>();
        const long long c231 = count_consecutive(sigma, p231).convert_to<long long>();
        const long long c321 = count_consecutive(sigma, p321).convert_to<long long>();
        ++out.h321_132_213[{c321, c132, c213}];
        ++out.h123_231_213[{c123, c231, c213}];
        ++out.h321_231_213[{c321, c231, c213}];
        ++out.h123_132_213[{c123, c132, c213}];
    });
    return out;
}

/// True iff consecutive 1 2 ... k and k ... 2 1 are equidistributed on
/// S_n(3-1-2), by enumeration.
inline bool monotone_equidistribution_check(int k, int n, int bound = kDefaultBruteBound) {
    if (k < 2) throw std::invalid_argument("monotone pattern length must be at least 2");
    check_brute_bound(n, bound);
    std::vector<int> inc(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) inc[static_cast<size_t>(i)] = i + 1;
    std::vector<int> dec(inc.rbegin(), inc.rend());
    const auto rising = distribution_brute(Permutation(inc), n, bound);
    const auto falling = distribution_brute(Permutation(dec), n, bound);
    return rising == falling;
}

}  // namespace permpath
