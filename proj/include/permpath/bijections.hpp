#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permpath/paths.hpp"
#include "permpath/permutation.hpp"

namespace permpath {

/// Krattenthaler's bijection from S_n(3-1-2) to Dyck n-paths: each block of
/// the maxima decomposition contributes (m_i - m_{i-1}) up steps followed by
/// (|w_i| + 1) down steps.
inline DyckPath krattenthaler(const Permutation& sigma) {
    if (!avoids_312(sigma)) throw std::domain_error("permutation contains 3-1-2");
    std::string steps;
    steps.reserve(static_cast<size_t>(2 * sigma.size()));
    int prev_max = 0;
    for (const LtrBlock& block : ltr_decompose(sigma)) {
        steps.append(static_cast<size_t>(block.maximum - prev_max), 'U');
        steps.append(static_cast<size_t>(block.tail.size() + 1), 'D');
        prev_max = block.maximum;
    }
    return DyckPath(std::move(steps));
}

/// Inverse of the Krattenthaler bijection. Runs give the maxima increments
/// and fall lengths give |w_i| + 1; each w_i takes the largest still-unused
/// values below its maximum, in decreasing order (forced by the decreasing-
/// subword structure of avoiders).
inline Permutation krattenthaler_inverse(const DyckPath& p) {
    const std::string& s = p.steps();
    const int n = p.semilength();
    // run/fall lengths
    std::vector<std::pair<int, int>> blocks;  // (run, fall)
    for (size_t i = 0; i < s.size();) {
        int run = 0, fall = 0;
        while (i < s.size() && s[i] == 'U') ++run, ++i;
        while (i < s.size() && s[i] == 'D') ++fall, ++i;
        blocks.emplace_back(run, fall);
    }
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    int m = 0;
    for (const auto& [run, fall] : blocks) {
        m += run;
        used[static_cast<size_t>(m)] = true;  // the maxima are fixed up front
    }
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    m = 0;
    for (const auto& [run, fall] : blocks) {
        m += run;
        out.push_back(m);
        int needed = fall - 1;
        for (int v = m - 1; needed > 0; --v) {
            if (!used[static_cast<size_t>(v)]) {
                used[static_cast<size_t>(v)] = true;
                out.push_back(v);
                --needed;
            }
        }
    }
    return Permutation(std::move(out));
}

/// The induced involution on S_n(3-1-2): conjugate Deutsch's involution by
/// the Krattenthaler bijection.
inline Permutation delta_hat(const Permutation& sigma) {
    return krattenthaler_inverse(deutsch(krattenthaler(sigma)));
}

/// Bijection from S_n(3-1-2, consecutive 321) onto Motzkin n-paths: apply K,
/// then rewrite each maximal run-fall pair U^a D^b (b is 1 or 2) as U^{a-1}
/// followed by H (b = 1) or D (b = 2).
inline MotzkinPath nu(const Permutation& sigma) {
    const DyckPath p = krattenthaler(sigma);  // rejects non-avoiders
    const std::string& s = p.steps();
    std::string out;
    out.reserve(static_cast<size_t>(p.semilength()));
    for (size_t i = 0; i < s.size();) {
        int run = 0, fall = 0;
        while (i < s.size() && s[i] == 'U') ++run, ++i;
        while (i < s.size() && s[i] == 'D') ++fall, ++i;
        if (fall > 2) throw std::domain_error("permutation contains consecutive 321");
        out.append(static_cast<size_t>(run - 1), 'U');
        out += fall == 1 ? 'H' : 'D';
    }
    return MotzkinPath(std::move(out));
}

/// Inverse of nu: expand U -> U, H -> UD, D -> UDD into a Dyck path with no
/// DDD, then invert K.
inline Permutation nu_inverse(const MotzkinPath& m) {
    std::string steps;
    steps.reserve(static_cast<size_t>(2 * m.size()));
    for (char c : m.steps()) {
        switch (c) {
            case 'U': steps += 'U'; break;
            case 'H': steps += "UD"; break;
            case 'D': steps += "UDD"; break;
        }
    }
    return krattenthaler_inverse(DyckPath(std::move(steps)));
}

namespace detail {

// Recursive core of mu over a subword. The minimum plays the role of 1; the
// successor relation is taken among the subword's values.
inline void mu_steps(std::span<const int> w, std::string& out) {
    if (w.empty()) return;
    size_t min_pos = 0;
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] < w[min_pos]) min_pos = i;
    if (min_pos == w.size() - 1) {
        mu_steps(w.first(min_pos), out);
        out += 'H';
        return;
    }
    const int t = w[min_pos + 1];
    std::span<const int> tail = w.subspan(min_pos + 2);
    if (!tail.empty()) {
        const int s = tail.front();
        if (s >= t) throw std::domain_error("word is not in the domain of mu");
        for (int v : w)
            if (s < v && v < t) throw std::domain_error("word is not in the domain of mu");
    }
    mu_steps(w.first(min_pos), out);
    out += 'U';
    mu_steps(tail, out);
    out += 'D';
}

}  // namespace detail

/// Bijection from words whose standardization lies in S_n(3-1-2, consecutive
/// 123) onto Motzkin n-paths. Recursion on the split at the minimum: a
/// trailing minimum contributes H, otherwise the element after the minimum
/// must be the in-word successor of the next suffix's leftmost element and
/// the two flanking subwords recurse around a U ... D pair.
inline MotzkinPath mu(const Word& w) {
    const Permutation st = standardize(w);
    if (!avoids_312(st)) throw std::domain_error("word contains 3-1-2");
    if (count_consecutive(st, Permutation({1, 2, 3})) != 0)
        throw std::domain_error("word contains consecutive 123");
    std::string out;
    out.reserve(static_cast<size_t>(w.size()));
    detail::mu_steps(std::span<const int>(w.values()), out);
    return MotzkinPath(std::move(out));
}

namespace detail {

// Index of the U matching the final D of a balanced U/D/H word.
inline size_t matching_open(std::string_view m) {
    int depth = 0;
    for (size_t i = m.size() - 1; ; --i) {
        if (m[i] == 'D') ++depth;
        else if (m[i] == 'U' && --depth == 0) return i;
        if (i == 0) break;
    }
    throw std::logic_error("unmatched final D");
}

inline std::vector<int> mu_inverse_rec(std::string_view m) {
    if (m.empty()) return {};
    if (m.back() == 'H') {
        std::vector<int> p = mu_inverse_rec(m.substr(0, m.size() - 1));
        for (int& x : p) ++x;
        p.push_back(1);
        return p;
    }
    const size_t u = matching_open(m);
    std::vector<int> p1 = mu_inverse_rec(m.substr(0, u));
    std::vector<int> p2 = mu_inverse_rec(m.substr(u + 1, m.size() - u - 2));
    const int n1 = static_cast<int>(p1.size());
    std::vector<int> out;
    out.reserve(p1.size() + p2.size() + 2);
    // sigma_1 must take the smallest available values: anything larger before
    // the global minimum would form a 3-1-2 with a later smaller value.
    for (int x : p1) out.push_back(x + 1);
    out.push_back(1);
    const int base = n1 + 1;
    if (p2.empty()) {
        out.push_back(base + 1);  // t is forced maximal
        return out;
    }
    // t = s + 1 in absolute value, where s is the leftmost element of
    // sigma_2; the remaining contiguous value block splits around t.
    const int r = p2.front();
    out.push_back(base + r + 1);
    for (int x : p2) out.push_back(base + x + (x > r ? 1 : 0));
    return out;
}

}  // namespace detail

/// Inverse of mu, reconstructed from the last step of the path: H appends the
/// minimum, D splits at the opening of the last elevated segment.
inline Permutation mu_inverse(const MotzkinPath& m) {
    return Permutation(detail::mu_inverse_rec(m.steps()));
}

}  // namespace permpath
