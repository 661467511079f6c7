#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permpath/bigint.hpp"

namespace permpath {

namespace detail {

inline std::vector<int> parse_int_sequence(std::string_view text) {
    std::vector<int> vals;
    std::string s(text);
    // "ε" (and the pure-ASCII fallback "eps") denote the empty sequence
    std::istringstream in(s);
    std::string tok;
    bool saw_epsilon = false;
    while (in >> tok) {
        if (tok == "ε" || tok == "eps") {
            saw_epsilon = true;
            continue;
        }
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
        vals.push_back(v);
    }
    if (saw_epsilon && !vals.empty())
        throw std::invalid_argument("epsilon mixed with values");
    return vals;
}

inline std::string format_int_sequence(std::span<const int> vals) {
    if (vals.empty()) return "ε";
    std::string out;
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vals[i]);
    }
    return out;
}

}  // namespace detail

/// A permutation of {1,...,n} in one-line notation; n == 0 is the empty
/// permutation. Immutable after construction.
class Permutation {
 public:
    Permutation() = default;

    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        const int n = static_cast<int>(values_.size());
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (int v : values_) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
                throw std::invalid_argument("not a permutation of 1..n");
            seen[static_cast<size_t>(v - 1)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int operator[](int i) const { return values_[static_cast<size_t>(i)]; }  // 0-based position
    const std::vector<int>& values() const { return values_; }

    auto operator<=>(const Permutation&) const = default;

    /// Space-separated one-line notation, "ε" for the empty permutation.
    std::string str() const { return detail::format_int_sequence(values_); }

    static Permutation parse(std::string_view text) {
        return Permutation(detail::parse_int_sequence(text));
    }

 private:
    std::vector<int> values_;
};

/// A word: distinct positive integers, not necessarily 1..n.
class Word {
 public:
    Word() = default;

    Word(std::initializer_list<int> values) : Word(std::vector<int>(values)) {}

    explicit Word(std::vector<int> values) : values_(std::move(values)) {
        std::vector<int> sorted = values_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("word has duplicate values");
        if (!sorted.empty() && sorted.front() < 1)
            throw std::invalid_argument("word values must be positive");
    }

    explicit Word(const Permutation& p) : values_(p.values()) {}  // every permutation is a word

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int operator[](int i) const { return values_[static_cast<size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }

    auto operator<=>(const Word&) const = default;

    std::string str() const { return detail::format_int_sequence(values_); }
    static Word parse(std::string_view text) { return Word(detail::parse_int_sequence(text)); }

 private:
    std::vector<int> values_;
};

enum class PatternMode { consecutive, classical };

/// A pattern together with the matching mode: adjacent-window (consecutive)
/// or arbitrary-subsequence (classical, written with dashes in the literature).
struct PatternQuery {
    Permutation pattern;
    PatternMode mode = PatternMode::classical;
};

/// The unique permutation order-isomorphic to w (rank replacement).
inline Permutation standardize(const Word& w) {
    const auto& vals = w.values();
    std::vector<int> order(vals.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    std::vector<int> out(vals.size());
    for (size_t rank = 0; rank < order.size(); ++rank)
        out[static_cast<size_t>(order[rank])] = static_cast<int>(rank) + 1;
    return Permutation(std::move(out));
}

namespace detail {

inline bool order_isomorphic(std::span<const int> window, const Permutation& pattern) {
    const int m = pattern.size();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if ((window[static_cast<size_t>(i)] < window[static_cast<size_t>(j)]) !=
                (pattern[i] < pattern[j]))
                return false;
    return true;
}

// Exact subsequence count by depth-first extension over pattern slots. Each
// partial choice is kept only while pairwise order constraints hold, so dead
// branches are cut immediately.
inline BigInt count_classical(std::span<const int> sigma, const Permutation& pattern) {
    const int n = static_cast<int>(sigma.size());
    const int m = pattern.size();
    BigInt total = 0;
    std::vector<int> chosen;  // indices into sigma
    chosen.reserve(static_cast<size_t>(m));
    std::function<void(int)> extend = [&](int start) {
        const int slot = static_cast<int>(chosen.size());
        if (slot == m) {
            ++total;
            return;
        }
        for (int idx = start; idx <= n - (m - slot); ++idx) {
            bool ok = true;
            for (int s = 0; s < slot && ok; ++s)
                ok = (sigma[static_cast<size_t>(chosen[static_cast<size_t>(s)])] <
                      sigma[static_cast<size_t>(idx)]) == (pattern[s] < pattern[slot]);
            if (ok) {
                chosen.push_back(idx);
                extend(idx + 1);
                chosen.pop_back();
            }
        }
    };
    extend(0);
    return total;
}

}  // namespace detail

/// Number of occurrences of the pattern in sigma. Consecutive mode counts
/// windows of adjacent positions, classical mode counts arbitrary index
/// subsequences; occurrences may overlap and all are counted.
inline BigInt count_occurrences(const Permutation& sigma, const PatternQuery& q) {
    if (q.pattern.empty()) throw std::invalid_argument("empty pattern");
    const int n = sigma.size();
    const int m = q.pattern.size();
    if (m > n) return 0;
    std::span<const int> vals(sigma.values());
    if (q.mode == PatternMode::consecutive) {
        BigInt total = 0;
        for (int i = 0; i + m <= n; ++i)
            if (detail::order_isomorphic(vals.subspan(static_cast<size_t>(i),
                                                      static_cast<size_t>(m)),
                                         q.pattern))
                ++total;
        return total;
    }
    return detail::count_classical(vals, q.pattern);
}

inline BigInt count_consecutive(const Permutation& sigma, const Permutation& pattern) {
    return count_occurrences(sigma, {pattern, PatternMode::consecutive});
}

/// One block of the left-to-right-maxima decomposition: the maximum followed
/// by the non-maximum entries up to the next maximum.
struct LtrBlock {
    int maximum = 0;
    Word tail;

    bool operator==(const LtrBlock&) const = default;
};

using LtrDecomposition = std::vector<LtrBlock>;

inline LtrDecomposition ltr_decompose(const Permutation& sigma) {
    LtrDecomposition blocks;
    std::vector<int> tail;
    int curmax = 0;
    for (int v : sigma.values()) {
        if (v > curmax) {
            if (curmax != 0) blocks.push_back({curmax, Word(std::move(tail))});
            tail.clear();
            curmax = v;
        } else {
            tail.push_back(v);
        }
    }
    if (curmax != 0) blocks.push_back({curmax, Word(std::move(tail))});
    return blocks;
}

/// True iff sigma has no subsequence order-isomorphic to 3-1-2. Uses the
/// maxima-block characterization: within each block every non-maximum entry
/// must dominate every later value below the block maximum, i.e. there is no
/// pair j < q with sigma(j) < sigma(q) < max(sigma(1..j-1)).
inline bool avoids_312(const Permutation& sigma) {
    const auto& v = sigma.values();
    const int n = sigma.size();
    int premax = 0;
    for (int p = 0; p < n; ++p) {
        const int a = v[static_cast<size_t>(p)];
        if (a > premax) {
            premax = a;  // left-to-right maximum starts a new block
            continue;
        }
        for (int q = p + 1; q < n; ++q) {
            const int b = v[static_cast<size_t>(q)];
            if (a < b && b < premax) return false;
        }
    }
    return true;
}

namespace detail {

// Lexicographic generation of S_n(3-1-2). A candidate c is rejected when it
// would close an occurrence as its final element, or when some still-unused
// value could only land strictly between c and an earlier larger entry.
class AvoiderGenerator {
 public:
    AvoiderGenerator(int n, const std::function<void(const Permutation&)>& fn)
        : n_(n), fn_(fn), used_(static_cast<size_t>(n) + 1, false) {
        prefix_.reserve(static_cast<size_t>(n));
        premax_.reserve(static_cast<size_t>(n));
    }

    void run() {
        if (static_cast<int>(prefix_.size()) == n_) {
            fn_(Permutation(prefix_));
            return;
        }
        for (int c = 1; c <= n_; ++c) {
            if (used_[static_cast<size_t>(c)]) continue;
            if (closes_occurrence(c) || strands_value(c)) continue;
            used_[static_cast<size_t>(c)] = true;
            prefix_.push_back(c);
            premax_.push_back(curmax_);
            const int oldmax = curmax_;
            curmax_ = std::max(curmax_, c);
            run();
            curmax_ = oldmax;
            premax_.pop_back();
            prefix_.pop_back();
            used_[static_cast<size_t>(c)] = false;
        }
    }

 private:
    bool closes_occurrence(int c) const {
        for (size_t j = 0; j < prefix_.size(); ++j)
            if (prefix_[j] < c && c < premax_[j]) return true;
        return false;
    }

    bool strands_value(int c) const {
        for (int v = c + 1; v < curmax_; ++v)
            if (!used_[static_cast<size_t>(v)]) return true;
        return false;
    }

    int n_;
    const std::function<void(const Permutation&)>& fn_;
    std::vector<int> prefix_;
    std::vector<int> premax_;  // prefix maximum before each position
    std::vector<bool> used_;
    int curmax_ = 0;
};

}  // namespace detail

/// Visits every element of S_n(3-1-2) exactly once, in lexicographic order of
/// one-line notation. The visit count is the n-th Catalan number.
inline void for_each_avoider(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    detail::AvoiderGenerator(n, fn).run();
}

inline std::vector<Permutation> enumerate_avoiders(int n) {
    std::vector<Permutation> out;
    for_each_avoider(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

}  // namespace permpath
