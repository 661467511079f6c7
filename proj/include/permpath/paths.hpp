#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permpath/bigint.hpp"

namespace permpath {

namespace detail {

inline void validate_dyck(std::string_view steps) {
    int height = 0;
    for (size_t i = 0; i < steps.size(); ++i) {
        const char c = steps[i];
        if (c == 'U') {
            ++height;
        } else if (c == 'D') {
            if (--height < 0)
                throw std::invalid_argument("negative height at index " + std::to_string(i));
        } else {
            throw std::invalid_argument("invalid step '" + std::string(1, c) + "' at index " +
                                        std::to_string(i));
        }
    }
    if (height != 0) throw std::invalid_argument("unbalanced");
}

inline void validate_motzkin(std::string_view steps) {
    int height = 0;
    for (size_t i = 0; i < steps.size(); ++i) {
        const char c = steps[i];
        if (c == 'U') {
            ++height;
        } else if (c == 'D') {
            if (--height < 0)
                throw std::invalid_argument("negative height at index " + std::to_string(i));
        } else if (c != 'H') {
            throw std::invalid_argument("invalid step '" + std::string(1, c) + "' at index " +
                                        std::to_string(i));
        }
    }
    if (height != 0) throw std::invalid_argument("unbalanced");
}

inline std::string strip_epsilon(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\r' && c != '\n') s += c;
    if (s == "ε" || s == "eps") return "";
    return s;
}

}  // namespace detail

/// A Dyck path as a step word over {U, D}: every prefix has at least as many
/// U as D, and the totals balance. Semilength n = number of U steps.
class DyckPath {
 public:
    DyckPath() = default;

    explicit DyckPath(std::string steps) : steps_(std::move(steps)) {
        detail::validate_dyck(steps_);
    }

    static DyckPath parse(std::string_view text) {
        return DyckPath(detail::strip_epsilon(text));
    }

    int size() const { return static_cast<int>(steps_.size()); }
    int semilength() const { return size() / 2; }
    bool empty() const { return steps_.empty(); }
    char operator[](int i) const { return steps_[static_cast<size_t>(i)]; }
    const std::string& steps() const { return steps_; }

    auto operator<=>(const DyckPath&) const = default;

    std::string str() const { return steps_.empty() ? "ε" : steps_; }

 private:
    std::string steps_;
};

/// A Motzkin path over {U, H, D}, length n.
class MotzkinPath {
 public:
    MotzkinPath() = default;

    explicit MotzkinPath(std::string steps) : steps_(std::move(steps)) {
        detail::validate_motzkin(steps_);
    }

    static MotzkinPath parse(std::string_view text) {
        return MotzkinPath(detail::strip_epsilon(text));
    }

    int size() const { return static_cast<int>(steps_.size()); }
    bool empty() const { return steps_.empty(); }
    char operator[](int i) const { return steps_[static_cast<size_t>(i)]; }
    const std::string& steps() const { return steps_; }

    auto operator<=>(const MotzkinPath&) const = default;

    std::string str() const { return steps_.empty() ? "ε" : steps_; }

 private:
    std::string steps_;
};

namespace detail {

// Index of the first step that returns to the x-axis.
inline size_t first_return_index(std::string_view steps) {
    int height = 0;
    for (size_t i = 0; i < steps.size(); ++i) {
        height += steps[i] == 'U' ? 1 : -1;
        if (height == 0) return i;
    }
    throw std::logic_error("no return in a balanced path");
}

}  // namespace detail

/// Splits P = U A D B at the first return to the x-axis.
inline std::pair<DyckPath, DyckPath> first_return_decompose(const DyckPath& p) {
    if (p.empty()) throw std::invalid_argument("empty path");
    const std::string& s = p.steps();
    const size_t r = detail::first_return_index(s);
    return {DyckPath(s.substr(1, r - 1)), DyckPath(s.substr(r + 1))};
}

/// Splits P at its returns; each component touches the axis only at its ends.
inline std::vector<DyckPath> irreducible_components(const DyckPath& p) {
    std::vector<DyckPath> out;
    const std::string& s = p.steps();
    int height = 0;
    size_t begin = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        height += s[i] == 'U' ? 1 : -1;
        if (height == 0) {
            out.push_back(DyckPath(s.substr(begin, i + 1 - begin)));
            begin = i + 1;
        }
    }
    return out;
}

/// A step-word statistic on Dyck paths: either a fixed factor, or one of the
/// two parameterized families D U^t D U (t >= 1) and D U^t D D (t >= 2).
/// Each parameterized occurrence is anchored at its leading D, which forces
/// t to be the full U-run after the anchor, so occurrences are never
/// double-counted.
class Statistic {
 public:
    enum class Kind { factor, du_run_du, du_run_dd };

    static Statistic factor(std::string word) {
        if (word.empty()) throw std::invalid_argument("empty factor");
        for (char c : word)
            if (c != 'U' && c != 'D') throw std::invalid_argument("factor must be over {U,D}");
        return Statistic(Kind::factor, std::move(word));
    }

    static Statistic ddu() { return factor("DDU"); }
    static Statistic ddd() { return factor("DDD"); }
    static Statistic dudd() { return factor("DUDD"); }
    static Statistic du_run_du() { return Statistic(Kind::du_run_du, ""); }
    static Statistic du_run_dd() { return Statistic(Kind::du_run_dd, ""); }

    Kind kind() const { return kind_; }
    const std::string& word() const { return word_; }

    std::string name() const {
        switch (kind_) {
            case Kind::factor: return word_;
            case Kind::du_run_du: return "DU+DU";
            case Kind::du_run_dd: return "DU2+DD";
        }
        return "";
    }

    bool operator==(const Statistic&) const = default;

 private:
    Statistic(Kind k, std::string w) : kind_(k), word_(std::move(w)) {}

    Kind kind_;
    std::string word_;
};

/// Number of (possibly overlapping) occurrences of the statistic in P.
inline BigInt count_statistic(const DyckPath& p, const Statistic& s) {
    const std::string& steps = p.steps();
    const int n = static_cast<int>(steps.size());
    BigInt total = 0;
    switch (s.kind()) {
        case Statistic::Kind::factor: {
            const std::string& w = s.word();
            const int m = static_cast<int>(w.size());
            for (int i = 0; i + m <= n; ++i)
                if (steps.compare(static_cast<size_t>(i), static_cast<size_t>(m), w) == 0)
                    ++total;
            break;
        }
        case Statistic::Kind::du_run_du:
        case Statistic::Kind::du_run_dd: {
            const int tmin = s.kind() == Statistic::Kind::du_run_du ? 1 : 2;
            const char closer = s.kind() == Statistic::Kind::du_run_du ? 'U' : 'D';
            for (int i = 0; i < n; ++i) {
                if (steps[static_cast<size_t>(i)] != 'D') continue;
                int j = i + 1;
                while (j < n && steps[static_cast<size_t>(j)] == 'U') ++j;
                const int t = j - i - 1;
                if (t >= tmin && j + 1 < n && steps[static_cast<size_t>(j)] == 'D' &&
                    steps[static_cast<size_t>(j + 1)] == closer)
                    ++total;
            }
            break;
        }
    }
    return total;
}

/// Deutsch's involution: empty maps to empty, and U A D B maps to
/// U Δ(B) D Δ(A) on the first-return decomposition. Iterative with an
/// explicit work stack, so deep paths like U^n D^n do not hit recursion
/// limits. The first return of any subpath is the D matching its leading U,
/// so one matching pass makes the whole transform linear.
inline DyckPath deutsch(const DyckPath& p) {
    const std::string& s = p.steps();
    const size_t len = s.size();
    std::vector<size_t> match(len, 0);
    {
        std::vector<size_t> open;
        for (size_t i = 0; i < len; ++i) {
            if (s[i] == 'U') {
                open.push_back(i);
            } else {
                match[open.back()] = i;
                open.pop_back();
            }
        }
    }
    std::string out;
    out.reserve(len);
    struct Item {
        size_t begin, end;  // subpath [begin, end), used iff emit == 0
        char emit;
    };
    std::vector<Item> work;
    work.push_back({0, len, 0});
    while (!work.empty()) {
        const Item it = work.back();
        work.pop_back();
        if (it.emit) {
            out += it.emit;
            continue;
        }
        if (it.begin == it.end) continue;
        const size_t r = match[it.begin];
        // output order: U, Δ(B), D, Δ(A)
        work.push_back({it.begin + 1, r, 0});
        work.push_back({0, 0, 'D'});
        work.push_back({r + 1, it.end, 0});
        work.push_back({0, 0, 'U'});
    }
    return DyckPath(std::move(out));
}

namespace detail {

inline void gen_dyck(std::string& cur, int ups_left, int height,
                     const std::function<void(const DyckPath&)>& fn) {
    if (ups_left == 0 && height == 0) {
        fn(DyckPath(cur));
        return;
    }
    // step order U < D
    if (ups_left > 0) {
        cur += 'U';
        gen_dyck(cur, ups_left - 1, height + 1, fn);
        cur.pop_back();
    }
    if (height > 0) {
        cur += 'D';
        gen_dyck(cur, ups_left, height - 1, fn);
        cur.pop_back();
    }
}

inline void gen_motzkin(std::string& cur, int steps_left, int height,
                        const std::function<void(const MotzkinPath&)>& fn) {
    if (steps_left == 0) {
        fn(MotzkinPath(cur));
        return;
    }
    // step order U < H < D
    if (height + 1 <= steps_left - 1) {
        cur += 'U';
        gen_motzkin(cur, steps_left - 1, height + 1, fn);
        cur.pop_back();
    }
    if (height <= steps_left - 1) {
        cur += 'H';
        gen_motzkin(cur, steps_left - 1, height, fn);
        cur.pop_back();
    }
    if (height > 0) {
        cur += 'D';
        gen_motzkin(cur, steps_left - 1, height - 1, fn);
        cur.pop_back();
    }
}

}  // namespace detail

/// All C_n Dyck n-paths in lexicographic order with U < D.
inline void for_each_dyck(int n, const std::function<void(const DyckPath&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::string cur;
    cur.reserve(static_cast<size_t>(2 * n));
    detail::gen_dyck(cur, n, 0, fn);
}

inline std::vector<DyckPath> enumerate_dyck(int n) {
    std::vector<DyckPath> out;
    for_each_dyck(n, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

/// All M_n Motzkin n-paths in lexicographic order with U < H < D.
inline void for_each_motzkin(int n, const std::function<void(const MotzkinPath&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::string cur;
    cur.reserve(static_cast<size_t>(n));
    detail::gen_motzkin(cur, n, 0, fn);
}

inline std::vector<MotzkinPath> enumerate_motzkin(int n) {
    std::vector<MotzkinPath> out;
    for_each_motzkin(n, [&](const MotzkinPath& p) { out.push_back(p); });
    return out;
}

}  // namespace permpath
