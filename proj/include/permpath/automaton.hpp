#pragma once

#include <array>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "permpath/bigint.hpp"
#include "permpath/paths.hpp"

namespace permpath {

/// Deterministic automaton over {U, D} whose marked transitions fire exactly
/// once per occurrence of the statistic it encodes; drives the distribution
/// dynamic program.
struct MarkedAutomaton {
    struct Edge {
        int next = 0;
        bool marked = false;
    };

    int start = 0;
    std::vector<std::array<Edge, 2>> delta;  // [state][0 = U, 1 = D]

    int state_count() const { return static_cast<int>(delta.size()); }

    static int input_index(char c) { return c == 'U' ? 0 : 1; }

    const Edge& edge(int state, char c) const {
        return delta[static_cast<size_t>(state)][static_cast<size_t>(input_index(c))];
    }

    /// Number of marked transitions fired while reading the word.
    BigInt run_marks(std::string_view steps) const {
        BigInt marks = 0;
        int q = start;
        for (char c : steps) {
            const Edge& e = edge(q, c);
            if (e.marked) ++marks;
            q = e.next;
        }
        return marks;
    }
};

namespace detail {

// Knuth-Morris-Pratt matching automaton for a fixed factor; transitions into
// the full-match state are marked, and matching continues through the border
// so overlapping occurrences all fire.
inline MarkedAutomaton factor_automaton(const std::string& w) {
    const int m = static_cast<int>(w.size());
    std::vector<int> border(static_cast<size_t>(m) + 1, 0);
    for (int q = 2; q <= m; ++q) {
        int b = border[static_cast<size_t>(q - 1)];
        while (b > 0 && w[static_cast<size_t>(b)] != w[static_cast<size_t>(q - 1)])
            b = border[static_cast<size_t>(b)];
        if (w[static_cast<size_t>(b)] == w[static_cast<size_t>(q - 1)]) ++b;
        border[static_cast<size_t>(q)] = b;
    }
    MarkedAutomaton a;
    a.delta.resize(static_cast<size_t>(m) + 1);
    const char alphabet[2] = {'U', 'D'};
    for (int q = 0; q <= m; ++q) {
        for (int ci = 0; ci < 2; ++ci) {
            const char c = alphabet[ci];
            int next;
            if (q < m && w[static_cast<size_t>(q)] == c) {
                next = q + 1;
            } else if (q == 0) {
                next = 0;
            } else {
                next = a.delta[static_cast<size_t>(border[static_cast<size_t>(q)])]
                              [static_cast<size_t>(ci)].next;
            }
            a.delta[static_cast<size_t>(q)][static_cast<size_t>(ci)] = {next, next == m};
        }
    }
    return a;
}

// Recognizer for D U^t D U, t >= 1. States: 0 idle, 1 after an anchor D,
// 2 inside the U-run, 3 after the closing-candidate D.
inline MarkedAutomaton du_run_du_automaton() {
    MarkedAutomaton a;
    a.delta = {
        /* 0 */ {{{0, false}, {1, false}}},
        /* 1 */ {{{2, false}, {1, false}}},
        /* 2 */ {{{2, false}, {3, false}}},
        /* 3 */ {{{2, true}, {1, false}}},
    };
    return a;
}

// Recognizer for D U^t D D, t >= 2. States: 0 idle, 1 anchor D, 2 one U,
// 3 run of length >= 2, 4 pending second D.
inline MarkedAutomaton du_run_dd_automaton() {
    MarkedAutomaton a;
    a.delta = {
        /* 0 */ {{{0, false}, {1, false}}},
        /* 1 */ {{{2, false}, {1, false}}},
        /* 2 */ {{{3, false}, {1, false}}},
        /* 3 */ {{{3, false}, {4, false}}},
        /* 4 */ {{{2, false}, {1, true}}},
    };
    return a;
}

}  // namespace detail

inline MarkedAutomaton build_automaton(const Statistic& s) {
    switch (s.kind()) {
        case Statistic::Kind::factor: return detail::factor_automaton(s.word());
        case Statistic::Kind::du_run_du: return detail::du_run_du_automaton();
        case Statistic::Kind::du_run_dd: return detail::du_run_dd_automaton();
    }
    throw std::logic_error("unreachable");
}

}  // namespace permpath
