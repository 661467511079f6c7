#pragma once

#include <set>
#include <string>
#include <vector>

#include "permpath/bijections.hpp"
#include "permpath/distributions.hpp"
#include "permpath/paths.hpp"
#include "permpath/permutation.hpp"

namespace permpath {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace detail {

inline void report(std::vector<CheckResult>& out, const std::string& name, bool pass,
                   const std::string& detail) {
    out.push_back({name, pass, detail});
}

}  // namespace detail

/// Deutsch involution: applying the map twice is the identity on every Dyck
/// path of semilength up to the bound; the image length never changes.
inline std::vector<CheckResult> verify_involution(int bound) {
    std::vector<CheckResult> out;
    long long paths = 0;
    bool ok = true;
    for (int n = 0; n <= bound && ok; ++n) {
        for_each_dyck(n, [&](const DyckPath& p) {
            ++paths;
            const DyckPath d = deutsch(p);
            if (d.size() != p.size() || deutsch(d) != p) ok = false;
        });
    }
    detail::report(out, "deutsch-involution", ok,
                   std::to_string(paths) + " paths, semilength <= " + std::to_string(bound));
    return out;
}

/// Round trips of K on avoiders and paths, and bijectivity of nu and mu onto
/// Motzkin paths (distinct images, valid, cardinality M_n, both round trips).
inline std::vector<CheckResult> verify_bijections(int bound) {
    std::vector<CheckResult> out;

    bool k_ok = true;
    long long k_items = 0;
    for (int n = 0; n <= bound && k_ok; ++n) {
        for_each_avoider(n, [&](const Permutation& sigma) {
            ++k_items;
            if (krattenthaler_inverse(krattenthaler(sigma)) != sigma) k_ok = false;
        });
        for_each_dyck(n, [&](const DyckPath& p) {
            ++k_items;
            if (krattenthaler(krattenthaler_inverse(p)) != p) k_ok = false;
        });
    }
    detail::report(out, "krattenthaler-round-trip", k_ok,
                   std::to_string(k_items) + " objects, n <= " + std::to_string(bound));

    bool hat_ok = true;
    for (int n = 0; n <= bound && hat_ok; ++n)
        for_each_avoider(n, [&](const Permutation& sigma) {
            const Permutation image = delta_hat(sigma);
            if (!avoids_312(image) || delta_hat(image) != sigma) hat_ok = false;
        });
    detail::report(out, "delta-hat-involution", hat_ok, "n <= " + std::to_string(bound));

    const Permutation c321({3, 2, 1});
    const Permutation c123({1, 2, 3});
    const auto motzkins = motzkin_numbers(bound);
    bool nu_ok = true, mu_ok = true;
    for (int n = 0; n <= bound; ++n) {
        std::set<MotzkinPath> nu_images, mu_images;
        for_each_avoider(n, [&](const Permutation& sigma) {
            if (count_consecutive(sigma, c321) == 0) {
                const MotzkinPath m = nu(sigma);
                if (m.size() != n || nu_inverse(m) != sigma) nu_ok = false;
                nu_images.insert(m);
            }
            if (count_consecutive(sigma, c123) == 0) {
                const MotzkinPath m = mu(Word(sigma));
                if (m.size() != n || mu_inverse(m) != sigma) mu_ok = false;
                mu_images.insert(m);
            }
        });
        const auto expected = motzkins[static_cast<size_t>(n)].convert_to<size_t>();
        if (nu_images.size() != expected) nu_ok = false;
        if (mu_images.size() != expected) mu_ok = false;
    }
    detail::report(out, "nu-bijectivity", nu_ok, "image cardinality M_n, n <= " +
                                                     std::to_string(bound));
    detail::report(out, "mu-bijectivity", mu_ok, "image cardinality M_n, n <= " +
                                                     std::to_string(bound));
    return out;
}

/// Statistic transport: the three Deutsch transfers on paths, the two
/// structural prefix/suffix lemmas, and the five pattern-to-statistic
/// correspondences through K.
inline std::vector<CheckResult> verify_transport(int bound) {
    std::vector<CheckResult> out;

    const Statistic ddd = Statistic::ddd();
    const Statistic ddu = Statistic::ddu();
    const Statistic dudd = Statistic::dudd();
    const Statistic dudu = Statistic::du_run_du();
    const Statistic du2dd = Statistic::du_run_dd();

    bool transfer_ok = true;
    bool lemma_ok = true;
    for (int n = 0; n <= bound; ++n) {
        for_each_dyck(n, [&](const DyckPath& p) {
            const DyckPath d = deutsch(p);
            if (count_statistic(p, dudu) != count_statistic(d, ddd)) transfer_ok = false;
            if (count_statistic(p, du2dd) != count_statistic(d, dudd)) transfer_ok = false;
            if (count_statistic(p, ddu) != count_statistic(d, ddu)) transfer_ok = false;
            // prefix U^t D U (t >= 1) forces suffix DD; prefix U^t D D
            // (t >= 2) forces suffix UD
            const std::string& s = p.steps();
            size_t t = 0;
            while (t < s.size() && s[t] == 'U') ++t;
            if (t >= 1 && t + 1 < s.size() && s[t] == 'D') {
                const std::string& ds = d.steps();
                if (s[t + 1] == 'U' && ds.substr(ds.size() - 2) != "DD") lemma_ok = false;
                if (s[t + 1] == 'D' && t >= 2 && ds.substr(ds.size() - 2) != "UD")
                    lemma_ok = false;
            }
        });
    }
    detail::report(out, "deutsch-statistic-transfer", transfer_ok,
                   "3 transfers, semilength <= " + std::to_string(bound));
    detail::report(out, "deutsch-structural-lemmas", lemma_ok,
                   "semilength <= " + std::to_string(bound));

    bool corr_ok = true;
    for (int n = 0; n <= bound && corr_ok; ++n) {
        for_each_avoider(n, [&](const Permutation& sigma) {
            const DyckPath p = krattenthaler(sigma);
            for (Tau tau : kAllTau)
                if (count_consecutive(sigma, tau_pattern(tau)) !=
                    count_statistic(p, tau_statistic(tau)))
                    corr_ok = false;
        });
    }
    detail::report(out, "pattern-statistic-correspondence", corr_ok,
                   "5 patterns, n <= " + std::to_string(bound));
    return out;
}

/// Triangulation: closed form, automaton DP and brute-force enumeration give
/// identical rows for every pattern up to the bound.
inline std::vector<CheckResult> verify_triangulate(int bound) {
    std::vector<CheckResult> out;
    bool ok = true;
    std::string note;
    for (Tau tau : kAllTau) {
        for (int n = 0; n <= bound; ++n) {
            const auto brute = distribution_brute(tau, n, bound);
            const auto dp = distribution_dp(tau_statistic(tau), n);
            std::vector<BigInt> closed;
            if (n == 0) {
                closed = {1};
            } else {
                for (int k = 0; k <= std::max(0, n - 2); ++k)
                    closed.push_back(closed_form(tau, n, k));
                detail::trim_row(closed);
            }
            if (brute != dp || brute != closed) {
                ok = false;
                note = "first failure at tau=" + to_string(tau) + " n=" + std::to_string(n);
                break;
            }
        }
        if (!ok) break;
    }
    if (ok) note = "closed = dp = brute for 5 patterns, n <= " + std::to_string(bound);
    detail::report(out, "triangulation", ok, note);
    return out;
}

/// Joint equidistribution of both displayed triple statistics.
inline std::vector<CheckResult> verify_joint(int bound) {
    std::vector<CheckResult> out;
    bool ok = true;
    for (int n = 0; n <= bound && ok; ++n) {
        const JointDistribution jd = joint_distribution(n, bound);
        if (jd.h321_132_213 != jd.h123_231_213) ok = false;
        if (jd.h321_231_213 != jd.h123_132_213) ok = false;
    }
    detail::report(out, "joint-equidistribution", ok,
                   "both triple pairs, n <= " + std::to_string(bound));
    return out;
}

/// Monotone rising/falling equidistribution for pattern lengths 2..5.
inline std::vector<CheckResult> verify_monotone(int bound) {
    std::vector<CheckResult> out;
    bool ok = true;
    for (int k = 2; k <= 5 && ok; ++k)
        for (int n = 0; n <= bound && ok; ++n)
            if (!monotone_equidistribution_check(k, n, bound)) ok = false;
    detail::report(out, "monotone-equidistribution", ok,
                   "k in 2..5, n <= " + std::to_string(bound));
    return out;
}

inline std::vector<CheckResult> verify_all(int bound) {
    std::vector<CheckResult> out;
    for (auto* fn : {verify_involution, verify_bijections, verify_transport,
                     verify_triangulate, verify_joint, verify_monotone}) {
        auto part = fn(bound);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace permpath
