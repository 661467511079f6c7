// Acceptance suite: every headline claim of the library, checked end to end
// at desk scale with exact arithmetic. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fails. Criteria with a stated time
// budget also fail when the budget is exceeded.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permpath/permpath.hpp"

using namespace permpath;

namespace {

std::vector<BigInt> closed_row(Tau tau, int n) {
    if (n == 0) return {1};
    std::vector<BigInt> row;
    for (int k = 0; k <= std::max(0, n - 2); ++k) row.push_back(closed_form(tau, n, k));
    while (row.size() > 1 && row.back() == 0) row.pop_back();
    return row;
}

// One enumeration pass per n, shared by the brute-force criteria.
const std::map<Tau, std::vector<std::vector<BigInt>>>& brute_rows_to_12() {
    static const auto cache = [] {
        std::map<Tau, std::vector<std::vector<BigInt>>> rows;
        for (Tau tau : kAllTau) rows[tau] = {};
        for (int n = 0; n <= 12; ++n) {
            std::map<Tau, std::vector<BigInt>> hist;
            for (Tau tau : kAllTau) hist[tau] = std::vector<BigInt>(1);
            std::map<Tau, Permutation> pats;
            for (Tau tau : kAllTau) pats.emplace(tau, tau_pattern(tau));
            for_each_avoider(n, [&](const Permutation& sigma) {
                for (Tau tau : kAllTau) {
                    const auto k = count_consecutive(sigma, pats.at(tau)).convert_to<size_t>();
                    auto& h = hist.at(tau);
                    if (k >= h.size()) h.resize(k + 1);
                    ++h[k];
                }
            });
            for (Tau tau : kAllTau) {
                auto& h = hist.at(tau);
                while (h.size() > 1 && h.back() == 0) h.pop_back();
                rows.at(tau).push_back(h);
            }
        }
        return rows;
    }();
    return cache;
}

bool criterion_closed_form_213(std::string& note) {
    const auto& brute = brute_rows_to_12().at(Tau::p213);
    for (int n = 0; n <= 12; ++n) {
        if (closed_row(Tau::p213, n) != brute[static_cast<size_t>(n)] ||
            distribution_dp(tau_statistic(Tau::p213), n) != brute[static_cast<size_t>(n)]) {
            note = "mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    note = "2^{n-2k-1} C_k binom(n-1,2k) = DP = enumeration, n <= 12";
    return true;
}

bool criterion_closed_form_321_231(std::string& note) {
    for (Tau tau : {Tau::p321, Tau::p231}) {
        const auto& brute = brute_rows_to_12().at(tau);
        for (int n = 0; n <= 12; ++n)
            if (closed_row(tau, n) != brute[static_cast<size_t>(n)] ||
                distribution_dp(tau_statistic(tau), n) != brute[static_cast<size_t>(n)]) {
                note = "mismatch at tau=" + to_string(tau) + " n=" + std::to_string(n);
                return false;
            }
    }
    note = "alternating-sum closed forms = DP = enumeration for 321 and 231, n <= 12";
    return true;
}

bool criterion_equidistribution_pairs(std::string& note) {
    const auto& rows = brute_rows_to_12();
    for (int n = 0; n <= 12; ++n) {
        if (rows.at(Tau::p123)[static_cast<size_t>(n)] != rows.at(Tau::p321)[static_cast<size_t>(n)]) {
            note = "123 vs 321 differ at n=" + std::to_string(n);
            return false;
        }
        if (rows.at(Tau::p132)[static_cast<size_t>(n)] != rows.at(Tau::p231)[static_cast<size_t>(n)]) {
            note = "132 vs 231 differ at n=" + std::to_string(n);
            return false;
        }
    }
    note = "brute rows identical for 123/321 and 132/231, n <= 12";
    return true;
}

bool criterion_avoider_counts(std::string& note) {
    const auto& rows = brute_rows_to_12();
    for (int n = 1; n <= 12; ++n) {
        const auto cell = [&](Tau tau) { return rows.at(tau)[static_cast<size_t>(n)][0]; };
        if (avoider_count(Tau::p213, n) != pow2(n - 1) || cell(Tau::p213) != pow2(n - 1)) {
            note = "213 count differs at n=" + std::to_string(n);
            return false;
        }
        if (cell(Tau::p321) != motzkin(n) || cell(Tau::p123) != motzkin(n)) {
            note = "Motzkin count differs at n=" + std::to_string(n);
            return false;
        }
        if (avoider_count(Tau::p231, n) != cell(Tau::p231) ||
            avoider_count(Tau::p132, n) != cell(Tau::p132)) {
            note = "alternating-sum count differs at n=" + std::to_string(n);
            return false;
        }
    }
    note = "2^{n-1}, M_n and the alternating sum all equal the k=0 cells, n <= 12";
    return true;
}

bool criterion_gf_expansion(std::string& note) {
    const int order = 30;
    for (Tau tau : {Tau::p213, Tau::p321, Tau::p231}) {
        const BivariateSeries series = gf_series(tau, order);
        for (int n = 1; n <= order; ++n) {
            const auto& poly = series.coeff(n);
            for (int k = 0; k <= std::max(poly.degree(), n - 2); ++k)
                if (boost::multiprecision::numerator(poly.coeff(k)) != closed_form(tau, n, k)) {
                    note = "tau=" + to_string(tau) + " t^" + std::to_string(n) + " z^" +
                           std::to_string(k);
                    return false;
                }
        }
    }
    note = "series coefficients equal closed forms up to t^30, three functions";
    return true;
}

bool criterion_involution(std::string& note) {
    const auto results = verify_involution(10);
    note = results[0].detail;
    return results[0].pass;
}

bool criterion_transport(std::string& note) {
    const auto results = verify_transport(9);
    for (const CheckResult& r : results)
        if ((r.name == "deutsch-statistic-transfer" || r.name == "deutsch-structural-lemmas") &&
            !r.pass) {
            note = r.name + " failed";
            return false;
        }
    note = "three statistic transfers and both structural lemmas, semilength <= 9";
    return true;
}

bool criterion_krattenthaler(std::string& note) {
    bool round_ok = true, corr_ok = true;
    for (int n = 0; n <= 9; ++n) {
        for_each_avoider(n, [&](const Permutation& sigma) {
            const DyckPath p = krattenthaler(sigma);
            if (krattenthaler_inverse(p) != sigma) round_ok = false;
            for (Tau tau : kAllTau)
                if (count_consecutive(sigma, tau_pattern(tau)) !=
                    count_statistic(p, tau_statistic(tau)))
                    corr_ok = false;
        });
        for_each_dyck(n, [&](const DyckPath& p) {
            if (krattenthaler(krattenthaler_inverse(p)) != p) round_ok = false;
        });
    }
    if (!round_ok) note = "round trip failed";
    if (!corr_ok) note = "statistic correspondence failed";
    if (round_ok && corr_ok) note = "round trips and five correspondences, n <= 9";
    return round_ok && corr_ok;
}

bool criterion_motzkin_bijections(std::string& note) {
    const Permutation c321({3, 2, 1}), c123({1, 2, 3});
    const auto motz = motzkin_numbers(10);
    for (int n = 0; n <= 10; ++n) {
        std::set<MotzkinPath> nu_images, mu_images;
        bool ok = true;
        for_each_avoider(n, [&](const Permutation& sigma) {
            if (count_consecutive(sigma, c321) == 0) {
                const MotzkinPath m = nu(sigma);
                if (m.size() != n || nu_inverse(m) != sigma) ok = false;
                nu_images.insert(m);
            }
            if (count_consecutive(sigma, c123) == 0) {
                const MotzkinPath m = mu(Word(sigma));
                if (m.size() != n || mu_inverse(m) != sigma) ok = false;
                mu_images.insert(m);
            }
        });
        const auto expected = motz[static_cast<size_t>(n)].convert_to<size_t>();
        if (!ok || nu_images.size() != expected || mu_images.size() != expected) {
            note = "failure at n=" + std::to_string(n);
            return false;
        }
    }
    note = "nu and mu bijective onto Motzkin paths with round trips, n <= 10";
    return true;
}

bool criterion_joint(std::string& note) {
    for (int n = 0; n <= 9; ++n) {
        const JointDistribution jd = joint_distribution(n);
        if (jd.h321_132_213 != jd.h123_231_213 || jd.h321_231_213 != jd.h123_132_213) {
            note = "triple histograms differ at n=" + std::to_string(n);
            return false;
        }
    }
    note = "both displayed triple statistics equidistributed, n <= 9";
    return true;
}

bool criterion_monotone(std::string& note) {
    for (int k : {4, 5})
        for (int n = 0; n <= 10; ++n)
            if (!monotone_equidistribution_check(k, n, 10)) {
                note = "k=" + std::to_string(k) + " n=" + std::to_string(n);
                return false;
            }
    note = "rising/falling runs of length 4 and 5 equidistributed, n <= 10";
    return true;
}

bool criterion_dp_scalability(std::string& note) {
    for (Tau tau : kAllTau) {
        const auto row = distribution_dp(tau_statistic(tau), 100);
        for (long long k : {0LL, 1LL, 5LL}) {
            const BigInt dp_cell =
                k < static_cast<long long>(row.size()) ? row[static_cast<size_t>(k)] : BigInt(0);
            if (dp_cell != closed_form(tau, 100, k)) {
                note = "tau=" + to_string(tau) + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    note = "automaton DP equals closed forms at n = 100, cells k in {0,1,5}";
    return true;
}

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;  // 0 = no stated budget
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "213 closed form reproduces enumeration", 60, criterion_closed_form_213},
        {2, "321/231 closed forms reproduce enumeration", 120, criterion_closed_form_321_231},
        {3, "123=321 and 132=231 equidistribution", 0, criterion_equidistribution_pairs},
        {4, "avoider-count formulas match k=0 cells", 0, criterion_avoider_counts},
        {5, "generating-function expansion to t^30", 30, criterion_gf_expansion},
        {6, "deutsch involution, semilength <= 10", 10, criterion_involution},
        {7, "statistic transport and structural lemmas", 0, criterion_transport},
        {8, "krattenthaler round trip and correspondences", 0, criterion_krattenthaler},
        {9, "nu and mu bijectivity onto Motzkin paths", 0, criterion_motzkin_bijections},
        {10, "joint triple-statistic equidistribution", 0, criterion_joint},
        {11, "monotone-run equidistribution, lengths 4 and 5", 0, criterion_monotone},
        {12, "distribution DP at n = 100", 60, criterion_dp_scalability},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        bool pass = false;
        try {
            pass = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && elapsed > c.budget_seconds) {
            pass = false;
            note += " [exceeded " + std::to_string(c.budget_seconds) + "s budget]";
        }
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.id << ": "
             << c.title << " — " << note << " [" << std::fixed << std::setprecision(2)
             << elapsed << "s]";
        std::cout << line.str() << std::endl;
        all_pass = all_pass && pass;
    }
    if (!all_pass) {
        std::cout << "ACCEPTANCE: FAIL" << std::endl;
        return 1;
    }
    std::cout << "ACCEPTANCE: PASS" << std::endl;
    return 0;
}
