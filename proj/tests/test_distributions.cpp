#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "permpath/automaton.hpp"
#include "permpath/distributions.hpp"
#include "permpath/table.hpp"

using namespace permpath;

namespace {

std::vector<BigInt> closed_row(Tau tau, int n) {
    if (n == 0) return {1};
    std::vector<BigInt> row;
    for (int k = 0; k <= std::max(0, n - 2); ++k) row.push_back(closed_form(tau, n, k));
    while (row.size() > 1 && row.back() == 0) row.pop_back();
    return row;
}

}  // namespace

TEST_CASE("catalan and motzkin numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
    CHECK(motzkin(0) == 1);
    CHECK(motzkin(3) == 4);
    CHECK(motzkin(8) == 323);
    // |S_3(3-1-2, consecutive 321)| by enumeration equals M_3
    const auto row = distribution_brute(Tau::p321, 3);
    CHECK(row[0] == motzkin(3));
    // far past 64 bits
    CHECK(catalan(40) == BigInt("2622127042276492108820"));
}

TEST_CASE("closed forms at small n") {
    CHECK(closed_form(Tau::p213, 3, 0) == 4);
    CHECK(closed_form(Tau::p213, 3, 1) == 1);
    CHECK(closed_form(Tau::p321, 3, 0) == 4);
    CHECK(closed_form(Tau::p321, 3, 1) == 1);
    CHECK(closed_form(Tau::p231, 3, 0) == 4);
    CHECK(closed_form(Tau::p231, 3, 1) == 1);
    CHECK(closed_row(Tau::p213, 4) == std::vector<BigInt>{8, 6});
    CHECK(closed_form(Tau::p213, 4, 2) == 0);
    CHECK(closed_form(Tau::p123, 5, 1) == closed_form(Tau::p321, 5, 1));
    CHECK(closed_form(Tau::p132, 5, 1) == closed_form(Tau::p231, 5, 1));
    CHECK_THROWS_AS(closed_form(Tau::p213, 0, 0), std::domain_error);
}

TEST_CASE("avoider counts") {
    CHECK(avoider_count(Tau::p213, 5) == 16);
    CHECK(avoider_count(Tau::p321, 3) == 4);
    CHECK(avoider_count(Tau::p123, 3) == 4);
    CHECK(avoider_count(Tau::p231, 3) == 4);
    CHECK(avoider_count(Tau::p123, 8) == 323);
    CHECK(avoider_count(Tau::p213, 0) == 1);
    for (Tau tau : kAllTau)
        for (int n = 0; n <= 10; ++n)
            REQUIRE(avoider_count(tau, n) == distribution_brute(tau, n)[0]);
}

TEST_CASE("k = 0 columns match the avoider-count formulas") {
    for (int n = 1; n <= 30; ++n) {
        REQUIRE(closed_form(Tau::p213, n, 0) == pow2(n - 1));
        REQUIRE(closed_form(Tau::p321, n, 0) == motzkin(n));
        REQUIRE(closed_form(Tau::p123, n, 0) == motzkin(n));
        REQUIRE(closed_form(Tau::p231, n, 0) == avoider_count(Tau::p231, n));
    }
}

TEST_CASE("closed-form row sums are Catalan numbers") {
    const auto cat = catalan_numbers(30);
    for (Tau tau : kAllTau)
        for (int n = 1; n <= 30; ++n) {
            BigInt sum = 0;
            for (const BigInt& v : closed_row(tau, n)) sum += v;
            REQUIRE(sum == cat[static_cast<size_t>(n)]);
        }
}

TEST_CASE("marked automata fire once per occurrence") {
    CHECK(build_automaton(Statistic::ddd()).run_marks("UUUUDDDD") == 2);
    CHECK(build_automaton(Statistic::du_run_du()).run_marks("UUDUDUDD") == 1);
    CHECK(build_automaton(Statistic::ddu()).run_marks("UUUUDDUUDDDUDUDD") == 2);

    for (int n = 0; n <= 8; ++n) {
        const std::vector<Statistic> stats = {Statistic::ddu(), Statistic::ddd(),
                                              Statistic::dudd(), Statistic::du_run_du(),
                                              Statistic::du_run_dd(), Statistic::factor("UDU")};
        std::vector<MarkedAutomaton> machines;
        for (const Statistic& s : stats) machines.push_back(build_automaton(s));
        for_each_dyck(n, [&](const DyckPath& p) {
            for (size_t i = 0; i < stats.size(); ++i)
                REQUIRE(machines[i].run_marks(p.steps()) == count_statistic(p, stats[i]));
        });
    }
}

TEST_CASE("distribution dp rows at small n") {
    CHECK(distribution_dp(Statistic::ddu(), 3) == std::vector<BigInt>{4, 1});
    CHECK(distribution_dp(Statistic::ddd(), 2) == std::vector<BigInt>{2});
    CHECK(distribution_dp(Statistic::ddd(), 0) == std::vector<BigInt>{1});
}

TEST_CASE("dp agrees with the closed form where the formulas reach") {
    // the DUDD column at n = 30 is the alternating-sum value
    const auto row = distribution_dp(Statistic::dudd(), 30);
    CHECK(row[0] == avoider_count(Tau::p231, 30));
    CHECK(row[0] == closed_form(Tau::p231, 30, 0));
    for (size_t k = 0; k < row.size(); ++k)
        REQUIRE(row[k] == closed_form(Tau::p231, 30, static_cast<long long>(k)));
}

TEST_CASE("triangulation: closed = dp = brute") {
    for (Tau tau : kAllTau)
        for (int n = 0; n <= 9; ++n) {
            const auto brute = distribution_brute(tau, n);
            REQUIRE(brute == distribution_dp(tau_statistic(tau), n));
            REQUIRE(brute == closed_row(tau, n));
        }
}

TEST_CASE("brute force refuses beyond its bound") {
    CHECK_THROWS_AS(distribution_brute(Tau::p213, 13), bound_exceeded);
    CHECK_THROWS_AS(joint_distribution(13), bound_exceeded);
    CHECK_NOTHROW(distribution_brute(Tau::p213, 13, 13));
}

TEST_CASE("brute-force rows of the equidistributed pairs coincide") {
    for (int n = 0; n <= 9; ++n) {
        REQUIRE(distribution_brute(Tau::p123, n) == distribution_brute(Tau::p321, n));
        REQUIRE(distribution_brute(Tau::p132, n) == distribution_brute(Tau::p231, n));
    }
}

TEST_CASE("joint distribution at n = 3 has the expected multiset") {
    const JointDistribution jd = joint_distribution(3);
    JointHistogram expected;
    expected[{0, 0, 0}] = 2;
    expected[{0, 1, 0}] = 1;
    expected[{0, 0, 1}] = 1;
    expected[{1, 0, 0}] = 1;
    CHECK(jd.h321_132_213 == expected);
    CHECK(jd.h123_231_213 == expected);
}

TEST_CASE("joint triple statistics are equidistributed") {
    for (int n = 0; n <= 8; ++n) {
        const JointDistribution jd = joint_distribution(n);
        REQUIRE(jd.h321_132_213 == jd.h123_231_213);
        REQUIRE(jd.h321_231_213 == jd.h123_132_213);
    }
    const JointDistribution tiny = joint_distribution(1);
    REQUIRE(tiny.h321_132_213 == JointHistogram{{{0, 0, 0}, 1}});
}

TEST_CASE("monotone equidistribution checks") {
    CHECK(monotone_equidistribution_check(2, 5));
    CHECK(monotone_equidistribution_check(3, 8));
    CHECK(monotone_equidistribution_check(4, 8));
    CHECK(monotone_equidistribution_check(5, 7));
    CHECK_THROWS_AS(monotone_equidistribution_check(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(monotone_equidistribution_check(3, 20), bound_exceeded);
}

TEST_CASE("tables agree across methods and serialize") {
    for (TableMethod method :
         {TableMethod::closed, TableMethod::dp, TableMethod::brute, TableMethod::gf}) {
        const DistributionTable t = make_table(Tau::p321, 0, 6, method);
        for (int n = 0; n <= 6; ++n) REQUIRE(t.rows.at(n) == closed_row(Tau::p321, n));
    }

    const DistributionTable t = make_table(Tau::p321, 3, 3, TableMethod::brute);
    std::ostringstream csv;
    write_csv(t, csv);
    CHECK(csv.str() == "3,0,4\n3,1,1\n");

    const nlohmann::json j = to_json(t);
    CHECK(j["tau"] == "321");
    CHECK(j["method"] == "brute");
    CHECK(j["n_first"] == 3);
    CHECK(j["rows"][0][0] == "4");
    CHECK(j["rows"][0][1] == "1");
}

TEST_CASE("series emit one z-coefficient vector per t-power") {
    const BivariateSeries series = gf_series(Tau::p213, 4);
    const nlohmann::json j = to_json(series);
    REQUIRE(j.size() == 5);
    CHECK(j[0] == nlohmann::json::array({"1"}));
    CHECK(j[3] == nlohmann::json::array({"4", "1"}));
    // the gf table rows are the same vectors
    const nlohmann::json t = to_json(make_table(Tau::p213, 0, 4, TableMethod::gf));
    CHECK(t["rows"] == j);
}

TEST_CASE("b-file reading and comparison") {
    const std::string path = "test_bfile_tmp.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "0 1\n1 1\n2 2\n3 4\n4 1\n";
    }
    const auto entries = read_bfile(path);
    REQUIRE(entries.size() == 5);
    CHECK(entries[0].index == 0);
    CHECK(entries[4].value == 1);

    const DistributionTable t = make_table(Tau::p213, 0, 3, TableMethod::closed);
    const BFileComparison good = compare_with_bfile(t, entries);
    CHECK(good.ok);
    CHECK(good.compared == 5);

    auto bad_entries = entries;
    bad_entries[3].value = 99;
    const BFileComparison bad = compare_with_bfile(t, bad_entries);
    CHECK_FALSE(bad.ok);
    CHECK(bad.detail.find("position 3") != std::string::npos);

    std::remove(path.c_str());
    CHECK_THROWS_AS(read_bfile("does_not_exist.txt"), std::runtime_error);
    {
        std::ofstream out(path);
        out << "5 not_a_number\n";
    }
    CHECK_THROWS_AS(read_bfile(path), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("fixture b-files cross-check the closed forms", "[data]") {
    const std::string dir = TEST_DATA_DIR;
    const struct {
        Tau tau;
        const char* file;
    } cases[] = {{Tau::p213, "/b091894.txt"}, {Tau::p321, "/b092107.txt"},
                 {Tau::p231, "/b116424.txt"}};
    for (const auto& c : cases) {
        const auto entries = read_bfile(dir + c.file);
        REQUIRE(entries.size() > 20);
        const DistributionTable t = make_table(c.tau, 0, 9, TableMethod::closed);
        const BFileComparison cmp = compare_with_bfile(t, entries);
        INFO(cmp.detail);
        REQUIRE(cmp.ok);
        REQUIRE(cmp.compared > 20);
    }
}
