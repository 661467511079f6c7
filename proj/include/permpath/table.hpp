#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permpath/bigint.hpp"
#include "permpath/distributions.hpp"

namespace permpath {

enum class TableMethod { closed, dp, brute, gf };

inline std::string to_string(TableMethod m) {
    switch (m) {
        case TableMethod::closed: return "closed";
        case TableMethod::dp: return "dp";
        case TableMethod::brute: return "brute";
        case TableMethod::gf: return "gf";
    }
    return "";
}

/// Exact big-integer triangle a_{n,k} for one pattern and one computation
/// route. Rows are trimmed to their empirical kmax.
struct DistributionTable {
    Tau tau = Tau::p213;
    std::string method;
    std::map<int, std::vector<BigInt>> rows;
};

/// Builds a_{n,k} rows for n in [n_from, n_to] by the requested route. The
/// n = 0 row is seeded as (1) where the closed form does not apply.
inline DistributionTable make_table(Tau tau, int n_from, int n_to, TableMethod method,
                                    int bound = kDefaultBruteBound) {
    if (n_from < 0 || n_to < n_from) throw std::invalid_argument("bad n range");
    DistributionTable table{tau, to_string(method), {}};
    std::optional<BivariateSeries> series;
    if (method == TableMethod::gf) series = gf_series(tau, n_to);
    const auto cat = catalan_numbers(n_to);
    for (int n = n_from; n <= n_to; ++n) {
        std::vector<BigInt> row;
        switch (method) {
            case TableMethod::closed: {
                if (n == 0) {
                    row = {1};
                    break;
                }
                for (int k = 0; k <= std::max(0, n - 2); ++k)
                    row.push_back(closed_form(tau, n, k));
                detail::trim_row(row);
                break;
            }
            case TableMethod::dp: row = distribution_dp(tau_statistic(tau), n); break;
            case TableMethod::brute: row = distribution_brute(tau, n, bound); break;
            case TableMethod::gf: row = gf_row(*series, n); break;
        }
        // type invariant: non-negative entries summing to the Catalan number
        BigInt sum = 0;
        for (const BigInt& v : row) {
            if (v < 0) throw std::logic_error("negative table entry");
            sum += v;
        }
        if (sum != cat[static_cast<size_t>(n)])
            throw std::logic_error("table row for n = " + std::to_string(n) +
                                   " does not sum to the Catalan number");
        table.rows[n] = std::move(row);
    }
    return table;
}

inline void write_csv(const DistributionTable& table, std::ostream& out) {
    for (const auto& [n, row] : table.rows)
        for (size_t k = 0; k < row.size(); ++k)
            out << n << ',' << k << ',' << row[k] << '\n';
}

/// JSON form {tau, method, n_first, rows}; counts are decimal strings so
/// values beyond 64 bits survive the trip.
inline nlohmann::json to_json(const DistributionTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    int n_first = 0;
    bool first = true;
    for (const auto& [n, row] : table.rows) {
        if (first) {
            n_first = n;
            first = false;
        }
        nlohmann::json jrow = nlohmann::json::array();
        for (const BigInt& v : row) jrow.push_back(v.str());
        rows.push_back(std::move(jrow));
    }
    return nlohmann::json{{"tau", to_string(table.tau)},
                          {"method", table.method},
                          {"n_first", n_first},
                          {"rows", std::move(rows)}};
}

/// JSON form of a truncated series: one z-coefficient vector per t-power.
inline nlohmann::json to_json(const BivariateSeries& series) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= series.order(); ++n) {
        nlohmann::json jrow = nlohmann::json::array();
        const auto& poly = series.coeff(n);
        for (int k = 0; k <= std::max(0, poly.degree()); ++k) {
            std::ostringstream os;
            os << poly.coeff(k);
            jrow.push_back(os.str());
        }
        rows.push_back(std::move(jrow));
    }
    return rows;
}

/// One entry of an OEIS-style b-file: "index value" per line.
struct BFileEntry {
    long long index = 0;
    BigInt value;
};

/// Reads b-file format: one "index value" pair per line; blank lines and
/// lines starting with '#' are skipped.
inline std::vector<BFileEntry> read_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file: " + path);
    std::vector<BFileEntry> entries;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') continue;
        BFileEntry e;
        try {
            e.index = std::stoll(first);
            std::string value;
            if (!(ls >> value)) throw std::runtime_error("missing value");
            e.value = BigInt(value);
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": malformed b-file line");
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

struct BFileComparison {
    bool ok = true;
    size_t compared = 0;
    std::string detail;
};

/// Compares the table, flattened row by row from its first row, against the
/// value column of a b-file over the overlap of the two sequences.
inline BFileComparison compare_with_bfile(const DistributionTable& table,
                                          const std::vector<BFileEntry>& entries) {
    std::vector<BigInt> flat;
    for (const auto& [n, row] : table.rows)
        for (const BigInt& v : row) flat.push_back(v);
    BFileComparison cmp;
    const size_t limit = std::min(flat.size(), entries.size());
    for (size_t i = 0; i < limit; ++i) {
        if (entries[i].value != flat[i]) {
            cmp.ok = false;
            cmp.detail = "mismatch at position " + std::to_string(i) + " (b-file index " +
                         std::to_string(entries[i].index) + "): file has " +
                         entries[i].value.str() + ", table has " + flat[i].str();
            return cmp;
        }
    }
    cmp.compared = limit;
    cmp.detail = "matched " + std::to_string(limit) + " terms";
    return cmp;
}

}  // namespace permpath
