// Command-line front end: tabulate consecutive-pattern distributions on
// 3-1-2-avoiding permutations, apply the path bijections to piped objects,
// and run the exhaustive verification suites.
//
// Exit codes: 0 success, 1 usage or data error, 2 resource-bound refusal,
// 3 verification failure.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permpath/permpath.hpp"

namespace {

using namespace permpath;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBound = 2;
constexpr int kExitVerification = 3;
constexpr int kMaxVerifyBound = 13;

struct NRange {
    int from = 0;
    int to = 0;
};

NRange parse_n_range(const std::string& text) {
    const size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n", "expected an integer or a range like 1..5");
    }
}

Tau require_tau(const std::string& text) {
    const auto tau = parse_tau(text);
    if (!tau)
        throw CLI::ValidationError("--tau", "must be one of 213, 321, 231, 123, 132");
    return *tau;
}

int run_table(const std::string& tau_text, const std::string& n_text,
              const std::string& method, const std::string& format,
              const std::string& bfile_path, int bound) {
    const Tau tau = require_tau(tau_text);
    const NRange range = parse_n_range(n_text);
    if (range.from < 0 || range.to < range.from) {
        std::cerr << "error: bad --n range\n";
        return kExitUsage;
    }

    std::vector<TableMethod> methods;
    if (method == "all")
        methods = {TableMethod::closed, TableMethod::dp, TableMethod::brute, TableMethod::gf};
    else if (method == "closed")
        methods = {TableMethod::closed};
    else if (method == "dp")
        methods = {TableMethod::dp};
    else if (method == "brute")
        methods = {TableMethod::brute};
    else if (method == "gf")
        methods = {TableMethod::gf};
    else {
        std::cerr << "error: unknown method '" << method << "'\n";
        return kExitUsage;
    }

    std::vector<DistributionTable> tables;
    try {
        for (TableMethod m : methods) tables.push_back(make_table(tau, range.from, range.to, m, bound));
    } catch (const bound_exceeded& e) {
        std::cerr << "refused: " << e.what() << " (raise --bound to override)\n";
        return kExitBound;
    }

    // per-cell agreement across every requested method
    std::string agreement = tables.front().method;
    bool agree = true;
    std::string mismatch;
    for (size_t i = 1; i < tables.size(); ++i) {
        agreement += "=" + tables[i].method;
        for (int n = range.from; n <= range.to && agree; ++n)
            if (tables[i].rows.at(n) != tables.front().rows.at(n)) {
                agree = false;
                mismatch = "methods " + tables.front().method + " and " + tables[i].method +
                           " disagree at n=" + std::to_string(n);
            }
    }

    std::optional<BFileComparison> bcmp;
    if (!bfile_path.empty()) {
        try {
            bcmp = compare_with_bfile(tables.front(), read_bfile(bfile_path));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    if (format == "csv") {
        write_csv(tables.front(), std::cout);
        if (methods.size() > 1) std::cout << "# agreement: " << agreement << (agree ? " ok" : " FAILED") << "\n";
        if (bcmp) std::cout << "# bfile: " << bcmp->detail << "\n";
    } else if (format == "json") {
        nlohmann::json j = to_json(tables.front());
        if (methods.size() > 1) j["agreement"] = agree ? agreement : "mismatch";
        if (bcmp) j["bfile"] = bcmp->detail;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }

    if (!agree) {
        std::cerr << "verification failed: " << mismatch << "\n";
        return kExitVerification;
    }
    if (bcmp && !bcmp->ok) {
        std::cerr << "verification failed: " << bcmp->detail << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

int run_transform(const std::string& name) {
    using TransformFn = std::function<std::string(const std::string&)>;
    TransformFn fn;
    if (name == "K") {
        fn = [](const std::string& line) { return krattenthaler(Permutation::parse(line)).str(); };
    } else if (name == "K-inv") {
        fn = [](const std::string& line) { return krattenthaler_inverse(DyckPath::parse(line)).str(); };
    } else if (name == "delta") {
        fn = [](const std::string& line) { return deutsch(DyckPath::parse(line)).str(); };
    } else if (name == "delta-hat") {
        fn = [](const std::string& line) { return delta_hat(Permutation::parse(line)).str(); };
    } else if (name == "nu") {
        fn = [](const std::string& line) { return nu(Permutation::parse(line)).str(); };
    } else if (name == "nu-inv") {
        fn = [](const std::string& line) { return nu_inverse(MotzkinPath::parse(line)).str(); };
    } else if (name == "mu") {
        fn = [](const std::string& line) { return mu(Word::parse(line)).str(); };
    } else if (name == "mu-inv") {
        fn = [](const std::string& line) { return mu_inverse(MotzkinPath::parse(line)).str(); };
    } else {
        std::cerr << "error: unknown transform '" << name << "'\n";
        return kExitUsage;
    }

    bool any_error = false;
    std::string line;
    for (long long lineno = 1; std::getline(std::cin, line); ++lineno) {
        try {
            std::cout << fn(line) << "\n";
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            any_error = true;
        }
    }
    return any_error ? kExitUsage : kExitOk;
}

int run_count(const std::string& tau_text, int n) {
    const Tau tau = require_tau(tau_text);
    std::cout << avoider_count(tau, n) << "\n";
    return kExitOk;
}

int run_avoiders(const std::string& tau_text, int n, bool list, int bound) {
    const Tau tau = require_tau(tau_text);
    if (!list) {
        std::cout << avoider_count(tau, n) << "\n";
        return kExitOk;
    }
    try {
        check_brute_bound(n, bound);
    } catch (const bound_exceeded& e) {
        std::cerr << "refused: " << e.what() << " (raise --bound to override)\n";
        return kExitBound;
    }
    const Permutation pattern = tau_pattern(tau);
    for_each_avoider(n, [&](const Permutation& sigma) {
        if (count_consecutive(sigma, pattern) == 0) std::cout << sigma.str() << "\n";
    });
    return kExitOk;
}

int run_verify(const std::string& suite, int bound) {
    if (bound < 0 || bound > kMaxVerifyBound) {
        std::cerr << "refused: --bound must be between 0 and " << kMaxVerifyBound << "\n";
        return kExitBound;
    }
    std::vector<CheckResult> results;
    if (suite == "involution")
        results = verify_involution(bound);
    else if (suite == "bijections")
        results = verify_bijections(bound);
    else if (suite == "transport")
        results = verify_transport(bound);
    else if (suite == "triangulate")
        results = verify_triangulate(bound);
    else if (suite == "joint")
        results = verify_joint(bound);
    else if (suite == "monotone")
        results = verify_monotone(bound);
    else if (suite == "all")
        results = verify_all(bound);
    else {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
    }
    bool all_pass = true;
    for (const CheckResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail << ")\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact consecutive-pattern statistics on 3-1-2-avoiding permutations"};
    app.require_subcommand(1);

    std::string tau_text, n_text, method = "closed", format = "csv", bfile_path, transform_name;
    std::string suite = "all";
    int n = 0;
    int bound = kDefaultBruteBound;
    int verify_bound = 8;
    bool list = false;

    const std::string bound_help =
        "brute-force bound (default 12); enumeration cost grows like the "
        "Catalan numbers, so raising it gets expensive quickly";

    CLI::App* table = app.add_subcommand("table", "emit a distribution triangle a_{n,k}");
    table->add_option("--tau", tau_text, "pattern: 213, 321, 231, 123 or 132")->required();
    table->add_option("--n", n_text, "row or row range, e.g. 4 or 1..12")->required();
    table->add_option("--method", method, "closed | dp | brute | gf | all (default closed)");
    table->add_option("--format", format, "csv | json (default csv)");
    table->add_option("--bfile", bfile_path, "cross-check against an OEIS-style b-file");
    table->add_option("--bound", bound, bound_help);

    CLI::App* transform =
        app.add_subcommand("transform", "apply a bijection to objects read line by line");
    transform
        ->add_option("name", transform_name,
                     "K | K-inv | delta | delta-hat | nu | nu-inv | mu | mu-inv")
        ->required();

    CLI::App* count = app.add_subcommand("count", "count avoiders of the consecutive pattern");
    count->add_option("--tau", tau_text, "pattern: 213, 321, 231, 123 or 132")->required();
    count->add_option("--n", n, "permutation length")->required()->check(CLI::NonNegativeNumber);

    CLI::App* avoiders =
        app.add_subcommand("avoiders", "count or list members of S_n(3-1-2, tau)");
    avoiders->add_option("--tau", tau_text, "pattern: 213, 321, 231, 123 or 132")->required();
    avoiders->add_option("--n", n, "permutation length")->required()->check(CLI::NonNegativeNumber);
    avoiders->add_flag("--list", list, "enumerate the members (bounded)");
    avoiders->add_option("--bound", bound, bound_help);

    CLI::App* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
    verify->add_option("--suite", suite,
                       "involution | bijections | transport | triangulate | joint | monotone "
                       "| all (default all)");
    verify->add_option("--bound", verify_bound, "exhaustive bound (default 8, max 13)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (table->parsed()) return run_table(tau_text, n_text, method, format, bfile_path, bound);
        if (transform->parsed()) return run_transform(transform_name);
        if (count->parsed()) return run_count(tau_text, n);
        if (avoiders->parsed()) return run_avoiders(tau_text, n, list, bound);
        if (verify->parsed()) return run_verify(suite, verify_bound);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const bound_exceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
