// Command-line front end: expansions, verification suites, BCH tables and
// forest counts.

#include "postlie/format.hpp"
#include "postlie/rb_lift.hpp"
#include "postlie/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace postlie;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct ExpandOptions
{
    std::string what = "magnus";
    int order = 5;
    std::string weight = "symbolic";
    std::string format = "text";
};

template <Coefficient C>
void print_expansion(const Expansion<C>& e, const std::string& what, const std::string& symbol,
                     const std::string& format)
{
    if (format == "text")
        std::cout << to_text(e);
    else if (format == "latex")
        std::cout << to_latex(e, symbol);
    else
        std::cout << to_json(e, what).dump(2) << "\n";
}

int run_expand(const ExpandOptions& o, bool weight_given)
{
    if (o.order < 1)
        throw UsageError("--order must be at least 1");
    const bool weighted = o.what == "bch-rec" || o.what == "bch-rec-inv";
    if (!weighted && weight_given)
        throw UsageError("--weight applies to bch-rec and bch-rec-inv only");

    if (o.what == "magnus") {
        print_expansion(postlie_magnus(o.order), o.what, "\\chi", o.format);
        return exit_ok;
    }
    if (o.what == "magnus-inv") {
        print_expansion(inverse_postlie_magnus(o.order), o.what, "\\theta", o.format);
        return exit_ok;
    }

    const bool inverse = o.what == "bch-rec-inv";
    const WeightedExpansion e = inverse ? bch_recursion_inverse(o.order) : bch_recursion(o.order);
    if (o.weight == "symbolic") {
        const std::string symbol = inverse ? "\\left(\\chi_{\\lambda}^{-1}\\right)" : "\\chi_{\\lambda}";
        print_expansion(e, o.what, symbol, o.format);
        return exit_ok;
    }
    Rational w;
    try {
        w = parse_rational(o.weight);
    } catch (const std::exception&) {
        throw UsageError("--weight must be 'symbolic' or a rational number, got '" + o.weight + "'");
    }
    if (is_zero(w))
        throw UsageError("--weight must be nonzero");
    const std::string sub = "{" + latex_coefficient(w) + "}";
    const std::string symbol = inverse ? "\\left(\\chi_" + sub + "^{-1}\\right)" : "\\chi_" + sub;
    print_expansion(specialize(e, w), o.what, symbol, o.format);
    return exit_ok;
}

int run_verify(const std::string& suite, const verify::SuiteOptions& options, bool verbose)
{
    if (options.order < 0)
        throw UsageError("--order must be positive");
    if (options.dim < 1)
        throw UsageError("--dim must be positive");
    const Report report = verify::run_suite(suite, options);
    int failed = 0;
    for (const auto& c : report.checks()) {
        failed += !c.passed;
        if (!c.passed || verbose) {
            std::cout << (c.passed ? "ok   " : "FAIL ") << c.name;
            if (!c.detail.empty())
                std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
    }
    std::cout << suite << ": " << report.checks().size() - failed << "/" << report.checks().size()
              << " checks passed\n";
    return report.passed() ? exit_ok : exit_failed;
}

int run_bch(int order, const std::string& format)
{
    if (order < 1)
        throw UsageError("--order must be at least 1");
    const lie::BchTable table = lie::bch_table(order);
    if (format == "json") {
        nlohmann::json components = nlohmann::json::array();
        for (int n = 1; n <= order; ++n)
            components.push_back({{"degree", n}, {"terms", to_json(table.component(n))}});
        std::cout << nlohmann::json{{"what", "bch"}, {"order", order}, {"components", components}}.dump(2) << "\n";
        return exit_ok;
    }
    for (int n = 1; n <= order; ++n) {
        if (format == "latex")
            std::cout << "\\mathrm{BCH}^{(" << n << ")} = " << to_latex(table.component(n)) << "\n";
        else
            std::cout << to_text(table.component(n)) << "\n";
    }
    return exit_ok;
}

int run_count(int order, int labels)
{
    if (order < 0)
        throw UsageError("--order must be non-negative");
    if (labels < 1 || labels > 26)
        throw UsageError("--labels must lie in 1..26");
    Alphabet alphabet;
    if (labels > 1) {
        std::vector<std::string> names;
        for (int i = 0; i < labels; ++i)
            names.emplace_back(1, static_cast<char>('a' + i));
        alphabet = Alphabet(names);
    }
    std::cout << enumerate_forests(order, alphabet).size() << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in free post-Lie algebras on planar rooted trees"};
    app.require_subcommand(1);

    ExpandOptions expand;
    auto* expand_cmd = app.add_subcommand("expand", "Print the components of an expansion");
    expand_cmd->add_option("--what", expand.what, "Expansion to compute")
        ->check(CLI::IsMember({"magnus", "magnus-inv", "bch-rec", "bch-rec-inv"}))
        ->capture_default_str();
    expand_cmd->add_option("--order", expand.order, "Highest degree")->capture_default_str();
    auto* weight_opt = expand_cmd->add_option("--weight", expand.weight, "'symbolic' or a rational weight")
                           ->capture_default_str();
    expand_cmd->add_option("--format", expand.format, "Output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();

    std::string suite;
    verify::SuiteOptions suite_options;
    bool verbose = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(verify::suite_names()));
    verify_cmd->add_option("--order", suite_options.order, "Truncation order (suite default if omitted)");
    verify_cmd->add_option("--dim", suite_options.dim, "Matrix dimension for rbmodel")->capture_default_str();
    verify_cmd->add_option("--seed", suite_options.seed, "Random seed for rbmodel")->capture_default_str();
    verify_cmd->add_flag("--verbose,-v", verbose, "List passing checks too");

    int bch_order = 7;
    std::string bch_format = "text";
    auto* bch_cmd = app.add_subcommand("bch", "Print the BCH series in bracket form");
    bch_cmd->add_option("--order", bch_order, "Highest degree")->capture_default_str();
    bch_cmd->add_option("--format", bch_format, "Output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();

    int count_order = 0;
    int labels = 1;
    auto* count_cmd = app.add_subcommand("count", "Count planar forests of a given degree");
    count_cmd->add_option("--order", count_order, "Degree")->required();
    count_cmd->add_option("--labels", labels, "Number of vertex labels")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*expand_cmd)
            return run_expand(expand, weight_opt->count() > 0);
        if (*verify_cmd)
            return run_verify(suite, suite_options, verbose);
        if (*bch_cmd)
            return run_bch(bch_order, bch_format);
        return run_count(count_order, labels);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
}
