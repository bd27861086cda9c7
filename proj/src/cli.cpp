// Command-line front end: compute, classify, gen, bench.
//
// Exit codes: 0 success, 2 invalid input, 3 no applicable backend,
// 4 crosscheck mismatch, 1 anything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "wvg/wvg.hpp"

namespace {

constexpr int exit_invalid_input = 2;
constexpr int exit_no_backend = 3;
constexpr int exit_mismatch = 4;

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in)
        throw wvg::invalid_game("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string numeral(const wvg::Rational& x)
{
    auto s = wvg::to_exact_decimal(x);
    return s ? *s : wvg::to_fraction_string(x);
}

wvg::GameShape parse_shape(const std::string& text)
{
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "general")
        return wvg::GameShape::general();
    if (name == "two_value")
        return wvg::GameShape::two_value();
    if (name == "unbalanced")
        return wvg::GameShape::unbalanced();
    if (name == "k_value" && !arg.empty())
        return wvg::GameShape::k_value(std::stoul(arg));
    if (name == "geometric" && !arg.empty()) {
        const auto slash = arg.find('/');
        if (slash == std::string::npos)
            return wvg::GameShape::geometric(wvg::parse_decimal(arg));
        return wvg::GameShape::geometric(wvg::parse_decimal(arg.substr(0, slash))
                                         / wvg::parse_decimal(arg.substr(slash + 1)));
    }
    throw wvg::invalid_game("unknown shape '" + text
                            + "' (general, two_value, k_value:K, geometric:R, unbalanced)");
}

void print_json_report(const wvg::WeightedGame& game, const wvg::ComputeResult& res, std::optional<std::size_t> decimal)
{
    nlohmann::json j = wvg::to_json(res.report);
    j["backend"] = std::string(wvg::to_string(res.backend));
    if (res.crosscheck_backend)
        j["crosscheck"] = std::string(wvg::to_string(*res.crosscheck_backend));
    j["classes"] = wvg::to_json(res.profile, game.label_map());
    if (decimal) {
        nlohmann::json approx;
        approx["note"] = "approximate values, rounded to " + std::to_string(*decimal) + " decimals";
        for (const char* key : {"banzhaf", "prob_banzhaf"}) {
            const auto& v = std::string(key) == "banzhaf" ? res.report.banzhaf : res.report.prob_banzhaf;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& x : v)
                arr.push_back(wvg::to_fixed(x, *decimal));
            approx[key] = std::move(arr);
        }
        if (res.report.coleman_a)
            approx["coleman_a"] = wvg::to_fixed(*res.report.coleman_a, *decimal);
        j["approximate"] = std::move(approx);
    }
    std::cout << j.dump(2) << '\n';
}

void print_csv_report(const wvg::WeightedGame& game, const wvg::ComputeResult& res, std::optional<std::size_t> decimal)
{
    const auto weights = game.caller_weights();
    const auto& r = res.report;
    std::cout << "player,weight,swings,banzhaf,prob_banzhaf";
    if (decimal)
        std::cout << ",banzhaf_approx,prob_banzhaf_approx";
    std::cout << '\n';
    for (std::size_t i = 0; i < weights.size(); ++i) {
        std::cout << i + 1 << ',' << numeral(weights[i]) << ',' << r.swings[i] << ','
                  << wvg::to_fraction_string(r.banzhaf[i]) << ',' << wvg::to_fraction_string(r.prob_banzhaf[i]);
        if (decimal)
            std::cout << ',' << wvg::to_fixed(r.banzhaf[i], *decimal) << ','
                      << wvg::to_fixed(r.prob_banzhaf[i], *decimal);
        std::cout << '\n';
    }
}

void print_table_report(const wvg::WeightedGame& game, const wvg::ComputeResult& res, std::optional<std::size_t> decimal)
{
    const auto weights = game.caller_weights();
    const auto& r = res.report;
    std::vector<std::vector<std::string>> rows{{"player", "weight", "swings", "banzhaf", "prob_banzhaf"}};
    if (decimal)
        rows[0].push_back("banzhaf~");
    for (std::size_t i = 0; i < weights.size(); ++i) {
        rows.push_back({std::to_string(i + 1), numeral(weights[i]), r.swings[i].str(),
                        wvg::to_fraction_string(r.banzhaf[i]), wvg::to_fraction_string(r.prob_banzhaf[i])});
        if (decimal)
            rows.back().push_back(wvg::to_fixed(r.banzhaf[i], *decimal));
    }
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            std::cout << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        std::cout << '\n';
    }
    std::cout << "backend: " << wvg::to_string(res.backend);
    if (res.crosscheck_backend)
        std::cout << " (crosschecked with " << wvg::to_string(*res.crosscheck_backend) << ")";
    std::cout << "\ntotal swings: " << r.total_swings << '\n';
    if (r.winning_count)
        std::cout << "winning coalitions: " << *r.winning_count << "\ncoleman A: "
                  << wvg::to_fraction_string(*r.coleman_a) << '\n';
}

} // namespace

namespace wvg {

int run_cli(int argc, char** argv)
{
    CLI::App app{"Exact Banzhaf power in weighted voting games"};
    app.require_subcommand(1);

    std::string input;
    std::string backend_name, format = "json";
    bool crosscheck = false;
    std::optional<std::size_t> decimal;
    std::size_t brute_cap = wvg::default_brute_force_cap;
    std::string max_cost;

    auto* compute = app.add_subcommand("compute", "Banzhaf indices of a game read from a file or stdin");
    compute->add_option("input", input, "game file, or - for stdin")->required();
    compute->add_option("--backend", backend_name, "force a backend (dictator, singleton, unanimity, equal, "
                                                   "one_distinct, unbalanced, two_value, k_value, dp, gf, brute)");
    compute->add_flag("--crosscheck", crosscheck, "run a second backend and require identical swings");
    compute->add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    compute->add_option("--decimal", decimal, "also print approximate decimals with N digits");
    compute->add_option("--brute-cap", brute_cap, "largest n for brute-force enumeration");
    compute->add_option("--max-cost", max_cost, "work limit for planned backends");

    auto* classify = app.add_subcommand("classify", "structural classes and the dispatch plan of a game");
    classify->add_option("input", input, "game file, or - for stdin")->required();

    auto* gen = app.add_subcommand("gen", "generate a game");
    gen->require_subcommand(1);
    std::string gen_format = "text";
    gen->add_option("--format", gen_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    std::size_t m = 0;
    auto* gen3 = gen->add_subcommand("3game", "2m players with paired weights 3^j");
    gen3->add_option("--m", m, "number of pairs")->required();
    std::vector<std::int64_t> z;
    std::int64_t target = 0;
    auto* genred = gen->add_subcommand("reduction", "game from a SUBSET SUM instance (unit player first)");
    genred->add_option("--z", z, "items, comma separated")->required()->delimiter(',');
    genred->add_option("--t", target, "target")->required();
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string shape = "general";
    std::int64_t max_weight = 30;
    auto* genrand = gen->add_subcommand("random", "seeded random game");
    genrand->add_option("--n", n, "players")->required();
    genrand->add_option("--shape", shape, "general, two_value, k_value:K, geometric:R, unbalanced");
    genrand->add_option("--seed", seed, "seed");
    genrand->add_option("--max-weight", max_weight, "largest weight");

    std::string suite;
    auto* bench = app.add_subcommand("bench", "time backends on a size ladder, CSV output");
    bench->add_option("--suite", suite, "k_value, dp, gf or all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_invalid_input;
    }

    try {
        if (compute->parsed()) {
            const auto game = wvg::parse_game(read_input(input));
            wvg::ComputeOptions opts;
            if (!backend_name.empty()) {
                opts.backend = wvg::parse_backend(backend_name);
                if (!opts.backend)
                    throw wvg::invalid_game("unknown backend '" + backend_name + "'");
            }
            opts.crosscheck = crosscheck;
            opts.brute_force_cap = brute_cap;
            if (!max_cost.empty()) {
                const auto cost = wvg::parse_decimal(max_cost);
                if (!wvg::is_integer(cost) || cost < 0)
                    throw wvg::invalid_game("--max-cost must be a nonnegative integer");
                opts.max_cost = wvg::numerator_of(cost);
            }
            const auto res = wvg::compute(game, opts);
            if (format == "json")
                print_json_report(game, res, decimal);
            else if (format == "csv")
                print_csv_report(game, res, decimal);
            else
                print_table_report(game, res, decimal);
        } else if (classify->parsed()) {
            const auto game = wvg::parse_game(read_input(input));
            const auto profile = wvg::detect_classes(game);
            nlohmann::json j;
            j["classes"] = wvg::to_json(profile, game.label_map());
            try {
                const auto p = wvg::plan(game, profile);
                nlohmann::json steps = nlohmann::json::array();
                for (const auto& s : p.rationale)
                    steps.push_back({{"check", s.check}, {"applies", s.outcome}, {"note", s.note}});
                j["plan"] = {{"backend", std::string(wvg::to_string(p.chosen_backend))},
                             {"cost_estimate", p.cost_estimate.str()},
                             {"rationale", std::move(steps)}};
            } catch (const wvg::no_backend& e) {
                j["plan"] = {{"backend", nullptr}, {"error", e.what()}, {"hint", e.hint()}};
            }
            std::cout << j.dump(2) << '\n';
        } else if (gen->parsed()) {
            std::optional<wvg::WeightedGame> game;
            if (gen3->parsed())
                game = wvg::gen_3game(m);
            else if (genred->parsed())
                game = wvg::gen_reduction(wvg::SubsetSumInstance{z, target});
            else
                game = wvg::random_game(n, max_weight, seed, parse_shape(shape));
            if (gen_format == "json")
                std::cout << wvg::to_json(*game).dump() << '\n';
            else
                std::cout << wvg::to_text(*game) << '\n';
        } else if (bench->parsed()) {
            std::cout << wvg::to_csv(wvg::run_bench(suite));
        }
    } catch (const wvg::invalid_game& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const wvg::no_backend& e) {
        std::cerr << "error: " << e.what() << "\nhint: " << e.hint() << '\n';
        return exit_no_backend;
    } catch (const wvg::crosscheck_mismatch& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_mismatch;
    } catch (const wvg::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace wvg
