#ifndef WVG_BENCH_HPP
#define WVG_BENCH_HPP

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "wvg/dispatch.hpp"
#include "wvg/instances.hpp"

namespace wvg {

struct BenchRow {
    std::string suite;
    std::string backend;
    std::size_t n = 0;
    std::string size;        // the laddered parameter, e.g. "q=10000"
    std::size_t terms = 0;   // C for generating functions, 0 otherwise
    BigInt cost_estimate;
    double wall_ms = 0;
};

inline std::vector<std::string> bench_suites() { return {"k_value", "dp", "gf"}; }

namespace detail {

inline double time_ms(const std::function<void()>& fn)
{
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

/// k = 3 classes of weights 5, 3, 2 with near-equal sizes and quota at half the total.
inline WeightedGame balanced_three_class_game(std::size_t n)
{
    const std::size_t a = (n + 2) / 3, b = (n + 1) / 3, c = n / 3;
    const CompressedGame g(Rational((5 * a + 3 * b + 2 * c + 1) / 2), {{a, 5}, {b, 3}, {c, 2}});
    return g.expand();
}

/// n players with weights in [1, 4q/n] and quota q.
inline WeightedGame dp_ladder_game(std::size_t n, std::int64_t q, std::uint64_t seed)
{
    const auto max_weight = std::max<std::int64_t>(4 * q / static_cast<std::int64_t>(n), 1);
    for (std::uint64_t s = seed;; ++s) {
        WeightedGame g = random_game(n, max_weight, s);
        if (g.total_weight() >= q)
            return with_quota(g, Rational(q));
    }
}

} // namespace detail

/// Timing rows for one named suite ("k_value", "dp", "gf", or "all").
/// Observational only.
inline std::vector<BenchRow> run_bench(const std::string& suite)
{
    std::vector<BenchRow> rows;
    const ComputeOptions opts;
    auto row_for = [&](const std::string& name, Backend backend, const WeightedGame& g, std::string size,
                       std::size_t terms, const std::function<void()>& fn) {
        const auto profile = detect_classes(g);
        BenchRow r{name, std::string(to_string(backend)), g.size(), std::move(size), terms,
                   assess(g, profile, backend, opts, false).cost, 0.0};
        r.wall_ms = detail::time_ms(fn);
        rows.push_back(std::move(r));
    };

    if (suite == "k_value" || suite == "all") {
        for (std::size_t n : {30, 100, 300, 1000}) {
            const auto g = detail::balanced_three_class_game(n);
            row_for("k_value", Backend::k_value, g, "n=" + std::to_string(n), 0,
                    [&] { (void)k_value_swings(compress(g)); });
        }
    }
    if (suite == "dp" || suite == "all") {
        for (std::int64_t q : {1'000, 10'000, 100'000}) {
            const auto g = detail::dp_ladder_game(100, q, 2024);
            row_for("dp", Backend::dp, g, "q=" + std::to_string(q), 0, [&] { (void)dp_swings(g); });
        }
    }
    if (suite == "gf" || suite == "all") {
        for (std::size_t m = 4; m <= 10; ++m) {
            const auto g = gen_3game(m);
            row_for("gf", Backend::gf, g, "m=" + std::to_string(m), gf_term_count(g), [&] { (void)gf_swings(g); });
        }
    }
    if (rows.empty())
        throw precondition_error("unknown bench suite '" + suite + "'");
    return rows;
}

inline std::string to_csv(const std::vector<BenchRow>& rows)
{
    std::ostringstream os;
    os << "suite,backend,n,size,terms,cost_estimate,wall_ms\n";
    for (const auto& r : rows)
        os << r.suite << ',' << r.backend << ',' << r.n << ',' << r.size << ',' << r.terms << ','
           << r.cost_estimate << ',' << r.wall_ms << '\n';
    return os.str();
}

} // namespace wvg

#endif // WVG_BENCH_HPP
