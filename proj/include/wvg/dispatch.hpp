#ifndef WVG_DISPATCH_HPP
#define WVG_DISPATCH_HPP

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wvg/classifier.hpp"
#include "wvg/closed_form.hpp"
#include "wvg/counting.hpp"
#include "wvg/report.hpp"

namespace wvg {

/// Declaration order is the tie-break order when cost estimates are equal.
enum class Backend { dictator, singleton, unanimity, equal, one_distinct, unbalanced, two_value, k_value, dp, gf, brute };

inline constexpr std::array all_backends{Backend::dictator,   Backend::singleton,    Backend::unanimity,
                                         Backend::equal,      Backend::one_distinct, Backend::unbalanced,
                                         Backend::two_value,  Backend::k_value,      Backend::dp,
                                         Backend::gf,         Backend::brute};

inline std::string_view to_string(Backend b)
{
    switch (b) {
    case Backend::dictator: return "dictator";
    case Backend::singleton: return "singleton";
    case Backend::unanimity: return "unanimity";
    case Backend::equal: return "equal";
    case Backend::one_distinct: return "one_distinct";
    case Backend::unbalanced: return "unbalanced";
    case Backend::two_value: return "two_value";
    case Backend::k_value: return "k_value";
    case Backend::dp: return "dp";
    case Backend::gf: return "gf";
    case Backend::brute: return "brute";
    }
    return "?";
}

inline std::optional<Backend> parse_backend(std::string_view name)
{
    for (Backend b : all_backends)
        if (to_string(b) == name)
            return b;
    return std::nullopt;
}

struct ComputeOptions {
    /// Skip planning and run this backend (its preconditions are still checked).
    std::optional<Backend> backend;
    /// Run a second applicable backend and require identical results.
    bool crosscheck = false;
    std::optional<Backend> crosscheck_backend;

    std::size_t brute_force_cap = default_brute_force_cap;
    /// Planned backends whose cost estimate exceeds this are not applicable.
    BigInt max_cost = BigInt(100'000'000'000LL);
    /// Size guard on the (rescaled) quota for the DP table.
    std::int64_t max_dp_quota = 100'000'000;
    DpMode dp_mode = DpMode::recompute;
    GfMode gf_mode = GfMode::recompute;
};

struct PlanStep {
    std::string check;
    bool outcome = false;
    std::string note;
};

struct DispatchPlan {
    Backend chosen_backend = Backend::brute;
    std::vector<PlanStep> rationale;
    BigInt cost_estimate = 0;
};

/// Whether one backend can run on a game, and what it would cost.
struct Applicability {
    bool applies = false;
    std::string reason;
    BigInt cost = 0;
};

namespace detail {

struct ScaledInfo {
    BigInt quota;
    BigInt total;
};

inline ScaledInfo scaled_info(const WeightedGame& game)
{
    const BigInt l = common_denominator(game);
    return {numerator_of(game.quota() * l), numerator_of(game.total_weight() * l)};
}

inline const BigInt& machine_word_limit()
{
    static const BigInt limit = BigInt(1) << 61;
    return limit;
}

} // namespace detail

/// Checks one backend's preconditions. With `enforce_cost`, the configured
/// work limit also applies (forced backends skip it).
inline Applicability assess(const WeightedGame& game, const ClassProfile& profile, Backend backend,
                            const ComputeOptions& opts, bool enforce_cost = true)
{
    const std::size_t n = game.size();
    const BigInt nn = n;
    auto yes = [](BigInt cost, std::string why = {}) { return Applicability{true, std::move(why), std::move(cost)}; };
    auto no = [](std::string why) { return Applicability{false, std::move(why), 0}; };
    auto within = [&](BigInt cost, const char* what) {
        if (enforce_cost && cost > opts.max_cost)
            return no(std::string(what) + " cost " + cost.str() + " exceeds limit " + opts.max_cost.str());
        return yes(std::move(cost));
    };

    switch (backend) {
    case Backend::dictator:
        return profile.dictator_index ? yes(1) : no("no dictator");
    case Backend::singleton:
        return profile.singleton_region ? yes(1) : no("quota above smallest weight");
    case Backend::unanimity:
        return profile.unanimity_region ? yes(1) : no("quota not above sum(w) - w_n");
    case Backend::equal:
        return profile.all_equal ? yes(1) : no("weights differ");
    case Backend::one_distinct: {
        if (profile.distinct_value_count != 2)
            return no("not exactly two weight values");
        const auto cls = compress(game);
        const auto& c = cls.classes();
        if (c[0].count != 1)
            return no("more than one player carries the larger weight");
        if (c[1].weight <= 0 || !(c[1].weight < game.quota()))
            return no("needs 0 < w_b < q");
        return yes(nn);
    }
    case Backend::unbalanced:
        return profile.unbalanced() ? yes(nn) : no("not unbalanced");
    case Backend::two_value:
        if (profile.distinct_value_count != 2)
            return no("not exactly two weight values");
        if (game.has_zero_weight())
            return no("zero weight present");
        return yes(nn * nn);
    case Backend::k_value: {
        if (game.has_zero_weight())
            return no("zero weight present");
        BigInt cost = profile.distinct_value_count;
        const auto compressed = compress(game);
        for (const auto& c : compressed.classes())
            cost *= c.count + 1;
        return within(std::move(cost), "k-value");
    }
    case Backend::dp: {
        const auto s = detail::scaled_info(game);
        if (s.total >= detail::machine_word_limit())
            return no("rescaled weights exceed 2^61");
        if (s.quota > opts.max_dp_quota)
            return no("rescaled quota " + s.quota.str() + " exceeds DP budget " + std::to_string(opts.max_dp_quota));
        return within(nn * nn * s.quota, "DP");
    }
    case Backend::gf: {
        const auto s = detail::scaled_info(game);
        if (s.total >= detail::machine_word_limit())
            return no("rescaled weights exceed 2^61");
        return within(nn * nn * (s.total + 1), "GF");
    }
    case Backend::brute:
        if (n > opts.brute_force_cap)
            return no("n = " + std::to_string(n) + " over brute-force cap " + std::to_string(opts.brute_force_cap));
        return yes(pow2(n) * nn);
    }
    return no("unknown backend");
}

/// Cheapest applicable backend; brute force only when nothing else applies.
inline DispatchPlan plan(const WeightedGame& game, const ClassProfile& profile, const ComputeOptions& opts = {})
{
    DispatchPlan p;
    std::optional<Backend> best;
    for (Backend b : all_backends) {
        if (b == Backend::brute)
            continue;
        Applicability a = assess(game, profile, b, opts);
        p.rationale.push_back({std::string(to_string(b)), a.applies,
                               a.applies ? "cost " + a.cost.str() : a.reason});
        if (a.applies && (!best || a.cost < p.cost_estimate)) {
            best = b;
            p.cost_estimate = a.cost;
        }
    }
    if (!best) {
        Applicability a = assess(game, profile, Backend::brute, opts);
        p.rationale.push_back({"brute", a.applies, a.applies ? "cost " + a.cost.str() : a.reason});
        if (!a.applies)
            throw no_backend("no applicable backend for this game",
                             "rescale to moderate integer weights, raise --max-cost, or raise the brute-force cap");
        best = Backend::brute;
        p.cost_estimate = a.cost;
    }
    p.chosen_backend = *best;
    return p;
}

/// Runs one backend after re-validating its preconditions.
inline SwingResult run_backend(const WeightedGame& game, const ClassProfile& profile, Backend backend,
                               const ComputeOptions& opts = {})
{
    const Applicability a = assess(game, profile, backend, opts, false);
    if (!a.applies)
        throw no_backend("backend '" + std::string(to_string(backend)) + "' does not apply: " + a.reason,
                         "let the planner choose a backend");
    switch (backend) {
    case Backend::dictator: return dictator_swings(game);
    case Backend::singleton: return singleton_region_swings(game);
    case Backend::unanimity: return unanimity_region_swings(game);
    case Backend::equal: return equal_weight_swings(game.size(), game.weight(0), game.quota());
    case Backend::one_distinct: return one_distinct_swings(compress(game));
    case Backend::unbalanced: return unbalanced_swings(game);
    case Backend::two_value: {
        const auto c = compress(game);
        return {two_value_swings(c), k_value_winning_count(c)};
    }
    case Backend::k_value: {
        const auto c = compress(game);
        return {k_value_swings(c), k_value_winning_count(c)};
    }
    case Backend::dp: {
        const auto scaled = integer_rescale(game);
        const DpOptions dp{opts.dp_mode, opts.max_dp_quota};
        return {dp_swings(scaled, dp), dp_winning_count(scaled, dp)};
    }
    case Backend::gf: return gf_swings(integer_rescale(game), GfOptions{opts.gf_mode});
    case Backend::brute: return brute_force_swings(game, opts.brute_force_cap);
    }
    throw std::logic_error("unhandled backend");
}

struct ComputeResult {
    PowerReport report;
    Backend backend = Backend::brute;
    std::optional<Backend> crosscheck_backend;
    DispatchPlan plan;
    ClassProfile profile;
};

namespace detail {

inline std::string describe(const SwingResult& r)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < r.swings.size(); ++i)
        os << (i ? "," : "") << r.swings[i];
    os << ")";
    if (r.winning_count)
        os << " winning=" << *r.winning_count;
    return os.str();
}

} // namespace detail

/// Exact Banzhaf indices of every player, reported in caller order.
inline ComputeResult compute(const WeightedGame& game, const ComputeOptions& opts = {})
{
    ComputeResult out;
    out.profile = detect_classes(game);
    if (opts.backend) {
        out.plan.chosen_backend = *opts.backend;
        out.plan.rationale.push_back({"forced", true, std::string(to_string(*opts.backend))});
        out.plan.cost_estimate = assess(game, out.profile, *opts.backend, opts, false).cost;
    } else {
        out.plan = plan(game, out.profile, opts);
    }
    out.backend = out.plan.chosen_backend;
    SwingResult result = run_backend(game, out.profile, out.backend, opts);

    if (opts.crosscheck) {
        std::optional<Backend> second = opts.crosscheck_backend;
        if (!second) {
            BigInt best_cost;
            for (Backend b : all_backends) {
                if (b == out.backend)
                    continue;
                Applicability a = assess(game, out.profile, b, opts);
                if (a.applies && (!second || a.cost < best_cost)) {
                    second = b;
                    best_cost = a.cost;
                }
            }
        }
        if (second) {
            SwingResult other = run_backend(game, out.profile, *second, opts);
            const bool counts_agree = !result.winning_count || !other.winning_count
                || *result.winning_count == *other.winning_count;
            if (!(result.swings == other.swings) || !counts_agree)
                throw crosscheck_mismatch("crosscheck mismatch: " + std::string(to_string(out.backend)) + " "
                                          + detail::describe(result) + " vs " + std::string(to_string(*second)) + " "
                                          + detail::describe(other));
            if (!result.winning_count)
                result.winning_count = other.winning_count;
            out.crosscheck_backend = second;
        }
    }
    out.report = assemble_report(result, game.label_map());
    return out;
}

} // namespace wvg

#endif // WVG_DISPATCH_HPP
