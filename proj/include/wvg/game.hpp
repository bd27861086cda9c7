#ifndef WVG_GAME_HPP
#define WVG_GAME_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "wvg/error.hpp"
#include "wvg/numeric.hpp"

namespace wvg {

/**
 * A weighted voting game [q; w_1, ..., w_n].
 *
 * Weights are held in canonical non-increasing order. `label_map()[p]` is the
 * caller's (0-based) index of the player sitting at canonical position p.
 * Construction enforces 0 < q <= sum(w), nonnegative weights and n >= 1, so
 * every instance has v(empty) = 0 and v(N) = 1.
 */
class WeightedGame {
public:
    /// Builds a game from weights in caller order; sorts them (stably) and
    /// records the permutation.
    static WeightedGame from_weights(Rational quota, std::vector<Weight> weights)
    {
        if (weights.empty())
            throw invalid_game("empty player list");
        std::vector<std::size_t> order(weights.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
        std::vector<Weight> sorted;
        sorted.reserve(weights.size());
        for (std::size_t idx : order)
            sorted.push_back(std::move(weights[idx]));
        return WeightedGame(std::move(quota), std::move(sorted), std::move(order));
    }

    /// Builds a game whose weights are already canonical; `labels` defaults to
    /// the identity.
    static WeightedGame from_canonical(Rational quota, std::vector<Weight> weights,
                                       std::vector<std::size_t> labels = {})
    {
        if (weights.empty())
            throw invalid_game("empty player list");
        if (labels.empty()) {
            labels.resize(weights.size());
            std::iota(labels.begin(), labels.end(), std::size_t{0});
        }
        if (!std::is_sorted(weights.begin(), weights.end(), std::greater<>{}))
            throw invalid_game("weights are not in non-increasing order");
        return WeightedGame(std::move(quota), std::move(weights), std::move(labels));
    }

    const Rational& quota() const noexcept { return quota_; }
    std::span<const Weight> weights() const noexcept { return weights_; }
    const Weight& weight(std::size_t p) const { return weights_.at(p); }
    std::span<const std::size_t> label_map() const noexcept { return labels_; }
    std::size_t size() const noexcept { return weights_.size(); }
    const Rational& total_weight() const noexcept { return total_; }

    /// Weights in the caller's original order.
    std::vector<Weight> caller_weights() const
    {
        std::vector<Weight> out(size());
        for (std::size_t p = 0; p < size(); ++p)
            out[labels_[p]] = weights_[p];
        return out;
    }

    bool all_integer() const
    {
        return is_integer(quota_)
            && std::all_of(weights_.begin(), weights_.end(), [](const Weight& w) { return is_integer(w); });
    }

    bool has_zero_weight() const { return weights_.back() == 0; }

    friend bool operator==(const WeightedGame&, const WeightedGame&) = default;

private:
    WeightedGame(Rational quota, std::vector<Weight> weights, std::vector<std::size_t> labels)
        : quota_(std::move(quota)), weights_(std::move(weights)), labels_(std::move(labels))
    {
        for (const auto& w : weights_) {
            if (w < 0)
                throw invalid_game("negative weight " + to_fraction_string(w));
            total_ += w;
        }
        if (quota_ <= 0)
            throw invalid_game("quota must be positive");
        if (quota_ > total_)
            throw invalid_game("quota exceeds total weight: no winning coalition exists");
        if (labels_.size() != weights_.size())
            throw invalid_game("label map size does not match player count");
        std::vector<bool> seen(labels_.size(), false);
        for (std::size_t l : labels_) {
            if (l >= labels_.size() || seen[l])
                throw invalid_game("label map is not a permutation");
            seen[l] = true;
        }
    }

    Rational quota_;
    std::vector<Weight> weights_;
    std::vector<std::size_t> labels_;
    Rational total_{0};
};

/// One run of equal weights in a compressed game.
struct WeightClass {
    std::size_t count = 0;
    Weight weight;

    friend bool operator==(const WeightClass&, const WeightClass&) = default;
};

/**
 * [q; (n_1, w_1), ..., (n_k, w_k)] with strictly decreasing distinct weights.
 *
 * Backends that work on classes report swings in expansion order: class c
 * occupies canonical positions [offset(c), offset(c) + n_c).
 */
class CompressedGame {
public:
    CompressedGame(Rational quota, std::vector<WeightClass> classes)
        : quota_(std::move(quota)), classes_(std::move(classes))
    {
        if (classes_.empty())
            throw invalid_game("empty class list");
        Rational total = 0;
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            if (classes_[c].count == 0)
                throw invalid_game("weight class with zero members");
            if (classes_[c].weight < 0)
                throw invalid_game("negative weight " + to_fraction_string(classes_[c].weight));
            if (c > 0 && !(classes_[c].weight < classes_[c - 1].weight))
                throw invalid_game("class weights must be strictly decreasing");
            total += classes_[c].weight * classes_[c].count;
            players_ += classes_[c].count;
        }
        if (quota_ <= 0)
            throw invalid_game("quota must be positive");
        if (quota_ > total)
            throw invalid_game("quota exceeds total weight: no winning coalition exists");
    }

    const Rational& quota() const noexcept { return quota_; }
    std::span<const WeightClass> classes() const noexcept { return classes_; }
    std::size_t class_count() const noexcept { return classes_.size(); }
    std::size_t size() const noexcept { return players_; }

    std::size_t offset(std::size_t c) const
    {
        std::size_t off = 0;
        for (std::size_t i = 0; i < c; ++i)
            off += classes_[i].count;
        return off;
    }

    WeightedGame expand() const
    {
        std::vector<Weight> w;
        w.reserve(players_);
        for (const auto& cls : classes_)
            w.insert(w.end(), cls.count, cls.weight);
        return WeightedGame::from_canonical(quota_, std::move(w));
    }

    friend bool operator==(const CompressedGame&, const CompressedGame&) = default;

private:
    Rational quota_;
    std::vector<WeightClass> classes_;
    std::size_t players_ = 0;
};

/// Run-length encoding of the canonical weight sequence.
inline CompressedGame compress(const WeightedGame& game)
{
    std::vector<WeightClass> classes;
    for (const auto& w : game.weights()) {
        if (!classes.empty() && classes.back().weight == w)
            ++classes.back().count;
        else
            classes.push_back({1, w});
    }
    return CompressedGame(game.quota(), std::move(classes));
}

/// Multiplies the quota and every weight by c > 0. The set of winning
/// coalitions is unchanged.
inline WeightedGame scale_game(const WeightedGame& game, const Rational& c)
{
    if (c <= 0)
        throw precondition_error("scale factor must be positive");
    std::vector<Weight> w(game.weights().begin(), game.weights().end());
    for (auto& x : w)
        x *= c;
    return WeightedGame::from_canonical(game.quota() * c, std::move(w),
                                        {game.label_map().begin(), game.label_map().end()});
}

/// Least common denominator of the quota and all weights.
inline BigInt common_denominator(const WeightedGame& game)
{
    BigInt l = denominator_of(game.quota());
    for (const auto& w : game.weights())
        l = boost::multiprecision::lcm(l, denominator_of(w));
    return l;
}

/// The integer game obtained by scaling with the least common denominator.
inline WeightedGame integer_rescale(const WeightedGame& game)
{
    BigInt l = common_denominator(game);
    return l == 1 ? game : scale_game(game, Rational(l));
}

/// Same players, different quota (validated).
inline WeightedGame with_quota(const WeightedGame& game, Rational quota)
{
    return WeightedGame::from_canonical(std::move(quota), {game.weights().begin(), game.weights().end()},
                                        {game.label_map().begin(), game.label_map().end()});
}

/// Canonical integer weights and quota, for backends that need machine or
/// big-integer arithmetic. The game must be integral.
template <class Int>
struct IntegerForm {
    Int quota;
    std::vector<Int> weights;
    Int total;
};

inline IntegerForm<BigInt> integer_form(const WeightedGame& game)
{
    if (!game.all_integer())
        throw precondition_error("game has non-integer quota or weights; rescale first");
    IntegerForm<BigInt> f{numerator_of(game.quota()), {}, 0};
    f.weights.reserve(game.size());
    for (const auto& w : game.weights()) {
        f.weights.push_back(numerator_of(w));
        f.total += f.weights.back();
    }
    return f;
}

/// True when the total weight leaves headroom for int64 partial sums.
inline bool fits_machine_words(const IntegerForm<BigInt>& f)
{
    return f.total < (BigInt(1) << 61);
}

inline IntegerForm<std::int64_t> narrow_form(const IntegerForm<BigInt>& f)
{
    IntegerForm<std::int64_t> out{narrow<std::int64_t>(f.quota), {}, narrow<std::int64_t>(f.total)};
    out.weights.reserve(f.weights.size());
    for (const auto& w : f.weights)
        out.weights.push_back(narrow<std::int64_t>(w));
    return out;
}

} // namespace wvg

#endif // WVG_GAME_HPP
