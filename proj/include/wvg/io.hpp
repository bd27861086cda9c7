#ifndef WVG_IO_HPP
#define WVG_IO_HPP

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "wvg/classifier.hpp"
#include "wvg/game.hpp"
#include "wvg/report.hpp"

namespace wvg {

namespace detail {

inline std::string_view trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline Rational json_numeral(const nlohmann::json& v)
{
    if (v.is_string())
        return parse_decimal(trim(v.get_ref<const std::string&>()));
    if (v.is_number_integer())
        return parse_decimal(v.dump());
    throw invalid_game("numerals must be integers or decimal strings, got " + v.dump());
}

inline WeightedGame parse_json_game(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_game(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("quota") || !doc.contains("weights") || !doc["weights"].is_array())
        throw invalid_game("JSON game needs \"quota\" and a \"weights\" array");
    std::vector<Weight> weights;
    for (const auto& w : doc["weights"])
        weights.push_back(json_numeral(w));
    return WeightedGame::from_weights(json_numeral(doc["quota"]), std::move(weights));
}

inline WeightedGame parse_text_game(std::string_view text)
{
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
        text = trim(text.substr(1, text.size() - 2));
    const auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw invalid_game("expected 'q; w1, w2, ...'");
    if (text.find(';', semi + 1) != std::string_view::npos)
        throw invalid_game("more than one ';'");
    const Rational quota = parse_decimal(trim(text.substr(0, semi)));
    std::vector<Weight> weights;
    std::string_view rest = trim(text.substr(semi + 1));
    if (rest.empty())
        throw invalid_game("empty player list");
    for (;;) {
        const auto comma = rest.find(',');
        weights.push_back(parse_decimal(trim(rest.substr(0, comma))));
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    return WeightedGame::from_weights(quota, std::move(weights));
}

inline std::string exact_numeral(const Rational& x)
{
    auto s = to_exact_decimal(x);
    if (!s)
        throw precondition_error(to_fraction_string(x) + " has no exact decimal form");
    return *s;
}

} // namespace detail

/// Reads `q; w1, w2, ...` (optionally bracketed) or a JSON object
/// {"quota": ..., "weights": [...]} with integer or decimal-string numerals.
inline WeightedGame parse_game(std::string_view text)
{
    text = detail::trim(text);
    if (text.empty())
        throw invalid_game("empty input");
    return text.front() == '{' ? detail::parse_json_game(text) : detail::parse_text_game(text);
}

/// Text form in caller order. Numerals must have exact decimal expansions.
inline std::string to_text(const WeightedGame& game)
{
    std::string s = detail::exact_numeral(game.quota()) + ";";
    const auto w = game.caller_weights();
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? ", " : " ") + detail::exact_numeral(w[i]);
    return s;
}

inline nlohmann::json to_json(const WeightedGame& game)
{
    nlohmann::json weights = nlohmann::json::array();
    for (const auto& w : game.caller_weights())
        weights.push_back(detail::exact_numeral(w));
    return {{"quota", detail::exact_numeral(game.quota())}, {"weights", std::move(weights)}};
}

/// Stable field names; dictator_index is the caller's 1-based player number.
inline nlohmann::json to_json(const ClassProfile& p, std::span<const std::size_t> label_map = {})
{
    nlohmann::json j;
    j["all_equal"] = p.all_equal;
    if (p.dictator_index)
        j["dictator_index"] = (label_map.empty() ? *p.dictator_index : label_map[*p.dictator_index]) + 1;
    else
        j["dictator_index"] = nullptr;
    j["singleton_region"] = p.singleton_region;
    j["unanimity_region"] = p.unanimity_region;
    j["distinct_value_count"] = p.distinct_value_count;
    j["max_geometric_ratio"] = p.max_geometric_ratio ? nlohmann::json(to_fraction_string(*p.max_geometric_ratio))
                                                     : nlohmann::json(nullptr);
    j["min_unbalance_order"] = p.min_unbalance_order ? nlohmann::json(*p.min_unbalance_order)
                                                     : nlohmann::json(nullptr);
    j["is_sequential"] = p.is_sequential;
    j["dominance"] = p.dominance;
    j["alt_dominance"] = p.alt_dominance;
    j["all_integer"] = p.all_integer;
    j["is_proper"] = p.is_proper;
    return j;
}

/// Report keys: swings, total_swings, banzhaf, prob_banzhaf, winning_count,
/// coleman_a. Integers are decimal strings, rationals "num/den" strings.
inline nlohmann::json to_json(const PowerReport& r)
{
    nlohmann::json swings = nlohmann::json::array(), banzhaf = nlohmann::json::array(),
                   prob = nlohmann::json::array();
    for (std::size_t i = 0; i < r.swings.size(); ++i) {
        swings.push_back(r.swings[i].str());
        banzhaf.push_back(to_fraction_string(r.banzhaf[i]));
        prob.push_back(to_fraction_string(r.prob_banzhaf[i]));
    }
    nlohmann::json j;
    j["swings"] = std::move(swings);
    j["total_swings"] = r.total_swings.str();
    j["banzhaf"] = std::move(banzhaf);
    j["prob_banzhaf"] = std::move(prob);
    j["winning_count"] = r.winning_count ? nlohmann::json(r.winning_count->str()) : nlohmann::json(nullptr);
    j["coleman_a"] = r.coleman_a ? nlohmann::json(to_fraction_string(*r.coleman_a)) : nlohmann::json(nullptr);
    return j;
}

} // namespace wvg

#endif // WVG_IO_HPP
