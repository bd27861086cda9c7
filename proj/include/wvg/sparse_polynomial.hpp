#ifndef WVG_SPARSE_POLYNOMIAL_HPP
#define WVG_SPARSE_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "wvg/error.hpp"
#include "wvg/numeric.hpp"

namespace wvg {

/// Polynomial with nonnegative integer exponents and nonzero coefficients,
/// stored as (exponent, coefficient) pairs in increasing exponent order.
template <class Coeff = BigInt>
class SparsePolynomial {
public:
    using term_type = std::pair<std::int64_t, Coeff>;

    /// The constant 1.
    SparsePolynomial() : terms_{{0, Coeff(1)}} {}

    explicit SparsePolynomial(std::vector<term_type> terms) : terms_(std::move(terms))
    {
        std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<term_type> merged;
        for (auto& t : terms_) {
            if (t.first < 0)
                throw precondition_error("negative exponent");
            if (!merged.empty() && merged.back().first == t.first)
                merged.back().second += t.second;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const auto& t) { return t.second == 0; });
        terms_ = std::move(merged);
    }

    const std::vector<term_type>& terms() const noexcept { return terms_; }

    /// Number of nonzero coefficients.
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    std::int64_t max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

    Coeff coefficient(std::int64_t e) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const auto& t, std::int64_t x) { return t.first < x; });
        return (it != terms_.end() && it->first == e) ? it->second : Coeff(0);
    }

    /// Sum of coefficients with lo <= exponent <= hi.
    Coeff range_sum(std::int64_t lo, std::int64_t hi) const
    {
        Coeff s = 0;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), lo,
                                   [](const auto& t, std::int64_t x) { return t.first < x; });
        for (; it != terms_.end() && it->first <= hi; ++it)
            s += it->second;
        return s;
    }

    /// Value at x = 1.
    Coeff sum() const
    {
        Coeff s = 0;
        for (const auto& t : terms_)
            s += t.second;
        return s;
    }

    /// *this *= (1 + x^w), by merging the polynomial with its shift.
    SparsePolynomial& multiply_binomial(std::int64_t w)
    {
        if (w < 0)
            throw precondition_error("negative exponent");
        if (w == 0) {
            for (auto& t : terms_)
                t.second += t.second;
            return *this;
        }
        std::vector<term_type> out;
        out.reserve(terms_.size() * 2);
        std::size_t a = 0, b = 0;
        const std::size_t n = terms_.size();
        while (a < n || b < n) {
            if (b == n || (a < n && terms_[a].first < terms_[b].first + w)) {
                out.push_back(terms_[a++]);
            } else if (a == n || terms_[b].first + w < terms_[a].first) {
                out.emplace_back(terms_[b].first + w, terms_[b].second);
                ++b;
            } else {
                out.emplace_back(terms_[a].first, terms_[a].second + terms_[b].second);
                ++a;
                ++b;
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    /// *this /= (1 + x^w). Throws if the division is not exact.
    SparsePolynomial& divide_binomial(std::int64_t w)
    {
        if (w < 0)
            throw precondition_error("negative exponent");
        if (w == 0) {
            for (auto& t : terms_) {
                if (t.second % 2 != 0)
                    throw precondition_error("polynomial is not divisible by 2");
                t.second /= 2;
            }
            return *this;
        }
        // q_e = p_e - q_{e-w}, read from low exponents upward.
        std::vector<term_type> quotient;
        std::size_t back = 0;
        for (const auto& [e, c] : terms_) {
            while (back < quotient.size() && quotient[back].first + w < e)
                ++back;
            Coeff v = c;
            if (back < quotient.size() && quotient[back].first + w == e) {
                if (quotient[back].second > v)
                    throw precondition_error("polynomial is not divisible by (1 + x^w)");
                v -= quotient[back].second;
            }
            if (v != 0)
                quotient.emplace_back(e, std::move(v));
        }
        SparsePolynomial result;
        result.terms_ = std::move(quotient);
        SparsePolynomial check = result;
        if (check.multiply_binomial(w).terms_ != terms_)
            throw precondition_error("polynomial is not divisible by (1 + x^w)");
        terms_ = std::move(result.terms_);
        return *this;
    }

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    std::vector<term_type> terms_;
};

} // namespace wvg

#endif // WVG_SPARSE_POLYNOMIAL_HPP
