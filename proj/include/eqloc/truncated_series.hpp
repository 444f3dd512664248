#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eqloc/errors.hpp"
#include "eqloc/lin_factored_rational.hpp"
#include "eqloc/polynomial.hpp"

namespace eqloc {

/*
 * Truncated polynomial in one nilpotent generator h over a coefficient ring C:
 * the cohomology of a fixed component of complex dimension m, with h^{m+1} = 0.
 * coefficient(k) is the coefficient of h^k; length() is m + 1.
 *
 * C is Polynomial for restricted classes and LinFactoredRational for
 * inverse-Euler data; both supply +, *, zero_like and to_string.
 */
template <class C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw Error("truncated series needs at least the h^0 coefficient");
    }

    /// The zero series with m+1 slots shaped like `prototype`.
    static TruncatedSeries zeros(std::size_t m, const C& prototype) {
        return TruncatedSeries(std::vector<C>(m + 1, zero_like(prototype)));
    }

    std::size_t length() const { return coeffs_.size(); }
    std::size_t truncation_order() const { return coeffs_.size() - 1; }
    const C& coefficient(std::size_t k) const { return coeffs_.at(k); }
    const std::vector<C>& coefficients() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& other) const {
        check_length(other);
        std::vector<C> out;
        out.reserve(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            out.push_back(coeffs_[k] + other.coeffs_[k]);
        return TruncatedSeries(std::move(out));
    }

    TruncatedSeries operator*(const TruncatedSeries& other) const {
        check_length(other);
        std::vector<C> out(coeffs_.size(), zero_like(coeffs_.front()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
                out[i + j] = out[i + j] + coeffs_[i] * other.coeffs_[j];
        return TruncatedSeries(std::move(out));
    }

    TruncatedSeries pow(std::uint64_t k, const C& one) const {
        TruncatedSeries acc = zeros(truncation_order(), coeffs_.front());
        acc.coeffs_[0] = one;
        TruncatedSeries base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return acc;
    }

    bool operator==(const TruncatedSeries&) const = default;

    /// "c0 + (c1)*h + ... + (cm)*h^m" in the canonical coefficient format.
    std::string to_string() const {
        std::string out = coeffs_[0].to_string();
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            out += " + (" + coeffs_[k].to_string() + ")*h";
            if (k > 1) out += '^' + std::to_string(k);
        }
        return out;
    }

private:
    void check_length(const TruncatedSeries& other) const {
        if (other.coeffs_.size() != coeffs_.size())
            throw Error("truncated series of different lengths");
    }

    std::vector<C> coeffs_;
};

/// Lifts polynomial coefficients into the fraction ring.
inline TruncatedSeries<LinFactoredRational> lift(const TruncatedSeries<Polynomial>& s) {
    std::vector<LinFactoredRational> out;
    out.reserve(s.length());
    for (const auto& c : s.coefficients()) out.emplace_back(c);
    return TruncatedSeries<LinFactoredRational>(std::move(out));
}

}  // namespace eqloc
