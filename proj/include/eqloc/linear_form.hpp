#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eqloc/errors.hpp"
#include "eqloc/rational.hpp"

namespace eqloc {

/*
 * A linear form c_0*t_0 + ... + c_{r-1}*t_{r-1} over Q, with no constant
 * term. Weights of torus actions and moment-map values at fixed points both
 * live here. The zero form is representable; call sites that need a weight
 * must reject it explicitly.
 */
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(std::size_t rank) : coeffs_(rank) {}
    explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static LinearForm zero(std::size_t rank) { return LinearForm(rank); }

    /// c * t_i in a rank-r ring.
    static LinearForm variable(std::size_t rank, std::size_t i, Rational c = Rational(1)) {
        LinearForm f(rank);
        f.coeffs_.at(i) = std::move(c);
        return f;
    }

    std::size_t rank() const { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    /// Index of the first nonzero coefficient; rank() if the form is zero.
    std::size_t pivot() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return coeffs_.size();
    }

    LinearForm operator-() const {
        LinearForm r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    LinearForm operator+(const LinearForm& other) const {
        check_rank(other);
        LinearForm r(*this);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += other.coeffs_[i];
        return r;
    }

    LinearForm operator-(const LinearForm& other) const { return *this + (-other); }

    LinearForm scaled(const Rational& c) const {
        LinearForm r(*this);
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    /// {monic form, scalar s} with *this = s * monic; pivot coefficient of the
    /// monic form is +1. Throws on the zero form.
    std::pair<LinearForm, Rational> normalized() const {
        const std::size_t p = pivot();
        if (p == rank())
            throw ZeroDivisorForm("cannot normalize the zero linear form");
        Rational scale = coeffs_[p];
        LinearForm monic(*this);
        for (auto& c : monic.coeffs_) c /= scale;
        return {std::move(monic), std::move(scale)};
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != rank())
            throw RankMismatch("evaluation point has wrong length");
        Rational v(0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v += coeffs_[i] * point[i];
        return v;
    }

    /// Composition with an integer change of torus: coordinates t_i of the old
    /// rank-r_old torus are expressed in the new parameters via row i of map.
    LinearForm composed(const std::vector<std::vector<long long>>& map,
                        std::size_t new_rank) const {
        if (map.size() != rank())
            throw RankMismatch("substitution matrix has wrong row count");
        LinearForm r(new_rank);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (map[i].size() != new_rank)
                throw RankMismatch("substitution matrix has ragged rows");
            for (std::size_t k = 0; k < new_rank; ++k)
                r.coeffs_[k] += coeffs_[i] * map[i][k];
        }
        return r;
    }

    /// Coefficient of t_i moves to slot perm[i].
    LinearForm permuted(const std::vector<std::size_t>& perm) const {
        if (perm.size() != rank())
            throw RankMismatch("permutation has wrong length");
        LinearForm r(rank());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[perm[i]] = coeffs_[i];
        return r;
    }

    /// Embeds into a larger ring, variables shifted by `offset`.
    LinearForm embedded(std::size_t new_rank, std::size_t offset) const {
        if (offset + rank() > new_rank)
            throw RankMismatch("embedding target rank too small");
        LinearForm r(new_rank);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[offset + i] = coeffs_[i];
        return r;
    }

    bool operator==(const LinearForm&) const = default;

    std::strong_ordering operator<=>(const LinearForm& other) const {
        if (auto c = coeffs_.size() <=> other.coeffs_.size(); c != 0) return c;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] < other.coeffs_[i]) return std::strong_ordering::less;
            if (coeffs_[i] > other.coeffs_[i]) return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    void check_rank(const LinearForm& other) const {
        if (other.rank() != rank())
            throw RankMismatch("linear forms of different rank");
    }

    std::vector<Rational> coeffs_;
};

}  // namespace eqloc
