#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eqloc/errors.hpp"
#include "eqloc/linear_form.hpp"
#include "eqloc/polynomial.hpp"
#include "eqloc/rational.hpp"

namespace eqloc {

/// A denominator factor evaluated to zero during rat_eval.
struct DenominatorVanishes : Error {
    DenominatorVanishes(std::string msg, LinearForm offending)
        : Error(std::move(msg)), factor(std::move(offending)) {}
    LinearForm factor;
};

/*
 * Polynomial numerator over a multiset of linear-form denominator factors:
 * the shape of a single fixed-point contribution, numerator / equivariant
 * Euler class. Keeping denominators factored over linear forms makes exact
 * cancellation a sequence of linear divisions instead of a multivariate GCD.
 *
 * Canonical form, established at construction and after every operation:
 *   - each factor is monic in its pivot (first nonzero) coefficient; the
 *     scalar is absorbed into the numerator,
 *   - no factor divides the numerator exactly,
 *   - a zero numerator has an empty denominator.
 * Equality is structural equality of canonical forms.
 */
class LinFactoredRational {
public:
    using FactorMap = std::map<LinearForm, std::uint32_t>;

    LinFactoredRational() : rank_(0), num_(Polynomial::zero(0)) {}

    explicit LinFactoredRational(Polynomial numerator)
        : rank_(numerator.rank()), num_(std::move(numerator)) {}

    LinFactoredRational(Polynomial numerator,
                        const std::vector<std::pair<LinearForm, std::uint32_t>>& factors)
        : rank_(numerator.rank()), num_(std::move(numerator)) {
        Rational scale(1);
        for (const auto& [form, mult] : factors) {
            if (mult == 0) continue;
            if (form.rank() != rank_)
                throw RankMismatch("denominator factor has wrong rank");
            auto [monic, s] = form.normalized();  // throws ZeroDivisorForm on zero forms
            for (std::uint32_t i = 0; i < mult; ++i) scale *= s;
            den_[monic] += mult;
        }
        num_ = num_ * (Rational(1) / scale);
        cancel();
    }

    static LinFactoredRational zero(std::size_t rank) {
        return LinFactoredRational(Polynomial::zero(rank));
    }

    std::size_t rank() const { return rank_; }
    const Polynomial& numerator() const { return num_; }
    const FactorMap& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    const Polynomial& as_polynomial() const {
        if (!is_polynomial())
            throw Error("rational is not a polynomial: " + to_string());
        return num_;
    }

    LinFactoredRational operator-() const {
        LinFactoredRational r(*this);
        r.num_ = -r.num_;
        return r;
    }

    LinFactoredRational operator+(const LinFactoredRational& other) const {
        check_rank(other);
        // Common denominator: per-factor maximum multiplicity.
        FactorMap common = den_;
        for (const auto& [f, m] : other.den_) {
            auto it = common.find(f);
            if (it == common.end())
                common[f] = m;
            else
                it->second = std::max(it->second, m);
        }
        Polynomial lhs = scaled_to(common);
        Polynomial rhs = other.scaled_to(common);
        LinFactoredRational r(rank_, lhs + rhs, std::move(common));
        r.cancel();
        return r;
    }

    LinFactoredRational operator-(const LinFactoredRational& other) const {
        return *this + (-other);
    }

    LinFactoredRational operator*(const LinFactoredRational& other) const {
        check_rank(other);
        FactorMap den = den_;
        for (const auto& [f, m] : other.den_) den[f] += m;
        LinFactoredRational r(rank_, num_ * other.num_, std::move(den));
        r.cancel();
        return r;
    }

    LinFactoredRational operator*(const Rational& c) const {
        LinFactoredRational r(*this);
        r.num_ = r.num_ * c;
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }

    LinFactoredRational& operator+=(const LinFactoredRational& other) {
        return *this = *this + other;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        Rational den_value(1);
        for (const auto& [f, m] : den_) {
            Rational v = f.evaluate(point);
            if (v == 0)
                throw DenominatorVanishes("denominator factor vanishes at evaluation point", f);
            for (std::uint32_t i = 0; i < m; ++i) den_value *= v;
        }
        return num_.evaluate(point) / den_value;
    }

    bool operator==(const LinFactoredRational&) const = default;

    /// "<numerator> / <factors>"; parenthesized factors joined by '*',
    /// multiplicities as '^m'. A polynomial renders as its numerator alone.
    std::string to_string() const {
        std::string out = num_.to_string();
        if (den_.empty()) return out;
        out += " / ";
        bool first = true;
        for (const auto& [f, m] : den_) {
            if (!first) out += '*';
            first = false;
            out += '(' + Polynomial::from_linear_form(f).to_string() + ')';
            if (m > 1) out += '^' + std::to_string(m);
        }
        return out;
    }

private:
    LinFactoredRational(std::size_t rank, Polynomial num, FactorMap den)
        : rank_(rank), num_(std::move(num)), den_(std::move(den)) {}

    /// Numerator after extending this fraction to the given common denominator.
    Polynomial scaled_to(const FactorMap& common) const {
        Polynomial result = num_;
        for (const auto& [f, m] : common) {
            auto it = den_.find(f);
            const std::uint32_t have = it == den_.end() ? 0 : it->second;
            const Polynomial fp = Polynomial::from_linear_form(f);
            for (std::uint32_t i = have; i < m; ++i) result = result * fp;
        }
        return result;
    }

    /// Greedy exact cancellation of every denominator factor.
    void cancel() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0) {
                auto q = num_.divide_by_linear(it->first);
                if (!q) break;
                num_ = std::move(*q);
                --it->second;
            }
            it = it->second == 0 ? den_.erase(it) : std::next(it);
        }
        if (num_.is_zero()) den_.clear();
    }

    void check_rank(const LinFactoredRational& other) const {
        if (other.rank_ != rank_)
            throw RankMismatch("rationals of different rank");
    }

    std::size_t rank_;
    Polynomial num_;
    FactorMap den_;
};

inline LinFactoredRational zero_like(const LinFactoredRational& r) {
    return LinFactoredRational::zero(r.rank());
}

}  // namespace eqloc
