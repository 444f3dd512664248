#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqloc/errors.hpp"
#include "eqloc/linear_form.hpp"
#include "eqloc/rational.hpp"

namespace eqloc {

/// Exponent vector of one monomial; length equals the torus rank.
struct Monomial {
    std::vector<std::uint32_t> exps;

    std::uint64_t degree() const {
        return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
    }

    bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order with t0 > t1 > ...; higher degree first.
inline std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (auto c = a.exps[i] <=> b.exps[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    return grlex_compare(a, b) > 0;
}

/*
 * Sparse multivariate polynomial over Q in t_0 .. t_{r-1}; the coefficient
 * ring of every localization output.
 *
 * Terms are kept in a flat vector, sorted graded-lex descending, with no zero
 * coefficients. That order is also the canonical print order, so equality,
 * hashing-by-string and rendering all agree.
 */
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() : rank_(0) {}
    explicit Polynomial(std::size_t rank) : rank_(rank) {}

    static Polynomial zero(std::size_t rank) { return Polynomial(rank); }

    static Polynomial constant(std::size_t rank, Rational c) {
        Polynomial p(rank);
        if (c != 0)
            p.terms_.push_back({Monomial{std::vector<std::uint32_t>(rank, 0)}, std::move(c)});
        return p;
    }

    static Polynomial one(std::size_t rank) { return constant(rank, Rational(1)); }

    static Polynomial variable(std::size_t rank, std::size_t i) {
        Polynomial p(rank);
        Monomial m{std::vector<std::uint32_t>(rank, 0)};
        m.exps.at(i) = 1;
        p.terms_.push_back({std::move(m), Rational(1)});
        return p;
    }

    static Polynomial from_linear_form(const LinearForm& f) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < f.rank(); ++i) {
            if (f[i] == 0) continue;
            Monomial m{std::vector<std::uint32_t>(f.rank(), 0)};
            m.exps[i] = 1;
            terms.push_back({std::move(m), f[i]});
        }
        Polynomial p(f.rank());
        p.terms_ = std::move(terms);  // variable order is already grlex-descending
        return p;
    }

    /// Terms in canonical (graded-lex descending) order.
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t rank() const { return rank_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0);
    }

    /// Value of a constant polynomial (the zero polynomial gives 0).
    Rational constant_value() const {
        if (!is_constant())
            throw Error("polynomial is not constant: " + to_string());
        return terms_.empty() ? Rational(0) : terms_[0].second;
    }

    std::uint64_t total_degree() const {
        return terms_.empty() ? 0 : terms_.front().first.degree();
    }

    bool is_homogeneous() const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != total_degree()) return false;
        return true;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator+(const Polynomial& other) const {
        check_rank(other);
        Polynomial r(rank_);
        r.terms_.reserve(terms_.size() + other.terms_.size());
        auto a = terms_.begin(), b = other.terms_.begin();
        while (a != terms_.end() && b != other.terms_.end()) {
            auto cmp = grlex_compare(a->first, b->first);
            if (cmp > 0) {
                r.terms_.push_back(*a++);
            } else if (cmp < 0) {
                r.terms_.push_back(*b++);
            } else {
                Rational c = a->second + b->second;
                if (c != 0) r.terms_.push_back({a->first, std::move(c)});
                ++a, ++b;
            }
        }
        r.terms_.insert(r.terms_.end(), a, terms_.end());
        r.terms_.insert(r.terms_.end(), b, other.terms_.end());
        return r;
    }

    Polynomial operator-(const Polynomial& other) const { return *this + (-other); }

    Polynomial operator*(const Rational& c) const {
        if (c == 0) return zero(rank_);
        Polynomial r(*this);
        for (auto& [m, coeff] : r.terms_) coeff *= c;
        return r;
    }

    Polynomial operator*(const Polynomial& other) const {
        check_rank(other);
        if (is_zero() || other.is_zero()) return zero(rank_);
        // Cross products, then sort and collect. Keeps the hot path a single
        // O(T log T) pass instead of per-term ordered insertion.
        std::vector<Term> raw;
        raw.reserve(terms_.size() * other.terms_.size());
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : other.terms_) {
                Monomial m = ma;
                for (std::size_t i = 0; i < rank_; ++i) m.exps[i] += mb.exps[i];
                raw.push_back({std::move(m), ca * cb});
            }
        }
        return from_raw_terms(rank_, std::move(raw));
    }

    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    Polynomial pow(std::uint64_t k) const {
        Polynomial acc = one(rank_);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return acc;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != rank_)
            throw RankMismatch("evaluation point has wrong length");
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (std::size_t i = 0; i < rank_; ++i)
                for (std::uint32_t e = 0; e < m.exps[i]; ++e) v *= point[i];
            total += v;
        }
        return total;
    }

    /*
     * Exact division by a nonzero linear form. Returns q with q*f == *this,
     * or nullopt when f does not divide exactly. This is the entire
     * cancellation machinery: every denominator produced by localization is a
     * product of linear forms, so no general multivariate GCD is needed.
     *
     * Writes p = sum_k P_k(t') * t_v^k where v is the pivot variable of
     * f = c_v t_v + g (g free of t_v), then runs synthetic division from the
     * top power down; the final remainder bucket decides divisibility.
     */
    std::optional<Polynomial> divide_by_linear(const LinearForm& f) const {
        if (f.rank() != rank_)
            throw RankMismatch("divisor form has wrong rank");
        const std::size_t v = f.pivot();
        if (v == rank_)
            throw ZeroDivisorForm("division by the zero linear form");
        if (is_zero()) return zero(rank_);

        const Rational& cv = f[v];
        LinearForm g(rank_);  // f minus its pivot term
        {
            std::vector<Rational> coeffs(f.coefficients());
            coeffs[v] = Rational(0);
            g = LinearForm(std::move(coeffs));
        }
        const Polynomial g_poly = from_linear_form(g);

        // Bucket the terms of *this by the exponent of t_v.
        std::uint32_t top = 0;
        for (const auto& [m, c] : terms_) top = std::max(top, m.exps[v]);
        std::vector<std::vector<Term>> raw_bucket(top + 1);
        for (const auto& [m, c] : terms_) {
            Monomial stripped = m;
            const std::uint32_t k = stripped.exps[v];
            stripped.exps[v] = 0;
            raw_bucket[k].push_back({std::move(stripped), c});
        }
        std::vector<Polynomial> bucket;
        bucket.reserve(top + 1);
        for (auto& raw : raw_bucket) bucket.push_back(from_raw_terms(rank_, std::move(raw)));

        std::vector<Polynomial> quotient(top, Polynomial(rank_));
        for (std::uint32_t k = top; k >= 1; --k) {
            quotient[k - 1] = bucket[k] * (Rational(1) / cv);
            bucket[k - 1] = bucket[k - 1] - quotient[k - 1] * g_poly;
        }
        if (!bucket[0].is_zero()) return std::nullopt;

        std::vector<Term> raw;
        for (std::uint32_t k = 0; k < top; ++k) {
            for (const auto& [m, c] : quotient[k].terms()) {
                Monomial lifted = m;
                lifted.exps[v] += k;
                raw.push_back({std::move(lifted), c});
            }
        }
        return from_raw_terms(rank_, std::move(raw));
    }

    /// Coefficient of t_i moves to slot perm[i]; perm must be a permutation.
    Polynomial permuted(const std::vector<std::size_t>& perm) const {
        if (perm.size() != rank_)
            throw RankMismatch("permutation has wrong length");
        std::vector<Term> raw = terms_;
        for (auto& [m, c] : raw) {
            Monomial pm{std::vector<std::uint32_t>(rank_, 0)};
            for (std::size_t i = 0; i < rank_; ++i) pm.exps[perm[i]] = m.exps[i];
            m = std::move(pm);
        }
        return from_raw_terms(rank_, std::move(raw));
    }

    bool operator==(const Polynomial&) const = default;

    /// Canonical rendering, e.g. "t0^2 - 2/3*t0*t1 + 1"; the CLI output contract.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c < 0;
            if (first) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            out += render_term(m, negative ? Rational(-c) : c);
        }
        return out;
    }

private:
    static std::string render_term(const Monomial& m, const Rational& abs_coeff) {
        std::string vars;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += 't' + std::to_string(i);
            if (m.exps[i] > 1) vars += '^' + std::to_string(m.exps[i]);
        }
        if (vars.empty()) return eqloc::to_string(abs_coeff);
        if (abs_coeff == 1) return vars;
        return eqloc::to_string(abs_coeff) + '*' + vars;
    }

    /// Sorts, merges equal monomials, drops zeros.
    static Polynomial from_raw_terms(std::size_t rank, std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const Term& x, const Term& y) { return grlex_greater(x.first, y.first); });
        Polynomial r(rank);
        r.terms_.reserve(raw.size());
        for (auto& t : raw) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first) {
                r.terms_.back().second += t.second;
                if (r.terms_.back().second == 0) r.terms_.pop_back();
            } else if (t.second != 0) {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    void check_rank(const Polynomial& other) const {
        if (other.rank_ != rank_)
            throw RankMismatch("polynomials of different rank");
    }

    std::size_t rank_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

inline Polynomial zero_like(const Polynomial& p) { return Polynomial::zero(p.rank()); }

/*
 * Parses the canonical format back into a polynomial: terms joined by +/-,
 * each a '*'-separated product of rational constants and powers "tI^E".
 * Inverse of Polynomial::to_string on every canonical rendering.
 */
inline Polynomial parse_polynomial(std::string_view text, std::size_t rank) {
    struct Cursor {
        std::string_view s;
        std::size_t i = 0;
        void skip_ws() {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        }
        bool done() {
            skip_ws();
            return i >= s.size();
        }
        char peek() {
            skip_ws();
            return s[i];
        }
    } cur{text};

    auto fail = [&](const std::string& why) -> Polynomial {
        throw ParseError("invalid polynomial '" + std::string(text) + "': " + why);
    };

    auto parse_uint = [&](const char* what) -> std::uint64_t {
        cur.skip_ws();
        std::size_t start = cur.i;
        while (cur.i < cur.s.size() && cur.s[cur.i] >= '0' && cur.s[cur.i] <= '9') ++cur.i;
        if (cur.i == start) fail(std::string("expected ") + what);
        try {
            return std::stoull(std::string(cur.s.substr(start, cur.i - start)));
        } catch (const std::exception&) {
            fail(std::string(what) + " out of range");
            return 0;  // unreachable
        }
    };

    // factor := rational | tI [^E]
    auto parse_factor = [&]() -> Polynomial {
        if (cur.done()) fail("expected a factor");
        if (cur.peek() == 't') {
            ++cur.i;
            const std::uint64_t idx = parse_uint("variable index");
            if (idx >= rank) fail("variable t" + std::to_string(idx) + " out of range");
            std::uint64_t exp = 1;
            if (!cur.done() && cur.peek() == '^') {
                ++cur.i;
                exp = parse_uint("exponent");
            }
            return Polynomial::variable(rank, idx).pow(exp);
        }
        cur.skip_ws();
        std::size_t start = cur.i;
        while (cur.i < cur.s.size() &&
               ((cur.s[cur.i] >= '0' && cur.s[cur.i] <= '9') || cur.s[cur.i] == '/'))
            ++cur.i;
        if (cur.i == start) fail("expected a coefficient or variable");
        return Polynomial::constant(rank,
                                    parse_rational(cur.s.substr(start, cur.i - start)));
    };

    if (cur.done()) fail("empty input");

    Polynomial total = Polynomial::zero(rank);
    bool first = true;
    while (!cur.done()) {
        Rational sign(1);
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.peek() == '-') sign = Rational(-1);
            ++cur.i;
        } else if (!first) {
            fail("terms must be joined by + or -");
        }
        first = false;
        Polynomial term = parse_factor();
        while (!cur.done() && cur.peek() == '*') {
            ++cur.i;
            term = term * parse_factor();
        }
        total = total + term * sign;
    }
    return total;
}

}  // namespace eqloc
