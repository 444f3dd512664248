#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Every check is exact; a suite returns false on the first violated
// case. Seeds are fixed so failures reproduce.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "eqloc/eqloc.hpp"
#include "support.hpp"

namespace properties {

using namespace eqloc;
using namespace testsupport;

/// Associativity, commutativity, distributivity and identities of the
/// polynomial ring on random inputs.
inline bool ring_laws(std::size_t cases, std::uint64_t seed = 101) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> rank_dist(1, 6);
    for (std::size_t i = 0; i < cases; ++i) {
        const std::size_t rank = rank_dist(rng);
        Polynomial a = random_polynomial(rng, rank);
        Polynomial b = random_polynomial(rng, rank);
        Polynomial c = random_polynomial(rng, rank);
        const Polynomial zero = Polynomial::zero(rank);
        const Polynomial one = Polynomial::one(rank);
        if ((a + b) + c != a + (b + c)) return false;
        if ((a * b) * c != a * (b * c)) return false;
        if (a + b != b + a) return false;
        if (a * b != b * a) return false;
        if (a * (b + c) != a * b + a * c) return false;
        if (a + zero != a || a * one != a) return false;
        if (a - a != zero) return false;
    }
    return true;
}

/// divide_by_linear(p * f, f) == p exactly.
inline bool division_round_trip(std::size_t cases, std::uint64_t seed = 202) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> rank_dist(1, 6);
    for (std::size_t i = 0; i < cases; ++i) {
        const std::size_t rank = rank_dist(rng);
        Polynomial p = random_polynomial(rng, rank);
        LinearForm f = random_nonzero_linear_form(rng, rank);
        auto q = (p * Polynomial::from_linear_form(f)).divide_by_linear(f);
        if (!q || *q != p) return false;
    }
    return true;
}

/// rat_eval is a ring homomorphism: eval(a + b) = eval(a) + eval(b) and
/// eval(a * b) = eval(a) * eval(b) wherever all denominators are nonzero.
inline bool evaluation_homomorphism(std::size_t cases, std::uint64_t seed = 303) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> rank_dist(1, 4);
    for (std::size_t i = 0; i < cases; ++i) {
        const std::size_t rank = rank_dist(rng);
        LinFactoredRational a = random_fraction(rng, rank);
        LinFactoredRational b = random_fraction(rng, rank);
        LinFactoredRational sum = a + b;
        LinFactoredRational prod = a * b;
        auto point = random_safe_point(rng, rank, a, b, sum, prod);
        if (sum.evaluate(point) != a.evaluate(point) + b.evaluate(point)) return false;
        if (prod.evaluate(point) != a.evaluate(point) * b.evaluate(point)) return false;
    }
    return true;
}

/// Rebuilding a canonical fraction from its own parts is the identity, and
/// structural equality matches equality of evaluations.
inline bool canonicalization_idempotent(std::size_t cases, std::uint64_t seed = 404) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> rank_dist(1, 4);
    for (std::size_t i = 0; i < cases; ++i) {
        const std::size_t rank = rank_dist(rng);
        LinFactoredRational a = random_fraction(rng, rank);
        std::vector<std::pair<LinearForm, std::uint32_t>> factors(a.denominator().begin(),
                                                                  a.denominator().end());
        if (LinFactoredRational(a.numerator(), factors) != a) return false;
    }
    return true;
}

/// localize is additive in explicit integrands.
inline bool localize_linearity(std::size_t cases, std::uint64_t seed = 505) {
    std::mt19937_64 rng(seed);
    const TorusModel m = builtin_cpn(2);
    for (std::size_t i = 0; i < cases; ++i) {
        ExplicitClasses alpha, beta, gamma;
        for (const auto& c : m.components) {
            Polynomial pa = random_polynomial(rng, m.rank, 3, 4);
            Polynomial pb = random_polynomial(rng, m.rank, 3, 4);
            alpha.emplace(c.name, TruncatedSeries<Polynomial>({pa}));
            beta.emplace(c.name, TruncatedSeries<Polynomial>({pb}));
            gamma.emplace(c.name, TruncatedSeries<Polynomial>({pa + pb}));
        }
        Polynomial va, vb, vg;
        try {
            va = localize(m, EquivariantIntegrand::classes(alpha)).value;
            vb = localize(m, EquivariantIntegrand::classes(beta)).value;
            vg = localize(m, EquivariantIntegrand::classes(gamma)).value;
        } catch (const NonPolynomialResult&) {
            continue;  // random numerators need not come from a global class
        }
        if (vg != va + vb) return false;
    }
    return true;
}

/// power_integral(m, k) vanishes for k < n and is homogeneous of degree
/// k - n (or zero) for k >= n.
inline bool degree_law(std::uint64_t max_extra = 3) {
    std::vector<TorusModel> models = {builtin_s2(Rational(1)), builtin_cpn(1), builtin_cpn(2),
                                      builtin_cpn(3),
                                      product(builtin_s2(Rational(1)), builtin_cpn(1))};
    for (const auto& m : models) {
        for (std::uint64_t k = 0; k < m.dimC; ++k)
            if (!power_integral(m, k).is_zero()) return false;
        for (std::uint64_t k = m.dimC; k <= m.dimC + max_extra; ++k) {
            Polynomial p = power_integral(m, k);
            if (p.is_zero()) continue;
            if (!p.is_homogeneous() || p.total_degree() != k - m.dimC) return false;
        }
    }
    return true;
}

/// Scaling every moment by c multiplies power_integral(m, k) by c^k.
inline bool moment_scaling(std::size_t cases, std::uint64_t seed = 606) {
    std::mt19937_64 rng(seed);
    std::vector<TorusModel> models = {builtin_s2(Rational(1)), builtin_cpn(2)};
    for (std::size_t i = 0; i < cases; ++i) {
        const TorusModel& base = models[i % models.size()];
        Rational c = random_nonzero_rational(rng);
        TorusModel scaled = base;
        for (auto& comp : scaled.components) comp.moment = comp.moment.scaled(c);
        for (std::uint64_t k = 0; k <= base.dimC + 1; ++k) {
            Rational ck(1);
            for (std::uint64_t j = 0; j < k; ++j) ck *= c;
            if (power_integral(scaled, k) != power_integral(base, k) * ck) return false;
        }
    }
    return true;
}

/// Permuting the torus coordinates of the model permutes the variables of
/// every localization output accordingly.
inline bool permutation_equivariance(std::size_t cases, std::uint64_t seed = 707) {
    std::mt19937_64 rng(seed);
    std::vector<TorusModel> models = {builtin_cpn(2), builtin_cpn(3),
                                      product(builtin_s2(Rational(1)), builtin_cpn(1))};
    for (std::size_t i = 0; i < cases; ++i) {
        const TorusModel& base = models[i % models.size()];
        std::vector<std::size_t> perm(base.rank);
        for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        TorusModel permuted = permute_variables(base, perm);
        for (std::uint64_t k = 0; k <= base.dimC + 1; ++k)
            if (power_integral(permuted, k) != power_integral(base, k).permuted(perm))
                return false;
    }
    return true;
}

/// Summing the reported contributions reproduces the localized value.
inline bool contributions_consistency() {
    std::vector<TorusModel> models = {builtin_s2(Rational(1)), builtin_cpn(2), builtin_cpn(3)};
    for (const auto& m : models) {
        auto result = localize(m, EquivariantIntegrand::power(m.dimC));
        LinFactoredRational sum = LinFactoredRational::zero(m.rank);
        for (const auto& [name, contribution] : result.contributions) sum += contribution;
        if (!sum.is_polynomial() || sum.as_polynomial() != result.value) return false;
    }
    return true;
}

}  // namespace properties
