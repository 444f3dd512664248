#pragma once

// Shared deterministic random generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "eqloc/eqloc.hpp"

namespace testsupport {

using eqloc::LinFactoredRational;
using eqloc::LinearForm;
using eqloc::Polynomial;
using eqloc::Rational;

inline Rational random_rational(std::mt19937_64& rng, long long bound = 9) {
    std::uniform_int_distribution<long long> num(-bound, bound);
    std::uniform_int_distribution<long long> den(1, bound);
    return Rational(num(rng)) / Rational(den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long long bound = 9) {
    for (;;) {
        Rational q = random_rational(rng, bound);
        if (q != 0) return q;
    }
}

inline LinearForm random_linear_form(std::mt19937_64& rng, std::size_t rank) {
    std::vector<Rational> coeffs;
    coeffs.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) coeffs.push_back(random_rational(rng, 3));
    return LinearForm(std::move(coeffs));
}

inline LinearForm random_nonzero_linear_form(std::mt19937_64& rng, std::size_t rank) {
    for (;;) {
        LinearForm f = random_linear_form(rng, rank);
        if (!f.is_zero()) return f;
    }
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t rank,
                                    std::uint32_t max_degree = 6, std::size_t max_terms = 8) {
    std::uniform_int_distribution<std::size_t> n_terms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    Polynomial p = Polynomial::zero(rank);
    const std::size_t terms = n_terms(rng);
    for (std::size_t t = 0; t < terms; ++t) {
        Polynomial term = Polynomial::constant(rank, random_rational(rng, 5));
        std::uint32_t budget = deg(rng);
        for (std::uint32_t d = 0; d < budget; ++d) {
            std::uniform_int_distribution<std::size_t> var(0, rank - 1);
            term = term * Polynomial::variable(rank, var(rng));
        }
        p = p + term;
    }
    return p;
}

inline LinFactoredRational random_fraction(std::mt19937_64& rng, std::size_t rank,
                                           std::size_t max_factors = 3) {
    std::uniform_int_distribution<std::size_t> n_factors(0, max_factors);
    std::vector<std::pair<LinearForm, std::uint32_t>> factors;
    const std::size_t count = n_factors(rng);
    for (std::size_t i = 0; i < count; ++i)
        factors.push_back({random_nonzero_linear_form(rng, rank), 1});
    return LinFactoredRational(random_polynomial(rng, rank, 4, 5), factors);
}

/// A point where every denominator factor of the given fractions is nonzero.
template <class... Fracs>
std::vector<Rational> random_safe_point(std::mt19937_64& rng, std::size_t rank,
                                        const Fracs&... fracs) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rational> point;
        point.reserve(rank);
        for (std::size_t i = 0; i < rank; ++i) point.push_back(random_rational(rng, 50));
        bool safe = true;
        auto probe = [&](const LinFactoredRational& f) {
            for (const auto& [form, mult] : f.denominator())
                if (form.evaluate(point) == 0) safe = false;
        };
        (probe(fracs), ...);
        if (safe) return point;
    }
    throw eqloc::Error("could not find a safe evaluation point");
}

}  // namespace testsupport
