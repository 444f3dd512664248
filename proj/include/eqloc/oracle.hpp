#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "eqloc/errors.hpp"
#include "eqloc/lin_factored_rational.hpp"
#include "eqloc/polynomial.hpp"
#include "eqloc/rational.hpp"

/*
 * Brute-force verifiers, independent of the localization path they check.
 * This is the only part of the repository allowed to touch floating point
 * (the quadrature at the bottom).
 */
namespace eqloc::oracle {

/// Determinant by Laplace cofactor expansion along the first column. Cubic
/// blowup is fine at the sizes we verify (<= 7).
inline Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& mat) {
    const std::size_t n = mat.size();
    if (n == 1) return mat[0][0];
    const std::size_t rank = mat[0][0].rank();
    Polynomial det = Polynomial::zero(rank);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<Polynomial> row(mat[r].begin() + 1, mat[r].end());
            minor.push_back(std::move(row));
        }
        Polynomial term = mat[i][0] * cofactor_det(minor);
        det = (i % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Determinant of the Vandermonde matrix with rows (node_j^i), expanded by
/// cofactors rather than the product formula, so it can arbitrate the
/// product-formula identity.
inline Polynomial vandermonde_det(const std::vector<Polynomial>& nodes) {
    if (nodes.empty())
        throw Error("vandermonde_det needs at least one node");
    const std::size_t s = nodes.size();
    const std::size_t rank = nodes.front().rank();
    std::vector<std::vector<Polynomial>> mat(s, std::vector<Polynomial>(s, Polynomial::zero(rank)));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) mat[i][j] = nodes[j].pow(i);
    return cofactor_det(mat);
}

inline Rational vandermonde_det(const std::vector<Rational>& nodes) {
    std::vector<Polynomial> as_polys;
    as_polys.reserve(nodes.size());
    for (const auto& q : nodes) as_polys.push_back(Polynomial::constant(0, q));
    return vandermonde_det(as_polys).constant_value();
}

/*
 * The scalar shadow of the projective-space localization identity: for n+1
 * distinct nodes,
 *
 *   sum_i node_i^n / prod_{j != i} (node_i - node_j) = 1
 *
 * (the leading divided difference of x^n). Computed in plain rational
 * arithmetic with no polynomial machinery.
 */
inline Rational lagrange_power_sum(std::uint32_t n, const std::vector<Rational>& nodes) {
    if (nodes.size() != static_cast<std::size_t>(n) + 1)
        throw Error("lagrange_power_sum needs exactly n+1 nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j])
                throw Error("lagrange_power_sum needs distinct nodes");
    Rational sum(0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Rational numerator(1);
        for (std::uint32_t k = 0; k < n; ++k) numerator *= nodes[i];
        Rational denominator(1);
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (j != i) denominator *= nodes[i] - nodes[j];
        sum += numerator / denominator;
    }
    return sum;
}

/// Uniform rational with numerator in [-bound, bound] and denominator in
/// [1, bound]. Small bounds keep coefficient growth in check.
inline Rational random_rational(std::mt19937_64& rng, long long bound = 10000) {
    std::uniform_int_distribution<long long> num(-bound, bound);
    std::uniform_int_distribution<long long> den(1, bound);
    return Rational(num(rng)) / Rational(den(rng));
}

/*
 * Probabilistic equality of two fractions by evaluation at random rational
 * points that avoid every denominator factor. Symbolic equality stays the
 * ground truth; this is the cross-check. Points that hit a denominator are
 * resampled, with a total attempt budget of 10x trials.
 */
inline bool rat_equal_by_evaluation(const LinFactoredRational& a, const LinFactoredRational& b,
                                    std::uint32_t trials, std::uint64_t seed = 0) {
    if (a.rank() != b.rank())
        throw RankMismatch("comparing rationals of different rank");
    std::mt19937_64 rng(seed);
    std::uint32_t done = 0;
    for (std::uint32_t attempt = 0; attempt < 10 * trials && done < trials; ++attempt) {
        std::vector<Rational> point;
        point.reserve(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) point.push_back(random_rational(rng));
        try {
            if (a.evaluate(point) != b.evaluate(point)) return false;
        } catch (const DenominatorVanishes&) {
            continue;  // resample
        }
        ++done;
    }
    if (done < trials)
        throw Error("rat_equal_by_evaluation exhausted its resampling budget");
    return true;
}

/*
 * Composite midpoint quadrature of the area integral
 * int_0^{2pi} int_0^pi sin(phi) dphi dtheta on a samples x samples grid.
 * The integrand is independent of theta, so the theta sum is taken in
 * closed form; the value is identical to the full double sum. Converges
 * to 4*pi at second order.
 */
inline double s2_area_quadrature(std::uint32_t samples) {
    if (samples < 2)
        throw Error("s2_area_quadrature needs at least 2 samples per axis");
    const double pi = std::acos(-1.0);
    const double h_phi = pi / samples;
    const double h_theta = 2.0 * pi / samples;
    double phi_sum = 0.0;
    for (std::uint32_t j = 0; j < samples; ++j)
        phi_sum += std::sin((j + 0.5) * h_phi);
    return (samples * h_theta) * (phi_sum * h_phi);
}

}  // namespace eqloc::oracle
