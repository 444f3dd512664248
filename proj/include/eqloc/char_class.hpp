#pragma once

#include <cstddef>
#include <vector>

#include "eqloc/errors.hpp"
#include "eqloc/lin_factored_rational.hpp"
#include "eqloc/linear_form.hpp"
#include "eqloc/model.hpp"
#include "eqloc/polynomial.hpp"
#include "eqloc/truncated_series.hpp"

namespace eqloc {

/*
 * k-th elementary symmetric polynomial of the given linear forms, i.e. the
 * coefficient of x^k in prod_j (1 + x*form_j). eps_0 = 1 and eps_k = 0 for
 * k > |forms|. Computed by the standard one-pass recurrence.
 */
inline Polynomial elementary_symmetric(std::size_t k, const std::vector<LinearForm>& forms,
                                       std::size_t rank) {
    for (const auto& f : forms)
        if (f.rank() != rank) throw RankMismatch("symmetric-function input has wrong rank");
    if (k > forms.size()) return Polynomial::zero(rank);

    std::vector<Polynomial> e;
    e.reserve(k + 1);
    e.push_back(Polynomial::one(rank));
    for (std::size_t j = 1; j <= k; ++j) e.push_back(Polynomial::zero(rank));
    for (const auto& f : forms) {
        const Polynomial fp = Polynomial::from_linear_form(f);
        for (std::size_t j = k; j >= 1; --j) e[j] = e[j] + e[j - 1] * fp;
    }
    return e[k];
}

inline Polynomial elementary_symmetric(std::size_t k, const std::vector<LinearForm>& forms) {
    if (forms.empty())
        throw Error("elementary_symmetric needs the rank when the form list is empty");
    return elementary_symmetric(k, forms, forms.front().rank());
}

/// Equivariant Euler class at an isolated fixed point: the product of its
/// tangent weights.
inline Polynomial euler_class_at(const FixedPoint& p) {
    if (p.weights.empty()) return Polynomial::one(p.moment.rank());
    Polynomial e = Polynomial::one(p.weights.front().rank());
    for (const auto& w : p.weights) {
        if (w.is_zero())
            throw ValidationError("point '" + p.name + "' has a zero weight");
        e = e * Polynomial::from_linear_form(w);
    }
    return e;
}

/// Restriction of the k-th equivariant Chern class to a fixed point:
/// eps_k of the tangent weights. The top class equals the Euler class.
inline Polynomial chern_restriction(std::size_t k, const FixedPoint& p) {
    return elementary_symmetric(k, p.weights, p.moment.rank());
}

/*
 * Inverse of the equivariant Euler class of the normal bundle of a component,
 * expanded in its truncated cohomology: with e = prod_j (beta_j + d_j*h) and
 * h^{m+1} = 0,
 *
 *   1/e = prod_j (1/beta_j) * sum_{k=0..m} (-d_j/beta_j)^k h^k.
 *
 * Nilpotency of h makes the geometric series finite; coefficients are
 * fractions whose denominators are products of the beta_j.
 */
inline TruncatedSeries<LinFactoredRational> inverse_euler_component(const FixedComponent& c) {
    const std::size_t rank = c.moment.rank();
    const std::size_t m = c.dimC;

    std::vector<LinFactoredRational> unit(m + 1, LinFactoredRational::zero(rank));
    unit[0] = LinFactoredRational(Polynomial::one(rank));
    auto series = TruncatedSeries<LinFactoredRational>(std::move(unit));
    for (const auto& nf : c.normal) {
        if (nf.beta.is_zero())
            throw ValidationError("component '" + c.name + "' has a zero weight");
        std::vector<LinFactoredRational> factor;
        factor.reserve(m + 1);
        for (std::size_t k = 0; k <= m; ++k) {
            // (-d)^k / beta^{k+1}
            Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            Rational dk(1);
            for (std::size_t i = 0; i < k; ++i) dk *= Rational(nf.c1_multiple);
            Polynomial num = Polynomial::constant(rank, sign * dk);
            factor.emplace_back(std::move(num),
                                std::vector<std::pair<LinearForm, std::uint32_t>>{
                                    {nf.beta, static_cast<std::uint32_t>(k + 1)}});
        }
        series = series * TruncatedSeries<LinFactoredRational>(std::move(factor));
    }
    return series;
}

/// Equivariant Euler class of the normal bundle as a truncated class,
/// prod_j (beta_j + d_j*h); the exact inverse of inverse_euler_component.
inline TruncatedSeries<LinFactoredRational> euler_component(const FixedComponent& c) {
    const std::size_t rank = c.moment.rank();
    const std::size_t m = c.dimC;
    std::vector<LinFactoredRational> unit(m + 1, LinFactoredRational::zero(rank));
    unit[0] = LinFactoredRational(Polynomial::one(rank));
    auto series = TruncatedSeries<LinFactoredRational>(std::move(unit));
    for (const auto& nf : c.normal) {
        std::vector<LinFactoredRational> factor(m + 1, LinFactoredRational::zero(rank));
        factor[0] = LinFactoredRational(Polynomial::from_linear_form(nf.beta));
        if (m >= 1)
            factor[1] =
                LinFactoredRational(Polynomial::constant(rank, Rational(nf.c1_multiple)));
        series = series * TruncatedSeries<LinFactoredRational>(std::move(factor));
    }
    return series;
}

/*
 * Contribution of one fixed component to a localized integral: multiply the
 * restricted class by the inverse Euler series in the truncated ring, take
 * the h^m coefficient and scale by the integral of h^m over the component.
 */
inline LinFactoredRational component_contribution(const FixedComponent& c,
                                                  const TruncatedSeries<Polynomial>& restricted) {
    if (restricted.length() != c.dimC + 1)
        throw Error("restricted class for component '" + c.name + "' has length " +
                    std::to_string(restricted.length()) + ", expected " +
                    std::to_string(c.dimC + 1));
    auto product = lift(restricted) * inverse_euler_component(c);
    return product.coefficient(c.dimC) * c.generator_integral;
}

}  // namespace eqloc
