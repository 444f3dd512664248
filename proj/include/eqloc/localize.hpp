#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eqloc/char_class.hpp"
#include "eqloc/errors.hpp"
#include "eqloc/lin_factored_rational.hpp"
#include "eqloc/model.hpp"
#include "eqloc/polynomial.hpp"
#include "eqloc/truncated_series.hpp"

namespace eqloc {

/*
 * The fixed-point contributions did not cancel to a polynomial. This is not
 * an arithmetic failure: it means the supplied fixed-point data cannot come
 * from a global equivariant class, so it is the engine's main integrity
 * check on user models. Carries the uncancelled remainder.
 */
struct NonPolynomialResult : Error {
    explicit NonPolynomialResult(LinFactoredRational rem)
        : Error("fixed-point contributions do not sum to a polynomial; remainder " +
                rem.to_string()),
          remainder(std::move(rem)) {}
    LinFactoredRational remainder;
};

/// The symplectic-volume entry of the Duistermaat-Heckman series came out
/// non-constant, which a well-formed model cannot produce.
struct NonConstantVolume : Error {
    explicit NonConstantVolume(Polynomial e)
        : Error("volume entry is not constant: " + e.to_string()), entry(std::move(e)) {}
    Polynomial entry;
};

/// (omega + moment)^k applied uniformly to every component.
struct PowerOfOmegaBar {
    std::uint64_t k = 0;
};

/// Explicit restriction per component name; points take a length-1 series.
using ExplicitClasses = std::map<std::string, TruncatedSeries<Polynomial>>;

struct EquivariantIntegrand {
    std::variant<PowerOfOmegaBar, ExplicitClasses> data;

    static EquivariantIntegrand power(std::uint64_t k) {
        return {PowerOfOmegaBar{k}};
    }
    static EquivariantIntegrand classes(ExplicitClasses c) {
        return {std::move(c)};
    }
};

struct LocalizationResult {
    Polynomial value;
    std::vector<std::pair<std::string, LinFactoredRational>> contributions;
};

namespace detail {

inline LinFactoredRational point_contribution(const FixedPoint& p, const Polynomial& numerator) {
    std::vector<std::pair<LinearForm, std::uint32_t>> factors;
    factors.reserve(p.weights.size());
    for (const auto& w : p.weights) factors.push_back({w, 1});
    return LinFactoredRational(numerator, factors);
}

inline LinFactoredRational contribution_of(const FixedComponent& c,
                                           const EquivariantIntegrand& integrand) {
    if (const auto* power = std::get_if<PowerOfOmegaBar>(&integrand.data)) {
        if (!c.is_point())
            throw Error("component '" + c.name +
                        "' is positive-dimensional; a uniform moment power needs an explicit "
                        "restricted class there");
        const FixedPoint p = c.as_point();
        return point_contribution(p, Polynomial::from_linear_form(p.moment).pow(power->k));
    }
    const auto& classes = std::get<ExplicitClasses>(integrand.data);
    auto it = classes.find(c.name);
    if (it == classes.end())
        throw Error("integrand does not cover component '" + c.name + "'");
    if (c.is_point()) {
        if (it->second.length() != 1)
            throw Error("component '" + c.name + "' is a point; its class must have length 1");
        return point_contribution(c.as_point(), it->second.coefficient(0));
    }
    return component_contribution(c, it->second);
}

}  // namespace detail

/*
 * The localization formula: the equivariant integral equals the sum over
 * fixed components of (restricted class) / (equivariant Euler class of the
 * normal bundle). The sum must cancel to a polynomial in the torus
 * parameters; a nonzero remainder throws NonPolynomialResult. Per-component
 * contributions are retained for reporting.
 */
inline LocalizationResult localize(const TorusModel& m, const EquivariantIntegrand& integrand) {
    m.validate();
    LocalizationResult result;
    LinFactoredRational sum = LinFactoredRational::zero(m.rank);
    for (const auto& c : m.components) {
        LinFactoredRational contribution = detail::contribution_of(c, integrand);
        sum += contribution;
        result.contributions.push_back({c.name, std::move(contribution)});
    }
    if (!sum.is_polynomial())
        throw NonPolynomialResult(std::move(sum));
    result.value = sum.as_polynomial();
    return result;
}

/*
 * Integral of (omega + moment)^k. Requires isolated fixed points: the
 * restriction at a point is just moment^k. For k >= n the result is
 * homogeneous of degree k - n (or zero); for k < n it vanishes identically.
 */
inline Polynomial power_integral(const TorusModel& m, std::uint64_t k) {
    if (!m.all_isolated())
        throw Error("power_integral needs isolated fixed points; supply explicit classes for "
                    "positive-dimensional components");
    return localize(m, EquivariantIntegrand::power(k)).value;
}

/*
 * Degree-k Taylor data of the Duistermaat-Heckman sum
 * sum_f exp(moment_f) / e_f: entry k equals (integral of omega-bar^k) / k!.
 * Entries below the complex dimension vanish; entry n is the symplectic
 * volume.
 */
inline std::vector<Polynomial> dh_series(const TorusModel& m, std::uint64_t order) {
    std::vector<Polynomial> entries;
    entries.reserve(order + 1);
    Rational k_factorial(1);
    for (std::uint64_t k = 0; k <= order; ++k) {
        if (k > 0) k_factorial *= Rational(k);
        entries.push_back(power_integral(m, k) * (Rational(1) / k_factorial));
    }
    return entries;
}

/// Symplectic volume: the constant entry n of the Duistermaat-Heckman series.
inline Rational dh_volume(const TorusModel& m) {
    Rational n_factorial(1);
    for (std::uint64_t k = 2; k <= m.dimC; ++k) n_factorial *= Rational(k);
    Polynomial entry = power_integral(m, m.dimC) * (Rational(1) / n_factorial);
    if (!entry.is_constant())
        throw NonConstantVolume(std::move(entry));
    return entry.constant_value();
}

/*
 * Closed form of the Duistermaat-Heckman sum for noncompact models whose
 * moments all vanish at the fixed points (the Gaussian plane): the
 * exponentials degenerate to 1 and the sum is sum_f 1/e_f, returned as a
 * fraction exempt from the polynomiality check.
 */
inline LinFactoredRational dh_closed_form(const TorusModel& m) {
    m.validate();
    if (!m.noncompact)
        throw Error("dh_closed_form applies to noncompact models; use dh_series instead");
    LinFactoredRational sum = LinFactoredRational::zero(m.rank);
    for (const auto& c : m.components) {
        if (!c.is_point())
            throw Error("dh_closed_form needs isolated fixed points");
        if (!c.moment.is_zero())
            throw Error("dh_closed_form needs vanishing moments; component '" + c.name +
                        "' has moment " + Polynomial::from_linear_form(c.moment).to_string());
        sum += detail::point_contribution(c.as_point(), Polynomial::one(m.rank));
    }
    return sum;
}

/*
 * Euler characteristic by Gauss-Bonnet: localize the Euler class of the
 * tangent bundle. Each summand cancels to the constant 1, so the result
 * counts the fixed points.
 */
inline long long euler_characteristic(const TorusModel& m) {
    if (!m.all_isolated())
        throw Error("euler_characteristic needs isolated fixed points");
    ExplicitClasses classes;
    for (const auto& c : m.components)
        classes.emplace(c.name, TruncatedSeries<Polynomial>({euler_class_at(c.as_point())}));
    Polynomial value = localize(m, EquivariantIntegrand::classes(std::move(classes))).value;
    Rational chi = value.constant_value();
    if (!is_integer(chi))
        throw Error("Euler characteristic is not an integer: " + to_string(chi));
    return static_cast<long long>(numerator(chi));
}

}  // namespace eqloc
