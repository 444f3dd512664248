#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eqloc/errors.hpp"
#include "eqloc/linear_form.hpp"
#include "eqloc/polynomial.hpp"
#include "eqloc/rational.hpp"

namespace eqloc {

/// A subtorus restriction killed a weight: the restricted action has a larger
/// fixed set there, so point-level data no longer describes it.
struct WeightCollapsesToZero : Error {
    WeightCollapsesToZero(const std::string& component_name, const std::string& weight_text)
        : Error("weight " + weight_text + " of component '" + component_name +
                "' collapses to zero under the subtorus restriction"),
          component(component_name),
          weight(weight_text) {}
    std::string component;
    std::string weight;
};

/// An isolated fixed point: its moment value and the tangent weights.
struct FixedPoint {
    std::string name;
    LinearForm moment;
    std::vector<LinearForm> weights;
};

/// One line-bundle summand of the normal bundle of a fixed component:
/// equivariant weight beta plus c1 = c1_multiple * h for the degree-2
/// generator h of the component's cohomology.
struct NormalFactor {
    LinearForm beta;
    long long c1_multiple = 0;

    bool operator==(const NormalFactor&) const = default;
};

/*
 * A connected component F of the fixed-point set. dimC is the complex
 * dimension m of F; its cohomology is modelled by the single degree-2
 * generator h with h^{m+1} = 0 and generator_integral = integral of h^m
 * over F. m = 0 degenerates to an isolated point.
 */
struct FixedComponent {
    std::string name;
    std::uint32_t dimC = 0;
    LinearForm moment;
    std::vector<NormalFactor> normal;
    Rational generator_integral = Rational(1);

    bool is_point() const { return dimC == 0; }

    FixedPoint as_point() const {
        FixedPoint p{name, moment, {}};
        p.weights.reserve(normal.size());
        for (const auto& nf : normal) p.weights.push_back(nf.beta);
        return p;
    }

    static FixedComponent point(FixedPoint p) {
        FixedComponent c;
        c.name = std::move(p.name);
        c.moment = std::move(p.moment);
        for (auto& w : p.weights) c.normal.push_back({std::move(w), 0});
        return c;
    }

    bool operator==(const FixedComponent&) const = default;
};

/*
 * A compact symplectic manifold with a Hamiltonian torus action, reduced to
 * the data localization actually consumes: torus rank, complex dimension and
 * the list of fixed components. `noncompact` marks models (e.g. the Gaussian
 * plane) whose fixed-point sums are exempt from the polynomiality check.
 */
struct TorusModel {
    std::uint32_t rank = 1;
    std::uint32_t dimC = 0;
    std::vector<FixedComponent> components;
    bool noncompact = false;

    bool all_isolated() const {
        for (const auto& c : components)
            if (!c.is_point()) return false;
        return true;
    }

    /// Checks every structural invariant; throws ValidationError naming the
    /// offending component.
    void validate() const {
        if (rank == 0)
            throw ValidationError("model rank must be positive");
        if (components.empty())
            throw ValidationError("model needs at least one fixed component");
        for (std::size_t i = 0; i < components.size(); ++i)
            for (std::size_t j = i + 1; j < components.size(); ++j)
                if (components[i].name == components[j].name)
                    throw ValidationError("duplicate component name '" + components[i].name +
                                          "'");
        for (const auto& c : components) {
            if (c.moment.rank() != rank)
                throw ValidationError("component '" + c.name + "': moment has wrong rank");
            if (c.dimC + c.normal.size() != dimC)
                throw ValidationError("component '" + c.name +
                                      "': dimC + normal weight count != model dimC");
            if (c.is_point() && c.generator_integral != 1)
                throw ValidationError("component '" + c.name +
                                      "': a point must have generator_integral 1");
            if (!c.is_point() && c.generator_integral == 0)
                throw ValidationError("component '" + c.name +
                                      "': generator_integral must be nonzero");
            for (const auto& nf : c.normal) {
                if (nf.beta.rank() != rank)
                    throw ValidationError("component '" + c.name + "': weight has wrong rank");
                if (nf.beta.is_zero())
                    throw ValidationError("component '" + c.name + "' has a zero weight");
            }
        }
    }

    bool operator==(const TorusModel&) const = default;
};

/*
 * The rotation action on the two-sphere with symplectic area 2*scale.
 * Moments are +-scale*t0 at the poles; the weight at each pole carries the
 * same sign as its moment, which is the pairing under which the localized
 * area comes out positive.
 */
inline TorusModel builtin_s2(const Rational& scale) {
    if (scale == 0)
        throw ValidationError("s2 scale must be nonzero");
    TorusModel m;
    m.rank = 1;
    m.dimC = 1;
    m.components.push_back(
        FixedComponent::point({"N", LinearForm::variable(1, 0, scale), {LinearForm::variable(1, 0)}}));
    m.components.push_back(FixedComponent::point(
        {"S", LinearForm::variable(1, 0, -scale), {LinearForm::variable(1, 0, Rational(-1))}}));
    return m;
}

/*
 * Complex projective n-space under the (n+1)-torus. Fixed points are the
 * coordinate axes f_i with moment t_i and tangent weights {t_i - t_j : j != i}.
 * With this orientation of the weights the n-th moment-power integral equals
 * +1 (the Lagrange interpolation identity); the opposite orientation would
 * give (-1)^n.
 */
inline TorusModel builtin_cpn(std::uint32_t n) {
    if (n == 0)
        throw ValidationError("cpn needs n >= 1");
    TorusModel m;
    m.rank = n + 1;
    m.dimC = n;
    for (std::uint32_t i = 0; i <= n; ++i) {
        FixedPoint p;
        p.name = "f" + std::to_string(i);
        p.moment = LinearForm::variable(n + 1, i);
        for (std::uint32_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            p.weights.push_back(LinearForm::variable(n + 1, i) -
                                LinearForm::variable(n + 1, j));
        }
        m.components.push_back(FixedComponent::point(std::move(p)));
    }
    return m;
}

/// The circle acting on the complex plane: one fixed point at the origin with
/// weight t0 and moment 0. Noncompact; used by the closed-form
/// Duistermaat-Heckman sum.
inline TorusModel builtin_gaussian() {
    TorusModel m;
    m.rank = 1;
    m.dimC = 1;
    m.noncompact = true;
    m.components.push_back(
        FixedComponent::point({"origin", LinearForm::zero(1), {LinearForm::variable(1, 0)}}));
    return m;
}

/*
 * Cartesian product: ranks add (variables of b are shifted past those of a),
 * components pair up, moments add and normal data concatenates. Pairing two
 * positive-dimensional components is rejected: it would need a second
 * cohomology generator.
 */
inline TorusModel product(const TorusModel& a, const TorusModel& b) {
    TorusModel m;
    m.rank = a.rank + b.rank;
    m.dimC = a.dimC + b.dimC;
    m.noncompact = a.noncompact || b.noncompact;
    for (const auto& ca : a.components) {
        for (const auto& cb : b.components) {
            if (!ca.is_point() && !cb.is_point())
                throw UnsupportedComponentProduct(
                    "cannot pair positive-dimensional components '" + ca.name + "' and '" +
                    cb.name + "'");
            FixedComponent c;
            c.name = "(" + ca.name + "," + cb.name + ")";
            c.dimC = ca.dimC + cb.dimC;
            c.moment = ca.moment.embedded(m.rank, 0) + cb.moment.embedded(m.rank, a.rank);
            for (const auto& nf : ca.normal)
                c.normal.push_back({nf.beta.embedded(m.rank, 0), nf.c1_multiple});
            for (const auto& nf : cb.normal)
                c.normal.push_back({nf.beta.embedded(m.rank, a.rank), nf.c1_multiple});
            c.generator_integral = ca.generator_integral * cb.generator_integral;
            m.components.push_back(std::move(c));
        }
    }
    return m;
}

/*
 * Precomposition with a homomorphism of tori: every linear form is composed
 * with the integer matrix (rows = old parameters expressed in the new ones).
 * Refuses to proceed when any weight collapses to zero, since the restricted
 * action then has a strictly larger fixed set and the data is no longer valid.
 */
inline TorusModel subtorus_restrict(const TorusModel& m,
                                    const std::vector<std::vector<long long>>& map) {
    if (map.size() != m.rank)
        throw ValidationError("subtorus matrix must have one row per torus parameter");
    const std::size_t new_rank = map.empty() ? 0 : map.front().size();
    if (new_rank == 0)
        throw ValidationError("subtorus matrix must have at least one column");

    TorusModel r;
    r.rank = static_cast<std::uint32_t>(new_rank);
    r.dimC = m.dimC;
    r.noncompact = m.noncompact;
    for (const auto& c : m.components) {
        FixedComponent rc;
        rc.name = c.name;
        rc.dimC = c.dimC;
        rc.generator_integral = c.generator_integral;
        rc.moment = c.moment.composed(map, new_rank);
        for (const auto& nf : c.normal) {
            LinearForm beta = nf.beta.composed(map, new_rank);
            if (beta.is_zero())
                throw WeightCollapsesToZero(
                    c.name, Polynomial::from_linear_form(nf.beta).to_string());
            rc.normal.push_back({std::move(beta), nf.c1_multiple});
        }
        r.components.push_back(std::move(rc));
    }
    return r;
}

/// Applies a permutation of the torus coordinates to every form in the model.
inline TorusModel permute_variables(const TorusModel& m, const std::vector<std::size_t>& perm) {
    TorusModel r = m;
    for (auto& c : r.components) {
        c.moment = c.moment.permuted(perm);
        for (auto& nf : c.normal) nf.beta = nf.beta.permuted(perm);
    }
    return r;
}

}  // namespace eqloc
