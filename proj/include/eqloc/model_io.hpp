#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqloc/errors.hpp"
#include "eqloc/localize.hpp"
#include "eqloc/model.hpp"
#include "eqloc/polynomial.hpp"
#include "eqloc/rational.hpp"

namespace eqloc {

/*
 * Model files are UTF-8 JSON:
 *
 *   {"rank": 1, "dimC": 1, "components": [
 *     {"name": "N", "moment": ["1"], "weights": [["-1"]]},
 *     ...]}
 *
 * Isolated points carry "weights" (one coefficient array per weight);
 * positive-dimensional components instead carry "dimC", "normal_weights"
 * ([{"beta": [...], "c1_multiple": d}, ...]) and "generator_integral".
 * Rationals are strings: optional sign, digits, optional "/" digits.
 * An optional top-level "noncompact": true marks models exempt from the
 * polynomiality check.
 */

namespace detail {

using json = nlohmann::ordered_json;

inline LinearForm form_from_json(const json& j, std::size_t rank, const std::string& where) {
    if (!j.is_array() || j.size() != rank)
        throw ParseError(where + ": expected an array of " + std::to_string(rank) +
                         " rational strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(rank);
    for (const auto& entry : j) {
        if (!entry.is_string())
            throw ParseError(where + ": coefficients must be rational strings");
        coeffs.push_back(parse_rational(entry.get<std::string>()));
    }
    return LinearForm(std::move(coeffs));
}

inline json form_to_json(const LinearForm& f) {
    json arr = json::array();
    for (const auto& c : f.coefficients()) arr.push_back(to_string(c));
    return arr;
}

}  // namespace detail

inline TorusModel load_model(std::string_view text) {
    namespace dj = detail;
    dj::json root;
    try {
        root = dj::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ParseError("model file must be a JSON object");
    if (!root.contains("rank") || !root["rank"].is_number_unsigned())
        throw ParseError("model file needs a non-negative integer field 'rank'");
    if (!root.contains("dimC") || !root["dimC"].is_number_unsigned())
        throw ParseError("model file needs a non-negative integer field 'dimC'");
    if (!root.contains("components") || !root["components"].is_array())
        throw ParseError("model file needs an array field 'components'");

    TorusModel m;
    m.rank = root["rank"].get<std::uint32_t>();
    m.dimC = root["dimC"].get<std::uint32_t>();
    if (root.contains("noncompact")) {
        if (!root["noncompact"].is_boolean())
            throw ParseError("'noncompact' must be a boolean");
        m.noncompact = root["noncompact"].get<bool>();
    }

    for (const auto& cj : root["components"]) {
        if (!cj.is_object())
            throw ParseError("components must be objects");
        FixedComponent c;
        if (!cj.contains("name") || !cj["name"].is_string())
            throw ParseError("every component needs a string 'name'");
        c.name = cj["name"].get<std::string>();
        const std::string where = "component '" + c.name + "'";

        if (cj.contains("dimC")) {
            if (!cj["dimC"].is_number_unsigned())
                throw ParseError(where + ": 'dimC' must be a non-negative integer");
            c.dimC = cj["dimC"].get<std::uint32_t>();
        }
        if (!cj.contains("moment"))
            throw ParseError(where + ": missing 'moment'");
        c.moment = dj::form_from_json(cj["moment"], m.rank, where + " moment");

        const bool has_weights = cj.contains("weights");
        const bool has_normal = cj.contains("normal_weights");
        if (has_weights == has_normal)
            throw ParseError(where + ": needs exactly one of 'weights' or 'normal_weights'");
        if (has_weights) {
            if (c.dimC != 0)
                throw ParseError(where + ": 'weights' form requires dimC 0");
            if (!cj["weights"].is_array())
                throw ParseError(where + ": 'weights' must be an array");
            for (const auto& wj : cj["weights"])
                c.normal.push_back({dj::form_from_json(wj, m.rank, where + " weight"), 0});
        } else {
            if (!cj["normal_weights"].is_array())
                throw ParseError(where + ": 'normal_weights' must be an array");
            for (const auto& nj : cj["normal_weights"]) {
                if (!nj.is_object() || !nj.contains("beta") || !nj.contains("c1_multiple") ||
                    !nj["c1_multiple"].is_number_integer())
                    throw ParseError(where +
                                     ": normal weights need 'beta' and integer 'c1_multiple'");
                c.normal.push_back({dj::form_from_json(nj["beta"], m.rank, where + " beta"),
                                    nj["c1_multiple"].get<long long>()});
            }
            if (!cj.contains("generator_integral") || !cj["generator_integral"].is_string())
                throw ParseError(where + ": needs a rational string 'generator_integral'");
            c.generator_integral = parse_rational(cj["generator_integral"].get<std::string>());
        }
        m.components.push_back(std::move(c));
    }
    m.validate();
    return m;
}

inline std::string render_model(const TorusModel& m) {
    namespace dj = detail;
    dj::json root;
    root["rank"] = m.rank;
    root["dimC"] = m.dimC;
    if (m.noncompact) root["noncompact"] = true;
    root["components"] = dj::json::array();
    for (const auto& c : m.components) {
        dj::json cj;
        cj["name"] = c.name;
        if (!c.is_point()) cj["dimC"] = c.dimC;
        cj["moment"] = dj::form_to_json(c.moment);
        if (c.is_point()) {
            dj::json ws = dj::json::array();
            for (const auto& nf : c.normal) ws.push_back(dj::form_to_json(nf.beta));
            cj["weights"] = ws;
        } else {
            dj::json ns = dj::json::array();
            for (const auto& nf : c.normal) {
                dj::json nj;
                nj["beta"] = dj::form_to_json(nf.beta);
                nj["c1_multiple"] = nf.c1_multiple;
                ns.push_back(nj);
            }
            cj["normal_weights"] = ns;
            cj["generator_integral"] = to_string(c.generator_integral);
        }
        root["components"].push_back(cj);
    }
    return root.dump(2) + "\n";
}

/*
 * Class files give the restricted integrand per component:
 *
 *   {"components": {"f0": "t0^2", "F": ["0", "1"]}}
 *
 * A string is a polynomial in the canonical format (length-1 class, for
 * points); an array lists the h^0..h^m coefficients of a truncated class.
 */
inline ExplicitClasses load_class_file(std::string_view text, const TorusModel& m) {
    namespace dj = detail;
    dj::json root;
    try {
        root = dj::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("class file is not valid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("components") || !root["components"].is_object())
        throw ParseError("class file needs an object field 'components'");

    ExplicitClasses classes;
    for (const auto& [name, value] : root["components"].items()) {
        std::vector<Polynomial> coeffs;
        if (value.is_string()) {
            coeffs.push_back(parse_polynomial(value.get<std::string>(), m.rank));
        } else if (value.is_array()) {
            for (const auto& entry : value) {
                if (!entry.is_string())
                    throw ParseError("class for '" + name + "': entries must be polynomial strings");
                coeffs.push_back(parse_polynomial(entry.get<std::string>(), m.rank));
            }
            if (coeffs.empty())
                throw ParseError("class for '" + name + "' is empty");
        } else {
            throw ParseError("class for '" + name + "' must be a string or array of strings");
        }
        classes.emplace(name, TruncatedSeries<Polynomial>(std::move(coeffs)));
    }
    return classes;
}

}  // namespace eqloc
