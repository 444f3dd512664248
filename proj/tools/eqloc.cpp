// Command-line front end: load or generate fixed-point models, localize
// equivariant integrals and print exact results.
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 mathematical
// inconsistency (pole cancellation or volume constancy failed).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqloc/eqloc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;

struct CommonOptions {
    std::string model_path;
    std::string builtin_spec;
    std::string scale_text = "1";
    std::uint64_t seed = 0;
    bool contributions = false;
};

void attach_model_options(CLI::App* cmd, CommonOptions& opts) {
    auto* model = cmd->add_option("--model", opts.model_path, "model file (JSON)");
    auto* builtin = cmd->add_option("--builtin", opts.builtin_spec,
                                    "builtin model: s2 | cpn[:n] | gaussian | "
                                    "product:<spec>,<spec>[,...]");
    model->excludes(builtin);
    cmd->add_option("--scale", opts.scale_text, "rational scale for s2 builtins (default 1)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw eqloc::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

eqloc::TorusModel parse_builtin(const std::string& spec, const eqloc::Rational& scale) {
    using namespace eqloc;
    if (spec == "s2") return builtin_s2(scale);
    if (spec == "gaussian") return builtin_gaussian();
    if (spec == "cpn") return builtin_cpn(1);
    if (spec.rfind("cpn:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(spec.substr(4));
        } catch (const std::exception&) {
            throw ParseError("bad cpn dimension in '" + spec + "'");
        }
        if (n < 1)
            throw ParseError("cpn needs n >= 1");
        return builtin_cpn(static_cast<std::uint32_t>(n));
    }
    if (spec.rfind("product:", 0) == 0) {
        std::string rest = spec.substr(8);
        std::vector<TorusModel> factors;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string element =
                comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
            if (element.empty() || element.rfind("product:", 0) == 0)
                throw ParseError("bad product element '" + element + "' in '" + spec + "'");
            factors.push_back(parse_builtin(element, scale));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (factors.size() < 2)
            throw ParseError("product needs at least two factors");
        TorusModel m = factors.front();
        for (std::size_t i = 1; i < factors.size(); ++i) m = product(m, factors[i]);
        return m;
    }
    throw ParseError("unknown builtin '" + spec + "'");
}

eqloc::TorusModel resolve_model(const CommonOptions& opts) {
    if (opts.model_path.empty() == opts.builtin_spec.empty())
        throw eqloc::ParseError("choose exactly one of --model or --builtin");
    if (!opts.model_path.empty())
        return eqloc::load_model(read_file(opts.model_path));
    return parse_builtin(opts.builtin_spec, eqloc::parse_rational(opts.scale_text));
}

void print_contributions(const eqloc::LocalizationResult& result) {
    for (const auto& [name, contribution] : result.contributions)
        std::cout << name << ": " << contribution.to_string() << "\n";
}

/// "4π ≈ 12.566370614359172" for constant results of a degree-k moment-power
/// integrand under the substitution scale -> 2π.
void print_two_pi_rendering(const eqloc::Rational& constant, std::uint64_t k) {
    eqloc::Rational coeff = constant;
    for (std::uint64_t i = 0; i < k; ++i) coeff *= eqloc::Rational(2);
    const double pi = std::acos(-1.0);
    double value = static_cast<double>(numerator(constant)) /
                   static_cast<double>(denominator(constant));
    for (std::uint64_t i = 0; i < k; ++i) value *= 2.0 * pi;

    std::string rendered;
    if (k == 0) {
        rendered = eqloc::to_string(coeff);
    } else {
        if (coeff == -1)
            rendered = "-";
        else if (coeff != 1)
            rendered = eqloc::to_string(coeff);
        rendered += "π";
        if (k > 1) rendered += "^" + std::to_string(k);
    }
    std::ostringstream out;
    out.precision(15);
    out << value;
    std::cout << rendered << " ≈ " << out.str() << "\n";
}

int run_integrate(const CommonOptions& opts, std::optional<std::uint64_t> power,
                  bool chern_power, const std::string& class_file, bool scale_two_pi) {
    using namespace eqloc;
    TorusModel m = resolve_model(opts);

    EquivariantIntegrand integrand = EquivariantIntegrand::power(0);
    std::optional<std::uint64_t> effective_power;
    if (chern_power) {
        effective_power = m.dimC;
    } else if (power) {
        effective_power = *power;
    }
    if (effective_power && !class_file.empty())
        throw ParseError("choose one of --power/--chern-power or --class-file");
    if (effective_power) {
        integrand = EquivariantIntegrand::power(*effective_power);
    } else if (!class_file.empty()) {
        integrand = EquivariantIntegrand::classes(load_class_file(read_file(class_file), m));
    } else {
        throw ParseError("integrate needs --power, --chern-power or --class-file");
    }

    LocalizationResult result = localize(m, integrand);
    std::cout << "result = " << result.value.to_string() << "\n";
    if (scale_two_pi) {
        if (!effective_power || !result.value.is_constant())
            throw ParseError("--scale-two-pi needs a moment-power integrand with constant result");
        print_two_pi_rendering(result.value.constant_value(), *effective_power);
    }
    if (opts.contributions) print_contributions(result);
    return kExitOk;
}

int run_volume(const CommonOptions& opts) {
    using namespace eqloc;
    TorusModel m = resolve_model(opts);
    std::cout << to_string(dh_volume(m)) << "\n";
    if (opts.contributions)
        print_contributions(localize(m, EquivariantIntegrand::power(m.dimC)));
    return kExitOk;
}

int run_chi(const CommonOptions& opts) {
    using namespace eqloc;
    TorusModel m = resolve_model(opts);
    std::cout << euler_characteristic(m) << "\n";
    if (opts.contributions) {
        ExplicitClasses classes;
        for (const auto& c : m.components)
            classes.emplace(c.name, TruncatedSeries<Polynomial>({euler_class_at(c.as_point())}));
        print_contributions(localize(m, EquivariantIntegrand::classes(std::move(classes))));
    }
    return kExitOk;
}

int run_dh(const CommonOptions& opts, std::optional<std::uint64_t> order) {
    using namespace eqloc;
    TorusModel m = resolve_model(opts);
    if (m.noncompact) {
        std::cout << "closed form = " << dh_closed_form(m).to_string() << "\n";
        return kExitOk;
    }
    const std::uint64_t effective_order = order.value_or(m.dimC);
    std::vector<Polynomial> entries = dh_series(m, effective_order);
    for (std::size_t k = 0; k < entries.size(); ++k)
        std::cout << k << "!: " << entries[k].to_string() << "\n";
    return kExitOk;
}

int run_check(const CommonOptions& opts) {
    using namespace eqloc;
    bool all_passed = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && !detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
        if (!ok) all_passed = false;
    };

    TorusModel m;
    try {
        m = resolve_model(opts);
        m.validate();
        report("validation", true);
    } catch (const ValidationError& e) {
        report("validation", false, e.what());
        return kExitCheckFailed;
    }

    if (!m.all_isolated() || m.noncompact) {
        std::cout << "SKIP polynomiality checks: "
                  << (m.noncompact ? "noncompact model" : "positive-dimensional components")
                  << "\n";
        return all_passed ? kExitOk : kExitCheckFailed;
    }

    LocalizationResult power_result;
    try {
        power_result = localize(m, EquivariantIntegrand::power(m.dimC));
        report("polynomiality of the degree-n moment power", true);
    } catch (const NonPolynomialResult& e) {
        report("polynomiality of the degree-n moment power", false,
               "remainder " + e.remainder.to_string());
    }

    try {
        ExplicitClasses classes;
        for (const auto& c : m.components)
            classes.emplace(c.name, TruncatedSeries<Polynomial>({euler_class_at(c.as_point())}));
        localize(m, EquivariantIntegrand::classes(std::move(classes)));
        report("polynomiality of the Euler integrand", true);
    } catch (const NonPolynomialResult& e) {
        report("polynomiality of the Euler integrand", false,
               "remainder " + e.remainder.to_string());
    }

    if (!power_result.contributions.empty()) {
        LinFactoredRational sum = LinFactoredRational::zero(m.rank);
        for (const auto& [name, contribution] : power_result.contributions) sum += contribution;
        const bool ok = oracle::rat_equal_by_evaluation(
            sum, LinFactoredRational(power_result.value), 8, opts.seed);
        report("contribution sum matches value under random evaluation", ok);
    }

    return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant localization over torus fixed-point data"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto* integrate = app.add_subcommand("integrate", "localize an equivariant integrand");
    attach_model_options(integrate, opts);
    std::optional<std::uint64_t> power;
    bool chern_power = false;
    std::string class_file;
    bool scale_two_pi = false;
    integrate->add_option("--power", power, "integrate (omega + moment)^k");
    integrate->add_flag("--chern-power", chern_power,
                        "integrate the top moment power (k = dimC)");
    integrate->add_option("--class-file", class_file, "explicit per-component classes (JSON)");
    integrate->add_flag("--contributions", opts.contributions,
                        "print one line per fixed component");
    integrate->add_flag("--scale-two-pi", scale_two_pi,
                        "also print the result with the scale set to 2π");

    auto* volume = app.add_subcommand("volume", "symplectic volume via Duistermaat-Heckman");
    attach_model_options(volume, opts);
    volume->add_flag("--contributions", opts.contributions,
                     "print one line per fixed component");

    auto* chi = app.add_subcommand("chi", "Euler characteristic via Gauss-Bonnet");
    attach_model_options(chi, opts);
    chi->add_flag("--contributions", opts.contributions,
                  "print one line per fixed component");

    auto* dh = app.add_subcommand("dh", "Duistermaat-Heckman series");
    attach_model_options(dh, opts);
    std::optional<std::uint64_t> order;
    dh->add_option("--order", order, "truncation order (default: dimC)");

    auto* check = app.add_subcommand("check", "validate a model and probe pole cancellation");
    attach_model_options(check, opts);
    check->add_option("--seed", opts.seed, "seed for the random-evaluation cross-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (integrate->parsed())
            return run_integrate(opts, power, chern_power, class_file, scale_two_pi);
        if (volume->parsed()) return run_volume(opts);
        if (chi->parsed()) return run_chi(opts);
        if (dh->parsed()) return run_dh(opts, order);
        if (check->parsed()) return run_check(opts);
    } catch (const eqloc::NonPolynomialResult& e) {
        std::cout << "remainder = " << e.remainder.to_string() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const eqloc::NonConstantVolume& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const eqloc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
