#include "gl2dist/commands.hpp"

#include <cmath>

#include "gl2dist/errors.hpp"

namespace gl2dist {

namespace {

const Lattice& require_lattice(const Tower& t, const char* what) {
    if (!t.lattice) throw MathError(std::string(what) + " needs a spec with L");
    return *t.lattice;
}

Tower tower_for(const std::string& field_spec, const RunConfig& config) {
    validate(config);
    const FieldSpec spec = parse_field_spec(field_spec);
    return build_tower(spec, resolve_prime(spec, config), config.precision);
}

}  // namespace

void validate(const RunConfig& config) {
    if (config.prime) {
        const int p = *config.prime;
        if (p != 3 && p != 5 && p != 7 && p != 11 && p != 13) throw MathError("p must be one of 3, 5, 7, 11, 13");
    }
    if (config.precision < 8) throw MathError("precision must be at least 8");
    if (config.max_denominator < 1 || config.max_denominator > 64) throw MathError("max denominator must lie in [1, 64]");
}

int resolve_prime(const FieldSpec& spec, const RunConfig& config) {
    if (spec.prime && config.prime && *spec.prime != *config.prime) {
        throw MathError("the spec names Q" + std::to_string(*spec.prime) + " but p = " + std::to_string(*config.prime));
    }
    const int p = spec.prime ? *spec.prime : config.prime.value_or(3);
    RunConfig check = config;
    check.prime = p;
    validate(check);
    return p;
}

Json cmd_classify(const std::string& field_spec, const RunConfig& config) {
    return classify_json(field_spec, tower_for(field_spec, config));
}

Json cmd_decide(const std::string& field_spec, const std::string& omega_spec, const RunConfig& config) {
    const Tower t = tower_for(field_spec, config);
    const Lattice& lat = require_lattice(t, "decide");
    const MultChar omega = make_spec_char(lat.L, parse_char_spec(omega_spec));
    return verdict_json(field_spec, omega, decide_dihedral(make_datum(lat, omega)));
}

Json cmd_enumerate(const std::string& field_spec, bool regular_only, const RunConfig& config) {
    const Tower t = tower_for(field_spec, config);
    const Lattice& lat = require_lattice(t, "enumerate");
    return enumerate_json(field_spec, config.max_denominator, regular_only, enumerate_verdicts(lat, config.max_denominator, regular_only));
}

Json cmd_epsilon(const std::string& field_spec, const std::string& chi_spec, const std::optional<std::string>& pair,
                 bool gauss_oracle, const RunConfig& config) {
    const Tower t = tower_for(field_spec, config);
    const std::string name = pair.value_or(t.lattice ? "L/K" : "K/F");
    std::optional<QuadraticPair> chosen;
    if (name == "K/F") {
        chosen = t.lattice ? t.lattice->K_F : tower_pair(t.K, "K/F");
    } else if (name == "L/K") {
        chosen = require_lattice(t, "pair L/K").L_K;
    } else if (name == "L/K'" || name == "L/K''") {
        const Lattice& lat = require_lattice(t, "pair L/K'");
        if (!lat.biquad) throw MathError("pairs L/K' and L/K'' need a biquadratic L");
        chosen = name == "L/K'" ? lat.biquad->L_Kp : lat.biquad->L_Kpp;
    } else {
        throw ParseError("unknown pair '" + name + "' (K/F, L/K, L/K', L/K'')", 0);
    }
    const MultChar chi = make_spec_char(chosen->top, parse_char_spec(chi_spec));
    EpsilonValue value;
    if (!gauss_oracle) {
        value = fq_epsilon(chi, *chosen);
    } else {
        value = gauss_epsilon(chi, standard_additive(chosen->top));
        try {
            value.exact = fq_epsilon(chi, *chosen).exact;
        } catch (const RegimeRefusal&) {
            value.exact.reset();
        }
    }
    Json j = {{"spec", field_spec}, {"pair", name}, {"chi", to_json(chi)}, {"epsilon", to_json(value)}};
    if (value.exact && value.approx) j["oracle_error"] = std::abs(*value.approx - to_complex(*value.exact));
    return j;
}

Json cmd_hakim(const std::string& field_spec, const std::string& omega_spec, const RunConfig& config) {
    const Tower t = tower_for(field_spec, config);
    const Lattice& lat = require_lattice(t, "hakim");
    if (!lat.biquad) throw MathError("hakim needs a biquadratic L");
    const MultChar omega = make_spec_char(lat.L, parse_char_spec(omega_spec));
    Json j = {{"lattice", field_spec}, {"omega", to_json(omega)}};
    j["report"] = to_json(hakim_check(*lat.biquad, omega, config.max_denominator, true));
    return j;
}

}  // namespace gl2dist
