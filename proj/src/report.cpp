#include "gl2dist/report.hpp"

#include <iomanip>
#include <sstream>

namespace gl2dist {

namespace {

std::string subfield_name(Subfield s) {
    switch (s) {
        case Subfield::K: return "K";
        case Subfield::Kp: return "K'";
        case Subfield::Kpp: return "K''";
    }
    return "?";
}

std::string char_str(const Json& c) { return "t=" + c["t"].get<std::string>() + ";m=" + std::to_string(c["m"].get<long long>()); }

}  // namespace

Json to_json(const MultChar& chi) { return {{"t", chi.t.str()}, {"m", chi.m}}; }

Json to_json(const EpsilonValue& e) {
    Json j;
    j["exact"] = e.exact ? Json(e.exact->str()) : Json(nullptr);
    if (e.approx) {
        j["approx"] = {{"re", e.approx->real()}, {"im", e.approx->imag()}};
    } else {
        j["approx"] = nullptr;
    }
    j["provenance"] = to_string(e.provenance);
    return j;
}

Json to_json(const HakimReport& h) {
    Json rows = Json::array();
    for (const TwistRow& r : h.rows) {
        Json row = {{"chi", to_json(r.chi)}, {"mu", to_json(r.mu)}, {"epsilon_exact", r.epsilon.str()}, {"epsilon_is_one", r.is_one()}};
        if (r.approx) row["epsilon_approx"] = {{"re", r.approx->real()}, {"im", r.approx->imag()}};
        rows.push_back(std::move(row));
    }
    return {{"holds", h.holds}, {"subfield", subfield_name(h.subfield)}, {"lambda", h.lambda.str()}, {"twists", std::move(rows)}};
}

Json classify_json(const std::string& spec, const Tower& t) {
    Json fields;
    fields["F"] = t.F->name();
    fields["K"] = t.K->describe();
    Json j = {{"spec", spec}, {"p", t.F->p()}};
    if (!t.lattice) {
        j["type"] = "quadratic";
        j["fields"] = std::move(fields);
        return j;
    }
    const Lattice& lat = *t.lattice;
    j["type"] = to_string(lat.type);
    fields["L"] = lat.L->describe();
    switch (lat.type) {
        case GaloisType::Biquadratic:
            fields["K'"] = lat.biquad->Kp->describe();
            fields["K''"] = lat.biquad->Kpp->describe();
            break;
        case GaloisType::Cyclic:
            fields["theta_tilde_order"] = automorphism_order(*lat.theta_tilde);
            break;
        case GaloisType::NonGalois: {
            const NonGaloisLattice& ng = *lat.nongalois;
            fields["L'"] = ng.Lp->describe();
            fields["M"] = ng.M->describe();
            fields["B"] = ng.B.L->describe();
            fields["K'"] = ng.B.Kp->describe();
            fields["aut_M_order"] = ng.automorphisms.size();
            break;
        }
    }
    j["fields"] = std::move(fields);
    return j;
}

Json verdict_json(const std::string& spec, const MultChar& omega, const Verdict& v) {
    return {{"lattice", spec},
            {"omega", to_json(omega)},
            {"regular", v.regular},
            {"plus_distinguished", v.plus_distinguished},
            {"verdict", to_string(v.verdict)},
            {"witness", v.witness}};
}

Json enumerate_json(const std::string& spec, int max_denominator, bool regular_only, const VerdictTable& table) {
    Json rows = Json::array();
    for (const VerdictRow& r : table.rows) rows.push_back(verdict_json(spec, r.omega, r.verdict));
    return {{"lattice", spec},
            {"max_denominator", max_denominator},
            {"regular_only", regular_only},
            {"counts",
             {{"distinguished", table.distinguished},
              {"eta_distinguished", table.eta_distinguished},
              {"not_distinguished", table.not_distinguished}}},
            {"rows", std::move(rows)}};
}

std::string classify_table(const Json& j) {
    std::ostringstream out;
    out << "spec  " << j["spec"].get<std::string>() << "\n";
    out << "p     " << j["p"].get<int>() << "\n";
    out << "type  " << j["type"].get<std::string>() << "\n";
    for (const auto& [k, v] : j["fields"].items()) {
        out << std::left << std::setw(18) << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return out.str();
}

std::string verdict_table(const Json& j) {
    std::ostringstream out;
    out << std::left << std::setw(20) << "lattice" << j["lattice"].get<std::string>() << "\n"
        << std::setw(20) << "omega" << char_str(j["omega"]) << "\n"
        << std::setw(20) << "regular" << (j["regular"].get<bool>() ? "yes" : "no") << "\n"
        << std::setw(20) << "plus_distinguished" << (j["plus_distinguished"].get<bool>() ? "yes" : "no") << "\n"
        << std::setw(20) << "verdict" << j["verdict"].get<std::string>() << "\n"
        << std::setw(20) << "witness" << j["witness"].get<std::string>() << "\n";
    return out.str();
}

std::string enumerate_table(const Json& j) {
    std::ostringstream out;
    out << std::left << std::setw(18) << "omega" << std::setw(9) << "regular" << std::setw(19) << "verdict" << "witness\n";
    for (const Json& r : j["rows"]) {
        out << std::setw(18) << char_str(r["omega"]) << std::setw(9) << (r["regular"].get<bool>() ? "yes" : "no") << std::setw(19)
            << r["verdict"].get<std::string>() << r["witness"].get<std::string>() << "\n";
    }
    const Json& c = j["counts"];
    out << "distinguished " << c["distinguished"].get<int>() << ", eta-distinguished " << c["eta_distinguished"].get<int>()
        << ", not-distinguished " << c["not_distinguished"].get<int>() << "\n";
    return out.str();
}

std::string epsilon_table(const Json& j) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "spec" << j["spec"].get<std::string>() << "\n"
        << std::setw(12) << "pair" << j["pair"].get<std::string>() << "\n"
        << std::setw(12) << "chi" << char_str(j["chi"]) << "\n";
    const Json& e = j["epsilon"];
    out << std::setw(12) << "exact" << (e["exact"].is_null() ? "-" : e["exact"].get<std::string>()) << "\n";
    if (!e["approx"].is_null()) {
        out << std::setw(12) << "approx" << std::setprecision(12) << e["approx"]["re"].get<double>() << " + "
            << e["approx"]["im"].get<double>() << "i\n";
    }
    out << std::setw(12) << "provenance" << e["provenance"].get<std::string>() << "\n";
    return out.str();
}

}  // namespace gl2dist
