#pragma once

#include <string>

#include "json.hpp"

#include "gl2dist/distinction.hpp"
#include "gl2dist/epsilon.hpp"
#include "gl2dist/spec_parser.hpp"

namespace gl2dist {

using Json = nlohmann::ordered_json;

Json to_json(const MultChar& chi);
Json to_json(const EpsilonValue& e);
Json to_json(const HakimReport& h);

/// {"spec", "p", "type", "fields": {...}}; the members listed depend on the Galois type.
Json classify_json(const std::string& spec, const Tower& t);
Json verdict_json(const std::string& spec, const MultChar& omega, const Verdict& v);
Json enumerate_json(const std::string& spec, int max_denominator, bool regular_only, const VerdictTable& table);

/// Aligned plain-text renderings of the same reports.
std::string classify_table(const Json& j);
std::string verdict_table(const Json& j);
std::string enumerate_table(const Json& j);
std::string epsilon_table(const Json& j);

}  // namespace gl2dist
