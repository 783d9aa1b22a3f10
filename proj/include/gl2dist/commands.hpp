#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gl2dist/report.hpp"

namespace gl2dist {

struct RunConfig {
    /// Unset: the prime named by the spec, else 3.
    std::optional<int> prime;
    int precision = 24;
    int max_denominator = 8;
    std::uint64_t seed = 1;
};

/// Throws MathError unless p ∈ {3, 5, 7, 11, 13}, precision ≥ 8 and 1 ≤ max_denominator ≤ 64.
void validate(const RunConfig& config);

/// The prime a spec runs at; throws MathError when the spec and the configuration disagree.
int resolve_prime(const FieldSpec& spec, const RunConfig& config);

Json cmd_classify(const std::string& field_spec, const RunConfig& config);
Json cmd_decide(const std::string& field_spec, const std::string& omega_spec, const RunConfig& config);
Json cmd_enumerate(const std::string& field_spec, bool regular_only, const RunConfig& config);

/// pair ∈ {"K/F", "L/K", "L/K'", "L/K''"}, default L/K (K/F when the spec has no L).
/// Without the Gauss oracle only the exact FQ value is computed (RegimeRefusal outside its regime);
/// with it the Gauss-sum value is always given and the FQ value is added when available.
Json cmd_epsilon(const std::string& field_spec, const std::string& chi_spec, const std::optional<std::string>& pair,
                 bool gauss_oracle, const RunConfig& config);

/// hakim_check on a biquadratic spec, twists up to the configured denominator.
Json cmd_hakim(const std::string& field_spec, const std::string& omega_spec, const RunConfig& config);

}  // namespace gl2dist
