#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2dist/padic.hpp"
#include "gl2dist/report.hpp"
#include "gl2dist/towers.hpp"

namespace gl2dist::acceptance {

/// Numerical tolerance for every complex comparison in the suite.
inline constexpr double kTolerance = 1e-9;

struct Config {
    /// When set, every criterion runs at this prime instead of its default prime list.
    std::optional<int> prime;
    int max_denominator = 8;
    int precision = 24;
    std::uint64_t seed = 1;
};

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

std::vector<Result> run_all(const Config& config);
Result run_one(int id, const Config& config);
inline constexpr int kCriteria = 12;

/// "[PASS]  1  name  (0.12 s)  detail".
std::string format(const Result& r);
/// {"all_pass", "criteria": [{"id", "name", "pass", "seconds", "detail"}]}.
Json to_json(const std::vector<Result>& results);

// Independent oracles, exposed for the unit tests.

/// (a, b)_p by searching x² - b·y² over integers and comparing square classes of a.
int hilbert_bruteforce(long long a, long long b, int p);

/// Galois type of F(√d, √e), e = e0 + e1·√d, from the square class of N(e) = e0² - d·e1²:
/// a square gives Biquadratic, d times a square Cyclic, anything else NonGalois.
GaloisType galois_type_closed_form(const PAdic& d, const PAdic& e0, const PAdic& e1);

}  // namespace gl2dist::acceptance
