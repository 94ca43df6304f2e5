#pragma once

// Closed-form degree bounds, spherical-action thresholds, and a suite that
// checks the known non-existence results and bounds against exhaustive
// enumeration.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtroots/rational.hpp"

namespace dtroots {

/// Largest prime power p^a exactly dividing n and the smallest prime q | n.
struct PrimePowerProfile {
    std::int64_t n = 0;
    std::int64_t max_prime_power = 0;
    std::int64_t min_prime = 0;
};

[[nodiscard]] PrimePowerProfile prime_power_profile(std::int64_t n);

/// U(g) = 4g^2 + 2g, g >= 2.
[[nodiscard]] std::int64_t bound_U(std::int64_t g);

/// U(g1, g2) = 16 g1 g2 + 4(2 g1 - g2) - 2, g1 >= g2 >= 1.
[[nodiscard]] std::int64_t bound_U_pair(std::int64_t g1, std::int64_t g2);

/// U(g1, g2, N) = 16 g1 g2 + 4(2 g1 - N g2) - 2N. Only valid for odd N >= 1,
/// g1 >= g2 and both genera > N + 3; otherwise std::invalid_argument.
[[nodiscard]] std::int64_t bound_U_stable(std::int64_t g1, std::int64_t g2, std::int64_t N);

/// (2/3)(2g - 1): every action of larger degree has a spherical quotient.
[[nodiscard]] Rational spherical_threshold(std::int64_t g);

/// (2g - 1) / (2 - 2/q - 1/p^a): every spherical data set of larger degree
/// has exactly two cones.
[[nodiscard]] Rational ell2_threshold(std::int64_t n, std::int64_t g);

struct TheoremCheck {
    std::string theorem;    // stable identifier, e.g. "no-degree-4g+1"
    std::string statement;  // one-line human description
    std::string range;      // what was scanned
    bool passed = true;
    std::size_t cases = 0;  // number of individual instances examined
    std::vector<std::string> witnesses;  // counterexamples, empty on success
};

struct TheoremReport {
    std::int64_t g_max = 0;
    std::vector<TheoremCheck> checks;

    [[nodiscard]] bool all_passed() const;
};

/// Enumerates every genus up to g_max (>= 2) and checks each statement.
[[nodiscard]] TheoremReport verify_theorems(std::int64_t g_max, unsigned width = 1);

[[nodiscard]] nlohmann::ordered_json to_json(const TheoremReport& report);

}  // namespace dtroots
