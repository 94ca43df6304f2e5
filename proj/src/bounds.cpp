#include "dtroots/bounds.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dtroots/enumeration.hpp"
#include "dtroots/notation.hpp"
#include "dtroots/pairing.hpp"
#include "dtroots/parallel.hpp"

namespace dtroots {

PrimePowerProfile prime_power_profile(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("prime_power_profile: need n >= 2");
    PrimePowerProfile profile{n, 0, 0};
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        std::int64_t power = 1;
        while (rest % p == 0) {
            rest /= p;
            power *= p;
        }
        if (profile.min_prime == 0) profile.min_prime = p;
        profile.max_prime_power = std::max(profile.max_prime_power, power);
    }
    if (rest > 1) {
        if (profile.min_prime == 0) profile.min_prime = rest;
        profile.max_prime_power = std::max(profile.max_prime_power, rest);
    }
    return profile;
}

std::int64_t bound_U(std::int64_t g) {
    if (g < 2) throw std::invalid_argument("bound_U: need g >= 2");
    return 4 * g * g + 2 * g;
}

std::int64_t bound_U_pair(std::int64_t g1, std::int64_t g2) {
    if (g2 < 1 || g1 < g2) throw std::invalid_argument("bound_U_pair: need g1 >= g2 >= 1");
    return 16 * g1 * g2 + 4 * (2 * g1 - g2) - 2;
}

std::int64_t bound_U_stable(std::int64_t g1, std::int64_t g2, std::int64_t N) {
    if (N < 1 || N % 2 == 0) throw std::invalid_argument("bound_U_stable: N must be odd and positive");
    if (g1 < g2) throw std::invalid_argument("bound_U_stable: need g1 >= g2");
    if (g2 <= N + 3) throw std::invalid_argument("bound_U_stable: both genera must exceed N + 3");
    return 16 * g1 * g2 + 4 * (2 * g1 - N * g2) - 2 * N;
}

Rational spherical_threshold(std::int64_t g) {
    if (g < 1) throw std::invalid_argument("spherical_threshold: need g >= 1");
    return Rational(2, 3) * Rational(2 * g - 1);
}

Rational ell2_threshold(std::int64_t n, std::int64_t g) {
    if (g < 1) throw std::invalid_argument("ell2_threshold: need g >= 1");
    const auto profile = prime_power_profile(n);
    const Rational denominator =
        Rational(2) - Rational(2, profile.min_prime) - Rational(1, profile.max_prime_power);
    if (denominator <= Rational(0)) {
        throw std::logic_error("ell2_threshold: non-positive denominator");
    }
    return Rational(2 * g - 1) / denominator;
}

bool TheoremReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

// Accumulates results for one statement while scanning genera.
class Tally {
public:
    Tally(std::string id, std::string statement) {
        check_.theorem = std::move(id);
        check_.statement = std::move(statement);
    }

    void expect(bool ok, const std::function<std::string()>& witness) {
        ++check_.cases;
        if (!ok) {
            check_.passed = false;
            if (check_.witnesses.size() < 20) check_.witnesses.push_back(witness());
        }
    }

    void absorb(const TheoremCheck& other) {
        check_.cases += other.cases;
        check_.passed = check_.passed && other.passed;
        for (const auto& w : other.witnesses) {
            if (check_.witnesses.size() < 20) check_.witnesses.push_back(w);
        }
    }

    TheoremCheck done(std::string range) {
        check_.range = std::move(range);
        return std::move(check_);
    }

    [[nodiscard]] const TheoremCheck& view() const { return check_; }

private:
    TheoremCheck check_;
};

std::string tag(std::int64_t g, const std::string& what) {
    return "g=" + std::to_string(g) + ": " + what;
}

std::string pair_text(const RootClass& rc) {
    return "(" + to_text(rc.d1()) + ", " + to_text(rc.d2()) + ") degree " +
           std::to_string(rc.degree());
}

// Each statement, in report order.
const std::vector<std::pair<std::string, std::string>>& statements() {
    static const std::vector<std::pair<std::string, std::string>> list = {
        {"order-bound", "no data set of degree above 4g+2 exists, and degree 4g+2 occurs"},
        {"no-degree-4g+1", "no data set of degree 4g+1 exists"},
        {"lcm-of-orders", "the cone orders of a non-trivial data set have lcm n"},
        {"no-empty-cone-list", "a non-trivial data set has at least one cone"},
        {"spherical-threshold", "n > (2/3)(2g-1) forces orbit genus 0"},
        {"no-spherical-single-cone", "a spherical data set never has exactly one cone"},
        {"two-cone-threshold", "a spherical data set with n > (2g-1)/(2-2/q-1/p^a) has two cones"},
        {"degree-2-cone-count", "a spherical data set of degree 2 has 2g+1 cones"},
        {"degree-3-cone-count", "a spherical data set of degree 3 has g+1 cones"},
        {"degree-3-two-cones", "a spherical degree-3 data set with two cones exists iff g = 1"},
        {"even-degree-two-cones", "spherical, n even, n >= 4, n > (4/3)(2g-1) forces two cones"},
        {"odd-degree-two-cones", "spherical, n odd, n >= 5, n > (15/17)(2g-1) forces two cones"},
        {"odd-degree-two-cone-bound",
         "no spherical two-cone data set of degree 4g-N exists when g > N+3 (N = 1, 3)"},
        {"not-both-2-mod-4", "the two degrees of a root class are never both 2 mod 4"},
        {"guaranteed-degree", "lcm(4g1, 4g2+2) is realized for every split"},
        {"pair-bound", "every root class degree is at most U(g1, g2)"},
        {"genus-bound", "m(g) <= U(g) = 4g^2+2g"},
        {"lower-bound", "m(g) >= 2g^2+2g"},
        {"stable-bound", "M(g1, g2) <= U(g1, g2, N) when both genera exceed N+3 (odd N)"},
    };
    return list;
}

std::vector<TheoremCheck> checks_for_genus(std::int64_t g) {
    std::map<std::string, Tally> tallies;
    for (const auto& [id, statement] : statements()) tallies.emplace(id, Tally(id, statement));
    auto t = [&](const std::string& id) -> Tally& { return tallies.at(id); };

    const auto lists = enumerate_for_genus(g);

    for (std::int64_t n = 4 * g + 3; n <= 4 * g + 6; ++n) {
        const auto beyond = enumerate_data_sets({n, g});
        t("order-bound").expect(beyond.empty(), [&] {
            return tag(g, "degree " + std::to_string(n) + ": " + to_text(beyond.front()));
        });
    }
    t("order-bound").expect(!lists.at(4 * g + 2).empty(), [&] {
        return tag(g, "no data set of degree " + std::to_string(4 * g + 2));
    });
    t("no-degree-4g+1").expect(lists.at(4 * g + 1).empty(), [&] {
        return tag(g, to_text(lists.at(4 * g + 1).front()));
    });

    bool degree3_two_cones = false;
    for (const auto& [n, list] : lists) {
        for (const auto& d : list) {
            if (d.is_trivial()) continue;
            const auto w = [&] { return tag(g, to_text(d)); };
            const auto ell = static_cast<std::int64_t>(d.ell());
            t("lcm-of-orders").expect(lcm_of_orders(d.cones()) == n, w);
            t("no-empty-cone-list").expect(ell >= 1, w);
            if (Rational(n) > spherical_threshold(g)) {
                t("spherical-threshold").expect(d.orbit_genus() == 0, w);
            }
            if (!is_spherical(d)) continue;
            t("no-spherical-single-cone").expect(ell != 1, w);
            if (Rational(n) > ell2_threshold(n, g)) t("two-cone-threshold").expect(ell == 2, w);
            if (n == 2) t("degree-2-cone-count").expect(ell == 2 * g + 1, w);
            if (n == 3) {
                t("degree-3-cone-count").expect(ell == g + 1, w);
                if (ell == 2) degree3_two_cones = true;
            }
            if (n % 2 == 0 && n >= 4 && Rational(n) > Rational(4, 3) * Rational(2 * g - 1)) {
                t("even-degree-two-cones").expect(ell == 2, w);
            }
            if (n % 2 == 1 && n >= 5 && Rational(n) > Rational(15, 17) * Rational(2 * g - 1)) {
                t("odd-degree-two-cones").expect(ell == 2, w);
            }
        }
    }
    t("degree-3-two-cones").expect(degree3_two_cones == (g == 1), [&] {
        return tag(g, degree3_two_cones ? "spherical (3, 2) data set exists"
                                        : "no spherical (3, 2) data set");
    });
    for (std::int64_t N : {1, 3}) {
        if (g <= N + 3) continue;
        const auto& list = lists.at(4 * g - N);
        const auto hit = std::find_if(list.begin(), list.end(), [](const DataSet& d) {
            return is_spherical(d) && d.ell() == 2;
        });
        t("odd-degree-two-cone-bound").expect(hit == list.end(), [&] {
            return tag(g, "N=" + std::to_string(N) + ": " + to_text(*hit));
        });
    }

    if (g >= 2) {
        std::int64_t m = 0;
        for (std::int64_t g1 = g - 1; 2 * g1 >= g; --g1) {
            const std::int64_t g2 = g - g1;
            const auto classes = enumerate_root_classes(g1, g2);
            std::int64_t split_max = 0;
            for (const auto& rc : classes) {
                split_max = std::max(split_max, rc.degree());
                const auto w = [&] { return tag(g, pair_text(rc)); };
                t("not-both-2-mod-4")
                    .expect(!(rc.d1().degree() % 4 == 2 && rc.d2().degree() % 4 == 2), w);
                t("pair-bound").expect(rc.degree() <= bound_U_pair(g1, g2), w);
            }
            for (const auto& [ga, gb] : {std::pair{g1, g2}, std::pair{g2, g1}}) {
                const std::int64_t target = std::lcm(4 * ga, 4 * gb + 2);
                const auto witness = witness_pair(ga, gb);
                const bool listed = std::binary_search(classes.begin(), classes.end(), witness);
                t("guaranteed-degree").expect(witness.degree() == target && listed, [&] {
                    return tag(g, "split (" + std::to_string(ga) + ", " + std::to_string(gb) +
                                      "): " + pair_text(witness));
                });
            }
            for (std::int64_t N = 1; g2 > N + 3; N += 2) {
                const std::int64_t stable = bound_U_stable(g1, g2, N);
                t("stable-bound").expect(split_max <= stable, [&] {
                    return tag(g, "split (" + std::to_string(g1) + ", " + std::to_string(g2) +
                                      "), N=" + std::to_string(N) + ": M=" +
                                      std::to_string(split_max) + " > " + std::to_string(stable));
                });
            }
            m = std::max(m, split_max);
        }
        t("genus-bound").expect(m <= bound_U(g), [&] {
            return tag(g, "m=" + std::to_string(m) + " > " + std::to_string(bound_U(g)));
        });
        t("lower-bound").expect(m >= 2 * g * g + 2 * g, [&] {
            return tag(g, "m=" + std::to_string(m) + " < " + std::to_string(2 * g * g + 2 * g));
        });
    }

    std::vector<TheoremCheck> out;
    for (const auto& [id, statement] : statements()) out.push_back(tallies.at(id).view());
    return out;
}

}  // namespace

TheoremReport verify_theorems(std::int64_t g_max, unsigned width) {
    if (g_max < 2) throw std::invalid_argument("verify_theorems: need g_max >= 2");
    auto per_genus = parallel_map(static_cast<std::size_t>(g_max), width, [](std::size_t i) {
        return checks_for_genus(static_cast<std::int64_t>(i) + 1);
    });

    TheoremReport report;
    report.g_max = g_max;
    const auto& list = statements();
    for (std::size_t s = 0; s < list.size(); ++s) {
        Tally merged(list[s].first, list[s].second);
        for (const auto& checks : per_genus) merged.absorb(checks[s]);
        std::string range = "g = 1.." + std::to_string(g_max);
        if (merged.view().cases == 0) range += " (no applicable cases)";
        report.checks.push_back(merged.done(std::move(range)));
    }
    return report;
}

nlohmann::ordered_json to_json(const TheoremReport& report) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        out.push_back({{"theorem", c.theorem},
                       {"statement", c.statement},
                       {"range", c.range},
                       {"status", c.passed ? "pass" : "fail"},
                       {"cases", c.cases},
                       {"witnesses", c.witnesses}});
    }
    return out;
}

}  // namespace dtroots
