// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dtroots/bounds.hpp"
#include "dtroots/enumeration.hpp"
#include "dtroots/notation.hpp"
#include "dtroots/pairing.hpp"
#include "dtroots/parallel.hpp"
#include "dtroots/reports.hpp"

using namespace dtroots;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

using Clock = std::chrono::steady_clock;

bool criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.expect(secs <= budget_seconds, "runtime over budget");
    std::printf("%s criterion %d: %s (%.2fs of %.0fs) %s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                budget_seconds, o.detail.str().c_str());
    std::fflush(stdout);
    return o.ok;
}

void table1_reproduction(Outcome& o) {
    const std::vector<std::int64_t> m{12, 30, 42, 90, 126, 210, 240, 330, 390, 462, 546};
    const std::vector<std::int64_t> U{20, 42, 72, 110, 156, 210, 272, 342, 420, 506, 600};
    const auto rows = table1(2, 12, 0);
    o.expect(rows.size() == m.size(), "row count");
    for (std::size_t i = 0; i < rows.size() && i < m.size(); ++i) {
        o.expect(rows[i].g == static_cast<std::int64_t>(i) + 2, "g column");
        o.expect(rows[i].m == m[i], "m(" + std::to_string(rows[i].g) + ") = " + std::to_string(rows[i].m));
        o.expect(rows[i].U == U[i], "U(" + std::to_string(rows[i].g) + ") = " + std::to_string(rows[i].U));
    }
    o.detail << "g = 2..12 exact; ";
}

void table2_rows(Outcome& o) {
    const auto row = [&](std::int64_t g1, std::int64_t g2, std::int64_t m, std::int64_t us, std::int64_t u) {
        const auto got = max_root_degree(g1, g2, 0).degree;
        o.expect(got == m, "m(" + std::to_string(g1) + "," + std::to_string(g2) + ") = " + std::to_string(got));
        o.expect(bound_U_stable(g1, g2, 11) == us, "U_stable");
        o.expect(bound_U_pair(g1, g2) == u, "U");
    };
    row(15, 15, 2790, 3038, 3658);
    row(16, 15, 3162, 3286, 3906);
    o.detail << "(15,15) and (16,15); ";
}

void genus2_classification(Outcome& o) {
    const auto classes = enumerate_root_classes(1, 1, 0);
    std::map<std::int64_t, int> counts;
    for (const auto& rc : classes) ++counts[rc.degree()];
    o.expect(counts == std::map<std::int64_t, int>{{2, 1}, {3, 2}, {4, 2}, {6, 3}, {12, 2}}, "degree counts");
    const auto report = classification_report(1, 1, 0);
    o.expect(report.has_golden, "printed list embedded");
    o.expect(report.count(EntryStatus::Confirmed) == 10, "10 confirmed");
    o.expect(report.count(EntryStatus::TypoSuspected) == 0, "no typo flags");
    o.expect(report.count(EntryStatus::Missing) == 0, "nothing missing");
    o.detail << classes.size() << " classes, " << report.count(EntryStatus::Confirmed) << " printed entries confirmed; ";
}

void genus3_classification(Outcome& o) {
    const auto report = classification_report(2, 1, 0);
    o.expect(!report.by_degree.empty() && report.by_degree.rbegin()->first == 30, "max degree 30");
    o.expect(max_root_degree(2, 1, 0).degree == 30, "max_root_degree(2,1) = 30");

    const auto side1 = enumerate_for_genus(2, 0);
    const auto side2 = enumerate_for_genus(1, 0);
    auto enumerated = [](const std::map<std::int64_t, std::vector<DataSet>>& lists, const DataSet& d) {
        const auto it = lists.find(d.degree());
        return it != lists.end() && std::binary_search(it->second.begin(), it->second.end(), d);
    };
    const auto golden = *golden_list(2, 1);
    std::size_t valid_printed = 0;
    for (const auto& item : golden.at("entries")) {
        for (const char* key : {"d1", "d2"}) {
            const auto raw = parse_text(item.at(key).get<std::string>());
            if (!validate(raw).overall) continue;
            ++valid_printed;
            const auto& lists = std::string(key) == "d1" ? side1 : side2;
            o.expect(enumerated(lists, canonical_form(raw)), "printed " + item.at(key).get<std::string>() + " enumerated");
        }
    }
    for (const char* loc : {"genus3/n=10/(ii)", "genus3/n=10/(iii)", "genus3/n=30/(i)"}) {
        const auto it = std::find_if(report.errata.begin(), report.errata.end(),
                                     [&](const ErrataEntry& e) { return e.location == loc; });
        o.expect(it != report.errata.end(), std::string(loc) + " present");
        if (it == report.errata.end()) continue;
        o.expect(it->status == EntryStatus::TypoSuspected, std::string(loc) + " flagged");
        o.expect(!it->corrected.empty(), std::string(loc) + " has a correction");
        for (const auto& fix : it->corrected) {
            const auto& list = report.by_degree.at(fix.degree());
            o.expect(std::find(list.begin(), list.end(), fix) != list.end(), "correction is enumerated");
        }
    }
    o.detail << valid_printed << " valid printed sides found, " << report.count(EntryStatus::TypoSuspected)
             << " entries flagged; ";
}

void oracle_equivalence(Outcome& o) {
    int cells = 0;
    for (std::int64_t g = 1; g <= 4; ++g) {
        for (std::int64_t n = 1; n <= 12; ++n) {
            const EnumerationQuery q{n, g};
            o.expect(enumerate_data_sets(q, 0) == oracle_enumerate(q),
                     "n=" + std::to_string(n) + " g=" + std::to_string(g));
            ++cells;
        }
    }
    o.detail << cells << " (n, g) cells; ";
}

void theorem_suite(Outcome& o) {
    const auto report = verify_theorems(8, 0);
    for (const auto& c : report.checks) {
        o.expect(c.passed, c.theorem);
        o.detail << c.theorem << ":" << c.cases << " ";
    }
    for (std::int64_t g = 2; g <= 8; ++g) {
        o.expect(max_degree_for_genus(g, 0).degree >= 2 * g * g + 2 * g, "lower bound at g=" + std::to_string(g));
    }
    o.expect(report.all_passed(), "suite");
}

void witness_construction(Outcome& o) {
    int built = 0;
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<RootClass>> cache;
    for (std::int64_t g1 = 1; g1 <= 10; ++g1) {
        for (std::int64_t g2 = 1; g2 <= g1; ++g2) {
            const auto rc = witness_pair(g1, g2);
            const std::string tag = "(" + std::to_string(g1) + "," + std::to_string(g2) + ")";
            o.expect(rc.degree() == std::lcm(4 * g1, 4 * g2 + 2), tag + " degree");
            o.expect(validate(rc.d1().raw()).overall && validate(rc.d2().raw()).overall, tag + " valid");
            o.expect(is_compatible_pair(rc.d1(), rc.d2()), tag + " compatible");
            o.expect(rc.g1() == g1 && rc.g2() == g2, tag + " genera");
            const auto classes = enumerate_root_classes(g1, g2, 0);
            o.expect(std::binary_search(classes.begin(), classes.end(), rc), tag + " enumerated");
            ++built;
        }
    }
    o.detail << built << " splits; ";
}

void property_suites(Outcome& o) {
    constexpr int kSamples = 1000;
    std::vector<DataSet> pool;
    for (std::int64_t g = 1; g <= 5; ++g) {
        for (auto& [n, list] : enumerate_for_genus(g, 0)) pool.insert(pool.end(), list.begin(), list.end());
    }
    std::mt19937_64 rng(20261019);
    auto pick = [&]() -> const DataSet& {
        return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    int failures = 0;
    auto count = [&](bool ok) { failures += !ok; };

    for (int i = 0; i < kSamples; ++i) {
        const auto& d = pick();
        count(forced_a(d.degree(), d.cones()) == d.a());
    }
    for (int i = 0; i < kSamples; ++i) {
        const auto& d = pick();
        auto raw = d.raw();
        std::shuffle(raw.cones.begin(), raw.cones.end(), rng);
        const auto c = canonical_form(raw);
        count(c == d && canonical_form(c.raw()) == c);
    }
    for (int i = 0; i < kSamples; ++i) {
        const auto& d1 = pick();
        const auto& d2 = pick();
        count(is_compatible_pair(d1, d2) == is_compatible_pair(d2, d1));
    }
    for (int i = 0; i < kSamples; ++i) {
        const auto& d1 = pick();
        const auto& d2 = pick();
        const std::int64_t n = std::lcm(d1.degree(), d2.degree());
        const bool angles = (turning_fraction(d1) + turning_fraction(d2)).frac() == Rational(1, n).frac();
        count(angles == is_compatible_pair(d1, d2));
    }
    for (int i = 0; i < kSamples; ++i) {
        const std::int64_t g = std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
        const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 4 * g + 2)(rng);
        const unsigned width = std::uniform_int_distribution<unsigned>(2, 6)(rng);
        count(enumerate_data_sets({n, g}, width) == enumerate_data_sets({n, g}, 1));
    }
    o.expect(failures == 0, std::to_string(failures) + " property failures");
    o.detail << "5 suites x " << kSamples << " cases, " << failures << " failures; ";
}

}  // namespace

int main() {
    bool all = true;
    all &= criterion(1, "table1 m(g) and U(g) for g = 2..12", 60, table1_reproduction);
    all &= criterion(2, "table2 rows (15,15) and (16,15)", 600, table2_rows);
    all &= criterion(3, "genus-2 classification", 60, genus2_classification);
    all &= criterion(4, "genus-3 classification and errata", 60, genus3_classification);
    all &= criterion(5, "oracle equivalence n <= 12, g <= 4", 60, oracle_equivalence);
    all &= criterion(6, "theorem suite at g_max = 8", 300, theorem_suite);
    all &= criterion(7, "witness construction for g2 <= g1 <= 10", 600, witness_construction);
    all &= criterion(8, "property suites", 600, property_suites);
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
