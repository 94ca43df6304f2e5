#include "dtroots/reports.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "dtroots/bounds.hpp"
#include "dtroots/notation.hpp"

namespace dtroots {

namespace golden {
extern const std::string_view genus2_json;
extern const std::string_view genus3_json;
}  // namespace golden

std::string ratio_string(std::int64_t m, std::int64_t U) {
    if (U <= 0 || m < 0) throw std::invalid_argument("ratio_string: need m >= 0 and U > 0");
    // floor(100 m / U + 1/2)
    const std::int64_t hundredths = (200 * m + U) / (2 * U);
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2) frac.insert(0, "0");
    return std::to_string(hundredths / 100) + "." + frac;
}

std::vector<BoundRow> table1(std::int64_t g_from, std::int64_t g_to, unsigned width) {
    if (g_from < 2 || g_to < g_from) throw std::invalid_argument("table1: need 2 <= from <= to");
    std::vector<BoundRow> rows;
    for (std::int64_t g = g_from; g <= g_to; ++g) {
        const auto best = max_degree_for_genus(g, width);
        BoundRow row;
        row.g = g;
        row.split = std::pair{best.g1, best.g2};
        row.m = best.degree;
        row.U = bound_U(g);
        row.ratio = ratio_string(row.m, row.U);
        row.m_two_cone = max_degree_for_genus(g, width, SideFilter::SphericalTwoCone).degree;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<BoundRow> table2(std::int64_t N, std::int64_t g_from, std::int64_t g_to, unsigned width) {
    if (N < 1 || N % 2 == 0) throw std::invalid_argument("table2: N must be odd and positive");
    if (g_to < g_from) throw std::invalid_argument("table2: empty genus range");
    std::vector<BoundRow> rows;
    for (std::int64_t g = g_from; g <= g_to; ++g) {
        for (std::int64_t g2 = N + 4; 2 * g2 <= g; ++g2) {
            const std::int64_t g1 = g - g2;
            BoundRow row;
            row.g = g;
            row.split = std::pair{g1, g2};
            row.m = max_root_degree(g1, g2, width).degree;
            row.U = bound_U_pair(g1, g2);
            row.U_stable = bound_U_stable(g1, g2, N);
            row.ratio = ratio_string(row.m, row.U);
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const BoundRow& l, const BoundRow& r) {
        return std::pair{l.g, l.split->first} < std::pair{r.g, r.split->first};
    });
    return rows;
}

namespace {

bool has_stable(const std::vector<BoundRow>& rows) {
    return std::any_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.U_stable.has_value(); });
}

std::string split_text(const BoundRow& r) {
    if (!r.split) return "";
    return "(" + std::to_string(r.split->first) + ", " + std::to_string(r.split->second) + ")";
}

}  // namespace

std::string rows_to_markdown(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    if (has_stable(rows)) {
        out << "| g | (g1, g2) | m(g1, g2) | U(g1, g2, N) | U(g1, g2) |\n";
        out << "|---|---|---|---|---|\n";
        for (const auto& r : rows) {
            out << "| " << r.g << " | " << split_text(r) << " | " << r.m << " | "
                << (r.U_stable ? std::to_string(*r.U_stable) : "") << " | " << r.U << " |\n";
        }
    } else {
        out << "| g | m(g) | U(g) | m(g)/U(g) |\n";
        out << "|---|---|---|---|\n";
        for (const auto& r : rows) {
            out << "| " << r.g << " | " << r.m << " | " << r.U << " | " << r.ratio << " |\n";
        }
        for (const auto& r : rows) {
            if (r.m_two_cone && *r.m_two_cone != r.m) {
                out << "\nAt g = " << r.g << " spherical two-cone pairs reach only " << *r.m_two_cone
                    << ".\n";
            }
        }
    }
    return out.str();
}

std::string rows_to_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "g,g1,g2,m,U_stable,U,ratio\n";
    for (const auto& r : rows) {
        out << r.g << ",";
        if (r.split) out << r.split->first << "," << r.split->second;
        else out << ",";
        out << "," << r.m << ",";
        if (r.U_stable) out << *r.U_stable;
        out << "," << r.U << "," << r.ratio << "\n";
    }
    return out.str();
}

nlohmann::ordered_json rows_to_json(const std::vector<BoundRow>& rows) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["g"] = r.g;
        if (r.split) {
            j["g1"] = r.split->first;
            j["g2"] = r.split->second;
        }
        j["m"] = r.m;
        if (r.U_stable) j["U_stable"] = *r.U_stable;
        j["U"] = r.U;
        j["ratio"] = r.ratio;
        if (r.m_two_cone) j["m_two_cone"] = *r.m_two_cone;
        out.push_back(std::move(j));
    }
    return out;
}

std::string rows_to_text(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    const bool stable = has_stable(rows);
    for (const auto& r : rows) {
        out << "g=" << r.g;
        if (r.split) out << " split=" << split_text(r);
        out << " m=" << r.m;
        if (stable) out << " U_stable=" << (r.U_stable ? std::to_string(*r.U_stable) : "-");
        out << " U=" << r.U << " ratio=" << r.ratio;
        if (r.m_two_cone) out << " m_two_cone=" << *r.m_two_cone;
        out << "\n";
    }
    return out.str();
}

std::string_view to_string(EntryStatus s) noexcept {
    switch (s) {
        case EntryStatus::Confirmed: return "confirmed";
        case EntryStatus::TypoSuspected: return "typo-suspected";
        case EntryStatus::Missing: return "missing";
    }
    return "unknown";
}

std::size_t ClassificationReport::count(EntryStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(errata.begin(), errata.end(), [s](const ErrataEntry& e) { return e.status == s; }));
}

std::optional<nlohmann::json> golden_list(std::int64_t g1, std::int64_t g2) {
    if (g1 == 1 && g2 == 1) return nlohmann::json::parse(golden::genus2_json);
    if (g1 == 2 && g2 == 1) return nlohmann::json::parse(golden::genus3_json);
    return std::nullopt;
}

namespace {

// Number of differing fields between a printed tuple and a data set, with
// the printed cones put into canonical order first.
std::int64_t distance(const RawTuple& printed, const DataSet& d) {
    std::int64_t diff = (printed.n != d.degree()) + (printed.gt != d.orbit_genus()) + (printed.a != d.a());
    auto cones = printed.cones;
    std::sort(cones.begin(), cones.end());
    const auto& other = d.cones();
    const std::size_t common = std::min(cones.size(), other.size());
    for (std::size_t i = 0; i < common; ++i) {
        diff += (cones[i].c != other[i].c) + (cones[i].x != other[i].x);
    }
    diff += static_cast<std::int64_t>(std::max(cones.size(), other.size()) - common);
    return diff;
}

struct PrintedSide {
    RawTuple raw;
    std::optional<DataSet> valid;
};

PrintedSide check_side(const std::string& text, std::int64_t expected_genus, const std::string& label,
                       std::vector<std::string>& reasons) {
    PrintedSide side{parse_text(text), std::nullopt};
    const auto report = validate(side.raw);
    if (!report.overall) {
        for (auto c : report.failures) reasons.push_back(label + " fails " + std::string(to_string(c)));
        return side;
    }
    side.valid = canonical_form(side.raw);
    const std::int64_t g = genus(*side.valid);
    if (g != expected_genus) {
        reasons.push_back(label + " has genus " + std::to_string(g) + ", expected " +
                          std::to_string(expected_genus));
        side.valid.reset();
    }
    return side;
}

void cross_check(ClassificationReport& report, const nlohmann::json& golden,
                 const std::vector<RootClass>& classes) {
    struct Pending {
        std::size_t index;
        RawTuple p1, p2;
        std::int64_t degree;
    };
    std::set<RootClass> confirmed;
    std::vector<Pending> pending;

    for (const auto& item : golden.at("entries")) {
        ErrataEntry entry;
        entry.location = item.at("location").get<std::string>();
        const auto t1 = item.at("d1").get<std::string>();
        const auto t2 = item.at("d2").get<std::string>();
        const auto labels = item.at("labels");
        entry.printed = "(" + labels[0].get<std::string>() + ", " + labels[1].get<std::string>() +
                        ") = (" + t1 + ", " + t2 + ")";
        const std::int64_t degree = item.at("degree").get<std::int64_t>();

        const auto s1 = check_side(t1, report.g1, "D1", entry.reasons);
        const auto s2 = check_side(t2, report.g2, "D2", entry.reasons);
        if (s1.valid && s2.valid) {
            if (!is_compatible_pair(*s1.valid, *s2.valid)) {
                entry.reasons.push_back("pair fails the turning congruence");
            } else {
                const RootClass rc(*s1.valid, *s2.valid);
                if (rc.degree() != degree) {
                    entry.reasons.push_back("pair has degree " + std::to_string(rc.degree()) +
                                            ", listed under " + std::to_string(degree));
                } else if (!std::binary_search(classes.begin(), classes.end(), rc)) {
                    entry.reasons.push_back("valid pair not produced by enumeration");
                } else {
                    confirmed.insert(rc);
                }
            }
        }
        entry.status = entry.reasons.empty() ? EntryStatus::Confirmed : EntryStatus::TypoSuspected;
        if (entry.status == EntryStatus::TypoSuspected) {
            pending.push_back({report.errata.size(), s1.raw, s2.raw, degree});
        }
        report.errata.push_back(std::move(entry));
    }

    // Corrections: the closest unconfirmed classes of the listed degree.
    std::set<RootClass> used;
    for (const auto& p : pending) {
        std::int64_t best = -1;
        std::vector<RootClass> picks;
        for (const auto& rc : classes) {
            if (rc.degree() != p.degree || confirmed.count(rc)) continue;
            const std::int64_t d = distance(p.p1, rc.d1()) + distance(p.p2, rc.d2());
            if (best < 0 || d < best) {
                best = d;
                picks.clear();
            }
            if (d == best) picks.push_back(rc);
        }
        used.insert(picks.begin(), picks.end());
        report.errata[p.index].corrected = std::move(picks);
    }

    for (const auto& rc : classes) {
        if (confirmed.count(rc) || used.count(rc)) continue;
        ErrataEntry entry;
        entry.location = "genus" + std::to_string(report.g1 + report.g2) + "/n=" +
                         std::to_string(rc.degree()) + "/unlisted";
        entry.status = EntryStatus::Missing;
        entry.reasons.push_back("enumerated class absent from the printed list");
        entry.corrected.push_back(rc);
        report.errata.push_back(std::move(entry));
    }
}

std::string pair_notation(const RootClass& rc) {
    return "(" + to_text(rc.d1()) + ", " + to_text(rc.d2()) + ")";
}

std::string roman(std::size_t i) {
    static const std::pair<std::size_t, const char*> table[] = {
        {1000, "m"}, {900, "cm"}, {500, "d"}, {400, "cd"}, {100, "c"}, {90, "xc"},
        {50, "l"},   {40, "xl"},  {10, "x"},  {9, "ix"},   {5, "v"},   {4, "iv"}, {1, "i"}};
    std::string out;
    for (const auto& [value, digits] : table) {
        while (i >= value) {
            out += digits;
            i -= value;
        }
    }
    return out;
}

}  // namespace

ClassificationReport classification_report(std::int64_t g1, std::int64_t g2, unsigned width) {
    ClassificationReport report;
    report.g1 = g1;
    report.g2 = g2;
    const auto classes = enumerate_root_classes(g1, g2, width);
    for (const auto& rc : classes) report.by_degree[rc.degree()].push_back(rc);
    if (auto golden = golden_list(g1, g2)) {
        report.has_golden = true;
        cross_check(report, *golden, classes);
    }
    return report;
}

std::string report_to_text(const ClassificationReport& report) {
    std::ostringstream out;
    out << "Root classes for the split " << report.g1 << " + " << report.g2 << "\n";
    for (const auto& [n, list] : report.by_degree) {
        out << "For n = " << n << ":\n";
        for (std::size_t i = 0; i < list.size(); ++i) {
            out << "  (" << roman(i + 1) << ") " << pair_notation(list[i]) << "\n";
        }
    }
    if (report.has_golden) {
        out << "\nCross-check against the printed list: " << report.count(EntryStatus::Confirmed)
            << " confirmed, " << report.count(EntryStatus::TypoSuspected) << " typo-suspected, "
            << report.count(EntryStatus::Missing) << " missing\n";
        for (const auto& e : report.errata) {
            if (e.status == EntryStatus::Confirmed) continue;
            out << "  " << e.location << ": " << to_string(e.status) << "\n";
            if (!e.printed.empty()) out << "    printed:   " << e.printed << "\n";
            for (const auto& r : e.reasons) out << "    reason:    " << r << "\n";
            for (const auto& c : e.corrected) out << "    corrected: " << pair_notation(c) << "\n";
        }
    }
    return out.str();
}

nlohmann::ordered_json errata_to_json(const ClassificationReport& report) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& e : report.errata) {
        auto corrected = nlohmann::ordered_json::array();
        for (const auto& c : e.corrected) corrected.push_back(pair_notation(c));
        out.push_back({{"location", e.location},
                       {"printed", e.printed},
                       {"status", std::string(to_string(e.status))},
                       {"reasons", e.reasons},
                       {"corrected", corrected}});
    }
    return out;
}

nlohmann::ordered_json report_to_json(const ClassificationReport& report) {
    nlohmann::ordered_json out;
    out["g1"] = report.g1;
    out["g2"] = report.g2;
    auto degrees = nlohmann::ordered_json::array();
    for (const auto& [n, list] : report.by_degree) {
        auto classes = nlohmann::ordered_json::array();
        for (const auto& rc : list) classes.push_back(to_json(rc));
        degrees.push_back({{"degree", n}, {"classes", classes}});
    }
    out["degrees"] = degrees;
    if (report.has_golden) out["errata"] = errata_to_json(report);
    return out;
}

}  // namespace dtroots
