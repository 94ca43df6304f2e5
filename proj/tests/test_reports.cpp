#include <doctest.h>

#include <algorithm>
#include <set>

#include "dtroots/bounds.hpp"
#include "dtroots/enumeration.hpp"
#include "dtroots/notation.hpp"
#include "dtroots/reports.hpp"

using namespace dtroots;

namespace {

const ErrataEntry* find_entry(const ClassificationReport& r, const std::string& location) {
    for (const auto& e : r.errata) {
        if (e.location == location) return &e;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("ratio rounding") {
    CHECK(ratio_string(12, 20) == "0.60");
    CHECK(ratio_string(210, 210) == "1.00");
    CHECK(ratio_string(240, 272) == "0.88");
    CHECK(ratio_string(126, 156) == "0.81");
    CHECK(ratio_string(1, 8) == "0.13");
    CHECK(ratio_string(1, 200) == "0.01");
    CHECK(ratio_string(0, 5) == "0.00");
    // 90/110 = 0.8181..., so half-up rounding gives 0.82 (the printed table shows 0.81).
    CHECK(ratio_string(90, 110) == "0.82");
}

TEST_CASE("table1 rows") {
    const auto rows = table1(2, 13);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].m == 12);
    CHECK(rows[0].U == 20);
    CHECK(rows[0].ratio == "0.60");
    CHECK(rows[3].m == 90);
    CHECK(rows[3].U == 110);
    CHECK(rows[5].ratio == "1.00");
    CHECK(rows[11].g == 13);
    CHECK(rows[11].m == 570);
    CHECK(rows[11].U == 702);
    CHECK(rows[11].ratio == "0.81");
    for (const auto& r : rows) {
        CHECK(r.m <= r.U);
        REQUIRE(r.m_two_cone.has_value());
        CHECK(*r.m_two_cone <= r.m);
        CHECK(r.split->first + r.split->second == r.g);
    }
}

TEST_CASE("table2 rows") {
    const auto first = table2(11, 30, 30);
    REQUIRE(first.size() == 1);
    CHECK(first[0].split == std::pair<std::int64_t, std::int64_t>{15, 15});
    CHECK(first[0].m == 2790);
    CHECK(first[0].U_stable == 3038);
    CHECK(first[0].U == 3658);

    auto has_row = [](const std::vector<BoundRow>& rows, std::int64_t g1, std::int64_t g2, std::int64_t m,
                      std::int64_t us, std::int64_t u) {
        for (const auto& r : rows) {
            if (r.split == std::pair{g1, g2}) return r.m == m && r.U_stable == us && r.U == u;
        }
        return false;
    };
    CHECK(has_row(table2(11, 33, 33), 18, 15, 3534, 3782, 4402));
    CHECK(has_row(table2(11, 35, 35), 20, 15, 3690, 4278, 4898));
    CHECK(table2(11, 30, 35).size() == 12);
    CHECK(table2(11, 10, 29).empty());
}

TEST_CASE("row formats") {
    const auto rows = table1(2, 3);
    CHECK(rows_to_csv(rows) == "g,g1,g2,m,U_stable,U,ratio\n2,1,1,12,,20,0.60\n3,2,1,30,,42,0.71\n");
    CHECK(rows_to_markdown(rows) ==
          "| g | m(g) | U(g) | m(g)/U(g) |\n|---|---|---|---|\n| 2 | 12 | 20 | 0.60 |\n| 3 | 30 | 42 | 0.71 |\n");
    const auto j = rows_to_json(rows);
    CHECK(j[0].at("m") == 12);
    CHECK(j[0].at("ratio") == "0.60");
    CHECK(j[1].at("m_two_cone") == 30);

    const auto stable = table2(11, 30, 30);
    CHECK(rows_to_csv(stable) == "g,g1,g2,m,U_stable,U,ratio\n30,15,15,2790,3038,3658,0.76\n");
    CHECK(rows_to_markdown(stable).find("| 30 | (15, 15) | 2790 | 3038 | 3658 |") != std::string::npos);
    CHECK(rows_to_text(stable).find("U_stable=3038") != std::string::npos);
}

TEST_CASE("genus 2 classification confirms the printed list") {
    const auto r = classification_report(1, 1);
    REQUIRE(r.has_golden);
    CHECK(r.by_degree.at(6).size() == 3);
    std::set<std::int64_t> degrees;
    for (const auto& [n, list] : r.by_degree) degrees.insert(n);
    CHECK(degrees == std::set<std::int64_t>{2, 3, 4, 6, 12});
    CHECK(r.count(EntryStatus::Confirmed) == 10);
    CHECK(r.count(EntryStatus::TypoSuspected) == 0);
    CHECK(r.count(EntryStatus::Missing) == 0);
}

TEST_CASE("genus 3 classification flags the misprinted entries") {
    const auto r = classification_report(2, 1);
    REQUIRE(r.has_golden);
    CHECK(r.by_degree.at(8).size() == 4);
    CHECK(r.by_degree.rbegin()->first == 30);

    for (const char* loc : {"genus3/n=10/(ii)", "genus3/n=10/(iii)", "genus3/n=30/(i)"}) {
        const auto* e = find_entry(r, loc);
        REQUIRE_MESSAGE(e != nullptr, loc);
        CHECK(e->status == EntryStatus::TypoSuspected);
        REQUIRE(e->corrected.size() == 1);
        const auto& fix = e->corrected.front();
        CHECK(is_compatible_pair(fix.d1(), fix.d2()));
        const auto& list = r.by_degree.at(fix.degree());
        CHECK(std::find(list.begin(), list.end(), fix) != list.end());
    }
    const auto* e30 = find_entry(r, "genus3/n=30/(i)");
    CHECK(to_text(e30->corrected.front().d1()) == "(10, 0, 3; (1, 2), (1, 5))");
}

TEST_CASE("embedded statuses agree with the recomputed cross-check") {
    for (auto [g1, g2] : {std::pair<std::int64_t, std::int64_t>{1, 1}, {2, 1}}) {
        const auto golden = golden_list(g1, g2);
        REQUIRE(golden.has_value());
        const auto r = classification_report(g1, g2);
        for (const auto& item : golden->at("entries")) {
            const auto* e = find_entry(r, item.at("location").get<std::string>());
            REQUIRE(e != nullptr);
            CHECK_MESSAGE(std::string(to_string(e->status)) == item.at("status").get<std::string>(),
                          item.at("location").get<std::string>());
        }
    }
}

TEST_CASE("every valid printed data set appears in the enumeration") {
    const auto golden = *golden_list(2, 1);
    const auto side1 = enumerate_for_genus(2);
    const auto side2 = enumerate_for_genus(1);
    auto enumerated = [](const std::map<std::int64_t, std::vector<DataSet>>& lists, const DataSet& d) {
        const auto it = lists.find(d.degree());
        return it != lists.end() && std::binary_search(it->second.begin(), it->second.end(), d);
    };
    for (const auto& item : golden.at("entries")) {
        const auto raw1 = parse_text(item.at("d1").get<std::string>());
        const auto raw2 = parse_text(item.at("d2").get<std::string>());
        if (validate(raw1).overall) CHECK_MESSAGE(enumerated(side1, canonical_form(raw1)), item.at("d1"));
        if (validate(raw2).overall) CHECK_MESSAGE(enumerated(side2, canonical_form(raw2)), item.at("d2"));
    }
}

TEST_CASE("report serializations") {
    const auto r = classification_report(2, 1);
    const auto text = report_to_text(r);
    CHECK(text.find("For n = 30:") != std::string::npos);
    CHECK(text.find("typo-suspected") != std::string::npos);
    const auto errata = errata_to_json(r);
    REQUIRE(errata.is_array());
    for (const auto& e : errata) {
        CHECK(e.contains("location"));
        CHECK(e.contains("printed"));
        CHECK(e.contains("status"));
        CHECK(e.contains("corrected"));
    }
    const auto j = report_to_json(r);
    CHECK(j.contains("errata"));
    CHECK_FALSE(classification_report(2, 2).has_golden);
}

TEST_CASE("table1 extended rows") {
    const std::vector<std::int64_t> m{570,  714,  798,  858,  966,  1122, 1254, 1326, 1518, 1650, 1794, 1950,
                                      2046, 2262, 2418, 2550, 2730, 2958, 3162, 3306, 3570, 3774, 3990};
    const auto rows = table1(13, 35, 0);
    REQUIRE(rows.size() == m.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].m == m[i]);
        CHECK(rows[i].U == bound_U(rows[i].g));
        CHECK(*rows[i].m_two_cone == rows[i].m);
    }
}

TEST_CASE("table2 for N = 11, g = 30..35") {
    struct Row {
        std::int64_t g, g1, g2, m, us, u;
    };
    const std::vector<Row> expect{
        {30, 15, 15, 2790, 3038, 3658}, {31, 16, 15, 3162, 3286, 3906}, {32, 16, 16, 3264, 3498, 4158},
        {32, 17, 15, 3162, 3534, 4154}, {33, 17, 16, 3570, 3762, 4422}, {33, 18, 15, 3534, 3782, 4402},
        {34, 17, 17, 3570, 3990, 4690}, {34, 18, 16, 3774, 4026, 4686}, {34, 19, 15, 3534, 4030, 4650},
        {35, 18, 17, 3990, 4270, 4970}, {35, 19, 16, 3876, 4290, 4950}, {35, 20, 15, 3690, 4278, 4898},
    };
    const auto rows = table2(11, 30, 35, 0);
    REQUIRE(rows.size() == expect.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].g == expect[i].g);
        CHECK(rows[i].split == std::pair{expect[i].g1, expect[i].g2});
        CHECK(rows[i].m == expect[i].m);
        CHECK(rows[i].U_stable == expect[i].us);
        CHECK(rows[i].U == expect[i].u);
    }
}
