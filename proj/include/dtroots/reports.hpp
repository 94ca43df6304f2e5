#pragma once

// Regenerated degree tables and root classifications, plus an errata
// cross-check of the printed genus-2 and genus-3 classification lists.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dtroots/pairing.hpp"

namespace dtroots {

struct BoundRow {
    std::int64_t g = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> split;
    std::int64_t m = 0;
    std::int64_t U = 0;
    std::optional<std::int64_t> U_stable;
    std::string ratio;  // m/U, round-half-up, two decimals
    /// table1 only: the maximum over pairs of spherical two-cone data sets.
    std::optional<std::int64_t> m_two_cone;  // m/U, round-half-up, two decimals
};

/// m/U rounded half up to two decimals, e.g. (240, 272) -> "0.88".
[[nodiscard]] std::string ratio_string(std::int64_t m, std::int64_t U);

/// Rows (g, m(g), U(g), ratio) for g_from..g_to; split holds the split that
/// realizes m(g). m(g) is maximized over all root classes; m_two_cone repeats
/// the maximization with both sides spherical with two cones.
[[nodiscard]] std::vector<BoundRow> table1(std::int64_t g_from, std::int64_t g_to,
                                           unsigned width = 1);

/// Rows (g, (g1, g2), M(g1, g2), U(g1, g2, N), U(g1, g2)) for every split of
/// every g in range with both genera above N + 3, sorted by (g, g1).
[[nodiscard]] std::vector<BoundRow> table2(std::int64_t N, std::int64_t g_from, std::int64_t g_to,
                                           unsigned width = 1);

[[nodiscard]] std::string rows_to_markdown(const std::vector<BoundRow>& rows);
[[nodiscard]] std::string rows_to_csv(const std::vector<BoundRow>& rows);
[[nodiscard]] nlohmann::ordered_json rows_to_json(const std::vector<BoundRow>& rows);
[[nodiscard]] std::string rows_to_text(const std::vector<BoundRow>& rows);

enum class EntryStatus { Confirmed, TypoSuspected, Missing };

[[nodiscard]] std::string_view to_string(EntryStatus s) noexcept;

/// One line of the errata cross-check. For printed entries `printed` holds
/// the pair as printed; for Missing entries it is empty and `corrected` holds
/// the enumerated class absent from the printed list.
struct ErrataEntry {
    std::string location;
    std::string printed;
    EntryStatus status = EntryStatus::Confirmed;
    std::vector<std::string> reasons;
    std::vector<RootClass> corrected;
};

struct ClassificationReport {
    std::int64_t g1 = 0;
    std::int64_t g2 = 0;
    std::map<std::int64_t, std::vector<RootClass>> by_degree;
    bool has_golden = false;  // a printed list exists for this split
    std::vector<ErrataEntry> errata;

    [[nodiscard]] std::size_t count(EntryStatus s) const;
};

/// Groups enumerate_root_classes(g1, g2) by degree and, for the splits with a
/// printed list (1+1 and 2+1), classifies each printed entry.
[[nodiscard]] ClassificationReport classification_report(std::int64_t g1, std::int64_t g2,
                                                         unsigned width = 1);

[[nodiscard]] std::string report_to_text(const ClassificationReport& report);
[[nodiscard]] nlohmann::ordered_json report_to_json(const ClassificationReport& report);
[[nodiscard]] nlohmann::ordered_json errata_to_json(const ClassificationReport& report);

/// The embedded printed list for a split, if there is one.
[[nodiscard]] std::optional<nlohmann::json> golden_list(std::int64_t g1, std::int64_t g2);

}  // namespace dtroots
