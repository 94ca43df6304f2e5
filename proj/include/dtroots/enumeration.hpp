#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dtroots/core.hpp"

namespace dtroots {

struct EnumerationQuery {
    std::int64_t n = 1;  // degree
    std::int64_t g = 1;  // target genus

    /// Degrees above 4g + 2 admit no action; such queries are allowed and
    /// simply come back empty.
    [[nodiscard]] bool above_order_bound() const noexcept { return n > 4 * g + 2; }
};

/// All data sets of degree q.n and genus q.g, canonical and sorted.
///
/// The genus formula is inverted into an exact weight budget: for orbit genus
/// gt the cones must contribute W = 2g - 1 + n - 2*gt*n, and a cone of order x
/// contributes n - n/x. Divisor multisets meeting the budget with lcm n are
/// expanded over unit residues; a is then forced by the congruence condition.
/// `width` is the worker count (0 = hardware concurrency); the result does not
/// depend on it.
[[nodiscard]] std::vector<DataSet> enumerate_data_sets(const EnumerationQuery& q,
                                                       unsigned width = 1);

/// enumerate_data_sets for every degree 1..4g+2, empty degrees included.
[[nodiscard]] std::map<std::int64_t, std::vector<DataSet>> enumerate_for_genus(std::int64_t g,
                                                                               unsigned width = 1);

/// Brute-force reference for enumerate_data_sets. Shares no search logic
/// with it: loops over every a, every cone count up to the Euler
/// characteristic limit, every orbit genus and every multiset of (c, x)
/// pairs with x | n, and tests the defining conditions directly. Only
/// practical for small n and g.
[[nodiscard]] std::vector<DataSet> oracle_enumerate(const EnumerationQuery& q);

/// Divisors of n greater than 1, ascending.
[[nodiscard]] std::vector<std::int64_t> proper_divisors(std::int64_t n);

}  // namespace dtroots
