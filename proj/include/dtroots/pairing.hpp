#pragma once

// Data set pairs: two actions, one on each side of a separating curve, whose
// rotations at the distinguished points add up to 1/n of a turn. Each
// unordered compatible pair is one conjugacy class of n-th roots of the Dehn
// twist about the curve.

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "dtroots/core.hpp"

namespace dtroots {

class RootClass {
public:
    /// Orients the pair: the larger-genus side first, and for equal genera
    /// the smaller data set first. Throws std::invalid_argument if the data
    /// sets are not compatible or the total genus is below 2.
    RootClass(DataSet first, DataSet second);

    [[nodiscard]] const DataSet& d1() const noexcept { return d1_; }
    [[nodiscard]] const DataSet& d2() const noexcept { return d2_; }
    [[nodiscard]] std::int64_t degree() const noexcept { return degree_; }
    [[nodiscard]] std::int64_t g1() const noexcept { return g1_; }
    [[nodiscard]] std::int64_t g2() const noexcept { return g2_; }
    [[nodiscard]] std::int64_t total_genus() const noexcept { return g1_ + g2_; }

    /// Ordered by (degree, d1, d2).
    friend std::strong_ordering operator<=>(const RootClass& l, const RootClass& r);
    friend bool operator==(const RootClass& l, const RootClass& r) {
        return (l <=> r) == std::strong_ordering::equal;
    }

private:
    DataSet d1_;
    DataSet d2_;
    std::int64_t degree_;
    std::int64_t g1_;
    std::int64_t g2_;
};

/// (n/n1) k1 + (n/n2) k2 = 1 mod n with n = lcm(n1, n2), ki = ai^{-1} mod ni.
[[nodiscard]] bool is_compatible_pair(const DataSet& d1, const DataSet& d2);

/// lcm of the two degrees; throws std::invalid_argument for an incompatible pair.
[[nodiscard]] std::int64_t pair_degree(const DataSet& d1, const DataSet& d2);

/// Every root class for the split g1 + g2 (g1 >= g2 >= 1), sorted by
/// (degree, d1, d2). Pairs are unordered when g1 == g2. The degree-1 pair of
/// trivial data sets (the twist itself) is not a root and is left out.
[[nodiscard]] std::vector<RootClass> enumerate_root_classes(std::int64_t g1, std::int64_t g2,
                                                            unsigned width = 1);

/// The largest degree of a root for the split, computed without
/// materializing the classes: per degree only the set of turning residues
/// matters, so pairs of degrees are tried in decreasing lcm order.
struct MaxDegree {
    std::int64_t degree = 0;
    std::int64_t g1 = 0;
    std::int64_t g2 = 0;
    std::optional<RootClass> witness;  // smallest class of that degree
};

/// Which data sets may appear on either side when maximizing.
enum class SideFilter {
    Any,
    SphericalTwoCone,  // spherical with exactly two cones
};

/// With SideFilter::Any a class always exists; with a restrictive filter the
/// result has degree 0 when no admissible class exists.
[[nodiscard]] MaxDegree max_root_degree(std::int64_t g1, std::int64_t g2, unsigned width = 1,
                                        SideFilter filter = SideFilter::Any);

/// max of max_root_degree over every split of g (g >= 2). Ties between
/// splits keep the split with the larger g1.
[[nodiscard]] MaxDegree max_degree_for_genus(std::int64_t g, unsigned width = 1,
                                             SideFilter filter = SideFilter::Any);

/// A class of degree lcm(4 g1, 4 g2 + 2) built from the (4g1, 0, a1; (1, 2), (c', 4g1))
/// and (4g2+2, 0, a2; (1, 2), (a2 g2, 2g2+1)) families, with a1, a2 found by
/// exhaustive search over units. Throws std::logic_error if no units work.
[[nodiscard]] RootClass witness_pair(std::int64_t g1, std::int64_t g2);

[[nodiscard]] nlohmann::ordered_json to_json(const RootClass& rc);

}  // namespace dtroots
