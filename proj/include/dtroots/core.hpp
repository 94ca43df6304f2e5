#pragma once

// Data sets: the arithmetic encoding of a cyclic action on a closed surface
// that fixes a distinguished point.
//
// A data set (n, gt, a; (c1,x1), ..., (cl,xl)) records the order n of the
// action, the genus gt of the quotient surface, the residue a describing the
// rotation at the distinguished fixed point, and one (c, x) pair per further
// cone point of the quotient orbifold.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dtroots/rational.hpp"

namespace dtroots {

struct ConeDatum {
    std::int64_t c = 1;  // residue class mod x, least positive representative
    std::int64_t x = 2;  // cone order

    friend bool operator==(const ConeDatum&, const ConeDatum&) = default;
    // Canonical cone order is ascending (x, c).
    friend std::strong_ordering operator<=>(const ConeDatum& l, const ConeDatum& r) {
        if (auto cmp = l.x <=> r.x; cmp != 0) return cmp;
        return l.c <=> r.c;
    }
};

/// Unvalidated tuple exactly as supplied by a caller or a parser.
struct RawTuple {
    std::int64_t n = 1;
    std::int64_t gt = 0;
    std::int64_t a = 1;
    std::vector<ConeDatum> cones;

    friend bool operator==(const RawTuple&, const RawTuple&) = default;
};

enum class Condition {
    Range,         // n >= 1, gt >= 0, x > 1, a in [1, n], c in [1, x-1]
    Divisibility,  // every x divides n
    UnitA,         // gcd(a, n) = 1
    UnitC,         // gcd(c, x) = 1
    Congruence,    // a + sum (n/x) c = 0 mod n
    TrivialShape,  // n = 1 forces (1, gt, 1;), n > 1 forces at least one cone
};

[[nodiscard]] std::string_view to_string(Condition c) noexcept;

struct ValidationReport {
    bool overall = true;
    std::vector<Condition> failures;  // in enum order, each listed once

    [[nodiscard]] bool has(Condition c) const;
};

/// Checks every defining condition and reports all of the violated ones.
/// Never throws; residues outside their least-positive range are reported,
/// not reduced.
[[nodiscard]] ValidationReport validate(const RawTuple& candidate);

/// A validated data set in canonical form (cones sorted ascending by (x, c)).
///
/// Instances can only be produced by `canonical_form`, so every DataSet in the
/// program satisfies the defining conditions.
class DataSet {
public:
    [[nodiscard]] std::int64_t degree() const noexcept { return n_; }
    [[nodiscard]] std::int64_t orbit_genus() const noexcept { return gt_; }
    [[nodiscard]] std::int64_t a() const noexcept { return a_; }
    [[nodiscard]] const std::vector<ConeDatum>& cones() const noexcept { return cones_; }
    [[nodiscard]] std::size_t ell() const noexcept { return cones_.size(); }
    [[nodiscard]] bool is_trivial() const noexcept { return n_ == 1; }

    [[nodiscard]] RawTuple raw() const { return {n_, gt_, a_, cones_}; }

    // Lexicographic on the serialized integer sequence (n, gt, a, c1, x1, ...)
    // with cones compared pairwise in canonical order.
    friend std::strong_ordering operator<=>(const DataSet& l, const DataSet& r);
    friend bool operator==(const DataSet&, const DataSet&) = default;

    /// The trivial data set (1, g, 1;).
    [[nodiscard]] static DataSet trivial(std::int64_t g);

private:
    friend DataSet canonical_form(const RawTuple& candidate);
    DataSet(std::int64_t n, std::int64_t gt, std::int64_t a, std::vector<ConeDatum> cones)
        : n_(n), gt_(gt), a_(a), cones_(std::move(cones)) {}

    std::int64_t n_;
    std::int64_t gt_;
    std::int64_t a_;
    std::vector<ConeDatum> cones_;
};

/// Sorts the cones into canonical order. Throws std::invalid_argument if the
/// candidate does not pass `validate`. Idempotent on DataSet::raw().
[[nodiscard]] DataSet canonical_form(const RawTuple& candidate);

/// g = gt*n + (1-n)/2 + (1/2) sum (n/x)(x-1), evaluated exactly.
/// Throws std::logic_error if 2g is odd, which a valid data set never yields.
[[nodiscard]] std::int64_t genus(const DataSet& d);

/// The twice-genus numerator of the genus formula; usable on unvalidated
/// tuples whose cone orders divide n.
[[nodiscard]] std::int64_t twice_genus(std::int64_t n, std::int64_t gt,
                                       const std::vector<ConeDatum>& cones);

/// k in [1, n] with a*k = 1 mod n. Throws std::invalid_argument when
/// gcd(a, n) != 1 or n < 1.
[[nodiscard]] std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

/// Rotation at the distinguished fixed point as a fraction of a full turn,
/// k/n with k = a^{-1} mod n, reduced into [0, 1).
[[nodiscard]] Rational turning_fraction(const DataSet& d);

/// Non-trivial action whose quotient surface is a sphere.
[[nodiscard]] bool is_spherical(const DataSet& d) noexcept;

/// a = -sum (n/x) c mod n, as a least positive representative in [1, n].
[[nodiscard]] std::int64_t forced_a(std::int64_t n, const std::vector<ConeDatum>& cones);

/// Reduces `value` into [1, modulus] (so 0 maps to modulus).
[[nodiscard]] constexpr std::int64_t least_positive(std::int64_t value, std::int64_t modulus) {
    std::int64_t r = value % modulus;
    if (r <= 0) r += modulus;
    return r;
}

[[nodiscard]] std::int64_t lcm_of_orders(const std::vector<ConeDatum>& cones);

}  // namespace dtroots
