#include "dtroots/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace dtroots {

std::string_view to_string(Condition c) noexcept {
    switch (c) {
        case Condition::Range: return "range";
        case Condition::Divisibility: return "divisibility";
        case Condition::UnitA: return "unit-a";
        case Condition::UnitC: return "unit-c";
        case Condition::Congruence: return "congruence";
        case Condition::TrivialShape: return "trivial-shape";
    }
    return "unknown";
}

bool ValidationReport::has(Condition c) const {
    return std::find(failures.begin(), failures.end(), c) != failures.end();
}

ValidationReport validate(const RawTuple& t) {
    bool range = t.n >= 1 && t.gt >= 0 && t.a >= 1 && t.a <= t.n;
    bool divisibility = true;
    bool unit_c = true;
    for (const auto& cone : t.cones) {
        if (cone.x <= 1 || cone.c < 1 || cone.c >= cone.x) range = false;
        if (cone.x <= 0 || t.n < 1 || t.n % cone.x != 0) divisibility = false;
        if (cone.x > 0 && std::gcd(cone.c, cone.x) != 1) unit_c = false;
    }
    const bool unit_a = t.n >= 1 && std::gcd(t.a, t.n) == 1;

    // The congruence is only meaningful once every n/x is an integer.
    bool congruence = true;
    if (t.n >= 1 && divisibility) {
        std::int64_t sum = t.a % t.n;
        for (const auto& cone : t.cones) {
            sum = (sum + (t.n / cone.x) * (cone.c % t.n)) % t.n;
        }
        congruence = sum == 0;
    }

    bool shape = true;
    if (t.n == 1) {
        shape = t.a == 1 && t.cones.empty();
    } else if (t.n > 1) {
        shape = !t.cones.empty();
    }

    ValidationReport report;
    auto note = [&](bool ok, Condition c) {
        if (!ok) report.failures.push_back(c);
    };
    note(range, Condition::Range);
    note(divisibility, Condition::Divisibility);
    note(unit_a, Condition::UnitA);
    note(unit_c, Condition::UnitC);
    note(congruence, Condition::Congruence);
    note(shape, Condition::TrivialShape);
    report.overall = report.failures.empty();
    return report;
}

std::strong_ordering operator<=>(const DataSet& l, const DataSet& r) {
    if (auto cmp = l.n_ <=> r.n_; cmp != 0) return cmp;
    if (auto cmp = l.gt_ <=> r.gt_; cmp != 0) return cmp;
    if (auto cmp = l.a_ <=> r.a_; cmp != 0) return cmp;
    const std::size_t common = std::min(l.cones_.size(), r.cones_.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (auto cmp = l.cones_[i].c <=> r.cones_[i].c; cmp != 0) return cmp;
        if (auto cmp = l.cones_[i].x <=> r.cones_[i].x; cmp != 0) return cmp;
    }
    return l.cones_.size() <=> r.cones_.size();
}

DataSet DataSet::trivial(std::int64_t g) {
    if (g < 0) throw std::invalid_argument("trivial data set needs orbit genus >= 0");
    return DataSet(1, g, 1, {});
}

std::int64_t lcm_of_orders(const std::vector<ConeDatum>& cones) {
    std::int64_t l = 1;
    for (const auto& cone : cones) l = std::lcm(l, cone.x);
    return l;
}

DataSet canonical_form(const RawTuple& candidate) {
    if (!validate(candidate).overall) {
        throw std::invalid_argument("canonical_form: candidate is not a valid data set");
    }
    auto cones = candidate.cones;
    std::sort(cones.begin(), cones.end());
    // Follows from the congruence and gcd(a, n) = 1; checked, never assumed.
    if (candidate.n > 1 && lcm_of_orders(cones) != candidate.n) {
        throw std::logic_error("canonical_form: cone orders do not generate the degree");
    }
    return DataSet(candidate.n, candidate.gt, candidate.a, std::move(cones));
}

std::int64_t twice_genus(std::int64_t n, std::int64_t gt, const std::vector<ConeDatum>& cones) {
    std::int64_t twice = 2 * gt * n + (1 - n);
    for (const auto& cone : cones) twice += (n / cone.x) * (cone.x - 1);
    return twice;
}

std::int64_t genus(const DataSet& d) {
    const std::int64_t twice = twice_genus(d.degree(), d.orbit_genus(), d.cones());
    if (twice % 2 != 0) {
        throw std::logic_error("genus: half-integral genus, data set is inconsistent");
    }
    return twice / 2;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("inverse_mod: modulus must be >= 1");
    if (n == 1) return 1;
    // Extended Euclid on (a mod n, n).
    std::int64_t r0 = n, r1 = ((a % n) + n) % n;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    if (r0 != 1) throw std::invalid_argument("inverse_mod: arguments are not coprime");
    return least_positive(s0, n);
}

Rational turning_fraction(const DataSet& d) {
    return Rational(inverse_mod(d.a(), d.degree()), d.degree()).frac();
}

bool is_spherical(const DataSet& d) noexcept { return d.degree() > 1 && d.orbit_genus() == 0; }

std::int64_t forced_a(std::int64_t n, const std::vector<ConeDatum>& cones) {
    std::int64_t sum = 0;
    for (const auto& cone : cones) sum = (sum + (n / cone.x) * cone.c) % n;
    return least_positive(-sum, n);
}

}  // namespace dtroots
