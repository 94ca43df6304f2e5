#include "dtroots/pairing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "dtroots/enumeration.hpp"
#include "dtroots/notation.hpp"
#include "dtroots/parallel.hpp"

namespace dtroots {

namespace {

// (n/n_side) * k mod n; well defined although k is only known mod n_side.
std::int64_t scaled_turn(std::int64_t n, std::int64_t n_side, std::int64_t k) {
    return ((n / n_side) * k) % n;
}

// The k2 (mod n2) that completes k1 to a compatible pair, if any.
std::optional<std::int64_t> partner_k(std::int64_t n1, std::int64_t k1, std::int64_t n2) {
    const std::int64_t n = std::lcm(n1, n2);
    const std::int64_t rest = least_positive(1 - scaled_turn(n, n1, k1), n) % n;
    const std::int64_t m = n / n2;
    if (rest % m != 0) return std::nullopt;
    const std::int64_t k2 = least_positive(rest / m, n2);
    if (std::gcd(k2, n2) != 1) return std::nullopt;
    return k2;
}

}  // namespace

bool is_compatible_pair(const DataSet& d1, const DataSet& d2) {
    const std::int64_t n1 = d1.degree();
    const std::int64_t n2 = d2.degree();
    const std::int64_t n = std::lcm(n1, n2);
    const std::int64_t k1 = inverse_mod(d1.a(), n1);
    const std::int64_t k2 = inverse_mod(d2.a(), n2);
    return (scaled_turn(n, n1, k1) + scaled_turn(n, n2, k2)) % n == 1 % n;
}

std::int64_t pair_degree(const DataSet& d1, const DataSet& d2) {
    if (!is_compatible_pair(d1, d2)) {
        throw std::invalid_argument("pair_degree: data sets do not form a compatible pair");
    }
    return std::lcm(d1.degree(), d2.degree());
}

RootClass::RootClass(DataSet first, DataSet second)
    : d1_(std::move(first)), d2_(std::move(second)), degree_(0), g1_(genus(d1_)), g2_(genus(d2_)) {
    if (g1_ < g2_ || (g1_ == g2_ && d2_ < d1_)) {
        std::swap(d1_, d2_);
        std::swap(g1_, g2_);
    }
    if (g1_ + g2_ < 2) throw std::invalid_argument("RootClass: total genus must be >= 2");
    degree_ = pair_degree(d1_, d2_);
}

std::strong_ordering operator<=>(const RootClass& l, const RootClass& r) {
    if (auto cmp = l.degree_ <=> r.degree_; cmp != 0) return cmp;
    if (auto cmp = l.d1_ <=> r.d1_; cmp != 0) return cmp;
    return l.d2_ <=> r.d2_;
}

namespace {

using DegreeLists = std::map<std::int64_t, std::vector<DataSet>>;

// Data sets of one degree bucketed by their a value.
std::map<std::int64_t, std::vector<const DataSet*>> by_a(const std::vector<DataSet>& list) {
    std::map<std::int64_t, std::vector<const DataSet*>> out;
    for (const auto& d : list) out[d.a()].push_back(&d);
    return out;
}

std::vector<RootClass> classes_for_cell(const std::vector<DataSet>& side1,
                                        const std::vector<DataSet>& side2, bool same_list) {
    std::vector<RootClass> out;
    if (side1.empty() || side2.empty()) return out;
    const std::int64_t n1 = side1.front().degree();
    const std::int64_t n2 = side2.front().degree();
    const auto buckets = by_a(side2);
    for (const auto& d1 : side1) {
        const auto k2 = partner_k(n1, inverse_mod(d1.a(), n1), n2);
        if (!k2) continue;
        auto it = buckets.find(inverse_mod(*k2, n2));
        if (it == buckets.end()) continue;
        for (const DataSet* d2 : it->second) {
            if (same_list && *d2 < d1) continue;
            out.emplace_back(d1, *d2);
        }
    }
    return out;
}

std::vector<std::int64_t> turning_residues(const std::vector<DataSet>& list) {
    std::vector<std::int64_t> ks;
    for (const auto& d : list) ks.push_back(inverse_mod(d.a(), d.degree()));
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

DegreeLists admissible(DegreeLists lists, SideFilter filter) {
    if (filter == SideFilter::SphericalTwoCone) {
        for (auto& [n, list] : lists) {
            std::erase_if(list, [](const DataSet& d) { return !is_spherical(d) || d.ell() != 2; });
        }
    }
    return lists;
}

void check_split(std::int64_t g1, std::int64_t g2) {
    if (g2 < 1 || g1 < g2) throw std::invalid_argument("genus split needs g1 >= g2 >= 1");
}

}  // namespace

std::vector<RootClass> enumerate_root_classes(std::int64_t g1, std::int64_t g2, unsigned width) {
    check_split(g1, g2);
    const DegreeLists lists1 = enumerate_for_genus(g1, width);
    const DegreeLists lists2 = g1 == g2 ? lists1 : enumerate_for_genus(g2, width);

    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (const auto& [n1, l1] : lists1) {
        for (const auto& [n2, l2] : lists2) {
            if (l1.empty() || l2.empty()) continue;
            if (g1 == g2 && n2 < n1) continue;
            if (std::lcm(n1, n2) == 1) continue;  // t_C itself
            cells.emplace_back(n1, n2);
        }
    }
    auto per_cell = parallel_map(cells.size(), width, [&](std::size_t i) {
        const auto [n1, n2] = cells[i];
        return classes_for_cell(lists1.at(n1), lists2.at(n2), g1 == g2 && n1 == n2);
    });

    std::vector<RootClass> merged;
    for (auto& local : per_cell) {
        merged.insert(merged.end(), std::make_move_iterator(local.begin()),
                      std::make_move_iterator(local.end()));
    }
    std::sort(merged.begin(), merged.end());
    return merged;
}

MaxDegree max_root_degree(std::int64_t g1, std::int64_t g2, unsigned width, SideFilter filter) {
    check_split(g1, g2);
    const DegreeLists lists1 = admissible(enumerate_for_genus(g1, width), filter);
    const DegreeLists lists2 =
        g1 == g2 ? lists1 : admissible(enumerate_for_genus(g2, width), filter);

    std::map<std::int64_t, std::vector<std::int64_t>> ks1, ks2;
    for (const auto& [n, l] : lists1) if (!l.empty()) ks1[n] = turning_residues(l);
    for (const auto& [n, l] : lists2) if (!l.empty()) ks2[n] = turning_residues(l);

    // Degree pairs by decreasing lcm.
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> cells;
    for (const auto& [n1, k1s] : ks1) {
        for (const auto& [n2, k2s] : ks2) {
            if (std::lcm(n1, n2) > 1) cells.emplace_back(std::lcm(n1, n2), n1, n2);
        }
    }
    std::sort(cells.begin(), cells.end(), std::greater<>{});

    auto compatible = [&](std::int64_t n1, std::int64_t n2) {
        const auto& k2s = ks2.at(n2);
        for (std::int64_t k1 : ks1.at(n1)) {
            const auto k2 = partner_k(n1, k1, n2);
            if (k2 && std::binary_search(k2s.begin(), k2s.end(), *k2)) return true;
        }
        return false;
    };

    MaxDegree best;
    best.g1 = g1;
    best.g2 = g2;
    for (const auto& [n, n1, n2] : cells) {
        if (best.degree != 0 && n < best.degree) break;
        if (!compatible(n1, n2)) continue;
        best.degree = n;
        const auto classes = classes_for_cell(lists1.at(n1), lists2.at(n2), false);
        const auto smallest = *std::min_element(classes.begin(), classes.end());
        if (!best.witness || smallest < *best.witness) best.witness = smallest;
    }
    if (best.degree == 0 && filter == SideFilter::Any) {
        throw std::logic_error("max_root_degree: no root class found");
    }
    return best;
}

MaxDegree max_degree_for_genus(std::int64_t g, unsigned width, SideFilter filter) {
    if (g < 2) throw std::invalid_argument("max_degree_for_genus: need g >= 2");
    MaxDegree best;
    for (std::int64_t g1 = g - 1; 2 * g1 >= g; --g1) {
        auto m = max_root_degree(g1, g - g1, width, filter);
        if (m.degree > best.degree) best = std::move(m);
    }
    return best;
}

RootClass witness_pair(std::int64_t g1, std::int64_t g2) {
    if (g1 < 1 || g2 < 1) throw std::invalid_argument("witness_pair: need g1, g2 >= 1");
    const std::int64_t n1 = 4 * g1;
    const std::int64_t n2 = 4 * g2 + 2;
    for (std::int64_t a1 = 1; a1 < n1; ++a1) {
        if (std::gcd(a1, n1) != 1) continue;
        const DataSet d1 = canonical_form({n1, 0, a1, {{1, 2}, {least_positive(-a1 - 2 * g1, n1), n1}}});
        for (std::int64_t a2 = 1; a2 < n2; ++a2) {
            if (std::gcd(a2, n2) != 1) continue;
            const DataSet d2 = canonical_form(
                {n2, 0, a2, {{1, 2}, {least_positive(a2 * g2, 2 * g2 + 1), 2 * g2 + 1}}});
            if (genus(d1) != g1 || genus(d2) != g2) {
                throw std::logic_error("witness_pair: construction produced the wrong genus");
            }
            if (is_compatible_pair(d1, d2)) return RootClass(d1, d2);
        }
    }
    throw std::logic_error("witness_pair: no unit residues give a compatible pair");
}

nlohmann::ordered_json to_json(const RootClass& rc) {
    return {{"degree", rc.degree()},
            {"g1", rc.g1()},
            {"g2", rc.g2()},
            {"d1", to_json(rc.d1())},
            {"d2", to_json(rc.d2())}};
}

}  // namespace dtroots
