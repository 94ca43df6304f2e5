#include "dtroots/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dtroots/parallel.hpp"

namespace dtroots {

std::vector<std::int64_t> proper_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 2; x <= n; ++x) {
        if (n % x == 0) out.push_back(x);
    }
    return out;
}

namespace {

// One independent unit of search work: an orbit genus together with the
// multiset of cone orders (ascending).
struct Cell {
    std::int64_t gt;
    std::vector<std::int64_t> orders;
};

void collect_order_multisets(std::int64_t n, const std::vector<std::int64_t>& divisors,
                             std::size_t from, std::int64_t remaining, std::int64_t running_lcm,
                             std::vector<std::int64_t>& current, std::int64_t gt,
                             std::vector<Cell>& out) {
    if (remaining == 0) {
        if (running_lcm == n) out.push_back({gt, current});
        return;
    }
    for (std::size_t i = from; i < divisors.size(); ++i) {
        const std::int64_t x = divisors[i];
        const std::int64_t weight = n - n / x;
        // Weights increase with x, so nothing further along fits either.
        if (weight > remaining) break;
        current.push_back(x);
        collect_order_multisets(n, divisors, i, remaining - weight, std::lcm(running_lcm, x),
                                current, gt, out);
        current.pop_back();
    }
}

std::vector<std::int64_t> units_mod(std::int64_t x) {
    std::vector<std::int64_t> out;
    for (std::int64_t c = 1; c < x; ++c) {
        if (std::gcd(c, x) == 1) out.push_back(c);
    }
    return out;
}

// Expands a cell over residues. Within a run of equal orders the residues are
// chosen nondecreasing, so each multiset of (c, x) pairs appears once.
void expand_residues(std::int64_t n, const Cell& cell, std::size_t pos, std::int64_t min_index,
                     std::int64_t partial, std::vector<ConeDatum>& cones,
                     std::vector<DataSet>& out) {
    if (pos == cell.orders.size()) {
        const std::int64_t a = least_positive(-partial, n);
        if (std::gcd(a, n) == 1) out.push_back(canonical_form({n, cell.gt, a, cones}));
        return;
    }
    const std::int64_t x = cell.orders[pos];
    const auto units = units_mod(x);
    for (std::size_t i = static_cast<std::size_t>(min_index); i < units.size(); ++i) {
        cones.push_back({units[i], x});
        const bool same_next = pos + 1 < cell.orders.size() && cell.orders[pos + 1] == x;
        expand_residues(n, cell, pos + 1, same_next ? static_cast<std::int64_t>(i) : 0,
                        (partial + (n / x) * units[i]) % n, cones, out);
        cones.pop_back();
    }
}

}  // namespace

std::vector<DataSet> enumerate_data_sets(const EnumerationQuery& q, unsigned width) {
    if (q.n < 1 || q.g < 1) {
        throw std::invalid_argument("enumerate_data_sets: need n >= 1 and g >= 1");
    }
    if (q.n == 1) return {DataSet::trivial(q.g)};

    const std::int64_t n = q.n;
    const auto divisors = proper_divisors(n);
    std::vector<Cell> cells;
    for (std::int64_t gt = 0;; ++gt) {
        const std::int64_t budget = 2 * q.g - 1 + n - 2 * gt * n;
        // Every cone weighs at least n/2 and at least one cone is needed.
        if (2 * budget < n) break;
        std::vector<std::int64_t> current;
        collect_order_multisets(n, divisors, 0, budget, 1, current, gt, cells);
    }

    auto per_cell = parallel_map(cells.size(), width, [&](std::size_t i) {
        std::vector<DataSet> local;
        std::vector<ConeDatum> cones;
        expand_residues(n, cells[i], 0, 0, 0, cones, local);
        return local;
    });

    std::vector<DataSet> merged;
    for (auto& local : per_cell) {
        merged.insert(merged.end(), std::make_move_iterator(local.begin()),
                      std::make_move_iterator(local.end()));
    }
    std::sort(merged.begin(), merged.end());
    return merged;
}

std::map<std::int64_t, std::vector<DataSet>> enumerate_for_genus(std::int64_t g, unsigned width) {
    if (g < 1) throw std::invalid_argument("enumerate_for_genus: need g >= 1");
    const auto max_n = static_cast<std::size_t>(4 * g + 2);
    auto lists = parallel_map(max_n, width, [&](std::size_t i) {
        return enumerate_data_sets({static_cast<std::int64_t>(i) + 1, g}, 1);
    });
    std::map<std::int64_t, std::vector<DataSet>> out;
    for (std::size_t i = 0; i < max_n; ++i) out[static_cast<std::int64_t>(i) + 1] = std::move(lists[i]);
    return out;
}

}  // namespace dtroots
