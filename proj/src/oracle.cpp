// Unpruned reference enumeration. Deliberately written without any of the
// search helpers in enumeration.cpp and without the genus formula from
// core.cpp: the genus is checked through the orbifold Euler characteristic
//   (2 - 2g)/n = 2 - 2gt + (1/n - 1) + sum (1/x - 1),
// multiplied through by n.

#include <algorithm>
#include <numeric>

#include "dtroots/enumeration.hpp"

namespace dtroots {

namespace {

struct Pair {
    std::int64_t c;
    std::int64_t x;
};

template <typename Visit>
void each_multiset(const std::vector<Pair>& pairs, std::size_t size, std::size_t from,
                   std::vector<std::size_t>& picked, Visit& visit) {
    if (picked.size() == size) {
        visit(picked);
        return;
    }
    for (std::size_t i = from; i < pairs.size(); ++i) {
        picked.push_back(i);
        each_multiset(pairs, size, i, picked, visit);
        picked.pop_back();
    }
}

}  // namespace

std::vector<DataSet> oracle_enumerate(const EnumerationQuery& q) {
    const std::int64_t n = q.n;
    const std::int64_t g = q.g;

    std::vector<Pair> pairs;
    for (std::int64_t x = 2; x <= n; ++x) {
        if (n % x != 0) continue;
        for (std::int64_t c = 1; c < x; ++c) pairs.push_back({c, x});
    }

    // (1 - 2g)/n = -(l - 1) - 2gt + sum 1/x with every x >= 2 gives
    // l <= (2g - 1 + n)/(n/2).
    const std::int64_t ell_max = (2 * (2 * g - 1 + n)) / n;

    std::vector<DataSet> found;
    std::vector<std::size_t> picked;
    for (std::int64_t ell = 0; ell <= ell_max; ++ell) {
        auto visit = [&](const std::vector<std::size_t>& idx) {
            std::int64_t residue_sum = 0;  // sum (n/x) c
            std::int64_t euler_sum = 0;    // sum (n/x - n)
            bool units = true;
            for (std::size_t i : idx) {
                const auto& p = pairs[i];
                residue_sum += (n / p.x) * p.c;
                euler_sum += n / p.x - n;
                if (std::gcd(p.c, p.x) != 1) units = false;
            }
            for (std::int64_t a = 1; a <= n; ++a) {
                if (n == 1 && a != 1) continue;
                if (std::gcd(a, n) != 1) continue;
                if (!units) continue;
                if ((a + residue_sum) % n != 0) continue;
                for (std::int64_t gt = 0; gt <= g; ++gt) {
                    if (2 - 2 * g != n * (2 - 2 * gt) + (1 - n) + euler_sum) continue;
                    RawTuple t{n, gt, a, {}};
                    for (std::size_t i : idx) t.cones.push_back({pairs[i].c, pairs[i].x});
                    found.push_back(canonical_form(t));
                }
            }
        };
        each_multiset(pairs, static_cast<std::size_t>(ell), 0, picked, visit);
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace dtroots
