#include "conorbit/modring.hpp"

#include <algorithm>
#include <unordered_set>

namespace conorbit {

int CosetTable::index_of_element(int64_t x) const {
    x = ((x % rn) + rn) % rn;
    for (size_t t = 0; t < cosets.size(); ++t)
        if (std::binary_search(cosets[t].elements.begin(), cosets[t].elements.end(), x))
            return static_cast<int>(t);
    return -1;
}

CosetTable cyclotomic_cosets(int64_t q, int64_t r, int64_t n) {
    const int64_t rn = r * n;
    require(rn > 1, errc::invalid_parameter, "rn must exceed 1");
    require(std::gcd(rn, q) == 1, errc::not_coprime, "gcd(rn, q) must be 1");

    CosetTable table;
    table.q = q;
    table.r = r;
    table.n = n;
    table.rn = rn;
    table.m = ord_mod(q, rn);

    std::unordered_set<int64_t> seen;
    for (int64_t i = 0; i < n; ++i) {
        int64_t x = (1 + r * i) % rn;
        if (seen.count(x)) continue;
        Coset c;
        int64_t y = x;
        do {
            c.elements.push_back(y);
            seen.insert(y);
            y = y * q % rn;
        } while (y != x);
        std::sort(c.elements.begin(), c.elements.end());
        c.rep = c.elements.front();
        c.size = static_cast<int64_t>(c.elements.size());
        // rep = 1 + r*a mod rn with a in [0, n)
        c.a = r > 1 ? (c.rep - 1) / r : ((c.rep - 1) % n + n) % n;
        table.cosets.push_back(std::move(c));
    }
    std::sort(table.cosets.begin(), table.cosets.end(),
              [](const Coset& a, const Coset& b) { return a.rep < b.rep; });
    return table;
}

int multiplier_coset_image(const CosetTable& table, int64_t a, int t) {
    require(t >= 0 && t < static_cast<int>(table.cosets.size()), errc::invalid_parameter,
            "coset index out of range");
    a = ((a % table.rn) + table.rn) % table.rn;
    require(std::gcd(a, table.rn) == 1 && (a - 1) % table.r == 0, errc::not_in_unit_subgroup,
            "multiplier constant must lie in Z*_rn intersected with 1 + r*Z_rn");
    int64_t ainv = mod_inverse(a, table.rn);
    int64_t image = ainv * table.cosets[static_cast<size_t>(t)].rep % table.rn;
    int idx = table.index_of_element(image);
    require(idx >= 0, errc::not_in_unit_subgroup, "multiplier image left the root-index set");
    return idx;
}

} // namespace conorbit
