#include "doctest.h"

#include <array>
#include <set>

#include "conorbit/modring.hpp"

using namespace conorbit;

TEST_CASE("ord_mod") {
    CHECK(ord_mod(3, 16) == 4);
    CHECK(ord_mod(17, 16) == 1); // b = 1 mod M
    CHECK(ord_mod(9, 80) == 2);
    CHECK_THROWS_AS(ord_mod(4, 16), error);
}

TEST_CASE("euler_phi / divisors / gcd_list") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(80) == 32);
    CHECK(divisors(12) == std::vector<int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<int64_t>{1});
    CHECK(gcd_list({40, 25}) == 5);
    CHECK(gcd_list({}) == 0);
    CHECK(gcd_list({0, 12, -8}) == 4);
    CHECK(gcd_list({0, 0}) == 0);
    CHECK(gcd_list({7, 0}) == 7);
}

TEST_CASE("cyclotomic cosets of the worked examples") {
    SUBCASE("q=3 r=2 n=8") {
        CosetTable t = cyclotomic_cosets(3, 2, 8);
        REQUIRE(t.cosets.size() == 2);
        CHECK(t.m == 4);
        CHECK(t.cosets[0].elements == std::vector<int64_t>{1, 3, 9, 11});
        CHECK(t.cosets[1].elements == std::vector<int64_t>{5, 7, 13, 15});
        CHECK(t.cosets[1].a == 2);
        CHECK(t.cosets[1].size == 4);
    }
    SUBCASE("q=3 r=2 n=40") {
        CosetTable t = cyclotomic_cosets(3, 2, 40);
        REQUIRE(t.cosets.size() == 10);
        CHECK(t.cosets[3].elements == std::vector<int64_t>{11, 19, 33, 57});
        CHECK(t.cosets[6].elements == std::vector<int64_t>{23, 47, 61, 69});
    }
    SUBCASE("q=9 r=2 n=40") {
        CosetTable t = cyclotomic_cosets(9, 2, 40);
        CHECK(t.m == 2);
        CHECK(t.cosets[0].elements == std::vector<int64_t>{1, 9});
        CHECK(t.cosets[1].elements == std::vector<int64_t>{3, 27});
        CHECK(t.cosets[17].elements == std::vector<int64_t>{53, 77});
    }
    SUBCASE("q=5 r=2 n=39") {
        CosetTable t = cyclotomic_cosets(5, 2, 39);
        CHECK(t.cosets[0].elements == std::vector<int64_t>{1, 5, 25, 47});
        CHECK(t.cosets[9].elements == std::vector<int64_t>{39});
        CHECK(t.cosets[9].a == 19);
    }
    SUBCASE("r=1 smallest cyclic case") {
        CosetTable t = cyclotomic_cosets(3, 1, 2);
        REQUIRE(t.cosets.size() == 2);
        CHECK(t.cosets[0].elements == std::vector<int64_t>{0});
        CHECK(t.cosets[1].elements == std::vector<int64_t>{1});
    }
}

TEST_CASE("coset partition properties") {
    for (auto [q, r, n] : std::vector<std::array<int64_t, 3>>{
             {3, 2, 8}, {3, 2, 40}, {9, 2, 40}, {5, 2, 39}, {3, 1, 8}, {2, 1, 15}, {7, 3, 4}}) {
        CAPTURE(q);
        CAPTURE(r);
        CAPTURE(n);
        CosetTable t = cyclotomic_cosets(q, r, n);
        std::set<int64_t> all;
        int64_t total = 0;
        for (const Coset& c : t.cosets) {
            total += c.size;
            for (int64_t x : c.elements) {
                CHECK(all.insert(x).second); // disjoint
                CHECK(((x - 1) % r + r) % r == 0); // inside 1 + r*Z_rn
                CHECK(std::binary_search(c.elements.begin(), c.elements.end(), x * q % t.rn));
            }
            CHECK((1 + r * c.a) % t.rn == c.rep);
        }
        CHECK(total == n);
        // the coset containing 1 has size m
        int idx1 = t.index_of_element(1);
        REQUIRE(idx1 >= 0);
        CHECK(t.cosets[static_cast<size_t>(idx1)].size == t.m);
    }
}

TEST_CASE("multiplier images on coset indices") {
    CosetTable t = cyclotomic_cosets(9, 2, 40);
    SUBCASE("identity") {
        for (int i = 0; i < static_cast<int>(t.cosets.size()); ++i)
            CHECK(multiplier_coset_image(t, 1, i) == i);
    }
    SUBCASE("a=3 maps {1,9} to {3,27}") { CHECK(multiplier_coset_image(t, 3, 0) == 1); }
    SUBCASE("a=-3 maps {1,9} to {53,77}") { CHECK(multiplier_coset_image(t, 77, 0) == 17); }
    SUBCASE("bijection and inverse composition") {
        for (int64_t a : {int64_t(3), int64_t(77), int64_t(9)}) {
            std::set<int> images;
            for (int i = 0; i < static_cast<int>(t.cosets.size()); ++i)
                images.insert(multiplier_coset_image(t, a, i));
            CHECK(images.size() == t.cosets.size());
            int64_t ainv = mod_inverse(a, t.rn);
            for (int i = 0; i < static_cast<int>(t.cosets.size()); ++i)
                CHECK(multiplier_coset_image(t, ainv, multiplier_coset_image(t, a, i)) == i);
        }
    }
    SUBCASE("negacyclic a=-1 preserves coset sizes") {
        for (auto [q, n] : std::vector<std::pair<int64_t, int64_t>>{{3, 8}, {3, 40}, {5, 39}, {9, 40}}) {
            CosetTable tt = cyclotomic_cosets(q, 2, n);
            for (int i = 0; i < static_cast<int>(tt.cosets.size()); ++i) {
                int j = multiplier_coset_image(tt, tt.rn - 1, i);
                CHECK(tt.cosets[static_cast<size_t>(j)].size == tt.cosets[static_cast<size_t>(i)].size);
            }
        }
    }
    SUBCASE("rejects multipliers outside the unit subgroup") {
        CHECK_THROWS_AS(multiplier_coset_image(t, 2, 0), error);  // even: not in 1+2Z
        CHECK_THROWS_AS(multiplier_coset_image(t, 5, 0), error);  // gcd(5,80) != 1
    }
}
