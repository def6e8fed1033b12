#include "doctest.h"

#include <random>

#include "conorbit/gf.hpp"
#include "conorbit/instance.hpp"

using namespace conorbit;

namespace {

void check_axioms_exhaustive(const FieldCtx& F) {
    const int64_t s = F.size();
    std::vector<FieldElem> elems;
    elems.push_back(kZero);
    for (int64_t i = 0; i < s - 1; ++i) elems.push_back(FieldElem{i});
    int64_t bad = 0;
    for (FieldElem a : elems)
        for (FieldElem b : elems)
            for (FieldElem c : elems) {
                bad += F.mul(a, F.mul(b, c)) != F.mul(F.mul(a, b), c);
                bad += F.add(a, F.add(b, c)) != F.add(F.add(a, b), c);
                bad += F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c));
            }
    for (FieldElem a : elems) {
        bad += !F.add(a, F.neg(a)).is_zero();
        if (!a.is_zero()) bad += F.mul(a, F.inv(a)) != F.one();
        bad += F.add(a, kZero) != a;
        bad += F.mul(a, F.one()) != a;
    }
    CHECK(bad == 0);
}

} // namespace

TEST_CASE("field axioms, exhaustive on all fields up to size 256") {
    for (int64_t p = 2; p <= 256; ++p) {
        if (!is_prime(p)) continue;
        for (int N = 1;; ++N) {
            int64_t size = 1;
            for (int i = 0; i < N; ++i) size *= p;
            if (size > 256) break;
            CAPTURE(p);
            CAPTURE(N);
            check_axioms_exhaustive(build_field(p, N));
        }
    }
}

TEST_CASE("field axioms, random triples on a larger field") {
    FieldCtx F = build_field(2, 10);
    std::mt19937 rng(42);
    auto rnd = [&]() {
        int64_t v = static_cast<int64_t>(rng() % static_cast<uint32_t>(F.size()));
        return v == 0 ? kZero : FieldElem{v - 1};
    };
    for (int i = 0; i < 10000; ++i) {
        FieldElem a = rnd(), b = rnd(), c = rnd();
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
    }
}

TEST_CASE("frobenius is additive") {
    for (auto [p, N] : std::vector<std::pair<int64_t, int>>{{3, 4}, {2, 10}, {5, 2}}) {
        FieldCtx F = build_field(p, N);
        std::mt19937 rng(7);
        for (int i = 0; i < 2000; ++i) {
            int64_t va = static_cast<int64_t>(rng() % static_cast<uint32_t>(F.size()));
            int64_t vb = static_cast<int64_t>(rng() % static_cast<uint32_t>(F.size()));
            FieldElem a = va ? FieldElem{va - 1} : kZero;
            FieldElem b = vb ? FieldElem{vb - 1} : kZero;
            FieldElem lhs = F.pow(F.add(a, b), p);
            FieldElem rhs = F.add(a.is_zero() ? kZero : F.pow(a, p),
                                  b.is_zero() ? kZero : F.pow(b, p));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("modulus pins: lexicographically smallest irreducible") {
    CHECK(build_field(3, 4).modulus() == std::vector<int>{1, 0, 1, 1, 1});
    CHECK(build_field(2, 10).modulus() == std::vector<int>{1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1});
    CHECK(build_field(2, 1).modulus() == std::vector<int>{0, 1});
    CHECK(build_field(3, 1).modulus() == std::vector<int>{0, 1});
}

TEST_CASE("determinism: identical builds produce identical tables") {
    FieldCtx a = build_field(3, 4);
    FieldCtx b = build_field(3, 4);
    for (int64_t i = 0; i < a.size() - 1; ++i)
        CHECK(a.to_packed(FieldElem{i}) == b.to_packed(FieldElem{i}));
    // canonical generator of F_81 is x^2+1, packed 10 in base 3
    CHECK(a.to_packed(a.gen()) == 10);
}

TEST_CASE("element orders") {
    FieldCtx F9 = build_field(3, 2);
    // 2 = -1 in characteristic 3
    FieldElem two = F9.from_packed(2);
    CHECK(F9.element_order(two) == 2);
    FieldCtx F81 = build_field(3, 4);
    CHECK(F81.element_order(F81.gen()) == 80);
    CHECK(F81.element_order(F81.one()) == 1);
    CHECK_THROWS_AS((void)F81.element_order(kZero), error);
}

TEST_CASE("cap and primality errors") {
    CHECK_THROWS_AS(build_field(4, 2), error);
    CHECK_THROWS_AS(build_field(2, 23), error); // 2^23 over the default cap
}

TEST_CASE("subfield membership") {
    Instance inst = make_instance(3, 8, "-1");
    const FieldCtx& F = *inst.ctx;
    CHECK(F.in_subfield(kZero, 3));
    CHECK(F.in_subfield(inst.roots.xi, 3));
    CHECK_FALSE(F.in_subfield(inst.roots.zeta, 3));
    CHECK(F.in_subfield(inst.roots.zeta, 81));
    CHECK_THROWS_AS((void)F.in_subfield(F.one(), 4), error); // 3 does not divide 80
    // the embedded base field has exactly q solutions of x^q = x
    int64_t fixed = 1; // zero
    for (int64_t i = 0; i < F.size() - 1; ++i)
        if (F.pow(FieldElem{i}, 3) == FieldElem{i}) ++fixed;
    CHECK(fixed == 3);
}

TEST_CASE("root systems of the worked examples") {
    SUBCASE("q=3 n=8 lambda=-1") {
        Instance inst = make_instance(3, 8, "-1");
        CHECK(inst.r == 2);
        CHECK(inst.m == 4);
        const FieldCtx& F = *inst.ctx;
        CHECK(F.element_order(inst.roots.zeta) == 16);
        CHECK(F.pow(inst.roots.zeta, 8) == inst.roots.lambda);
        CHECK(F.element_order(inst.roots.xi) == 2);
        CHECK(F.in_subfield(inst.roots.xi, 3));
        CHECK(F.element_order(inst.roots.omega) == 80);
    }
    SUBCASE("q=9 n=40 lambda=2 (= xi^4)") {
        Instance inst = make_instance(9, 40, "xi^4");
        CHECK(inst.r == 2);
        CHECK(inst.m == 2);
        CHECK(inst.ctx->element_order(inst.roots.lambda) == 2);
        CHECK(inst.ctx->pow(inst.roots.zeta, 40) == inst.roots.lambda);
        // lambda = 2, the unique order-2 element, packed representation 2
        CHECK(inst.ctx->to_packed(inst.roots.lambda) == 2);
    }
    SUBCASE("q=32 n=11 lambda=theta") {
        Instance inst = make_instance(32, 11, "xi^1");
        CHECK(inst.r == 31);
        CHECK(inst.m == 2);
        CHECK(inst.ctx->element_order(inst.roots.zeta) == 341);
        CHECK(inst.ctx->pow(inst.roots.zeta, 11) == inst.roots.lambda);
        CHECK(inst.ctx->element_order(inst.roots.xi) == 31);
    }
    SUBCASE("lambda=1 gives the cyclic case") {
        Instance inst = make_instance(5, 6, "1");
        CHECK(inst.r == 1);
        CHECK(inst.roots.omega == inst.ctx->gen());
        CHECK(inst.ctx->pow(inst.roots.zeta, 6) == inst.ctx->one());
    }
    SUBCASE("rn must divide the field group order") {
        FieldCtx F = build_field(3, 4);
        F.set_subfield(3);
        FieldElem minus_one = F.from_log((F.size() - 1) / 2);
        CHECK_THROWS_AS(make_root_system(F, 3, minus_one, 7), error); // 14 does not divide 80
    }
}

TEST_CASE("zero-element and pow edge cases") {
    FieldCtx F = build_field(3, 2);
    CHECK(F.mul(kZero, F.gen()).is_zero());
    CHECK(F.pow(F.gen(), -1) == F.inv(F.gen()));
    CHECK_THROWS_AS((void)F.inv(kZero), error);
    CHECK_THROWS_AS((void)F.pow(kZero, 0), error);
    CHECK(F.pow(kZero, 5).is_zero());
}
