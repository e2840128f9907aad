#include <doctest.h>

#include <random>

#include "cycbound/gf.hpp"

using namespace cycbound;

TEST_CASE("multiplicative_order basics") {
    CHECK(multiplicative_order(2, 15) == 4);
    CHECK(multiplicative_order(2, 21) == 6);
    CHECK(multiplicative_order(2, 1) == 1);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK_THROWS_AS(multiplicative_order(2, 8), GcdError);
}

TEST_CASE("field context n=1 is the prime field") {
    FieldContext ctx = FieldContext::build(2, 1);
    CHECK(ctx.m_ext == 1);
    CHECK(ctx.alpha == ctx.one());
}

TEST_CASE("alpha has exact order n") {
    // order checked by direct powering, independent of the construction
    for (auto [q, n] : {std::pair{2, 7}, {2, 21}, {3, 13}, {5, 8}, {7, 9}}) {
        FieldContext ctx = FieldContext::build(q, n);
        CHECK(ctx.m_ext == multiplicative_order(q, n));
        FieldElement acc = ctx.one();
        int order = 0;
        for (int k = 1; k <= n; ++k) {
            acc = ctx.mul(acc, ctx.alpha);
            if (acc == ctx.one()) {
                order = k;
                break;
            }
        }
        CHECK(order == n);
    }
    // (2, 21): alpha^3 != 1round and alpha^7 != 1 pinned explicitly
    FieldContext ctx = FieldContext::build(2, 21);
    CHECK_FALSE(ctx.pow(ctx.alpha, 3) == ctx.one());
    CHECK_FALSE(ctx.pow(ctx.alpha, 7) == ctx.one());
    CHECK(ctx.pow(ctx.alpha, 21) == ctx.one());
}

TEST_CASE("alpha powers are pairwise distinct") {
    for (auto [q, n] : {std::pair{2, 15}, {3, 11}, {5, 11}, {7, 8}}) {
        FieldContext ctx = FieldContext::build(q, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) CHECK_FALSE(ctx.alpha_pow(i) == ctx.alpha_pow(j));
    }
}

TEST_CASE("nonzero elements invert") {
    for (auto [q, n] : {std::pair{2, 7}, {3, 8}, {5, 6}}) {
        FieldContext ctx = FieldContext::build(q, n);
        unsigned long long size = ctx.field_size();
        // walk the whole multiplicative group through alpha-products of a few
        // seeds plus small scalars
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            FieldElement e = ctx.zero();
            for (auto& c : e.c) c = static_cast<std::uint8_t>(rng() % q);
            if (ctx.is_zero(e)) continue;
            CHECK(ctx.mul(e, ctx.inv(e)) == ctx.one());
        }
        (void)size;
    }
}

TEST_CASE("poly_mul_mod identities") {
    FieldContext ctx = FieldContext::build(2, 7);
    const int n = 7;
    Poly one = poly_from_base({1}, ctx);
    Poly x = poly_from_base({0, 1}, ctx);
    Poly xn1 = poly_from_base({0, 0, 0, 0, 0, 0, 1}, ctx);  // x^{n-1}
    CHECK(poly_mul_mod(x, xn1, n, ctx) == one);
    Poly b = poly_from_base({1, 1, 0, 1}, ctx);
    CHECK(poly_mul_mod(one, b, n, ctx) == b);
    // (x+1)^2 = x^2 + 1 over F_2 mod x^3 - 1
    FieldContext ctx3 = FieldContext::build(2, 3);
    Poly xp1 = poly_from_base({1, 1}, ctx3);
    CHECK(poly_mul_mod(xp1, xp1, 3, ctx3) == poly_from_base({1, 0, 1}, ctx3));
}

TEST_CASE("poly_mul_mod algebra on random inputs") {
    FieldContext ctx = FieldContext::build(3, 8);
    const int n = 8;
    std::mt19937_64 rng(11);
    auto rand_poly = [&]() {
        std::vector<std::uint8_t> c(static_cast<size_t>(rng() % n + 1));
        for (auto& v : c) v = static_cast<std::uint8_t>(rng() % 3);
        return poly_from_base(c, ctx);
    };
    auto add = [&](const Poly& a, const Poly& b) {
        Poly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), ctx.zero());
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = ctx.add(r.c[i], b.c[i]);
        return poly_trim(std::move(r));
    };
    for (int t = 0; t < 50; ++t) {
        Poly a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(poly_mul_mod(a, b, n, ctx) == poly_mul_mod(b, a, n, ctx));
        CHECK(poly_mul_mod(poly_mul_mod(a, b, n, ctx), c, n, ctx) ==
              poly_mul_mod(a, poly_mul_mod(b, c, n, ctx), n, ctx));
        CHECK(poly_mul_mod(add(a, b), c, n, ctx) ==
              add(poly_mul_mod(a, c, n, ctx), poly_mul_mod(b, c, n, ctx)));
    }
}

TEST_CASE("poly_eval basics") {
    FieldContext ctx = FieldContext::build(2, 7);
    Poly zero;
    CHECK(ctx.is_zero(poly_eval(zero, ctx.alpha, ctx)));
    // x^n - 1 vanishes at alpha (characteristic 2: x^n + 1)
    std::vector<std::uint8_t> c(8, 0);
    c[0] = 1;
    c[7] = 1;
    CHECK(ctx.is_zero(poly_eval(poly_from_base(c, ctx), ctx.alpha, ctx)));
}

TEST_CASE("field element width mismatch is rejected") {
    FieldContext a = FieldContext::build(2, 7);   // m_ext 3
    FieldContext b = FieldContext::build(2, 15);  // m_ext 4
    CHECK_THROWS_AS(a.add(a.one(), b.one()), FieldMismatch);
}
