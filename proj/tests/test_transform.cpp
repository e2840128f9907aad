#include <doctest.h>

#include <random>

#include "cycbound/oracle.hpp"
#include "cycbound/transform.hpp"

using namespace cycbound;

TEST_CASE("dft basics") {
    FieldContext ctx = FieldContext::build(2, 7);
    Codeword zero(7, 0);
    for (const auto& a : dft(zero, ctx)) CHECK(ctx.is_zero(a));
    Codeword e0(7, 0);
    e0[0] = 1;
    for (const auto& a : dft(e0, ctx)) CHECK(a == ctx.one());
    Codeword ones(7, 1);
    auto spec = dft(ones, ctx);
    CHECK(spec[0] == ctx.from_base(7 % 2));
    for (size_t i = 1; i < spec.size(); ++i) CHECK(ctx.is_zero(spec[i]));
    CHECK_THROWS_AS(dft(Codeword(6, 0), ctx), LengthMismatch);
}

TEST_CASE("dft is A_i = c(alpha^i) and linear") {
    FieldContext ctx = FieldContext::build(3, 8);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        Codeword a(8), b(8);
        for (auto& v : a) v = static_cast<std::uint8_t>(rng() % 3);
        for (auto& v : b) v = static_cast<std::uint8_t>(rng() % 3);
        auto da = dft(a, ctx), db = dft(b, ctx);
        Codeword sum(8);
        for (int i = 0; i < 8; ++i) sum[static_cast<size_t>(i)] =
            static_cast<std::uint8_t>((a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)]) % 3);
        auto ds = dft(sum, ctx);
        for (int i = 0; i < 8; ++i) {
            CHECK(ds[static_cast<size_t>(i)] ==
                  ctx.add(da[static_cast<size_t>(i)], db[static_cast<size_t>(i)]));
            // evaluation form
            Poly p = poly_from_base(a, ctx);
            CHECK(poly_eval(p, ctx.alpha_pow(i), ctx) == da[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("circulant shapes") {
    FieldContext ctx = FieldContext::build(2, 7);
    std::vector<FieldElement> v = {ctx.one(), ctx.zero(), ctx.zero()};
    FieldMatrix m = circulant(v);
    CHECK(m.row_count() == 3);
    CHECK(m.entries[0][0] == ctx.one());
    CHECK(m.entries[1][1] == ctx.one());
    CHECK(m.entries[2][2] == ctx.one());
    CHECK(ctx.is_zero(m.entries[1][0]));
    std::vector<FieldElement> ab = {ctx.one(), ctx.from_base(1)};
    FieldMatrix m2 = circulant(ab);
    CHECK(m2.entries[0][0] == m2.entries[1][1]);
    CHECK(m2.entries[0][1] == m2.entries[1][0]);
}

TEST_CASE("rank basics") {
    FieldContext ctx = FieldContext::build(2, 3);
    FieldMatrix zero;
    zero.entries.assign(3, std::vector<FieldElement>(3, ctx.zero()));
    CHECK(rank(zero, ctx) == 0);
    FieldMatrix id;
    id.entries.assign(3, std::vector<FieldElement>(3, ctx.zero()));
    for (int i = 0; i < 3; ++i) id.entries[static_cast<size_t>(i)][static_cast<size_t>(i)] = ctx.one();
    CHECK(rank(id, ctx) == 3);
    std::vector<FieldElement> ones(3, ctx.one());
    CHECK(rank(circulant(ones), ctx) == 1);
}

TEST_CASE("circulant rank invariant under shift, reflection, row permutation") {
    std::mt19937_64 rng(9);
    for (int q : {2, 3}) {
        for (int t = 0; t < 25; ++t) {
            int n = 2 + static_cast<int>(rng() % 10);
            if (n % q == 0) ++n;
            if (n % q == 0) continue;
            FieldContext ctx = FieldContext::build(q, n);
            std::vector<FieldElement> v;
            for (int i = 0; i < n; ++i) v.push_back(ctx.from_base(static_cast<int>(rng() % q)));
            int base = rank(circulant(v), ctx);
            std::vector<FieldElement> sh(v.size(), ctx.zero());
            for (int i = 0; i < n; ++i) sh[static_cast<size_t>((i + 1) % n)] = v[static_cast<size_t>(i)];
            CHECK(rank(circulant(sh), ctx) == base);
            std::vector<FieldElement> rev(v.rbegin(), v.rend());
            CHECK(rank(circulant(rev), ctx) == base);
            FieldMatrix m = circulant(v);
            std::shuffle(m.entries.begin(), m.entries.end(), rng);
            CHECK(rank(m, ctx) == base);
        }
    }
}

TEST_CASE("weight equals rank of the transform circulant") {
    FieldContext ctx = FieldContext::build(2, 7);
    Codeword zero(7, 0);
    CHECK(weight_via_blahut(zero, ctx) == 0);
    Codeword e0(7, 0);
    e0[0] = 1;
    CHECK(weight_via_blahut(e0, ctx) == 1);

    // random codewords of the length-21 code vs the direct count
    FieldContext ctx21 = FieldContext::build(2, 21);
    CyclicCodeSpec spec = make_spec(2, 21, {1, 3, 7, 9});
    BasePoly g = generator_base_coeffs(spec, ctx21);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 25; ++t) {
        BasePoly f(static_cast<size_t>(spec.dim()));
        for (auto& v : f) v = static_cast<std::uint8_t>(rng() % 2);
        BasePoly w = base_poly_mul_mod(f, g, 21, 2);
        Codeword c(w.begin(), w.end());
        CHECK(weight_via_blahut(c, ctx21) == hamming_weight(c));
    }
}
