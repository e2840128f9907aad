#include <doctest.h>

#include "cycbound/harness.hpp"
#include "cycbound/oracle.hpp"

using namespace cycbound;

TEST_CASE("true distance on pinned codes") {
    FieldContext ctx21 = FieldContext::build(2, 21);
    CyclicCodeSpec paper = make_spec(2, 21, {1, 3, 7, 9});
    auto res = true_distance(paper, ctx21, 1ull << 24);
    CHECK(res.d == 8);
    REQUIRE(res.argmin_word.has_value());
    CHECK(hamming_weight(*res.argmin_word) == 8);

    FieldContext ctx15 = FieldContext::build(2, 15);
    CHECK(true_distance(make_spec(2, 15, {}), ctx15, 1 << 20).d == 1);

    FieldContext ctx7 = FieldContext::build(2, 7);
    CHECK(true_distance(make_spec(2, 7, {1, 3}), ctx7, 1 << 20).d == 7);  // repetition
    CHECK(true_distance(make_spec(2, 7, {1}), ctx7, 1 << 20).d == 3);    // Hamming [7,4,3]

    // zero code convention
    CyclicCodeSpec zero = make_spec(2, 7, {0, 1, 3});
    CHECK(zero.dim() == 0);
    CHECK(true_distance(zero, ctx7, 1 << 20).d == 8);
}

TEST_CASE("enumeration volume and the cap") {
    CHECK(*enumeration_classes(2, 4) == 15);
    CHECK(*enumeration_classes(3, 3) == 13);
    FieldContext ctx = FieldContext::build(2, 15);
    CHECK_THROWS_AS(true_distance(make_spec(2, 15, {}), ctx, 100), CapExceeded);
}

TEST_CASE("distance is invariant under relabeling the root") {
    // recomputing with the defining set scaled by a unit reproduces d
    FieldContext ctx = FieldContext::build(2, 15);
    for (const auto& spec : enumerate_codes(15, 2)) {
        int d = true_distance(spec, ctx, 1 << 22).d;
        std::vector<int> scaled;
        for (int i : spec.S) scaled.push_back(i * 7 % 15);  // 7 is a unit mod 15
        CyclicCodeSpec other = make_spec(2, 15, scaled);
        CHECK(true_distance(other, ctx, 1 << 22).d == d);
    }
}

TEST_CASE("distance bounds sanity on every length-15 code") {
    FieldContext ctx = FieldContext::build(2, 15);
    for (const auto& spec : enumerate_codes(15, 2)) {
        auto res = true_distance(spec, ctx, 1 << 22);
        if (spec.dim() == 0) {
            CHECK(res.d == 16);
        } else {
            CHECK(res.d >= 1);
            CHECK(res.d <= 15);
        }
    }
}

TEST_CASE("crosscheck: transform weight vs direct weight vs bounds") {
    FieldContext ctx21 = FieldContext::build(2, 21);
    CyclicCodeSpec paper = make_spec(2, 21, {1, 3, 7, 9});
    CHECK(distance_crosscheck(paper, ctx21, 100));
    CHECK(distance_crosscheck(paper, ctx21, 0));  // vacuous
    CyclicCodeSpec zero = make_spec(2, 7, {0, 1, 3});
    FieldContext ctx7 = FieldContext::build(2, 7);
    CHECK(distance_crosscheck(zero, ctx7, 10));  // no codewords to sample
}
