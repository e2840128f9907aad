#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "cycbound/bounds.hpp"
#include "cycbound/oracle.hpp"

using namespace cycbound;

namespace {

// Independent search routes used as oracles for the optimized sweeps. They
// materialize the block patterns literally and test inclusion directly.

int ht_oracle(const CyclicCodeSpec& spec) {
    const int n = spec.n;
    SymVec R = defining_symvec(spec);
    if (R.all_zero()) return n + 1;
    int best = 1;
    for (int m = 1; m <= n; ++m) {
        for (int r = 1; r <= n; ++r) {
            if (std::gcd(m + r, n) > m) continue;
            for (int s = 1; s <= n + 1 - m; ++s) {
                std::vector<Sym> pat;
                for (int b = 0; b < s; ++b) {
                    pat.insert(pat.end(), static_cast<size_t>(m), Sym::Zero);
                    pat.insert(pat.end(), static_cast<size_t>(r), Sym::Any);
                }
                int rho = max_rho(BoundKind::HT, RhoParams{.m = m, .r = r, .s = s}, n);
                SymVec pattern{std::move(pat)};
                if (pattern.size() > rho * n) continue;
                if (includes(pattern, R.repeated(rho)))
                    best = std::max(best, std::min(m + s, n + 1));
            }
        }
    }
    return best;
}

int bs_oracle(const CyclicCodeSpec& spec) {
    const int n = spec.n;
    SymVec R = defining_symvec(spec);
    if (R.all_zero()) return n + 1;
    int best = 1;
    for (int mu = 1; mu <= n; ++mu) {
        for (int lam = 1; lam * mu <= n; ++lam) {
            std::vector<Sym> pat;
            pat.insert(pat.end(), static_cast<size_t>(mu * lam), Sym::Zero);
            for (int h = 0; h <= lam; ++h) {
                pat.push_back(Sym::Any);
                pat.insert(pat.end(), static_cast<size_t>(mu - 1), Sym::Zero);
            }
            SymVec p1{std::move(pat)};
            SymVec p2 = p1.reflect();
            int rho = max_rho(BoundKind::BS, RhoParams{.lambda = lam, .mu = mu}, n);
            if (p1.size() > rho * n) continue;
            SymVec rep = R.repeated(rho);
            if (includes(p1, rep) || includes(p2, rep))
                best = std::max(best, std::min(lam * mu + mu, n + 1));
        }
    }
    return best;
}

int roos_oracle(const CyclicCodeSpec& spec) {
    // naive slot walk straight off the symbol vector
    const int n = spec.n;
    SymVec R = defining_symvec(spec);
    if (R.all_zero()) return n + 1;
    int best = 1;
    auto block_at = [&](int o, int m) {
        for (int j = 0; j < m; ++j)
            if (R[(o + j) % n] != Sym::Zero) return false;
        return true;
    };
    for (int m = 1; m <= n; ++m) {
        for (int g = 1; g < n; ++g) {
            if (std::gcd(g, n) != 1) continue;
            for (int o = 0; o < n; ++o) {
                if (!block_at(o, m)) continue;
                int s = 1, holes = 0;
                for (int b = 1; holes < m && s < n + 1; ++b) {
                    if (block_at(static_cast<int>((o + static_cast<long long>(b) * g) % n), m))
                        ++s;
                    else
                        ++holes;
                }
                best = std::max(best, std::min(m + s, n + 1));
            }
        }
    }
    return best;
}

int bc_oracle(const CyclicCodeSpec& spec) {
    const int n = spec.n;
    SymVec R0 = defining_symvec(spec);
    if (R0.all_zero()) return n + 1;
    int best = 1;
    for (int orient = 0; orient < 2; ++orient) {
        SymVec R = orient ? R0.reflect() : R0;
        for (int ell = 1; ell <= n; ++ell) {
            for (int m = 1; m <= ell; ++m) {
                for (int r = 1; r <= n; ++r) {
                    for (int s = 1; s <= n; ++s) {
                        std::vector<Sym> pat;
                        pat.insert(pat.end(), static_cast<size_t>(ell), Sym::Zero);
                        pat.insert(pat.end(), static_cast<size_t>(r), Sym::Any);
                        for (int b = 0; b < s; ++b) {
                            pat.insert(pat.end(), static_cast<size_t>(m), Sym::Zero);
                            pat.insert(pat.end(), static_cast<size_t>(r), Sym::Any);
                        }
                        SymVec pattern{std::move(pat)};
                        int rho = max_rho(BoundKind::BOUND_C,
                                          RhoParams{.m = m, .r = r, .s = s, .ell = ell}, n);
                        if (pattern.size() > rho * n) continue;
                        if (!includes(pattern, R.repeated(rho))) continue;
                        int value = bound_I_value(ell, m, r, s, n);
                        // the II rule applies on the same match shape
                        if (r == 1 && m >= 1 && ell % (m + 1) == 0) {
                            int mu = m + 1, lam = ell / mu;
                            if (lam >= 1 && s >= lam + 1)
                                value = std::max(value, bound_II_value(lam, mu, s, n));
                        }
                        best = std::max(best, std::min(value, n + 1));
                    }
                }
            }
        }
    }
    return best;
}

std::vector<CyclicCodeSpec> small_random_specs(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::pair<int, int> pool[] = {{2, 7}, {2, 9},  {2, 11}, {2, 13}, {2, 15},
                                        {3, 7}, {3, 8},  {3, 10}, {3, 11}, {3, 13},
                                        {5, 8}, {5, 9},  {5, 11}, {5, 12}, {7, 8},
                                        {7, 9}, {7, 10}, {2, 5},  {3, 5},  {5, 6}};
    std::vector<CyclicCodeSpec> out;
    while (static_cast<int>(out.size()) < count) {
        auto [q, n] = pool[rng() % std::size(pool)];
        auto part = coset_partition(n, q);
        std::vector<int> seed_set;
        for (const auto& cls : part.classes)
            if (rng() % 2) seed_set.push_back(cls.front());
        out.push_back(make_spec(q, n, seed_set));
    }
    return out;
}

}  // namespace

TEST_CASE("bch bound") {
    CHECK(bch_bound(make_spec(2, 15, {})).value == 1);
    CHECK(bch_bound(make_spec(2, 21, {1, 3, 7, 9})).value == 5);
    CHECK(bch_bound(make_spec(2, 7, {1})).value == 3);
    CyclicCodeSpec zero = make_spec(2, 9, {0, 1, 3});
    CHECK(zero.dim() == 0);
    CHECK(bch_bound(zero).value == 10);
}

TEST_CASE("value formulas") {
    CHECK(bound_I_value(7, 2, 1, 5, 29) == 11);
    CHECK(bound_I_value(2, 2, 3, 4, 9) == 2 + 4 + 1);     // floor and residue terms vanish
    CHECK(bound_I_value(3, 1, 2, 4, 7) == 6);
    CHECK(bound_I_value(3, 1, 2, 4, 100) == 6);
    CHECK_THROWS_AS(bound_I_value(2, 3, 1, 1, 7), ParamError);
    CHECK_THROWS_AS(bound_I_value(3, 1, 0, 1, 7), ParamError);

    CHECK(bound_II_value(1, 2, 2, 7) == 4);
    CHECK(bound_II_value(2, 4, 5, 28) == 12);
    CHECK(bound_II_value(2, 4, 5, 27) == 14);
    CHECK(bound_II_value(2, 4, 4, 27) == 13);
    CHECK_THROWS_AS(bound_II_value(1, 1, 2, 7), ParamError);
    CHECK_THROWS_AS(bound_II_value(2, 2, 2, 7), ParamError);
}

TEST_CASE("max rho") {
    CHECK(max_rho(BoundKind::ROOS, RhoParams{.m = 3, .r = 1, .s = 4}, 21) == 2);
    CHECK(max_rho(BoundKind::HT, RhoParams{.m = 3, .r = 1, .s = 4}, 21) == 1);
    CHECK(max_rho(BoundKind::BOUND_C, RhoParams{.m = 2, .r = 1, .s = 5, .ell = 7}, 50) == 2);
    CHECK(max_rho(BoundKind::BS, RhoParams{.lambda = 2, .mu = 3}, 8) == 3);
    CHECK_THROWS_AS(max_rho(BoundKind::HT, RhoParams{}, 21), ParamError);
}

TEST_CASE("ht restricted to one block equals bch") {
    for (const auto& spec : small_random_specs(60, 41)) {
        CHECK(ht_bound(spec, 1).value == bch_bound(spec).value);
    }
}

TEST_CASE("ht sweep matches the direct-inclusion route") {
    for (const auto& spec : small_random_specs(40, 43)) {
        CHECK(ht_bound(spec).value == ht_oracle(spec));
    }
    CHECK(ht_bound(make_spec(2, 7, {1})).value == 3);
}

TEST_CASE("bs sweep matches the direct-inclusion route") {
    for (const auto& spec : small_random_specs(40, 47)) {
        CHECK(bs_bound(spec).value == bs_oracle(spec));
    }
    CHECK(bs_bound(make_spec(2, 9, {0, 1, 3})).value == 10);  // zero code clamp
}

TEST_CASE("roos sweep matches the naive walk") {
    for (const auto& spec : small_random_specs(40, 53)) {
        CHECK(roos_bound(spec).value == roos_oracle(spec));
    }
}

TEST_CASE("roos on the length-21 code") {
    CyclicCodeSpec spec = make_spec(2, 21, {1, 3, 7, 9});
    auto scan = roos_scan(spec, 3, 1, 3);
    REQUIRE(scan.has_value());
    CHECK(scan->s == 4);
    CHECK(scan->holes == 3);  // stopped at the third hole
    CHECK(scan->value == 7);
    CHECK(roos_bound(spec).value == 8);
}

TEST_CASE("roos with no holes behaves like a coprime-stride ht") {
    for (const auto& spec : small_random_specs(30, 59)) {
        // every hole-free scan value is also an HT value when the stride is
        // coprime, so roos dominates that restricted ht
        const int n = spec.n;
        SymVec R = defining_symvec(spec);
        if (R.all_zero()) continue;
        int restricted_ht = 1;
        for (int m = 1; m <= n; ++m)
            for (int r = 1; r <= n; ++r) {
                if (std::gcd(m + r, n) != 1) continue;
                for (int s = 1; s <= n + 1 - m; ++s) {
                    std::vector<Sym> pat;
                    for (int b = 0; b < s; ++b) {
                        pat.insert(pat.end(), static_cast<size_t>(m), Sym::Zero);
                        pat.insert(pat.end(), static_cast<size_t>(r), Sym::Any);
                    }
                    SymVec pattern{std::move(pat)};
                    int rho = max_rho(BoundKind::HT, RhoParams{.m = m, .r = r, .s = s}, n);
                    if (pattern.size() > rho * n) continue;
                    if (includes(pattern, R.repeated(rho)))
                        restricted_ht = std::max(restricted_ht, std::min(m + s, n + 1));
                }
            }
        CHECK(roos_bound(spec).value >= restricted_ht);
    }
}

TEST_CASE("bc sweep matches the direct-inclusion route") {
    for (const auto& spec : small_random_specs(12, 61)) {
        if (spec.n > 11) continue;  // the direct route is O(n^5)-ish
        CHECK(bound_c(spec).value == bc_oracle(spec));
    }
    CHECK(bound_c(make_spec(2, 11, {})).value == 1);
}

TEST_CASE("dominance: bch <= ht <= bc and bs <= bc") {
    for (const auto& spec : small_random_specs(120, 67)) {
        int bch = bch_bound(spec).value;
        int ht = ht_bound(spec).value;
        int bs = bs_bound(spec).value;
        int bc = bound_c(spec).value;
        CHECK(ht >= bch);
        CHECK(bc >= ht);
        CHECK(bc >= bs);
    }
}

TEST_CASE("bc restricted to the ht shape") {
    // the restricted family reproduces every ht value that uses at least two
    // blocks; with the one-block values folded in it matches ht exactly
    for (const auto& spec : small_random_specs(60, 71)) {
        int ht2 = ht_bound(spec, /*max_s=*/-1).value;
        int restricted = bound_c(spec, nullptr, /*restrict_ell_eq_m=*/true).value;
        CHECK(restricted <= bound_c(spec).value);
        int ht_one = ht_bound(spec, 1).value;
        CHECK(std::max(restricted, ht_one) == ht2);
    }
}

TEST_CASE("witness replay reproduces every bound value") {
    auto specs = small_random_specs(50, 73);
    specs.push_back(make_spec(2, 21, {1, 3, 7, 9}));
    specs.push_back(make_spec(2, 15, {}));
    specs.push_back(make_spec(2, 9, {0, 1, 3}));
    for (const auto& spec : specs) {
        for (BoundKind kind : {BoundKind::BCH, BoundKind::HT, BoundKind::BS, BoundKind::ROOS,
                               BoundKind::BOUND_C}) {
            BoundOutcome out = compute_bound(spec, kind);
            CHECK(replay_witness(spec, out) == out.value);
        }
    }
}

TEST_CASE("bound value multisets are invariant under unit relabeling") {
    // individual values are not unit-invariant (relabeling scrambles runs);
    // the multiset over all codes of a fixed length is, because relabeling
    // permutes the codes
    for (auto [q, n] : {std::pair{2, 15}, {3, 8}, {2, 9}}) {
        auto specs = enumerate_codes(n, q);
        for (int u = 2; u < n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            for (BoundKind kind : {BoundKind::BCH, BoundKind::HT, BoundKind::ROOS}) {
                std::multiset<int> base, relabeled;
                for (const auto& spec : specs) {
                    base.insert(compute_bound(spec, kind).value);
                    std::vector<int> scaled;
                    for (int i : spec.S) scaled.push_back(static_cast<int>(1ll * i * u % n));
                    relabeled.insert(compute_bound(make_spec(q, n, scaled), kind).value);
                }
                CHECK(base == relabeled);
            }
        }
    }
}

TEST_CASE("soundness and schaub domination on every small code") {
    for (auto [q, n] : {std::pair{2, 7}, {2, 9}, {3, 8}, {5, 6}}) {
        FieldContext ctx = FieldContext::build(q, n);
        for (const auto& spec : enumerate_codes(n, q)) {
            int d = true_distance(spec, ctx, 1 << 22).d;
            int sch = -1;
            SymVec R = defining_symvec(spec);
            int unknowns = 0;
            for (int i = 0; i < R.size(); ++i) unknowns += R[i] == Sym::Any;
            if (unknowns <= 9) sch = schaub_lower_bound(spec, 1 << 12, 4'000'000);
            for (BoundKind kind : {BoundKind::BCH, BoundKind::HT, BoundKind::BS, BoundKind::ROOS,
                                   BoundKind::BOUND_C}) {
                int v = compute_bound(spec, kind).value;
                CHECK(v <= d);
                if (sch >= 0) CHECK(v <= sch);
            }
            if (sch >= 0) CHECK(sch <= d);
        }
    }
}

TEST_CASE("schaub pinned values") {
    CHECK(schaub_lower_bound(make_spec(2, 3, {1}), 1 << 10, 1'000'000) == 3);
    CHECK(schaub_lower_bound(make_spec(2, 7, {1}), 1 << 10, 4'000'000) == 3);
    CyclicCodeSpec zero7 = make_spec(2, 7, {0, 1, 3});
    CHECK(schaub_lower_bound(zero7, 1 << 10, 1'000'000) == 8);
}

TEST_CASE("bound II gate downgrades a flagged family") {
    CyclicCodeSpec spec = make_spec(2, 21, {1, 3, 7, 9});
    BoundOutcome base = bound_c(spec);
    if (base.witness.formula.rfind("II", 0) == 0) {
        BoundIIGate gate;
        gate.families.insert({base.witness.lambda, base.witness.mu});
        BoundOutcome gated = bound_c(spec, &gate);
        CHECK(gated.value <= base.value);
    }
    // synthetic check on a code whose best is the II case, if any arises in
    // the pool; the gate machinery itself is exercised through evaluate_code
    BoundIIGate gate_all;
    for (int lam = 1; lam <= 4; ++lam)
        for (int mu = 2; mu <= 6; ++mu) gate_all.families.insert({lam, mu});
    BoundOutcome gated = bound_c(spec, &gate_all);
    CHECK(gated.value >= 1);
    CHECK(replay_witness(spec, gated) == gated.value);
}
