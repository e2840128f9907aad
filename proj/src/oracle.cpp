#include "cycbound/oracle.hpp"

#include <algorithm>
#include <random>

#include "cycbound/bounds.hpp"

namespace cycbound {

std::optional<unsigned long long> enumeration_classes(int q, int k) {
    unsigned long long classes = 0, power = 1;
    for (int p = 0; p < k; ++p) {
        if (classes > (~0ull - power)) return std::nullopt;
        classes += power;
        if (power > ~0ull / static_cast<unsigned>(q)) return std::nullopt;
        power *= static_cast<unsigned>(q);
    }
    return classes;
}

namespace {

struct WordAccum {
    int n, q;
    std::vector<std::uint8_t> c;
    int weight = 0;

    WordAccum(int n_, int q_) : n(n_), q(q_), c(static_cast<size_t>(n_), 0) {}

    // c += x^t * g (mod x^n - 1), tracking weight.
    void add_shifted(const BasePoly& g, int t) {
        for (size_t j = 0; j < g.size(); ++j) {
            if (!g[j]) continue;
            size_t pos = (static_cast<size_t>(t) + j) % static_cast<size_t>(n);
            int old = c[pos];
            int now = (old + g[j]) % q;
            c[pos] = static_cast<std::uint8_t>(now);
            weight += (now != 0) - (old != 0);
        }
    }

    void clear() {
        std::fill(c.begin(), c.end(), 0);
        weight = 0;
    }
};

}  // namespace

DistanceResult true_distance(const CyclicCodeSpec& spec, const FieldContext& ctx,
                             unsigned long long cap) {
    const int n = spec.n, q = spec.q, k = spec.dim();
    DistanceResult res;
    if (k == 0) {
        res.d = n + 1;  // zero-code convention
        return res;
    }
    auto classes = enumeration_classes(q, k);
    if (!classes || *classes > cap) throw CapExceeded("true_distance: enumeration exceeds cap");

    BasePoly g = generator_base_coeffs(spec, ctx);
    WordAccum acc(n, q);
    int best = n + 1;
    Codeword best_word;

    // Messages with leading coefficient 1 at position p, digits below run an
    // odometer. Incrementing digit t by one is "add x^t * g"; a wrap from
    // q-1 to 0 is the same addition (-(q-1) = 1 mod q) followed by a carry.
    std::vector<std::uint8_t> digits;
    for (int p = 0; p < k && best > 1; ++p) {
        acc.clear();
        acc.add_shifted(g, p);
        digits.assign(static_cast<size_t>(p), 0);
        while (true) {
            ++res.enumerated;
            if (acc.weight < best) {
                best = acc.weight;
                best_word = acc.c;
                if (best == 1) break;
            }
            int t = 0;
            for (; t < p; ++t) {
                acc.add_shifted(g, t);
                digits[static_cast<size_t>(t)] =
                    static_cast<std::uint8_t>((digits[static_cast<size_t>(t)] + 1) % q);
                if (digits[static_cast<size_t>(t)] != 0) break;
            }
            if (t == p) break;
        }
    }
    res.d = best;
    res.argmin_word = std::move(best_word);
    return res;
}

bool distance_crosscheck(const CyclicCodeSpec& spec, const FieldContext& ctx, int sample,
                         std::uint64_t seed) {
    const int n = spec.n, q = spec.q, k = spec.dim();
    if (k == 0 || sample <= 0) return true;  // nothing to sample
    BasePoly g = generator_base_coeffs(spec, ctx);

    int bound_max = 1;
    for (auto kind : {BoundKind::BCH, BoundKind::HT, BoundKind::BS, BoundKind::ROOS,
                      BoundKind::BOUND_C})
        bound_max = std::max(bound_max, compute_bound(spec, kind).value);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(0, q - 1);
    int min_weight = n + 1;
    for (int s = 0; s < sample; ++s) {
        std::vector<std::uint8_t> f(static_cast<size_t>(k), 0);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& v : f) {
                v = static_cast<std::uint8_t>(digit(rng));
                nonzero |= (v != 0);
            }
        }
        BasePoly word = base_poly_mul_mod(f, g, n, q);
        Codeword c(word.begin(), word.end());
        int direct = hamming_weight(c);
        if (weight_via_blahut(c, ctx) != direct) return false;
        min_weight = std::min(min_weight, direct);
    }
    return min_weight >= bound_max;
}

}  // namespace cycbound
