// Exact minimum distance by exhaustive codeword enumeration. Ground truth for
// the soundness and tightness suites.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycbound/cyclic.hpp"
#include "cycbound/transform.hpp"

namespace cycbound {

struct DistanceResult {
    int d = 0;                          // n+1 for the zero code
    std::optional<Codeword> argmin_word;
    unsigned long long enumerated = 0;  // codeword classes examined
};

// Scalar classes (q^k - 1)/(q - 1) to enumerate, or nullopt on overflow.
std::optional<unsigned long long> enumeration_classes(int q, int k);

// Exact minimum weight over nonzero codewords f*g, f ranging over messages
// with leading coefficient 1 (weight is scalar-invariant). CapExceeded when
// the class count exceeds cap. Early exit only at weight 1.
DistanceResult true_distance(const CyclicCodeSpec& spec, const FieldContext& ctx,
                             unsigned long long cap);

// Samples random codewords: checks weight_via_blahut == direct weight for
// each, and that the minimum sampled weight dominates every implemented
// bound. Deterministic in `seed`.
bool distance_crosscheck(const CyclicCodeSpec& spec, const FieldContext& ctx, int sample,
                         std::uint64_t seed = 0x5eedULL);

}  // namespace cycbound
