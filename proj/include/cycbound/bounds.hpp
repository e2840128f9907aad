// Defining-set lower bounds on the minimum distance: BCH, Hartmann-Tzeng,
// Betti-Sala, Roos, and the combined block bound BC, all as parameter
// searches over cyclic pattern inclusion in the code's symbol vector.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cycbound/cyclic.hpp"
#include "cycbound/ternary.hpp"

namespace cycbound {

enum class BoundKind { BCH, HT, BS, ROOS, BOUND_C };

std::string bound_kind_name(BoundKind k);
std::optional<BoundKind> bound_kind_from_name(const std::string& name);

struct BoundWitness {
    // Window start of the matched pattern. 0-based for BCH/HT/BS/BC; for
    // Roos it is the 1-based position of the first block, matching the usual
    // worked-example convention.
    int i0 = -1;
    bool reflected = false;  // pattern matched against the reflected vector
    int rho = 1;
    // Which value rule fired: "zero-code", "floor", "run", "ht", "bs",
    // "roos", "I", "I-else", "II", "II-div", "II-gated".
    std::string formula;
    int ell = -1, m = -1, r = -1, s = -1;
    int lambda = -1, mu = -1;
    int holes = -1;
    std::vector<int> block_slots;  // Roos: k_1 < ... < k_s with k_1 = 0
};

struct BoundOutcome {
    BoundKind kind = BoundKind::BCH;
    int value = 1;
    BoundWitness witness;
};

// d >= ell+1+s - r*floor(ell/(m+r)) - max((ell mod (m+r)) - m, 0) when
// gcd(m+r, n) <= m, else d >= ell+1. ParamError unless 1<=m<=ell, r>=1, s>=1.
int bound_I_value(int ell, int m, int r, int s, int n);

// d >= lambda*mu + mu + s - lambda - 1 when mu does not divide n, else
// d >= lambda*mu + mu. ParamError unless lambda>=1, mu>=2, s>=lambda+1.
int bound_II_value(int lambda, int mu, int s, int n);

struct RhoParams {
    int m = -1, r = -1, s = -1;
    int lambda = -1, mu = -1;
    int ell = -1;
};

// Largest replication of the symbol vector a pattern match can need.
int max_rho(BoundKind kind, const RhoParams& p, int n);

// Soundness gate for the II value rule: families (lambda, mu) downgraded to
// value-1 after a logged violation. Empty by default.
struct BoundIIGate {
    std::set<std::pair<int, int>> families;
};

BoundOutcome bch_bound(const CyclicCodeSpec& spec);
// max_s > 0 restricts the block count (test support).
BoundOutcome ht_bound(const CyclicCodeSpec& spec, int max_s = -1);
BoundOutcome bs_bound(const CyclicCodeSpec& spec);
BoundOutcome roos_bound(const CyclicCodeSpec& spec);
// restrict_ell_eq_m searches the HT-shaped subfamily only (test support).
BoundOutcome bound_c(const CyclicCodeSpec& spec, const BoundIIGate* gate = nullptr,
                     bool restrict_ell_eq_m = false);

BoundOutcome compute_bound(const CyclicCodeSpec& spec, BoundKind kind,
                           const BoundIIGate* gate = nullptr);

// One Roos scan at fixed (m, r) from a fixed start; i0 is 1-based. Slots are
// visited at stride m+r; a slot is a block when m zeros start there, else a
// hole; the scan stops at the m-th hole. nullopt when the start itself is not
// a block.
struct RoosScan {
    int s = 0;
    int holes = 0;  // holes seen before the stop
    int value = 0;
    std::vector<int> block_slots;
};
std::optional<RoosScan> roos_scan(const CyclicCodeSpec& spec, int m, int r, int i0_1based);

// Re-evaluates the witness through the pattern check and value formula.
// Throws Error when the witness does not reproduce a match.
int replay_witness(const CyclicCodeSpec& spec, const BoundOutcome& outcome);

// Exact min over the resolutions of the code's symbol vector of the circulant
// pseudo-rank (exponential; a desk-scale verification oracle). n+1 for the
// zero code by the empty-minimum convention. CapExceeded past either cap.
int schaub_lower_bound(const CyclicCodeSpec& spec, long long a_cap, long long subset_cap);

}  // namespace cycbound
