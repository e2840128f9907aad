// Explicit singleton-elimination certificates behind the block-train value
// rules: pivots, the three row groups, discard sets, and a verifier that
// exercises the construction across every admissible resolution.
#pragma once

#include <string>
#include <vector>

#include "cycbound/ternary.hpp"

namespace cycbound {

enum class TableauKind {
    BlockTrain,   // prefix 0^ell then s blocks (0^m D^r); value rule I
    Interleaved,  // prefix 0^{mu*lambda} then s blocks (0^{mu-1} D); value rule II
};

struct TableauParams {
    TableauKind kind = TableauKind::BlockTrain;
    int n = 0;
    int ell = 0, m = 0, r = 0, s = 0;  // BlockTrain (ell = lambda*mu, m = mu-1, r = 1 for Interleaved)
    int lambda = 0, mu = 0;            // Interleaved only
};

// First position holding a known-nonzero, 1-based. NoNonzero when absent.
int primary_pivot(const SymVec& v);

struct SecondaryPivot {
    int pos = 0;         // 1-based position in v
    int extensions = 0;  // all-zero continuation windows absorbed before it
};

// Scans the continuation windows after the s-th block (stride m+r, m wide,
// shifted r past the block train). An all-zero window extends the train; the
// first known-nonzero found is the pivot. Unknowns earlier in the same window
// do not block. NotFound when every window is exhausted or an unresolved
// window precedes any nonzero.
SecondaryPivot secondary_pivot(const SymVec& v, int m, int r, int s, int n);

struct Tableau {
    SymVec v;  // normalized: prefix zeros end at position n, first gap at 1..r
    TableauParams params;     // effective parameters (extensions folded into s)
    int i_primary = 0;
    int i_secondary = 0;      // 0 when the secondary group is not built
    int extensions = 0;
    std::vector<int> shifts;  // circulant shift per kept row
    std::vector<int> group;   // 1, 2, 3 per kept row (first group it belongs to)
    std::vector<char> shared; // row appears in more than one group
    SymMatrix t;
    int duplicates = 0;       // rows merged away by the dedupe
};

// Builds the certificate rows for a normalized v. with_secondary = false
// skips the third group (used when the stride shares too large a factor with
// n, where only the ell+1 staircase part applies).
Tableau build_tableau(const SymVec& v, const TableauParams& params, bool with_secondary = true);

// Rows blocking the secondary-pivot singleton column; these are removed
// before running the procedure.
std::vector<int> discard_rows(const Tableau& tb);

struct TableauCheck {
    bool ok = false;
    int rows = 0;        // kept rows
    int discarded = 0;
    int deletions = 0;   // s-deletions performed = surviving rows on success
    int eta_cap = 0;     // Lemma cap on the discard size
    std::vector<int> eta;  // eta_j, j = 1..m (BlockTrain with secondary only)
    bool eta_monotone = true;
};

TableauCheck check_tableau(const Tableau& tb);

// Paper-style layout: one row of 0/D/N per certificate row, group separators,
// discarded rows marked.
std::string format_tableau(const Tableau& tb);

struct VerifyReport {
    bool ok = true;
    long long cases = 0;
    int target = 0;
    int min_survivors = 0;
    int max_discard = 0;
    bool used_enumeration = false;
    std::string failure;
};

// Checks that for every resolution of R's unknowns the built certificate,
// minus its discard set, passes the singleton procedure with at least the
// value-rule target of surviving rows. Enumerates resolutions when 2^#D fits
// under cap, otherwise walks the pivot-case tree, which partitions the
// resolutions exactly.
VerifyReport verify_construction(const SymVec& R, const TableauParams& params, long long cap);

// Symbol vector realizing the pattern of `params` at the normalized anchor,
// all other positions unknown.
SymVec synthetic_vector(const TableauParams& params);

}  // namespace cycbound
