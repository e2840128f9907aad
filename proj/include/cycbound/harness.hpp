// Tightness-table generation, results caching, defining-set text parsing,
// and the JSON output shapes used by the command-line front end.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cycbound/bounds.hpp"
#include "cycbound/oracle.hpp"

namespace cycbound {

// "": empty set; "C1+C3+C7": coset shorthand; "1,2,4,8": explicit exponents.
// Either form is closed under multiplication by q before use.
std::vector<int> parse_set_text(const std::string& text, int n, int q);
std::string set_to_string(const std::vector<int>& S);

constexpr std::array<BoundKind, 5> kAllBounds = {BoundKind::BCH, BoundKind::HT, BoundKind::BS,
                                                 BoundKind::ROOS, BoundKind::BOUND_C};

struct BoundIIIncident {
    int q = 0, n = 0;
    std::string set;
    int lambda = 0, mu = 0;
    int stated_value = 0, distance = 0;
};

struct CodeEval {
    CyclicCodeSpec spec;
    std::array<BoundOutcome, 5> bounds;  // BCH, HT, BS, ROOS, BC
    std::optional<DistanceResult> dist;  // absent when skipped by the cap
    bool skipped = false;
    bool violation = false;              // a bound exceeded the true distance
    std::optional<BoundIIIncident> incident;
};

// Runs all five bounds and, when within cap, the distance oracle. A BC value
// that exceeds the oracle via the II value rule is downgraded (value-1 for
// that (lambda, mu) family) and logged as an incident; any remaining excess
// is reported as a violation.
CodeEval evaluate_code(const CyclicCodeSpec& spec, const FieldContext& ctx,
                       unsigned long long distance_cap);

struct TightnessRow {
    int n = 0;
    long long n_codes = 0;
    long long skipped = 0;
    std::array<long long, 5> total{};   // bound == distance
    std::array<long long, 5> excess{};  // bound tight and BCH not tight
    bool error = false;
};

struct TableOptions {
    int q = 2;
    int n_min = 0, n_max = 0;
    unsigned long long distance_cap = 1ull << 24;
    int jobs = 1;
    bool exclude_trivial = false;
    std::string cache_dir;  // empty disables the cache
};

struct TableResult {
    std::vector<TightnessRow> rows;
    std::vector<int> skipped_lengths;  // gcd(n, q) != 1
    std::vector<BoundIIIncident> incidents;
    bool any_failed = false;
};

TableResult tightness_table(const TableOptions& opt);

// Header n,N_codes,BCH,HT,BS,RS,BC,skipped; one row per evaluated length.
std::string table_csv(const TableResult& res);
// Range aggregate in "tight and BCH not tight" semantics.
std::string summary_csv(const TableResult& res, const TableOptions& opt);

// Single-line, key-sorted JSON shapes shared with the CLI.
std::string outcome_to_json(const BoundOutcome& outcome);
std::string distance_to_json(const DistanceResult& res);
std::string partition_to_json(const CosetPartition& part);

}  // namespace cycbound
