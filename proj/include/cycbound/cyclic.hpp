// Cyclotomic cosets, complete defining sets, code enumeration, generator
// polynomials, and the translation of a defining set into a symbol vector.
#pragma once

#include <vector>

#include "cycbound/gf.hpp"
#include "cycbound/ternary.hpp"

namespace cycbound {

struct CyclicCodeSpec {
    int q = 0;
    int n = 0;
    std::vector<int> S;  // sorted, closed under multiplication by q mod n

    int dim() const { return n - static_cast<int>(S.size()); }
    bool operator==(const CyclicCodeSpec&) const = default;
};

struct CosetPartition {
    // Disjoint sorted classes covering [0, n), ordered by least element.
    std::vector<std::vector<int>> classes;
};

// Orbit of j under multiplication by q mod n, sorted.
std::vector<int> cyclotomic_coset(int n, int q, int j);

CosetPartition coset_partition(int n, int q);

// Smallest superset of `seed` closed under multiplication by q mod n.
std::vector<int> complete_defining_set(int n, int q, const std::vector<int>& seed);

// All 2^(#classes) coset-union codes, subsets by increasing bitmask over
// classes sorted by least element. Includes S = {} and S = Z_n.
std::vector<CyclicCodeSpec> enumerate_codes(int n, int q);

// Builds a spec from any seed set (closure applied); validates ranges.
CyclicCodeSpec make_spec(int q, int n, const std::vector<int>& seed);

// g = prod_{i in S} (x - alpha^i), computed over the extension and checked
// to have prime-field coefficients.
Poly generator_poly(const CyclicCodeSpec& spec, const FieldContext& ctx);

// Same polynomial as residues mod q (low-degree first).
BasePoly generator_base_coeffs(const CyclicCodeSpec& spec, const FieldContext& ctx);

// Length-n symbol vector: Zero on S, Any elsewhere.
SymVec defining_symvec(const CyclicCodeSpec& spec);

}  // namespace cycbound
