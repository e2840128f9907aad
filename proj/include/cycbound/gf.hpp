// Prime fields, their splitting-field extensions, a fixed primitive n-th root
// of unity, and polynomial arithmetic over both.
#pragma once

#include <cstdint>
#include <vector>

#include "cycbound/errors.hpp"

namespace cycbound {

// Element of F_{q^m} in the polynomial basis of the context's modulus.
// Coefficients are low-degree first and always have length m_ext.
struct FieldElement {
    std::vector<std::uint8_t> c;
    bool operator==(const FieldElement&) const = default;
};

// Polynomial over F_{q^m}, low-degree first, no trailing zero coefficient.
// The zero polynomial is the empty sequence.
struct Poly {
    std::vector<FieldElement> c;
    bool operator==(const Poly&) const = default;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

// Least m >= 1 with q^m = 1 (mod n). Throws GcdError when gcd(n, q) != 1.
int multiplicative_order(long long q, long long n);

class FieldContext {
  public:
    int q = 0;
    int n = 0;
    int m_ext = 0;
    // Monic irreducible of degree m_ext over F_q; coefficients of
    // x^0..x^m_ext, last entry 1.
    std::vector<std::uint8_t> modulus_poly;
    FieldElement alpha;

    // Deterministic construction: lexicographically-first irreducible
    // modulus, lexicographically-first generator g, alpha = g^((q^m-1)/n).
    static FieldContext build(int q, int n);

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_base(int a) const;

    bool is_zero(const FieldElement& a) const;
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, unsigned long long e) const;

    // a lies in the prime subfield iff all extension coefficients vanish.
    bool in_base(const FieldElement& a) const;
    int base_value(const FieldElement& a) const;

    // alpha^k with k reduced mod n; backed by a precomputed table.
    const FieldElement& alpha_pow(long long k) const;

    // Multiplicative order of a nonzero element (test support).
    unsigned long long element_order(const FieldElement& a) const;

    // Integer encoding sum c_i q^i, the ordering used for determinism.
    unsigned long long encode(const FieldElement& a) const;

    unsigned long long field_size() const;  // q^m_ext

  private:
    std::vector<FieldElement> apow_;
    void check(const FieldElement& a) const;
};

Poly poly_trim(Poly p);
Poly poly_from_base(const std::vector<std::uint8_t>& coeffs, const FieldContext& ctx);
// a*b reduced mod x^n - 1 (cyclic convolution). FieldMismatch when coefficient
// widths disagree.
Poly poly_mul_mod(const Poly& a, const Poly& b, int n, const FieldContext& ctx);
Poly poly_mul(const Poly& a, const Poly& b, const FieldContext& ctx);
FieldElement poly_eval(const Poly& p, const FieldElement& x, const FieldContext& ctx);

// Base-field polynomials as plain residue vectors, used on hot oracle paths.
using BasePoly = std::vector<std::uint8_t>;
BasePoly base_poly_mul_mod(const BasePoly& a, const BasePoly& b, int n, int q);

}  // namespace cycbound
