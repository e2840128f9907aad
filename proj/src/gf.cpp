#include "cycbound/gf.hpp"

#include <algorithm>
#include <numeric>

namespace cycbound {

namespace {

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Dense base-field polynomial helpers (low-degree first, trailing zeros
// allowed; degree taken from the last nonzero entry).
int bdeg(const std::vector<std::uint8_t>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

std::vector<std::uint8_t> bmul(const std::vector<std::uint8_t>& a,
                               const std::vector<std::uint8_t>& b, int q) {
    int da = bdeg(a), db = bdeg(b);
    if (da < 0 || db < 0) return {};
    std::vector<std::uint8_t> r(da + db + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j <= db; ++j) r[i + j] = static_cast<std::uint8_t>((r[i + j] + a[i] * b[j]) % q);
    }
    return r;
}

// Remainder of a by monic-after-scaling b (b need not be monic).
std::vector<std::uint8_t> bmod(std::vector<std::uint8_t> a,
                               const std::vector<std::uint8_t>& b, int q) {
    int db = bdeg(b);
    int lead = b[db];
    int lead_inv = 1;
    for (int v = 1; v < q; ++v)
        if (v * lead % q == 1) { lead_inv = v; break; }
    for (int da = bdeg(a); da >= db; da = bdeg(a)) {
        int f = a[da] * lead_inv % q;
        for (int j = 0; j <= db; ++j) {
            int v = a[da - db + j] - f * b[j] % q;
            a[da - db + j] = static_cast<std::uint8_t>(((v % q) + q) % q);
        }
    }
    a.resize(db);
    return a;
}

bool divides(const std::vector<std::uint8_t>& d, const std::vector<std::uint8_t>& p, int q) {
    return bdeg(bmod(p, d, q)) < 0;
}

// Trial factorization: p (monic, degree m) is irreducible iff no monic
// divisor of degree 1..m/2 divides it.
bool irreducible(const std::vector<std::uint8_t>& p, int q) {
    int m = bdeg(p);
    if (m <= 0) return false;
    for (int d = 1; d <= m / 2; ++d) {
        unsigned long long count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<unsigned long long>(q);
        for (unsigned long long enc = 0; enc < count; ++enc) {
            std::vector<std::uint8_t> cand(d + 1, 0);
            unsigned long long e = enc;
            for (int i = 0; i < d; ++i) { cand[i] = static_cast<std::uint8_t>(e % q); e /= q; }
            cand[d] = 1;
            if (divides(cand, p, q)) return false;
        }
    }
    return true;
}

std::vector<unsigned long long> prime_factors(unsigned long long v) {
    std::vector<unsigned long long> fs;
    for (unsigned long long d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

}  // namespace

int multiplicative_order(long long q, long long n) {
    if (n < 1 || q < 2) throw ParamError("multiplicative_order: need n >= 1, q >= 2");
    if (std::gcd(q, n) != 1) throw GcdError("multiplicative_order: gcd(n, q) != 1");
    if (n == 1) return 1;
    long long acc = q % n;
    for (int m = 1; m <= n; ++m) {
        if (acc == 1) return m;
        acc = acc * (q % n) % n;
    }
    throw Error("multiplicative_order: no order found");  // unreachable for gcd = 1
}

FieldContext FieldContext::build(int q, int n) {
    if (!is_prime(q)) throw NotPrimeError("FieldContext: q must be prime");
    if (std::gcd(static_cast<long long>(q), static_cast<long long>(n)) != 1)
        throw GcdError("FieldContext: gcd(n, q) != 1");
    FieldContext ctx;
    ctx.q = q;
    ctx.n = n;
    ctx.m_ext = multiplicative_order(q, n);

    // Lexicographically-first monic irreducible of degree m_ext, scanning the
    // low-to-high coefficient vector in increasing integer encoding.
    const int m = ctx.m_ext;
    unsigned long long count = 1;
    for (int i = 0; i < m; ++i) count *= static_cast<unsigned long long>(q);
    for (unsigned long long enc = 0; enc < count; ++enc) {
        std::vector<std::uint8_t> cand(m + 1, 0);
        unsigned long long e = enc;
        for (int i = 0; i < m; ++i) { cand[i] = static_cast<std::uint8_t>(e % q); e /= q; }
        cand[m] = 1;
        if (irreducible(cand, q)) { ctx.modulus_poly = cand; break; }
    }
    if (ctx.modulus_poly.empty()) throw Error("FieldContext: no irreducible found");

    // Lexicographically-first multiplicative generator of F_{q^m}.
    const unsigned long long size = ctx.field_size();
    const unsigned long long group = size - 1;
    auto factors = prime_factors(group);
    FieldElement g;
    for (unsigned long long enc = 2; enc < size; ++enc) {
        FieldElement cand{std::vector<std::uint8_t>(m, 0)};
        unsigned long long e = enc;
        for (int i = 0; i < m; ++i) { cand.c[i] = static_cast<std::uint8_t>(e % q); e /= q; }
        bool ok = true;
        for (auto p : factors) {
            if (ctx.pow(cand, group / p) == ctx.one()) { ok = false; break; }
        }
        if (ok) { g = cand; break; }
    }
    if (g.c.empty()) {
        if (size == 2) {
            g = ctx.one();  // F_2 has the trivial group
        } else {
            throw Error("FieldContext: no generator found");
        }
    }

    ctx.alpha = ctx.pow(g, group / static_cast<unsigned long long>(n));
    ctx.apow_.resize(n);
    FieldElement acc = ctx.one();
    for (int k = 0; k < n; ++k) {
        ctx.apow_[k] = acc;
        acc = ctx.mul(acc, ctx.alpha);
    }
    return ctx;
}

void FieldContext::check(const FieldElement& a) const {
    if (static_cast<int>(a.c.size()) != m_ext)
        throw FieldMismatch("FieldElement width does not match this context");
}

FieldElement FieldContext::zero() const { return FieldElement{std::vector<std::uint8_t>(m_ext, 0)}; }

FieldElement FieldContext::one() const {
    auto e = zero();
    e.c[0] = 1;
    return e;
}

FieldElement FieldContext::from_base(int a) const {
    auto e = zero();
    e.c[0] = static_cast<std::uint8_t>(((a % q) + q) % q);
    return e;
}

bool FieldContext::is_zero(const FieldElement& a) const {
    check(a);
    return std::all_of(a.c.begin(), a.c.end(), [](std::uint8_t v) { return v == 0; });
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r = a;
    for (int i = 0; i < m_ext; ++i) r.c[i] = static_cast<std::uint8_t>((r.c[i] + b.c[i]) % q);
    return r;
}

FieldElement FieldContext::neg(const FieldElement& a) const {
    check(a);
    FieldElement r = a;
    for (int i = 0; i < m_ext; ++i) r.c[i] = static_cast<std::uint8_t>((q - r.c[i]) % q);
    return r;
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    std::vector<int> prod(2 * m_ext - 1, 0);
    for (int i = 0; i < m_ext; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < m_ext; ++j) prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % q;
    }
    // Reduce by the monic modulus: x^m = -(c_0 + c_1 x + ... + c_{m-1} x^{m-1}).
    for (int d = 2 * m_ext - 2; d >= m_ext; --d) {
        int f = prod[d];
        if (!f) continue;
        prod[d] = 0;
        for (int j = 0; j < m_ext; ++j) {
            int v = prod[d - m_ext + j] - f * modulus_poly[j] % q;
            prod[d - m_ext + j] = ((v % q) + q) % q;
        }
    }
    FieldElement r = zero();
    for (int i = 0; i < m_ext; ++i) r.c[i] = static_cast<std::uint8_t>(prod[i]);
    return r;
}

FieldElement FieldContext::pow(const FieldElement& a, unsigned long long e) const {
    FieldElement base = a, r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement FieldContext::inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw ParamError("inv of zero");
    // Extended Euclid on (a, modulus) over F_q.
    std::vector<std::uint8_t> r0(modulus_poly), r1(a.c.begin(), a.c.end());
    std::vector<std::uint8_t> s0{}, s1{1};
    auto deg = [](const std::vector<std::uint8_t>& p) { return bdeg(p); };
    auto scale = [&](std::vector<std::uint8_t> p, int f) {
        for (auto& v : p) v = static_cast<std::uint8_t>(v * f % q);
        return p;
    };
    auto subm = [&](std::vector<std::uint8_t> x, const std::vector<std::uint8_t>& y, int f, int shift) {
        if (x.size() < y.size() + shift) x.resize(y.size() + shift, 0);
        for (size_t j = 0; j < y.size(); ++j) {
            int v = x[j + shift] - f * y[j] % q;
            x[j + shift] = static_cast<std::uint8_t>(((v % q) + q) % q);
        }
        return x;
    };
    std::vector<int> inv_tab(q, 0);
    for (int v = 1; v < q; ++v)
        for (int w = 1; w < q; ++w)
            if (v * w % q == 1) inv_tab[v] = w;
    while (deg(r1) > 0) {
        while (deg(r0) >= deg(r1)) {
            int d0 = deg(r0), d1 = deg(r1);
            int f = r0[d0] * inv_tab[r1[d1]] % q;
            r0 = subm(r0, r1, f, d0 - d1);
            s0 = subm(s0, s1, f, d0 - d1);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    if (deg(r1) < 0) throw Error("inv: element not invertible");  // impossible for irreducible modulus
    int f = inv_tab[r1[0]];
    s1 = scale(s1, f);
    s1 = bmod(s1, modulus_poly, q);
    FieldElement r = zero();
    for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(m_ext); ++i) r.c[i] = s1[i];
    return r;
}

bool FieldContext::in_base(const FieldElement& a) const {
    check(a);
    for (int i = 1; i < m_ext; ++i)
        if (a.c[i] != 0) return false;
    return true;
}

int FieldContext::base_value(const FieldElement& a) const {
    if (!in_base(a)) throw CoefficientNotInBaseField("element outside the prime subfield");
    return a.c[0];
}

const FieldElement& FieldContext::alpha_pow(long long k) const {
    long long r = k % n;
    if (r < 0) r += n;
    return apow_[static_cast<size_t>(r)];
}

unsigned long long FieldContext::element_order(const FieldElement& a) const {
    if (is_zero(a)) throw ParamError("order of zero");
    FieldElement acc = a;
    unsigned long long k = 1;
    while (!(acc == one())) {
        acc = mul(acc, a);
        ++k;
        if (k > field_size()) throw Error("element_order: runaway");
    }
    return k;
}

unsigned long long FieldContext::encode(const FieldElement& a) const {
    unsigned long long e = 0;
    for (int i = m_ext - 1; i >= 0; --i) e = e * q + a.c[i];
    return e;
}

unsigned long long FieldContext::field_size() const {
    unsigned long long s = 1;
    for (int i = 0; i < m_ext; ++i) s *= static_cast<unsigned long long>(q);
    return s;
}

Poly poly_trim(Poly p) {
    while (!p.c.empty() && std::all_of(p.c.back().c.begin(), p.c.back().c.end(),
                                       [](std::uint8_t v) { return v == 0; }))
        p.c.pop_back();
    return p;
}

Poly poly_from_base(const std::vector<std::uint8_t>& coeffs, const FieldContext& ctx) {
    Poly p;
    for (auto v : coeffs) p.c.push_back(ctx.from_base(v));
    return poly_trim(std::move(p));
}

static void check_widths(const Poly& a, const FieldContext& ctx) {
    for (const auto& e : a.c)
        if (static_cast<int>(e.c.size()) != ctx.m_ext)
            throw FieldMismatch("polynomial coefficients from a different field");
}

Poly poly_mul(const Poly& a, const Poly& b, const FieldContext& ctx) {
    check_widths(a, ctx);
    check_widths(b, ctx);
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, ctx.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (ctx.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = ctx.add(r.c[i + j], ctx.mul(a.c[i], b.c[j]));
    }
    return poly_trim(std::move(r));
}

Poly poly_mul_mod(const Poly& a, const Poly& b, int n, const FieldContext& ctx) {
    Poly full = poly_mul(a, b, ctx);
    Poly r;
    r.c.assign(static_cast<size_t>(n), ctx.zero());
    for (size_t i = 0; i < full.c.size(); ++i)
        r.c[i % n] = ctx.add(r.c[i % n], full.c[i]);
    return poly_trim(std::move(r));
}

FieldElement poly_eval(const Poly& p, const FieldElement& x, const FieldContext& ctx) {
    FieldElement acc = ctx.zero();
    for (int i = static_cast<int>(p.c.size()) - 1; i >= 0; --i)
        acc = ctx.add(ctx.mul(acc, x), p.c[i]);
    return acc;
}

BasePoly base_poly_mul_mod(const BasePoly& a, const BasePoly& b, int n, int q) {
    BasePoly r(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            size_t k = (i + j) % n;
            r[k] = static_cast<std::uint8_t>((r[k] + a[i] * b[j]) % q);
        }
    }
    return r;
}

}  // namespace cycbound
