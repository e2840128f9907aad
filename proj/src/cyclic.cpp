#include "cycbound/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cycbound {

std::vector<int> cyclotomic_coset(int n, int q, int j) {
    if (std::gcd(n, q) != 1) throw GcdError("cyclotomic_coset: gcd(n, q) != 1");
    if (j < 0 || j >= n) throw RangeError("cyclotomic_coset: j out of [0, n)");
    std::set<int> orbit;
    long long cur = j;
    while (orbit.insert(static_cast<int>(cur)).second) cur = cur * q % n;
    return {orbit.begin(), orbit.end()};
}

CosetPartition coset_partition(int n, int q) {
    if (std::gcd(n, q) != 1) throw GcdError("coset_partition: gcd(n, q) != 1");
    CosetPartition part;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        auto cls = cyclotomic_coset(n, q, j);
        for (int v : cls) used[static_cast<size_t>(v)] = 1;
        part.classes.push_back(std::move(cls));
    }
    return part;
}

std::vector<int> complete_defining_set(int n, int q, const std::vector<int>& seed) {
    if (std::gcd(n, q) != 1) throw GcdError("complete_defining_set: gcd(n, q) != 1");
    std::set<int> out;
    for (int j : seed) {
        if (j < 0 || j >= n) throw RangeError("complete_defining_set: exponent out of [0, n)");
        long long cur = j;
        while (out.insert(static_cast<int>(cur)).second) cur = cur * q % n;
    }
    return {out.begin(), out.end()};
}

std::vector<CyclicCodeSpec> enumerate_codes(int n, int q) {
    auto part = coset_partition(n, q);
    const size_t c = part.classes.size();
    if (c >= 63) throw CapExceeded("enumerate_codes: too many cosets");
    std::vector<CyclicCodeSpec> out;
    out.reserve(static_cast<size_t>(1) << c);
    for (std::uint64_t mask = 0; mask < (1ull << c); ++mask) {
        CyclicCodeSpec spec;
        spec.q = q;
        spec.n = n;
        for (size_t b = 0; b < c; ++b)
            if (mask >> b & 1)
                spec.S.insert(spec.S.end(), part.classes[b].begin(), part.classes[b].end());
        std::sort(spec.S.begin(), spec.S.end());
        out.push_back(std::move(spec));
    }
    return out;
}

CyclicCodeSpec make_spec(int q, int n, const std::vector<int>& seed) {
    CyclicCodeSpec spec;
    spec.q = q;
    spec.n = n;
    spec.S = complete_defining_set(n, q, seed);
    return spec;
}

Poly generator_poly(const CyclicCodeSpec& spec, const FieldContext& ctx) {
    if (ctx.q != spec.q || ctx.n != spec.n)
        throw FieldMismatch("generator_poly: context does not match spec");
    Poly g;
    g.c = {ctx.one()};
    for (int i : spec.S) {
        // multiply by (x - alpha^i)
        Poly factor;
        factor.c = {ctx.neg(ctx.alpha_pow(i)), ctx.one()};
        g = poly_mul(g, factor, ctx);
    }
    for (const auto& coef : g.c)
        if (!ctx.in_base(coef))
            throw CoefficientNotInBaseField("generator_poly: coset closure broken");
    return g;
}

BasePoly generator_base_coeffs(const CyclicCodeSpec& spec, const FieldContext& ctx) {
    Poly g = generator_poly(spec, ctx);
    BasePoly out;
    out.reserve(g.c.size());
    for (const auto& coef : g.c) out.push_back(static_cast<std::uint8_t>(ctx.base_value(coef)));
    return out;
}

SymVec defining_symvec(const CyclicCodeSpec& spec) {
    SymVec r;
    r.s.assign(static_cast<size_t>(spec.n), Sym::Any);
    for (int i : spec.S) r[i] = Sym::Zero;
    return r;
}

}  // namespace cycbound
