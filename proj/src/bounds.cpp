#include "cycbound/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cycbound {

std::string bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::BCH: return "bch";
        case BoundKind::HT: return "ht";
        case BoundKind::BS: return "bs";
        case BoundKind::ROOS: return "roos";
        case BoundKind::BOUND_C: return "bc";
    }
    return "?";
}

std::optional<BoundKind> bound_kind_from_name(const std::string& name) {
    if (name == "bch") return BoundKind::BCH;
    if (name == "ht") return BoundKind::HT;
    if (name == "bs") return BoundKind::BS;
    if (name == "roos") return BoundKind::ROOS;
    if (name == "bc") return BoundKind::BOUND_C;
    return std::nullopt;
}

int bound_I_value(int ell, int m, int r, int s, int n) {
    if (m < 1 || m > ell || r < 1 || s < 1 || n < 1)
        throw ParamError("bound_I_value: need 1 <= m <= ell, r >= 1, s >= 1");
    if (std::gcd(m + r, n) <= m)
        return ell + 1 + s - r * (ell / (m + r)) - std::max(ell % (m + r) - m, 0);
    return ell + 1;
}

int bound_II_value(int lambda, int mu, int s, int n) {
    if (lambda < 1 || mu < 2 || s < lambda + 1 || n < 1)
        throw ParamError("bound_II_value: need lambda >= 1, mu >= 2, s >= lambda+1");
    if (n % mu == 0) return lambda * mu + mu;
    return lambda * mu + mu + s - lambda - 1;
}

int max_rho(BoundKind kind, const RhoParams& p, int n) {
    if (n < 1) throw ParamError("max_rho: n < 1");
    auto need = [n](long long len) {
        // smallest rho with rho*n >= n-1+len
        long long v = (n - 1 + len + n - 1) / n;
        return static_cast<int>(std::max(1ll, v));
    };
    switch (kind) {
        case BoundKind::HT:
            if (p.m < 1 || p.r < 0 || p.s < 1) throw ParamError("max_rho: bad HT params");
            return static_cast<int>(static_cast<long long>(p.s) * (p.m + p.r) / n + 1);
        case BoundKind::BS:
            if (p.lambda < 1 || p.mu < 1) throw ParamError("max_rho: bad BS params");
            return static_cast<int>((static_cast<long long>(p.mu) * p.lambda + 1 +
                                     static_cast<long long>(p.mu) * (p.lambda + 1)) /
                                        n +
                                    1);
        case BoundKind::ROOS:
            if (p.m < 1 || p.r < 0 || p.s < 1) throw ParamError("max_rho: bad Roos params");
            return static_cast<int>(static_cast<long long>(p.m + p.s - 1) * (p.m + p.r) / n + 1);
        case BoundKind::BOUND_C:
            if (p.ell < 1 || p.m < 1 || p.r < 1 || p.s < 1)
                throw ParamError("max_rho: bad BC params");
            return need(static_cast<long long>(p.ell) + p.r +
                        static_cast<long long>(p.s) * (p.m + p.r));
        case BoundKind::BCH:
            if (p.ell < 0) throw ParamError("max_rho: bad BCH params");
            return need(p.ell);
    }
    throw ParamError("max_rho: unknown kind");
}

namespace {

struct ZeroRuns {
    int n = 0;
    bool allzero = false;
    int maxrun = 0;
    std::vector<int> run;  // cyclic zero-run length starting at p, capped at n
    std::vector<int> rep;  // zero-run length ending just before position e

    explicit ZeroRuns(const SymVec& v) : n(v.size()) {
        run.assign(static_cast<size_t>(n), 0);
        rep.assign(static_cast<size_t>(n), 0);
        allzero = v.all_zero();
        if (allzero) {
            std::fill(run.begin(), run.end(), n);
            std::fill(rep.begin(), rep.end(), n);
            maxrun = n;
            return;
        }
        std::vector<int> fwd(static_cast<size_t>(2 * n + 1), 0);
        for (int i = 2 * n - 1; i >= 0; --i)
            fwd[static_cast<size_t>(i)] =
                v[i % n] == Sym::Zero ? fwd[static_cast<size_t>(i + 1)] + 1 : 0;
        for (int i = 0; i < n; ++i) {
            run[static_cast<size_t>(i)] = std::min(fwd[static_cast<size_t>(i)], n);
            maxrun = std::max(maxrun, run[static_cast<size_t>(i)]);
        }
        std::vector<int> bwd(static_cast<size_t>(2 * n + 1), 0);
        for (int i = 1; i <= 2 * n; ++i)
            bwd[static_cast<size_t>(i)] =
                v[(i - 1) % n] == Sym::Zero ? bwd[static_cast<size_t>(i - 1)] + 1 : 0;
        for (int e = 0; e < n; ++e)
            rep[static_cast<size_t>(e)] = std::min(bwd[static_cast<size_t>(e + n)], n);
    }
};

constexpr int kInf = 1 << 28;

// table[o] = number of consecutive b >= 0 with run[(o + b*step) mod n] >= need
// (kInf when the whole orbit qualifies).
std::vector<int> consecutive_blocks(const ZeroRuns& zr, int step, int need) {
    const int n = zr.n;
    std::vector<int> table(static_cast<size_t>(n), 0);
    int st = ((step % n) + n) % n;
    auto qual = [&](int o) { return zr.run[static_cast<size_t>(o)] >= need; };
    if (st == 0) {
        for (int o = 0; o < n; ++o) table[static_cast<size_t>(o)] = qual(o) ? kInf : 0;
        return table;
    }
    std::vector<char> vis(static_cast<size_t>(n), 0);
    std::vector<int> cycle;
    for (int o0 = 0; o0 < n; ++o0) {
        if (vis[static_cast<size_t>(o0)]) continue;
        cycle.clear();
        int o = o0;
        do {
            vis[static_cast<size_t>(o)] = 1;
            cycle.push_back(o);
            o = (o + st) % n;
        } while (o != o0);
        const int L = static_cast<int>(cycle.size());
        bool all = true;
        for (int c : cycle) all = all && qual(c);
        if (all) {
            for (int c : cycle) table[static_cast<size_t>(c)] = kInf;
            continue;
        }
        std::vector<int> cnt(static_cast<size_t>(2 * L + 1), 0);
        for (int i = 2 * L - 1; i >= 0; --i)
            cnt[static_cast<size_t>(i)] =
                qual(cycle[static_cast<size_t>(i % L)]) ? cnt[static_cast<size_t>(i + 1)] + 1 : 0;
        for (int i = 0; i < L; ++i)
            table[static_cast<size_t>(cycle[static_cast<size_t>(i)])] = cnt[static_cast<size_t>(i)];
    }
    return table;
}

BoundOutcome zero_code_outcome(BoundKind kind, int n) {
    BoundOutcome out;
    out.kind = kind;
    out.value = n + 1;
    out.witness.formula = "zero-code";
    out.witness.i0 = 0;
    return out;
}

BoundOutcome floor_outcome(BoundKind kind) {
    BoundOutcome out;
    out.kind = kind;
    out.value = 1;
    out.witness.formula = "floor";
    return out;
}

// Smallest r >= 1 with (m + r) mod n == gp.
int smallest_r(int m, int gp, int n) { return ((gp - m - 1) % n + n) % n + 1; }

}  // namespace

BoundOutcome bch_bound(const CyclicCodeSpec& spec) {
    const int n = spec.n;
    SymVec R = defining_symvec(spec);
    ZeroRuns zr(R);
    if (zr.allzero) return zero_code_outcome(BoundKind::BCH, n);
    BoundOutcome out;
    out.kind = BoundKind::BCH;
    int besti = 0;
    for (int i = 0; i < n; ++i) {
        if (zr.run[static_cast<size_t>(i)] > zr.run[static_cast<size_t>(besti)]) besti = i;
    }
    out.value = zr.maxrun + 1;
    out.witness.formula = "run";
    out.witness.ell = zr.maxrun;
    out.witness.i0 = zr.maxrun > 0 ? besti : 0;
    out.witness.rho = max_rho(BoundKind::BCH, RhoParams{.ell = zr.maxrun}, n);
    return out;
}

BoundOutcome ht_bound(const CyclicCodeSpec& spec, int max_s) {
    const int n = spec.n;
    SymVec R = defining_symvec(spec);
    ZeroRuns zr(R);
    if (zr.allzero) return zero_code_outcome(BoundKind::HT, n);
    BoundOutcome best = floor_outcome(BoundKind::HT);
    for (int m = 1; m <= zr.maxrun; ++m) {
        std::vector<std::vector<int>> cache(static_cast<size_t>(n));
        for (int r = 1; r <= n; ++r) {
            int gp = (m + r) % n;
            if (std::gcd(m + r, n) > m) continue;
            auto& tbl = cache[static_cast<size_t>(gp)];
            if (tbl.empty()) tbl = consecutive_blocks(zr, gp, m);
            for (int o = 0; o < n; ++o) {
                int s = std::min(tbl[static_cast<size_t>(o)], n);
                if (max_s > 0) s = std::min(s, max_s);
                if (s < 1) continue;
                int value = std::min(m + s, n + 1);
                if (value <= best.value) continue;
                best.value = value;
                best.witness = BoundWitness{};
                best.witness.formula = "ht";
                best.witness.m = m;
                best.witness.r = r;
                best.witness.s = s;
                best.witness.i0 = o;
                best.witness.rho = max_rho(BoundKind::HT, RhoParams{.m = m, .r = r, .s = s}, n);
            }
        }
    }
    return best;
}

BoundOutcome bs_bound(const CyclicCodeSpec& spec) {
    const int n = spec.n;
    SymVec R0 = defining_symvec(spec);
    if (R0.all_zero()) return zero_code_outcome(BoundKind::BS, n);
    BoundOutcome best = floor_outcome(BoundKind::BS);
    for (int orient = 0; orient < 2; ++orient) {
        SymVec R = orient ? R0.reflect() : R0;
        ZeroRuns zr(R);
        for (int mu = 1; mu <= zr.maxrun; ++mu) {
            // Trailing block h is one D at j + mu*lam + h*mu followed by mu-1
            // zeros starting one past the D.
            std::vector<int> sb = consecutive_blocks(zr, mu, mu - 1);
            for (int j = 0; j < n; ++j) {
                int lam_cap = zr.run[static_cast<size_t>(j)] / mu;
                for (int lam = lam_cap; lam >= 1; --lam) {
                    int blocks = sb[static_cast<size_t>((j + mu * lam + 1) % n)];
                    if (blocks < lam + 1) continue;
                    int value = std::min(lam * mu + mu, n + 1);
                    if (value <= best.value) break;  // value decreases with lam
                    best.value = value;
                    best.witness = BoundWitness{};
                    best.witness.formula = "bs";
                    best.witness.lambda = lam;
                    best.witness.mu = mu;
                    best.witness.i0 = j;
                    best.witness.reflected = orient == 1;
                    best.witness.rho =
                        max_rho(BoundKind::BS, RhoParams{.lambda = lam, .mu = mu}, n);
                    break;
                }
            }
        }
    }
    return best;
}

namespace {

// Walk Roos slots from 0-based start o with stride g; count blocks until the
// m-th hole. blk[o] must hold.
RoosScan roos_walk(const std::vector<char>& blk, int n, int m, int g, int o) {
    RoosScan scan;
    scan.s = 1;
    scan.block_slots = {0};
    int holes = 0;
    int smax = std::max(1, n + 1 - m);  // value clamps at n+1
    for (int b = 1; b <= n * m + n && scan.s < smax; ++b) {
        int off = static_cast<int>((o + static_cast<long long>(b) * g) % n);
        if (blk[static_cast<size_t>(off)]) {
            ++scan.s;
            scan.block_slots.push_back(b);
        } else {
            ++holes;
            if (holes >= m) break;
        }
    }
    scan.holes = holes;
    scan.value = std::min(m + scan.s, n + 1);
    return scan;
}

}  // namespace

BoundOutcome roos_bound(const CyclicCodeSpec& spec) {
    const int n = spec.n;
    SymVec R = defining_symvec(spec);
    ZeroRuns zr(R);
    if (zr.allzero) return zero_code_outcome(BoundKind::ROOS, n);
    BoundOutcome best = floor_outcome(BoundKind::ROOS);
    for (int m = 1; m <= zr.maxrun; ++m) {
        std::vector<char> blk(static_cast<size_t>(n), 0);
        for (int o = 0; o < n; ++o) blk[static_cast<size_t>(o)] = zr.run[static_cast<size_t>(o)] >= m;
        for (int gp = 1; gp < n; ++gp) {
            if (std::gcd(gp, n) != 1) continue;
            int r = smallest_r(m, gp, n);
            for (int o = 0; o < n; ++o) {
                if (!blk[static_cast<size_t>(o)]) continue;
                RoosScan scan = roos_walk(blk, n, m, gp, o);
                if (scan.value <= best.value) continue;
                best.value = scan.value;
                best.witness = BoundWitness{};
                best.witness.formula = "roos";
                best.witness.m = m;
                best.witness.r = r;
                best.witness.s = scan.s;
                best.witness.holes = scan.holes;
                best.witness.i0 = o + 1;  // 1-based by convention
                best.witness.block_slots = scan.block_slots;
                best.witness.rho =
                    max_rho(BoundKind::ROOS, RhoParams{.m = m, .r = r, .s = scan.s}, n);
            }
        }
    }
    return best;
}

std::optional<RoosScan> roos_scan(const CyclicCodeSpec& spec, int m, int r, int i0_1based) {
    const int n = spec.n;
    if (m < 1 || r < 0 || i0_1based < 1 || i0_1based > n)
        throw ParamError("roos_scan: bad parameters");
    if (std::gcd(m + r, n) != 1) throw ParamError("roos_scan: gcd(m+r, n) != 1");
    SymVec R = defining_symvec(spec);
    ZeroRuns zr(R);
    if (zr.allzero) {
        RoosScan scan;
        scan.s = std::max(1, n + 1 - m);
        scan.value = n + 1;
        return scan;
    }
    std::vector<char> blk(static_cast<size_t>(n), 0);
    for (int o = 0; o < n; ++o) blk[static_cast<size_t>(o)] = zr.run[static_cast<size_t>(o)] >= m;
    int o = i0_1based - 1;
    if (!blk[static_cast<size_t>(o)]) return std::nullopt;
    return roos_walk(blk, n, m, (m + r) % n, o);
}

BoundOutcome bound_c(const CyclicCodeSpec& spec, const BoundIIGate* gate, bool restrict_ell_eq_m) {
    const int n = spec.n;
    SymVec R0 = defining_symvec(spec);
    if (R0.all_zero()) return zero_code_outcome(BoundKind::BOUND_C, n);
    BoundOutcome best = floor_outcome(BoundKind::BOUND_C);

    auto consider = [&](int value, const BoundWitness& w) {
        value = std::min(value, n + 1);
        if (value > best.value) {
            best.value = value;
            best.witness = w;
        }
    };

    for (int orient = 0; orient < 2; ++orient) {
        SymVec R = orient ? R0.reflect() : R0;
        ZeroRuns zr(R);

        for (int m = 1; m <= zr.maxrun; ++m) {
            std::vector<std::vector<int>> cache(static_cast<size_t>(n));
            for (int r = 1; r <= n; ++r) {
                int gp = (m + r) % n;
                auto& tbl = cache[static_cast<size_t>(gp)];
                if (tbl.empty()) tbl = consecutive_blocks(zr, gp, m);
                bool gcd_ok = std::gcd(m + r, n) <= m;
                for (int e = 0; e < n; ++e) {
                    int ell = zr.rep[static_cast<size_t>(e)];
                    if (ell < m) continue;
                    if (restrict_ell_eq_m) ell = m;
                    int s = std::min(tbl[static_cast<size_t>((e + r) % n)], n);
                    if (s < 1) continue;
                    BoundWitness w;
                    w.reflected = orient == 1;
                    w.ell = ell;
                    w.m = m;
                    w.r = r;
                    w.s = s;
                    w.i0 = ((e - ell) % n + n) % n;
                    w.rho = max_rho(BoundKind::BOUND_C,
                                    RhoParams{.m = m, .r = r, .s = s, .ell = ell}, n);
                    if (gcd_ok) {
                        w.formula = "I";
                        consider(bound_I_value(ell, m, r, s, n), w);
                    } else {
                        w.formula = "I-else";
                        consider(ell + 1, w);
                    }
                }
            }
        }

        if (restrict_ell_eq_m) continue;
        for (int mu = 2; mu <= zr.maxrun + 1 && mu <= n; ++mu) {
            std::vector<int> sb = consecutive_blocks(zr, mu, mu - 1);
            for (int e = 0; e < n; ++e) {
                int lam_cap = zr.rep[static_cast<size_t>(e)] / mu;
                if (lam_cap < 1) continue;
                int s = std::min(sb[static_cast<size_t>((e + 1) % n)], n);
                int lam = std::min(lam_cap, s - 1);
                if (lam < 1) continue;
                int value = bound_II_value(lam, mu, s, n);
                BoundWitness w;
                w.reflected = orient == 1;
                w.lambda = lam;
                w.mu = mu;
                w.s = s;
                w.ell = lam * mu;
                w.m = mu - 1;
                w.r = 1;
                w.i0 = ((e - lam * mu) % n + n) % n;
                w.formula = n % mu == 0 ? "II-div" : "II";
                w.rho = max_rho(BoundKind::BOUND_C,
                                RhoParams{.m = mu - 1, .r = 1, .s = s, .ell = lam * mu}, n);
                if (gate && gate->families.count({lam, mu})) {
                    value -= 1;
                    w.formula = "II-gated";
                }
                consider(value, w);
            }
        }
    }
    return best;
}

BoundOutcome compute_bound(const CyclicCodeSpec& spec, BoundKind kind, const BoundIIGate* gate) {
    switch (kind) {
        case BoundKind::BCH: return bch_bound(spec);
        case BoundKind::HT: return ht_bound(spec);
        case BoundKind::BS: return bs_bound(spec);
        case BoundKind::ROOS: return roos_bound(spec);
        case BoundKind::BOUND_C: return bound_c(spec, gate);
    }
    throw ParamError("compute_bound: unknown kind");
}

int schaub_lower_bound(const CyclicCodeSpec& spec, long long a_cap, long long subset_cap) {
    SymVec R = defining_symvec(spec);
    if (R.all_zero()) return spec.n + 1;  // empty minimum
    auto members = enumerate_resolutions(R, a_cap);
    // pseudo-rank is invariant under rotation and reflection of the vector,
    // so cache by the canonical representative.
    std::map<std::string, int> memo;
    auto canonical = [](const SymVec& u) {
        std::string best = u.to_string();
        SymVec refl = u.reflect();
        for (int k = 0; k < u.size(); ++k) {
            std::string a = u.rotated_right(k).to_string();
            if (a < best) best = a;
            std::string b = refl.rotated_right(k).to_string();
            if (b < best) best = b;
        }
        return best;
    };
    int best = spec.n + 1;
    for (const auto& u : members) {
        std::string key = canonical(u);
        auto it = memo.find(key);
        int prk;
        if (it != memo.end()) {
            prk = it->second;
        } else {
            prk = pseudo_rank(circulant_sym(u), subset_cap);
            memo.emplace(std::move(key), prk);
        }
        best = std::min(best, prk);
        if (best == 0) break;
    }
    return best;
}

namespace {

SymVec repeat_blocks(const std::vector<std::pair<Sym, int>>& parts) {
    std::vector<Sym> out;
    for (auto [sym, cnt] : parts) out.insert(out.end(), static_cast<size_t>(cnt), sym);
    return SymVec(std::move(out));
}

}  // namespace

int replay_witness(const CyclicCodeSpec& spec, const BoundOutcome& outcome) {
    const int n = spec.n;
    const BoundWitness& w = outcome.witness;
    SymVec R = defining_symvec(spec);
    if (w.formula == "zero-code") {
        if (!R.all_zero()) throw Error("replay: zero-code witness on a nonzero vector");
        return n + 1;
    }
    if (w.formula == "floor") return 1;
    SymVec Rv = w.reflected ? R.reflect() : R;

    std::vector<std::pair<Sym, int>> parts;
    int value = 0;
    switch (outcome.kind) {
        case BoundKind::BCH: {
            if (w.ell == 0) return 1;
            parts = {{Sym::Zero, w.ell}};
            value = std::min(w.ell + 1, n + 1);
            break;
        }
        case BoundKind::HT: {
            for (int b = 0; b < w.s; ++b) {
                parts.push_back({Sym::Zero, w.m});
                parts.push_back({Sym::Any, w.r});
            }
            value = std::min(w.m + w.s, n + 1);
            break;
        }
        case BoundKind::BS: {
            parts.push_back({Sym::Zero, w.mu * w.lambda});
            for (int h = 0; h <= w.lambda; ++h) {
                parts.push_back({Sym::Any, 1});
                parts.push_back({Sym::Zero, w.mu - 1});
            }
            value = std::min(w.lambda * w.mu + w.mu, n + 1);
            break;
        }
        case BoundKind::ROOS: {
            int prev = -1;
            for (int slot : w.block_slots) {
                parts.push_back({Sym::Any, (w.m + w.r) * (slot - prev - 1)});
                parts.push_back({Sym::Zero, w.m});
                parts.push_back({Sym::Any, w.r});
                prev = slot;
            }
            value = std::min(w.m + w.s, n + 1);
            break;
        }
        case BoundKind::BOUND_C: {
            if (w.formula == "II" || w.formula == "II-div" || w.formula == "II-gated") {
                parts.push_back({Sym::Zero, w.mu * w.lambda});
                parts.push_back({Sym::Any, 1});
                for (int b = 0; b < w.s; ++b) {
                    parts.push_back({Sym::Zero, w.mu - 1});
                    parts.push_back({Sym::Any, 1});
                }
                value = bound_II_value(w.lambda, w.mu, w.s, n);
                if (w.formula == "II-gated") value -= 1;
            } else {
                parts.push_back({Sym::Zero, w.ell});
                parts.push_back({Sym::Any, w.r});
                for (int b = 0; b < w.s; ++b) {
                    parts.push_back({Sym::Zero, w.m});
                    parts.push_back({Sym::Any, w.r});
                }
                value = w.formula == "I-else" ? w.ell + 1 : bound_I_value(w.ell, w.m, w.r, w.s, n);
            }
            value = std::min(value, n + 1);
            break;
        }
    }

    SymVec pattern = repeat_blocks(parts);
    long long span = static_cast<long long>(w.rho) * n;
    if (pattern.size() > span) throw Error("replay: pattern longer than rho * n");
    int start = outcome.kind == BoundKind::ROOS ? w.i0 - 1 : w.i0;
    if (!window_matches(pattern, Rv, start)) throw Error("replay: pattern does not match at i0");
    return value;
}

}  // namespace cycbound
