#include "cycbound/ternary.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace cycbound {

Sym sym_add(Sym a, Sym b) {
    if (a == Sym::Zero) return b;
    if (b == Sym::Zero) return a;
    if (a == Sym::Nonzero && b == Sym::Nonzero) return Sym::Any;
    return Sym::Any;
}

Sym sym_mul(Sym a, Sym b) {
    if (a == Sym::Zero || b == Sym::Zero) return Sym::Zero;
    if (a == Sym::Nonzero && b == Sym::Nonzero) return Sym::Nonzero;
    return Sym::Any;
}

char sym_char(Sym s) {
    switch (s) {
        case Sym::Zero: return '0';
        case Sym::Any: return 'D';
        case Sym::Nonzero: return 'N';
    }
    return '?';
}

Sym sym_from_char(char c) {
    switch (c) {
        case '0': return Sym::Zero;
        case 'D': return Sym::Any;
        case 'N': return Sym::Nonzero;
    }
    throw ParseError(std::string("bad symbol character '") + c + "'");
}

SymVec::SymVec(const std::string& text) {
    s.reserve(text.size());
    for (char c : text) s.push_back(sym_from_char(c));
}

Sym SymVec::at1(long long k) const {
    long long n = size();
    long long r = (k - 1) % n;
    if (r < 0) r += n;
    return s[static_cast<size_t>(r)];
}

SymVec SymVec::reflect() const {
    SymVec r = *this;
    std::reverse(r.s.begin(), r.s.end());
    return r;
}

SymVec SymVec::rotated_right(int k) const {
    int n = size();
    SymVec r;
    r.s.resize(s.size());
    for (int i = 0; i < n; ++i) {
        int src = ((i - k) % n + n) % n;
        r.s[static_cast<size_t>(i)] = s[static_cast<size_t>(src)];
    }
    return r;
}

SymVec SymVec::repeated(int rho) const {
    SymVec r;
    r.s.reserve(s.size() * static_cast<size_t>(rho));
    for (int i = 0; i < rho; ++i) r.s.insert(r.s.end(), s.begin(), s.end());
    return r;
}

std::string SymVec::to_string() const {
    std::string t;
    t.reserve(s.size());
    for (Sym v : s) t.push_back(sym_char(v));
    return t;
}

bool SymVec::all_zero() const {
    return std::all_of(s.begin(), s.end(), [](Sym v) { return v == Sym::Zero; });
}

bool SymVec::any(Sym v) const {
    return std::find(s.begin(), s.end(), v) != s.end();
}

PatternExpr PatternExpr::atom(Sym s, long long i) {
    PatternExpr p;
    p.kind = Kind::Atom;
    p.sym = s;
    p.count = i;
    return p;
}

PatternExpr PatternExpr::seq(std::vector<PatternExpr> kids, long long repeat) {
    PatternExpr p;
    p.kind = Kind::Seq;
    p.kids = std::move(kids);
    p.count = repeat;
    return p;
}

long long PatternExpr::expanded_length() const {
    if (kind == Kind::Atom) return count;
    long long len = 0;
    for (const auto& k : kids) len += k.expanded_length();
    return len * count;
}

namespace {

struct PatternParser {
    const std::string& t;
    size_t i = 0;

    explicit PatternParser(const std::string& text) : t(text) {}

    void skip_ws() {
        while (i < t.size() && (t[i] == ' ' || t[i] == '\t')) ++i;
    }

    bool at_end() {
        skip_ws();
        return i >= t.size();
    }

    long long exponent_or_one() {
        skip_ws();
        if (i < t.size() && t[i] == '^') {
            ++i;
            skip_ws();
            if (i >= t.size() || !isdigit(static_cast<unsigned char>(t[i])))
                throw ParseError("pattern: '^' needs a number");
            long long v = 0;
            while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) {
                v = v * 10 + (t[i] - '0');
                if (v > 1'000'000) throw ParseError("pattern: exponent too large");
                ++i;
            }
            return v;
        }
        return 1;
    }

    PatternExpr parse_seq(bool inside_group) {
        std::vector<PatternExpr> kids;
        while (true) {
            skip_ws();
            if (i >= t.size()) break;
            char c = t[i];
            if (c == ')') {
                if (!inside_group) throw ParseError("pattern: unmatched ')'");
                break;
            }
            if (c == '(') {
                ++i;
                PatternExpr inner = parse_seq(true);
                skip_ws();
                if (i >= t.size() || t[i] != ')') throw ParseError("pattern: missing ')'");
                ++i;
                inner.count = exponent_or_one();
                kids.push_back(std::move(inner));
            } else if (c == '0' || c == 'D' || c == 'N') {
                ++i;
                long long e = exponent_or_one();
                kids.push_back(PatternExpr::atom(sym_from_char(c), e));
            } else {
                throw ParseError(std::string("pattern: unexpected character '") + c + "'");
            }
        }
        return PatternExpr::seq(std::move(kids));
    }
};

void expand_into(const PatternExpr& p, std::vector<Sym>& out) {
    if (p.kind == PatternExpr::Kind::Atom) {
        out.insert(out.end(), static_cast<size_t>(p.count), p.sym);
        return;
    }
    for (long long r = 0; r < p.count; ++r)
        for (const auto& k : p.kids) expand_into(k, out);
}

}  // namespace

PatternExpr parse_pattern(const std::string& text) {
    PatternParser pp(text);
    PatternExpr p = pp.parse_seq(false);
    if (!pp.at_end()) throw ParseError("pattern: trailing input");
    return p;
}

SymVec pattern_expand(const PatternExpr& p) {
    std::vector<Sym> out;
    long long len = p.expanded_length();
    if (len < 1) throw EmptyPattern("pattern expands to length 0");
    out.reserve(static_cast<size_t>(len));
    expand_into(p, out);
    return SymVec(std::move(out));
}

SymVec pattern_expand(const std::string& text) { return pattern_expand(parse_pattern(text)); }

bool window_matches(const SymVec& u, const SymVec& v, int start) {
    const int m = u.size(), n = v.size();
    bool allzero = true;
    for (int j = 0; j < m; ++j) {
        if (v[(start + j) % n] != Sym::Zero) { allzero = false; break; }
    }
    if (allzero) return true;  // empty resolution set fits anything
    for (int j = 0; j < m; ++j) {
        Sym w = v[(start + j) % n];
        switch (u[j]) {
            case Sym::Zero:
                if (w != Sym::Zero) return false;
                break;
            case Sym::Nonzero:
                if (w != Sym::Nonzero) return false;
                break;
            case Sym::Any:
                break;
        }
    }
    return true;
}

std::optional<int> includes(const SymVec& u, const SymVec& v) {
    if (u.size() > v.size()) throw LengthError("includes: |u| > |v|");
    if (u.size() == 0) throw EmptyPattern("includes: empty u");
    for (int p = 0; p < v.size(); ++p)
        if (window_matches(u, v, p)) return p;
    return std::nullopt;
}

SingletonResult singleton_procedure(const SymMatrix& m, SingletonMode /*mode*/) {
    // Both modes reduce to a greedy run: available singletons never
    // interfere (a second row with a non-Zero entry at the same column would
    // contradict singleton-ness, and a used column cannot be needed by any
    // surviving row for the same reason), so every maximal deletion order
    // eliminates the same rows.
    SingletonResult res;
    const int R = m.row_count(), C = m.col_count();
    if (R == 0) return res;
    // Per-column counts of blockers among live rows.
    std::vector<int> nonzero(static_cast<size_t>(C), 0), unknown(static_cast<size_t>(C), 0);
    std::vector<int> the_row(static_cast<size_t>(C), -1);
    for (int c = 0; c < C; ++c) {
        for (int r = 0; r < R; ++r) {
            Sym s = m.rows[static_cast<size_t>(r)][c];
            if (s == Sym::Nonzero) {
                ++nonzero[static_cast<size_t>(c)];
                the_row[static_cast<size_t>(c)] = r;
            } else if (s == Sym::Any) {
                ++unknown[static_cast<size_t>(c)];
            }
        }
    }
    std::vector<char> row_alive(static_cast<size_t>(R), 1), col_alive(static_cast<size_t>(C), 1);
    auto singleton = [&](int c) {
        return col_alive[static_cast<size_t>(c)] && nonzero[static_cast<size_t>(c)] == 1 &&
               unknown[static_cast<size_t>(c)] == 0 &&
               row_alive[static_cast<size_t>(the_row[static_cast<size_t>(c)])];
    };
    std::set<int> ready;
    for (int c = 0; c < C; ++c)
        if (singleton(c)) ready.insert(c);
    int remaining = R;
    while (remaining > 0) {
        while (!ready.empty() && !singleton(*ready.begin())) ready.erase(ready.begin());
        if (ready.empty()) return res;  // stuck; res.success stays false
        int c = *ready.begin();
        ready.erase(ready.begin());
        int r = the_row[static_cast<size_t>(c)];
        row_alive[static_cast<size_t>(r)] = 0;
        col_alive[static_cast<size_t>(c)] = 0;
        res.order.emplace_back(r, c);
        --remaining;
        for (int cc = 0; cc < C; ++cc) {
            Sym s = m.rows[static_cast<size_t>(r)][cc];
            if (s == Sym::Zero || !col_alive[static_cast<size_t>(cc)]) continue;
            if (s == Sym::Nonzero) {
                if (--nonzero[static_cast<size_t>(cc)] == 1) {
                    // recompute the surviving owner
                    for (int rr = 0; rr < R; ++rr) {
                        if (row_alive[static_cast<size_t>(rr)] &&
                            m.rows[static_cast<size_t>(rr)][cc] == Sym::Nonzero) {
                            the_row[static_cast<size_t>(cc)] = rr;
                            break;
                        }
                    }
                }
            } else {
                --unknown[static_cast<size_t>(cc)];
            }
            if (singleton(cc)) ready.insert(cc);
        }
    }
    res.success = true;
    return res;
}

namespace {

// Greedy peel on a row subset; returns the stuck residual mask (0 = success).
// The residual is unique: peels commute, so by Newman's lemma every maximal
// peel sequence reaches the same normal form.
std::uint64_t peel_residual(const SymMatrix& m, std::uint64_t mask) {
    const int R = m.row_count(), C = m.col_count();
    std::vector<char> col_alive(static_cast<size_t>(C), 1);
    bool progress = true;
    while (mask && progress) {
        progress = false;
        for (int c = 0; c < C && mask; ++c) {
            if (!col_alive[static_cast<size_t>(c)]) continue;
            int row = -1;
            bool ok = true;
            for (int r = 0; r < R; ++r) {
                if (!(mask >> r & 1)) continue;
                Sym s = m.rows[static_cast<size_t>(r)][c];
                if (s == Sym::Zero) continue;
                if (s == Sym::Nonzero && row == -1) {
                    row = r;
                } else {
                    ok = false;
                    break;
                }
            }
            if (ok && row >= 0) {
                mask &= ~(1ull << row);
                col_alive[static_cast<size_t>(c)] = 0;
                progress = true;
            }
        }
    }
    return mask;
}

struct PrkSearch {
    const SymMatrix& m;
    long long cap;
    long long nodes = 0;
    int best = 0;
    std::unordered_set<std::uint64_t> seen;

    void dfs(std::uint64_t mask) {
        if (++nodes > cap) throw CapExceeded("pseudo_rank: subset cap exceeded");
        int size = __builtin_popcountll(mask);
        if (size <= best) return;
        if (!seen.insert(mask).second) return;
        std::uint64_t res = peel_residual(m, mask);
        if (res == 0) {
            best = std::max(best, size);
            return;
        }
        // Any passing subset of `mask` must drop at least one residual row:
        // the residual is internally stuck, and stuckness only depends on the
        // rows still present.
        for (int r = 0; r < 64; ++r)
            if (res >> r & 1) dfs(mask & ~(1ull << r));
    }
};

}  // namespace

int pseudo_rank(const SymMatrix& m, long long subset_cap) {
    const int R = m.row_count();
    if (R == 0) return 0;
    if (R > 64) throw CapExceeded("pseudo_rank: more than 64 rows");
    PrkSearch search{m, subset_cap};
    std::uint64_t full = R == 64 ? ~0ull : ((1ull << R) - 1);
    search.dfs(full);
    return search.best;
}

SymMatrix circulant_sym(const SymVec& v) {
    SymMatrix m;
    const int n = v.size();
    m.rows.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) m.rows.push_back(v.rotated_right(i));
    return m;
}

std::vector<SymVec> enumerate_resolutions(const SymVec& v, long long cap) {
    std::vector<int> dpos;
    for (int i = 0; i < v.size(); ++i)
        if (v[i] == Sym::Any) dpos.push_back(i);
    if (dpos.size() >= 63 || (1ll << dpos.size()) > cap)
        throw CapExceeded("enumerate_resolutions: 2^#D exceeds cap");
    std::vector<SymVec> out;
    const bool has_forced_nonzero = v.any(Sym::Nonzero);
    for (std::uint64_t mask = 0; mask < (1ull << dpos.size()); ++mask) {
        SymVec u = v;
        for (size_t b = 0; b < dpos.size(); ++b)
            u[dpos[b]] = (mask >> b & 1) ? Sym::Nonzero : Sym::Zero;
        if (!has_forced_nonzero && mask == 0) continue;  // all-zero excluded
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<std::vector<std::uint8_t>> instances(const SymVec& u, int q, long long cap) {
    const int n = u.size();
    long long count = 1;
    for (int i = 0; i < n; ++i) {
        if (u[i] == Sym::Any) count *= q;
        else if (u[i] == Sym::Nonzero) count *= (q - 1);
        if (count > cap) throw CapExceeded("instances: count exceeds cap");
    }
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<std::uint8_t> cur(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        if (u[i] == Sym::Nonzero) cur[static_cast<size_t>(i)] = 1;
    while (true) {
        out.push_back(cur);
        // odometer, last position least significant
        int i = n - 1;
        for (; i >= 0; --i) {
            if (u[i] == Sym::Zero) continue;
            int lo = (u[i] == Sym::Nonzero) ? 1 : 0;
            if (cur[static_cast<size_t>(i)] + 1 < q) {
                ++cur[static_cast<size_t>(i)];
                break;
            }
            cur[static_cast<size_t>(i)] = static_cast<std::uint8_t>(lo);
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace cycbound
