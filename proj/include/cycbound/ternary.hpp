// The three-symbol alphabet {0, D, N} (known zero / unknown / known nonzero),
// vectors and matrices over it, the block-pattern language, cyclic inclusion,
// the singleton procedure and pseudo-rank.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycbound/errors.hpp"

namespace cycbound {

enum class Sym : std::uint8_t { Zero = 0, Any = 1, Nonzero = 2 };

// Sum and product on the alphabet. N+N = D (two nonzeros may cancel),
// N*N = N, 0 is the additive identity and absorbing for the product,
// D absorbs every sum it touches.
Sym sym_add(Sym a, Sym b);
Sym sym_mul(Sym a, Sym b);

char sym_char(Sym s);    // '0', 'D', 'N'
Sym sym_from_char(char c);

struct SymVec {
    std::vector<Sym> s;

    SymVec() = default;
    explicit SymVec(std::vector<Sym> v) : s(std::move(v)) {}
    explicit SymVec(const std::string& text);  // from "0DN..." characters

    bool operator==(const SymVec&) const = default;
    int size() const { return static_cast<int>(s.size()); }
    Sym& operator[](int i) { return s[static_cast<size_t>(i)]; }
    Sym operator[](int i) const { return s[static_cast<size_t>(i)]; }

    // 1-based access with cyclic wrap: at1(k) = s[(k-1) mod n].
    Sym at1(long long k) const;

    SymVec reflect() const;
    SymVec rotated_right(int k) const;  // sh^k
    SymVec repeated(int rho) const;
    std::string to_string() const;

    bool all_zero() const;
    bool any(Sym v) const;
};

struct SymMatrix {
    std::vector<SymVec> rows;
    int row_count() const { return static_cast<int>(rows.size()); }
    int col_count() const { return rows.empty() ? 0 : rows[0].size(); }
};

// Block expression: atoms 0^i / D^i / N^i, concatenation, group repetition.
struct PatternExpr {
    enum class Kind { Atom, Seq };
    Kind kind = Kind::Seq;
    Sym sym = Sym::Zero;           // Atom
    long long count = 1;           // Atom exponent or Seq repetition
    std::vector<PatternExpr> kids; // Seq

    static PatternExpr atom(Sym s, long long i);
    static PatternExpr seq(std::vector<PatternExpr> kids, long long repeat = 1);
    long long expanded_length() const;
};

// Grammar: atoms `0`, `D`, `N` with optional `^k`; parenthesised groups with
// optional `^s`; juxtaposition concatenates; whitespace ignored.
PatternExpr parse_pattern(const std::string& text);

// Flat expansion; EmptyPattern when the total length is zero.
SymVec pattern_expand(const PatternExpr& p);
SymVec pattern_expand(const std::string& text);

// Cyclic inclusion: u fits some length-|u| window of v. A window matches when
// it is entirely Zero (its resolution set is empty) or positionwise
// u=0 -> w=0, u=N -> w=N, u=D -> anything. Returns the least 0-based window
// start on success. LengthError when |u| > |v|.
std::optional<int> includes(const SymVec& u, const SymVec& v);

// Same check for one fixed window start.
bool window_matches(const SymVec& u, const SymVec& v, int start);

enum class SingletonMode { Greedy, Exhaustive };

struct SingletonResult {
    bool success = false;
    // (row, column) per s-deletion, in order; covers every row on success.
    std::vector<std::pair<int, int>> order;
};

// Repeatedly delete rows corresponding to singleton columns (a column whose
// only non-Zero entry is an N). Success = every row eliminated. The two modes
// agree: deleting any available singleton never invalidates another (distinct
// singleton columns keep their unique N when unrelated rows leave), so the
// procedure is confluent; Exhaustive is kept as a mode for callers that want
// the library to pick deterministically among orders.
SingletonResult singleton_procedure(const SymMatrix& m, SingletonMode mode);

// Largest t such that some t-row subset passes the singleton procedure.
// Exact branch-and-bound over excluded rows; `subset_cap` caps the number of
// row subsets examined (CapExceeded beyond it).
int pseudo_rank(const SymMatrix& m, long long subset_cap = 2'000'000);

// Circulant matrix of v (row i is the i-th right rotation of v).
SymMatrix circulant_sym(const SymVec& v);

// All resolutions of v's D positions into {0, N}, excluding the all-zero
// vector; D-position bitmask ascending (bit set = N). CapExceeded when
// 2^(#D) > cap.
std::vector<SymVec> enumerate_resolutions(const SymVec& v, long long cap);

// All vectors over F_q compatible with u (0 stays 0, N any nonzero, D free),
// in ascending lexicographic order. CapExceeded past cap.
std::vector<std::vector<std::uint8_t>> instances(const SymVec& u, int q, long long cap);

}  // namespace cycbound
