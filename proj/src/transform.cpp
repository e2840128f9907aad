#include "cycbound/transform.hpp"

namespace cycbound {

std::vector<FieldElement> dft(const Codeword& word, const FieldContext& ctx) {
    if (static_cast<int>(word.size()) != ctx.n)
        throw LengthMismatch("dft: word length != n");
    std::vector<FieldElement> out;
    out.reserve(word.size());
    for (int i = 0; i < ctx.n; ++i) {
        FieldElement acc = ctx.zero();
        for (int j = 0; j < ctx.n; ++j) {
            if (!word[static_cast<size_t>(j)]) continue;
            FieldElement term = ctx.alpha_pow(static_cast<long long>(i) * j);
            if (word[static_cast<size_t>(j)] != 1) {
                term = ctx.mul(term, ctx.from_base(word[static_cast<size_t>(j)]));
            }
            acc = ctx.add(acc, term);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

FieldMatrix circulant(const std::vector<FieldElement>& v) {
    FieldMatrix m;
    const int n = static_cast<int>(v.size());
    m.entries.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = m.entries[static_cast<size_t>(i)];
        row.resize(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = v[static_cast<size_t>(((j - i) % n + n) % n)];
    }
    return m;
}

int rank(const FieldMatrix& m, const FieldContext& ctx) {
    auto rows = m.entries;
    const int R = m.row_count(), C = m.col_count();
    int rk = 0;
    for (int col = 0; col < C && rk < R; ++col) {
        int pivot = -1;
        for (int r = rk; r < R; ++r) {
            if (!ctx.is_zero(rows[static_cast<size_t>(r)][static_cast<size_t>(col)])) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(pivot)], rows[static_cast<size_t>(rk)]);
        FieldElement inv = ctx.inv(rows[static_cast<size_t>(rk)][static_cast<size_t>(col)]);
        for (int r = rk + 1; r < R; ++r) {
            FieldElement f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (ctx.is_zero(f)) continue;
            f = ctx.mul(f, inv);
            for (int cc = col; cc < C; ++cc) {
                rows[static_cast<size_t>(r)][static_cast<size_t>(cc)] = ctx.sub(
                    rows[static_cast<size_t>(r)][static_cast<size_t>(cc)],
                    ctx.mul(f, rows[static_cast<size_t>(rk)][static_cast<size_t>(cc)]));
            }
        }
        ++rk;
    }
    return rk;
}

int hamming_weight(const Codeword& word) {
    int w = 0;
    for (auto v : word) w += (v != 0);
    return w;
}

int weight_via_blahut(const Codeword& word, const FieldContext& ctx) {
    return rank(circulant(dft(word, ctx)), ctx);
}

}  // namespace cycbound
