// DFT over the splitting field, circulant matrices, row rank by Gaussian
// elimination, and the weight-equals-rank check.
#pragma once

#include <cstdint>
#include <vector>

#include "cycbound/gf.hpp"

namespace cycbound {

// Word over F_q as residues; length must equal the context's n where used.
using Codeword = std::vector<std::uint8_t>;

struct FieldMatrix {
    std::vector<std::vector<FieldElement>> entries;
    int row_count() const { return static_cast<int>(entries.size()); }
    int col_count() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
};

// (A_0, ..., A_{n-1}) with A_i = sum_j a_j alpha^{ij}; A_i = 0 iff the word,
// read as a polynomial, vanishes at alpha^i.
std::vector<FieldElement> dft(const Codeword& word, const FieldContext& ctx);

// n x n circulant; row 0 is v, each later row the right rotation of the one
// above it.
FieldMatrix circulant(const std::vector<FieldElement>& v);

// Row rank over F_{q^m}; elimination with exact field inverses.
int rank(const FieldMatrix& m, const FieldContext& ctx);

int hamming_weight(const Codeword& word);

// rank(circulant(dft(word))); contracted to equal the Hamming weight.
int weight_via_blahut(const Codeword& word, const FieldContext& ctx);

}  // namespace cycbound
