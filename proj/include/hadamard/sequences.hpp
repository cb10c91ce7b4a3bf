#pragma once

#include <vector>

#include "hadamard/core.hpp"

namespace had {

struct TSeqQuad {
    TernarySequence a, b, c, d;
    int length() const { return static_cast<int>(a.size()); }
};

struct TMatQuad {
    Matrix x1, x2, x3, x4;
    int order() const { return x1.rows(); }
};

// Sum_{i} x_i x_{i+j}, 0 <= j < n.
int npaf(const TernarySequence& x, int j);

bool is_t_sequences(const TSeqQuad& q);
bool is_t_matrices(const TMatQuad& q);
// Four sequences (any lengths) whose NPAF sums vanish for every shift j >= 1.
bool has_vanishing_npaf(const std::vector<TernarySequence>& seqs);

// Base sequences (A, B of length n + p; C, D of length n) to T-sequences of length 2n + p.
TSeqQuad t_sequences_from_base(const std::vector<TernarySequence>& base);
// Turyn sequences X, U (length l), Y, V (length l - 1) to T-sequences of length 4l - 1.
TSeqQuad t_sequences_from_turyn(const std::vector<TernarySequence>& xuyv);
// Turyn-type X, Y, Z (length n), W (length n - 1) to base sequences (Z;W, Z;-W, X, Y).
std::vector<TernarySequence> base_from_turyn_type(const std::vector<TernarySequence>& xyzw);

TSeqQuad t_sequences(int t);
TMatQuad t_matrices(int t);
bool t_matrices_supported(int t);
std::vector<int> supported_t(int limit);

}  // namespace had
