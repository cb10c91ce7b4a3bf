#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hadamard/core.hpp"

namespace had {

// Rows as bit vectors (bit set = -1); unused tail bits are zero.
class PackedRows {
public:
    explicit PackedRows(const SignMatrix& m);

    int order() const { return n_; }
    int words() const { return words_; }
    const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
    int dot(int i, int j) const;

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

// OpenMP over row pairs; returns the first violating pair in row-major order.
std::optional<std::pair<int, int>> violation_parallel(const PackedRows& p);
std::optional<std::pair<int, int>> violation_serial(const PackedRows& p);

bool is_hadamard_serial(const SignMatrix& m);
// Naive integer dot products; kept as the oracle for the packed kernels.
bool is_hadamard_reference(const SignMatrix& m);

}  // namespace had
