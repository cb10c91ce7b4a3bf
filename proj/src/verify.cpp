#include "hadamard/verify.hpp"

#include <atomic>
#include <bit>
#include <limits>

namespace had {

PackedRows::PackedRows(const SignMatrix& m) : n_(m.order()), words_((m.order() + 63) / 64) {
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i) {
        const int* r = m.row(i);
        std::uint64_t* out = bits_.data() + static_cast<std::size_t>(i) * words_;
        for (int j = 0; j < n_; ++j)
            if (r[j] < 0) out[j / 64] |= std::uint64_t{1} << (j % 64);
    }
}

int PackedRows::dot(int i, int j) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    int diff = 0;
    for (int w = 0; w < words_; ++w) diff += std::popcount(a[w] ^ b[w]);
    return n_ - 2 * diff;
}

namespace {

// Smallest j >= i where row i fails; -1 if none.
int scan_row(const PackedRows& p, int i) {
    if (p.dot(i, i) != p.order()) return i;
    for (int j = i + 1; j < p.order(); ++j)
        if (p.dot(i, j) != 0) return j;
    return -1;
}

}  // namespace

std::optional<std::pair<int, int>> violation_parallel(const PackedRows& p) {
    const int n = p.order();
    const long long none = std::numeric_limits<long long>::max();
    std::atomic<long long> best{none};
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
        if (static_cast<long long>(i) * n >= best.load(std::memory_order_relaxed)) continue;
        int j = scan_row(p, i);
        if (j < 0) continue;
        long long code = static_cast<long long>(i) * n + j;
        long long cur = best.load();
        while (code < cur && !best.compare_exchange_weak(cur, code)) {
        }
    }
    long long b = best.load();
    if (b == none) return std::nullopt;
    return std::make_pair(static_cast<int>(b / n), static_cast<int>(b % n));
}

std::optional<std::pair<int, int>> violation_serial(const PackedRows& p) {
    for (int i = 0; i < p.order(); ++i) {
        int j = scan_row(p, i);
        if (j >= 0) return std::make_pair(i, j);
    }
    return std::nullopt;
}

bool is_hadamard_serial(const SignMatrix& m) { return !violation_serial(PackedRows(m)).has_value(); }

bool is_hadamard_reference(const SignMatrix& m) {
    int n = m.order();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long long s = 0;
            for (int k = 0; k < n; ++k) s += m(i, k) * m(j, k);
            if (s != (i == j ? n : 0)) return false;
        }
    return true;
}

}  // namespace had
