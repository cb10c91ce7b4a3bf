#pragma once

#include <cstdint>
#include <vector>

#include "hadamard/core.hpp"

namespace had {

struct FieldElement {
    std::vector<int> coeffs;  // constant term first
    bool operator==(const FieldElement&) const = default;
};

// GF(p^k). Elements are addressed by their enumeration index: coefficient
// vectors in lexicographic order (constant term most significant), 0 first.
class FieldSpec {
public:
    FieldSpec(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement element(int index) const;
    int index(const FieldElement& e) const;

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int pow(int a, long long e) const;
    int one() const { return one_; }
    // A fixed primitive element (smallest index of order q - 1).
    int primitive() const { return exp_[1 % (q_ - 1)]; }
    int exp(long long e) const;  // primitive()^e
    int log(int a) const;        // a != 0
    bool is_square(int a) const { return square_[a]; }
    // Embedding of the integer n via n * 1.
    int from_int(long long n) const;

private:
    std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b) const;

    int p_, k_, q_, one_;
    std::vector<int> modulus_;
    std::vector<int> exp_, log_;
    std::vector<char> square_;
};

bool is_irreducible(const std::vector<int>& poly, int p);

// Cached per q; throws NotPrimePower unless q is an odd prime power.
const FieldSpec& field(std::int64_t q);
bool is_square(const FieldSpec& f, const FieldElement& x);

// Pi[i][j] = +1 iff i - j is a square (0 included).
SignMatrix paley_matrix(std::int64_t q);

}  // namespace had
