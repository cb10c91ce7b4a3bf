#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hadamard/core.hpp"
#include "hadamard/diffsets.hpp"

namespace had {

// Symmetric circulant +-1 blocks with A^2 + B^2 + C^2 + D^2 = 4nI.
struct WilliamsonQuad {
    Matrix a, b, c, d;
    int order() const { return a.rows(); }
};

// A of skew type, B, C, D symmetric, pairwise amicable, sum MM^T = 4nI.
struct GoodQuad {
    Matrix a, b, c, d;
    int order() const { return a.rows(); }
};

bool is_amicable(const std::vector<Matrix>& ms);
bool is_williamson_quad(const WilliamsonQuad& q);
bool is_good_quad(const GoodQuad& q);

WilliamsonQuad williamson_quad(int n);
bool williamson_supported(int n);
GoodQuad good_quad(int n);
bool good_supported(int n);
bool gs_skew_supported(int n);

bool paley_I_applies(std::int64_t n);
bool paley_II_applies(std::int64_t n);
SignMatrix paley_I(int n, bool check = true);
SignMatrix paley_II(int n, bool check = true);

SignMatrix sylvester_double(const SignMatrix& h, bool check = true);
SignMatrix skew_double(const SignMatrix& h, bool check = true);

SignMatrix williamson(const WilliamsonQuad& q, bool check = true);
SignMatrix goethals_seidel(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d, bool check = true,
                           bool expect_skew = false);
SignMatrix hadamard_from_sds(int v, bool check = true);
SignMatrix skew_hadamard_from_sds(int v, bool check = true);
// Stored circulant quadruple with A of skew type.
SignMatrix gs_skew(int n, bool check = true);

bool cooper_wallis_supported(int t, int w);
SignMatrix cooper_wallis(int t, int w, bool check = true);

bool miyamoto_applies(std::int64_t q);
SignMatrix miyamoto(int q, const SignMatrix& k, bool check = true);
// Uses the registry for the order q - 1 input.
SignMatrix miyamoto(int q, bool check = true);

SignMatrix spence(int v, bool check = true);

SignMatrix good_matrix_array(const GoodQuad& g, bool check = true);

bool skew_multiply_applies(std::int64_t pk);
SignMatrix williamson_skew_multiply(const SignMatrix& h, int pk, bool check = true);

SignMatrix blatt_szekeres(int m, bool check = true);

bool spence_skew_supported(int q);
SignMatrix spence_skew(int q, bool check = true);

// Stored matrix by order (skew 756 only).
bool stored_supported(int n, bool skew);
SignMatrix stored_matrix(int n, bool skew);

}  // namespace had
