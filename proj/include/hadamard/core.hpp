#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace had {

using TernarySequence = std::vector<int>;

// Dense row-major integer matrix. Used for ternary and intermediate block sums.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, int fill = 0);
    static Matrix square(int n, int fill = 0) { return Matrix(n, n, fill); }
    static Matrix from_rows(const std::vector<std::vector<int>>& rows);
    static Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const int* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }
    int* row(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }

    Matrix transpose() const;
    Matrix operator-() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(int s) const;
    bool operator==(const Matrix& o) const = default;

    bool is_sign() const;
    bool is_ternary() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> a_;
};

// Square matrix with entries in {+1,-1}; the invariant is checked on construction.
class SignMatrix {
public:
    SignMatrix() = default;
    explicit SignMatrix(Matrix m);
    static SignMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    int order() const { return m_.rows(); }
    int operator()(int i, int j) const { return m_(i, j); }
    const int* row(int i) const { return m_.row(i); }
    const Matrix& matrix() const { return m_; }
    SignMatrix transpose() const { return SignMatrix(m_.transpose()); }
    SignMatrix operator-() const { return SignMatrix(-m_); }
    bool operator==(const SignMatrix& o) const = default;

private:
    Matrix m_;
};

bool is_hadamard(const SignMatrix& m);
bool is_skew_hadamard(const SignMatrix& m);
// First pair (i, j), i <= j, whose dot product is wrong; nullopt when Hadamard.
std::optional<std::pair<int, int>> first_violation(const SignMatrix& m);

Matrix circulant(const TernarySequence& first_row);
// M[i][j] = row[(i + j) mod n].
Matrix back_circulant(const TernarySequence& first_row);
Matrix back_diagonal(int n);

SignMatrix normalize(const SignMatrix& m);
SignMatrix skew_normalize(const SignMatrix& m);

Matrix kron(const Matrix& a, const Matrix& b);
// Row-major grid of equally sized blocks.
Matrix block(const std::vector<std::vector<Matrix>>& blocks);

// Sum of M M^T over the given square matrices, computed exactly.
Matrix gram_sum(const std::vector<Matrix>& ms);
bool is_symmetric(const Matrix& m);
bool is_circulant(const Matrix& m);

// Text format: one row per line of '+'/'-'.
std::string to_text(const SignMatrix& m);
SignMatrix parse_text(const std::string& s);

}  // namespace had
