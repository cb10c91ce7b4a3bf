#include "hadamard/core.hpp"

#include <bit>
#include <sstream>

#include "hadamard/errors.hpp"
#include "hadamard/verify.hpp"

namespace had {

Matrix::Matrix(int rows, int cols, int fill)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> v;
    for (auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in +");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in *");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int x = (*this)(i, k);
            if (!x) continue;
            const int* b = o.row(k);
            int* out = r.row(i);
            for (int j = 0; j < o.cols_; ++j) out[j] += x * b[j];
        }
    return r;
}

Matrix Matrix::operator*(int s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

bool Matrix::is_sign() const {
    for (int x : a_)
        if (x != 1 && x != -1) return false;
    return true;
}

bool Matrix::is_ternary() const {
    for (int x : a_)
        if (x < -1 || x > 1) return false;
    return true;
}

SignMatrix::SignMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() < 1) throw std::invalid_argument("sign matrix must be square and nonempty");
    if (!m_.is_sign()) throw std::invalid_argument("sign matrix entries must be +1 or -1");
}

SignMatrix SignMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    return SignMatrix(Matrix::from_rows(rows));
}

bool is_hadamard(const SignMatrix& m) { return !violation_parallel(PackedRows(m)).has_value(); }

bool is_skew_hadamard(const SignMatrix& m) {
    int n = m.order();
    for (int i = 0; i < n; ++i) {
        if (m(i, i) != 1) return false;
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) != -m(j, i)) return false;
    }
    return is_hadamard(m);
}

std::optional<std::pair<int, int>> first_violation(const SignMatrix& m) {
    return violation_parallel(PackedRows(m));
}

Matrix circulant(const TernarySequence& first_row) {
    int n = static_cast<int>(first_row.size());
    if (n < 1) throw std::invalid_argument("empty first row");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = first_row[(j - i + n) % n];
    return m;
}

Matrix back_circulant(const TernarySequence& first_row) {
    int n = static_cast<int>(first_row.size());
    if (n < 1) throw std::invalid_argument("empty first row");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = first_row[(i + j) % n];
    return m;
}

Matrix back_diagonal(int n) {
    if (n < 1) throw std::invalid_argument("back_diagonal needs n >= 1");
    Matrix r(n, n);
    for (int i = 0; i < n; ++i) r(i, n - 1 - i) = 1;
    return r;
}

SignMatrix normalize(const SignMatrix& m) {
    if (!is_hadamard(m)) throw ValidationFailure("normalize: input is not Hadamard");
    Matrix r = m.matrix();
    int n = r.rows();
    for (int j = 0; j < n; ++j)
        if (r(0, j) < 0)
            for (int i = 0; i < n; ++i) r(i, j) = -r(i, j);
    return SignMatrix(std::move(r));
}

SignMatrix skew_normalize(const SignMatrix& m) {
    if (!is_skew_hadamard(m)) throw ValidationFailure("skew_normalize: input is not skew Hadamard");
    // D M D with D = diag(first row).
    Matrix r = m.matrix();
    int n = r.rows();
    std::vector<int> d(m.row(0), m.row(0) + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) *= d[i] * d[j];
    return SignMatrix(std::move(r));
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            int x = a(i, j);
            if (!x) continue;
            for (int k = 0; k < b.rows(); ++k) {
                int* out = r.row(i * b.rows() + k) + j * b.cols();
                const int* in = b.row(k);
                for (int l = 0; l < b.cols(); ++l) out[l] = x * in[l];
            }
        }
    return r;
}

Matrix block(const std::vector<std::vector<Matrix>>& blocks) {
    if (blocks.empty() || blocks[0].empty()) throw std::invalid_argument("empty block grid");
    std::size_t nc = blocks[0].size();
    std::vector<int> heights, widths;
    for (auto& brow : blocks) {
        if (brow.size() != nc) throw std::invalid_argument("ragged block grid");
        heights.push_back(brow[0].rows());
    }
    for (auto& b : blocks[0]) widths.push_back(b.cols());
    int total_r = 0, total_c = 0;
    for (int h : heights) total_r += h;
    for (int w : widths) total_c += w;
    Matrix r(total_r, total_c);
    int r0 = 0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        int c0 = 0;
        for (std::size_t bj = 0; bj < nc; ++bj) {
            const Matrix& b = blocks[bi][bj];
            if (b.rows() != heights[bi] || b.cols() != widths[bj])
                throw std::invalid_argument("block dimension mismatch");
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j) r(r0 + i, c0 + j) = b(i, j);
            c0 += widths[bj];
        }
        r0 += heights[bi];
    }
    return r;
}

namespace {

// +1/-1/0 rows as two bit planes, so dot products reduce to popcounts.
struct TernaryRows {
    int n, words;
    std::vector<std::uint64_t> pos, neg;

    explicit TernaryRows(const Matrix& m) : n(m.rows()), words((m.cols() + 63) / 64) {
        pos.assign(static_cast<std::size_t>(n) * words, 0);
        neg.assign(static_cast<std::size_t>(n) * words, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m.cols(); ++j) {
                std::uint64_t bit = std::uint64_t{1} << (j % 64);
                std::size_t w = static_cast<std::size_t>(i) * words + j / 64;
                if (m(i, j) > 0) pos[w] |= bit;
                else if (m(i, j) < 0) neg[w] |= bit;
            }
    }

    int dot(int i, int j) const {
        int s = 0;
        const std::uint64_t *pi = &pos[std::size_t(i) * words], *ni = &neg[std::size_t(i) * words];
        const std::uint64_t *pj = &pos[std::size_t(j) * words], *nj = &neg[std::size_t(j) * words];
        for (int w = 0; w < words; ++w)
            s += std::popcount((pi[w] & pj[w]) | (ni[w] & nj[w])) -
                 std::popcount((pi[w] & nj[w]) | (ni[w] & pj[w]));
        return s;
    }
};

}  // namespace

Matrix gram_sum(const std::vector<Matrix>& ms) {
    if (ms.empty()) throw std::invalid_argument("gram_sum of nothing");
    int n = ms[0].rows();
    Matrix g(n, n);
    for (auto& m : ms) {
        if (m.rows() != n || !m.is_ternary())
            throw std::invalid_argument("gram_sum needs equal-size ternary matrices");
        TernaryRows t(m);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                int d = t.dot(i, j);
                g(i, j) += d;
                if (j != i) g(j, i) += d;
            }
    }
    return g;
}

bool is_symmetric(const Matrix& m) { return m.is_square() && m == m.transpose(); }

bool is_circulant(const Matrix& m) {
    if (!m.is_square()) return false;
    int n = m.rows();
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, j) != m(0, (j - i + n) % n)) return false;
    return true;
}

std::string to_text(const SignMatrix& m) {
    std::string s;
    int n = m.order();
    s.reserve(static_cast<std::size_t>(n) * (n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) s += m(i, j) > 0 ? '+' : '-';
        s += '\n';
    }
    return s;
}

SignMatrix parse_text(const std::string& s) {
    std::istringstream in(s);
    std::string line;
    std::vector<std::vector<int>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<int> r;
        for (char c : line) {
            if (c == '+') r.push_back(1);
            else if (c == '-') r.push_back(-1);
            else throw ParseError(std::string("unexpected character '") + c + "' in matrix text");
        }
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw ParseError("empty matrix text");
    for (auto& r : rows)
        if (r.size() != rows.size()) throw ParseError("matrix text is not square");
    return SignMatrix(Matrix::from_rows(rows));
}

}  // namespace had
