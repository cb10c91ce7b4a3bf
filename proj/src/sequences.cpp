#include "hadamard/sequences.hpp"

#include <algorithm>
#include <stdexcept>

#include "hadamard/data.hpp"
#include "hadamard/errors.hpp"

namespace had {

int npaf(const TernarySequence& x, int j) {
    int n = static_cast<int>(x.size());
    if (j < 0 || j >= n) throw std::out_of_range("npaf shift out of range");
    int s = 0;
    for (int i = 0; i + j < n; ++i) s += x[i] * x[i + j];
    return s;
}

bool has_vanishing_npaf(const std::vector<TernarySequence>& seqs) {
    std::size_t longest = 0;
    for (auto& s : seqs) longest = std::max(longest, s.size());
    for (std::size_t j = 1; j < longest; ++j) {
        int total = 0;
        for (auto& s : seqs)
            if (j < s.size()) total += npaf(s, static_cast<int>(j));
        if (total) return false;
    }
    return true;
}

bool is_t_sequences(const TSeqQuad& q) {
    std::size_t n = q.a.size();
    if (q.b.size() != n || q.c.size() != n || q.d.size() != n) throw std::invalid_argument("T-sequence length mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        int nz = (q.a[i] != 0) + (q.b[i] != 0) + (q.c[i] != 0) + (q.d[i] != 0);
        if (nz != 1) return false;
        for (int x : {q.a[i], q.b[i], q.c[i], q.d[i]})
            if (x < -1 || x > 1) return false;
    }
    return has_vanishing_npaf({q.a, q.b, q.c, q.d});
}

bool is_t_matrices(const TMatQuad& q) {
    int n = q.order();
    for (auto* x : {&q.x1, &q.x2, &q.x3, &q.x4})
        if (x->rows() != n || !x->is_square() || !x->is_ternary() || !is_circulant(*x)) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int nz = (q.x1(i, j) != 0) + (q.x2(i, j) != 0) + (q.x3(i, j) != 0) + (q.x4(i, j) != 0);
            if (nz != 1) return false;
        }
    return gram_sum({q.x1, q.x2, q.x3, q.x4}) == Matrix::identity(n) * n;
}

TSeqQuad t_sequences_from_base(const std::vector<TernarySequence>& base) {
    if (base.size() != 4 || base[0].size() != base[1].size() || base[2].size() != base[3].size())
        throw std::invalid_argument("base sequences need lengths (n+p, n+p, n, n)");
    int np = static_cast<int>(base[0].size()), n = static_cast<int>(base[2].size());
    int len = np + n;
    TSeqQuad q{TernarySequence(len), TernarySequence(len), TernarySequence(len), TernarySequence(len)};
    for (int i = 0; i < np; ++i) {
        q.a[i] = (base[0][i] + base[1][i]) / 2;
        q.b[i] = (base[0][i] - base[1][i]) / 2;
    }
    for (int i = 0; i < n; ++i) {
        q.c[np + i] = (base[2][i] + base[3][i]) / 2;
        q.d[np + i] = (base[2][i] - base[3][i]) / 2;
    }
    return q;
}

TSeqQuad t_sequences_from_turyn(const std::vector<TernarySequence>& xuyv) {
    if (xuyv.size() != 4) throw std::invalid_argument("Turyn sequences come in fours");
    const auto &x = xuyv[0], &u = xuyv[1], &y = xuyv[2], &v = xuyv[3];
    int l = static_cast<int>(x.size());
    if (static_cast<int>(u.size()) != l || static_cast<int>(y.size()) != l - 1 || static_cast<int>(v.size()) != l - 1)
        throw std::invalid_argument("Turyn sequences need lengths (l, l, l-1, l-1)");
    int len = 4 * l - 1;
    TSeqQuad q{TernarySequence(len), TernarySequence(len), TernarySequence(len), TernarySequence(len)};
    q.a[0] = 1;
    // b = 0; x1 y1 x2 y2 ... x_l; then zeros.
    for (int i = 0; i < l; ++i) q.b[1 + 2 * i] = x[i];
    for (int i = 0; i + 1 < l; ++i) q.b[2 + 2 * i] = y[i];
    for (int i = 0; i < l; ++i) q.c[2 * l + 2 * i] = u[i];
    for (int i = 0; i + 1 < l; ++i) q.d[2 * l + 2 * i + 1] = v[i];
    return q;
}

std::vector<TernarySequence> base_from_turyn_type(const std::vector<TernarySequence>& xyzw) {
    if (xyzw.size() != 4) throw std::invalid_argument("Turyn-type sequences come in fours");
    const auto &x = xyzw[0], &y = xyzw[1], &z = xyzw[2], &w = xyzw[3];
    TernarySequence a = z, b = z;
    for (int e : w) {
        a.push_back(e);
        b.push_back(-e);
    }
    return {a, b, x, y};
}

namespace {

TSeqQuad validated(TSeqQuad q, int t) {
    if (q.length() != t || !is_t_sequences(q))
        throw ValidationFailure("T-sequences of length " + std::to_string(t) + " failed validation");
    return q;
}

}  // namespace

TSeqQuad t_sequences(int t) {
    if (t == 1) return {{1}, {0}, {0}, {0}};
    if (t == 2) return validated({{1, 0}, {0, 1}, {0, 0}, {0, 0}}, 2);
    const auto& ds = data::datasets();
    for (auto& s : ds.tseq)
        if (s.kind == "t-sequences" && s.length == t) return validated({s.seqs[0], s.seqs[1], s.seqs[2], s.seqs[3]}, t);
    for (auto& s : ds.tseq) {
        if (s.kind == "turyn") {
            if (2 * s.length - 1 == t) return validated(t_sequences_from_base(s.seqs), t);
            if (4 * s.length - 1 == t) return validated(t_sequences_from_turyn(s.seqs), t);
        }
        if (s.kind == "turyn-type" && 3 * s.length - 1 == t)
            return validated(t_sequences_from_base(base_from_turyn_type(s.seqs)), t);
    }
    throw Unsupported("no T-sequences of length " + std::to_string(t));
}

TMatQuad t_matrices(int t) {
    for (auto& s : data::datasets().tseq)
        if (s.kind == "t-matrices" && s.length == t) {
            TMatQuad q{circulant(s.seqs[0]), circulant(s.seqs[1]), circulant(s.seqs[2]), circulant(s.seqs[3])};
            if (!is_t_matrices(q)) throw ValidationFailure("T-matrices of order " + std::to_string(t));
            return q;
        }
    TSeqQuad s = t_sequences(t);
    TMatQuad q{circulant(s.a), circulant(s.b), circulant(s.c), circulant(s.d)};
    if (!is_t_matrices(q)) throw ValidationFailure("T-matrices of order " + std::to_string(t));
    return q;
}

bool t_matrices_supported(int t) {
    if (t == 1 || t == 2) return true;
    for (auto& s : data::datasets().tseq) {
        if ((s.kind == "t-sequences" || s.kind == "t-matrices") && s.length == t) return true;
        if (s.kind == "turyn" && (2 * s.length - 1 == t || 4 * s.length - 1 == t)) return true;
        if (s.kind == "turyn-type" && 3 * s.length - 1 == t) return true;
    }
    return false;
}

std::vector<int> supported_t(int limit) {
    std::vector<int> r;
    for (int t = 1; t <= limit; ++t)
        if (t_matrices_supported(t)) r.push_back(t);
    return r;
}

}  // namespace had
