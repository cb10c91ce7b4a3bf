#include "hadamard/constructions.hpp"

#include <algorithm>
#include <set>

#include "hadamard/data.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/gf.hpp"
#include "hadamard/registry.hpp"
#include "hadamard/riesel.hpp"
#include "hadamard/sequences.hpp"

namespace had {

namespace {

SignMatrix finish(Matrix m, bool check, bool skew, const std::string& what) {
    if (!m.is_square() || !m.is_sign()) throw ValidationFailure(what + ": result is not a square +-1 matrix");
    SignMatrix s(std::move(m));
    if (check && !(skew ? is_skew_hadamard(s) : is_hadamard(s)))
        throw ValidationFailure(what + ": result fails " + (skew ? "is_skew_hadamard" : "is_hadamard"));
    return s;
}

// M R: columns in reverse order.
Matrix times_r(const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, m.cols() - 1 - j);
    return r;
}

Matrix gs_array(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    Matrix br = times_r(b), cr = times_r(c), dr = times_r(d);
    Matrix btr = times_r(b.transpose()), ctr = times_r(c.transpose()), dtr = times_r(d.transpose());
    return block({{a, br, cr, dr}, {-br, a, dtr, -ctr}, {-cr, -dtr, a, btr}, {-dr, ctr, -btr, a}});
}

std::vector<Matrix> circulants(const std::vector<TernarySequence>& rows) {
    std::vector<Matrix> out;
    for (auto& r : rows) out.push_back(circulant(r));
    return out;
}

const data::QuadRecord* find_quad(const std::vector<data::QuadRecord>& recs, int n) {
    for (auto& r : recs)
        if (r.n == n) return &r;
    return nullptr;
}

}  // namespace

bool is_amicable(const std::vector<Matrix>& ms) {
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (ms[i] * ms[j].transpose() != ms[j] * ms[i].transpose()) return false;
    return true;
}

bool is_williamson_quad(const WilliamsonQuad& q) {
    int n = q.order();
    std::vector<Matrix> ms{q.a, q.b, q.c, q.d};
    for (auto& m : ms)
        if (m.rows() != n || !m.is_square() || !m.is_sign() || !is_symmetric(m) || !is_circulant(m)) return false;
    return is_amicable(ms) && gram_sum(ms) == Matrix::identity(n) * (4 * n);
}

bool is_good_quad(const GoodQuad& q) {
    int n = q.order();
    std::vector<Matrix> ms{q.a, q.b, q.c, q.d};
    for (auto& m : ms)
        if (m.rows() != n || !m.is_square() || !m.is_sign()) return false;
    if (n % 2 == 0) return false;
    if (q.a + q.a.transpose() != Matrix::identity(n) * 2) return false;
    for (auto* m : {&q.b, &q.c, &q.d})
        if (!is_symmetric(*m)) return false;
    return is_amicable(ms) && gram_sum(ms) == Matrix::identity(n) * (4 * n);
}

bool williamson_supported(int n) { return find_quad(data::datasets().williamson, n) != nullptr; }

WilliamsonQuad williamson_quad(int n) {
    auto* r = find_quad(data::datasets().williamson, n);
    if (!r) throw Unsupported("no Williamson quadruple of order " + std::to_string(n));
    auto ms = circulants(r->rows);
    return {ms[0], ms[1], ms[2], ms[3]};
}

bool good_supported(int n) { return find_quad(data::datasets().good, n) != nullptr; }

GoodQuad good_quad(int n) {
    auto* r = find_quad(data::datasets().good, n);
    if (!r) throw Unsupported("no good matrices of order " + std::to_string(n));
    return {circulant(r->rows[0]), back_circulant(r->rows[1]), back_circulant(r->rows[2]), back_circulant(r->rows[3])};
}

bool gs_skew_supported(int n) { return find_quad(data::datasets().gs_skew, n) != nullptr; }

bool paley_I_applies(std::int64_t n) { return n >= 4 && is_odd_prime_power(n - 1) && (n - 1) % 4 == 3; }

bool paley_II_applies(std::int64_t n) {
    return n >= 12 && n % 2 == 0 && is_odd_prime_power(n / 2 - 1) && (n / 2 - 1) % 4 == 1;
}

SignMatrix paley_I(int n, bool check) {
    if (!paley_I_applies(n)) throw Unsupported("Paley I does not apply to order " + std::to_string(n));
    SignMatrix pi = paley_matrix(n - 1);
    Matrix h(n, n, 1);
    for (int i = 1; i < n; ++i) {
        h(i, 0) = -1;
        for (int j = 1; j < n; ++j) h(i, j) = pi(i - 1, j - 1);
    }
    return finish(std::move(h), check, true, "paley_I");
}

SignMatrix paley_II(int n, bool check) {
    if (!paley_II_applies(n)) throw Unsupported("Paley II does not apply to order " + std::to_string(n));
    int q = n / 2 - 1;
    SignMatrix pi = paley_matrix(q);
    // I (x) [[1,-1],[-1,-1]] + [[0, 1^T],[1, Pi - I]] (x) [[1,1],[1,-1]]
    Matrix core(q + 1, q + 1, 1);
    core(0, 0) = 0;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) core(i + 1, j + 1) = i == j ? 0 : pi(i, j);
    Matrix h = kron(Matrix::identity(q + 1), Matrix::from_rows({{1, -1}, {-1, -1}})) +
               kron(core, Matrix::from_rows({{1, 1}, {1, -1}}));
    SignMatrix s = finish(std::move(h), check, false, "paley_II");
    if (check && !is_symmetric(s.matrix())) throw ValidationFailure("paley_II: result is not symmetric");
    return s;
}

SignMatrix sylvester_double(const SignMatrix& h, bool check) {
    if (check && !is_hadamard(h)) throw ValidationFailure("sylvester_double: input is not Hadamard");
    const Matrix& m = h.matrix();
    return finish(block({{m, m}, {m, -m}}), check, false, "sylvester_double");
}

SignMatrix skew_double(const SignMatrix& h, bool check) {
    if (check && !is_skew_hadamard(h)) throw ValidationFailure("skew_double: input is not skew Hadamard");
    int n = h.order();
    Matrix i = Matrix::identity(n);
    Matrix s = h.matrix() - i;
    return finish(block({{s + i, s + i}, {s - i, -s + i}}), check, true, "skew_double");
}

SignMatrix williamson(const WilliamsonQuad& q, bool check) {
    if (!is_williamson_quad(q)) throw ValidationFailure("williamson: invalid quadruple");
    const Matrix &a = q.a, &b = q.b, &c = q.c, &d = q.d;
    return finish(block({{a, -b, -c, -d}, {b, a, d, -c}, {c, -d, a, b}, {d, c, -b, a}}), check, false, "williamson");
}

SignMatrix goethals_seidel(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d, bool check,
                           bool expect_skew) {
    int n = a.rows();
    for (auto* m : {&a, &b, &c, &d})
        if (m->rows() != n || !m->is_square() || !m->is_sign())
            throw ValidationFailure("goethals_seidel: inputs must be +-1 matrices of one order");
    if (gram_sum({a, b, c, d}) != Matrix::identity(n) * (4 * n))
        throw ValidationFailure("goethals_seidel: AA^T + BB^T + CC^T + DD^T != 4nI");
    return finish(gs_array(a, b, c, d), check, expect_skew, "goethals_seidel");
}

SignMatrix hadamard_from_sds(int v, bool check) {
    SdsFamily f = sds(v);
    std::vector<Matrix> ms;
    for (auto& s : f.sets) ms.push_back(develop(f.group, s));
    return goethals_seidel(ms[0], ms[1], ms[2], ms[3], check, false);
}

SignMatrix skew_hadamard_from_sds(int v, bool check) {
    SdsFamily f = skew_sds(v);
    std::vector<Matrix> ms;
    for (auto& s : f.sets) ms.push_back(develop(f.group, s));
    return goethals_seidel(ms[0], ms[1], ms[2], ms[3], check, true);
}

SignMatrix gs_skew(int n, bool check) {
    auto* r = find_quad(data::datasets().gs_skew, n);
    if (!r) throw Unsupported("no Goethals-Seidel skew quadruple of order " + std::to_string(n));
    auto ms = circulants(r->rows);
    return goethals_seidel(ms[0], ms[1], ms[2], ms[3], check, true);
}

bool cooper_wallis_supported(int t, int w) { return t >= 1 && t_matrices_supported(t) && williamson_supported(w); }

SignMatrix cooper_wallis(int t, int w, bool check) {
    if (!t_matrices_supported(t)) throw Unsupported("no T-matrices of order " + std::to_string(t));
    TMatQuad x = t_matrices(t);
    WilliamsonQuad wq = williamson_quad(w);
    if (!is_amicable({wq.a, wq.b, wq.c, wq.d}) || gram_sum({wq.a, wq.b, wq.c, wq.d}) != Matrix::identity(w) * (4 * w))
        throw ValidationFailure("cooper_wallis: second quadruple is not amicable with sum 4wI");
    const Matrix &x1 = x.x1, &x2 = x.x2, &x3 = x.x3, &x4 = x.x4;
    Matrix e1 = gs_array(x1, x2, x3, x4);
    Matrix e2 = gs_array(x2, -x1, x4, -x3);
    Matrix e3 = gs_array(x3, -x4, -x1, x2);
    Matrix e4 = gs_array(x4, x3, -x2, -x1);
    Matrix h = kron(e1, wq.a) + kron(e2, wq.b) + kron(e3, wq.c) + kron(e4, wq.d);
    return finish(std::move(h), check, false, "cooper_wallis");
}

bool miyamoto_applies(std::int64_t q) { return q >= 5 && q % 4 == 1 && is_odd_prime_power(q); }

SignMatrix miyamoto(int q, const SignMatrix& k, bool check) {
    if (!miyamoto_applies(q)) throw Unsupported("Miyamoto needs a prime power q = 1 mod 4, got " + std::to_string(q));
    if (k.order() != q - 1) throw std::invalid_argument("miyamoto: K must have order q - 1");
    if (check && !is_hadamard(k)) throw ValidationFailure("miyamoto: K is not Hadamard");
    const int m = (q - 1) / 2;
    SignMatrix pi = paley_matrix(q);
    // Symmetric conference matrix of order q + 1.
    Matrix c(q + 1, q + 1, 1);
    c(0, 0) = 0;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) c(i + 1, j + 1) = i == j ? 0 : pi(i, j);
    std::vector<int> neg, pos;
    for (int i = 2; i < m + 2; ++i)
        if (c(1, i) == -1) neg.push_back(i);
    for (int i = m + 2; i < 2 * m + 2; ++i)
        if (c(1, i) == 1) pos.push_back(i);
    for (std::size_t t = 0; t < std::min(neg.size(), pos.size()); ++t) {
        int a = neg[t], b = pos[t];
        for (int j = 0; j <= q; ++j) std::swap(c(a, j), c(b, j));
        for (int i = 0; i <= q; ++i) std::swap(c(i, a), c(i, b));
    }
    auto sub = [](const Matrix& src, int r0, int c0, int rows, int cols) {
        Matrix r(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r(i, j) = src(r0 + i, c0 + j);
        return r;
    };
    Matrix c1 = -sub(c, 2, 2, m, m), c2 = sub(c, 2, m + 2, m, m), c4 = sub(c, m + 2, m + 2, m, m);
    const Matrix& km = k.matrix();
    Matrix k1 = sub(km, 0, 0, m, m), k2 = sub(km, 0, m, m, m), k3 = -sub(km, m, 0, m, m), k4 = sub(km, m, m, m, m);
    Matrix z(m, m), id = Matrix::identity(m);
    Matrix c2t = c2.transpose();
    std::vector<std::vector<Matrix>> us{{c1, c2, z, z}, {c2t, c4, z, z}, {z, z, c1, c2}, {z, z, c2t, c4}};
    std::vector<std::vector<Matrix>> vs{{id, z, k1, k2},
                                        {z, id, k3, k4},
                                        {k1.transpose(), k3.transpose(), id, z},
                                        {k2.transpose(), k4.transpose(), z, id}};
    auto t = [&](int i, int j) {
        const Matrix &u = us[i][j], &v = vs[i][j];
        return block({{u + v, u - v}, {u - v, u + v}});
    };
    Matrix one = Matrix::from_rows({{1}});
    Matrix e(1, 2 * m, 1);
    Matrix et = e.transpose();
    Matrix h = block({
        {one, -e, one, e, one, e, one, e},
        {-et, t(0, 0), et, t(0, 1), et, t(0, 2), et, t(0, 3)},
        {-one, -e, one, -e, one, e, -one, -e},
        {-et, -t(1, 0), -et, t(1, 1), et, t(1, 2), -et, -t(1, 3)},
        {-one, -e, -one, -e, one, -e, one, e},
        {-et, -t(2, 0), -et, -t(2, 1), -et, t(2, 2), et, t(2, 3)},
        {-one, -e, one, e, -one, -e, one, -e},
        {-et, -t(3, 0), et, t(3, 1), -et, -t(3, 2), -et, t(3, 3)},
    });
    return finish(std::move(h), check, false, "miyamoto");
}

SignMatrix miyamoto(int q, bool check) {
    if (!miyamoto_applies(q)) throw Unsupported("Miyamoto needs a prime power q = 1 mod 4, got " + std::to_string(q));
    return miyamoto(q, hadamard_matrix(q - 1), check);
}

SignMatrix spence(int v, bool check) {
    SdsFamily f = spence_sds(v);
    const int n = 2 * v;
    std::vector<Matrix> a;
    for (auto& s : f.sets) a.push_back(-develop(f.group, s));
    Matrix p(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) p(r, c) = (r + c + 2) % n == 0 ? 1 : 0;
    Matrix one = Matrix::from_rows({{1}});
    Matrix e(1, n, 1), et = e.transpose();
    Matrix a2p = a[1] * p, a3p = a[2] * p, a4p = a[3] * p;
    Matrix a2tp = a[1].transpose() * p, a3tp = a[2].transpose() * p, a4tp = a[3].transpose() * p;
    Matrix h = block({
        {one, -one, one, one, e, e, e, e},
        {one, one, -one, one, -e, e, -e, e},
        {-one, one, one, one, -e, e, e, -e},
        {-one, -one, -one, one, -e, -e, e, e},
        {-et, et, et, -et, a[0], a2p, a3p, a4p},
        {-et, -et, et, et, -a2p, a[0], -a4tp, a3tp},
        {-et, -et, -et, -et, -a3p, a4tp, a[0], -a2tp},
        {et, -et, et, -et, -a4p, -a3tp, a2tp, a[0]},
    });
    return finish(std::move(h), check, false, "spence");
}

SignMatrix good_matrix_array(const GoodQuad& g, bool check) {
    if (!is_good_quad(g)) throw ValidationFailure("good_matrix_array: invalid good matrices");
    const Matrix &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    return finish(block({{a, b, c, d}, {-b, a, d, -c}, {-c, -d, a, b}, {-d, c, -b, a}}), check, true, "good_matrix_array");
}

bool skew_multiply_applies(std::int64_t pk) { return is_odd_prime_power(pk) && (pk + 1) % 4 == 0; }

SignMatrix williamson_skew_multiply(const SignMatrix& h, int pk, bool check) {
    if (!skew_multiply_applies(pk)) throw Unsupported("skew multiplication needs a prime power pk = 3 mod 4, got " + std::to_string(pk));
    if (check && !is_skew_hadamard(h)) throw ValidationFailure("williamson_skew_multiply: input is not skew Hadamard");
    const FieldSpec& f = field(pk);
    int d = pk + 1, n = h.order();
    Matrix a = paley_I(d, false).matrix();
    Matrix u(d, d);
    u(0, 0) = -1;
    for (int x = 0; x < pk; ++x) u(1 + x, 1 + f.neg(x)) = 1;
    Matrix s = h.matrix() - Matrix::identity(n);
    Matrix m = kron(a, Matrix::identity(n)) + kron(u * a, s);
    return finish(std::move(m), check, true, "williamson_skew_multiply");
}

SignMatrix blatt_szekeres(int m, bool check) {
    CdsPair cds = complementary_difference_sets(m);
    const Group& g = cds.group;
    const int v = g.order();  // 2m + 1
    const int n = 2 * v + 2;
    std::vector<char> in_a(v, 0), in_b(v, 0);
    for (int x : cds.a) in_a[x] = 1;
    for (int x : cds.b) in_b[x] = 1;
    Matrix s(n, n);
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
            int diff = g.sub(j, i);
            s(v + i, v + j) = in_a[diff] ? -1 : 1;
            s(i, j) = -s(v + i, v + j);
            s(v + j, i) = in_b[diff] ? -1 : 1;
            s(i, v + j) = -s(v + j, i);
        }
        s(2 * v, i) = -1;
        s(2 * v, v + i) = 1;
        s(i, 2 * v) = 1;
        s(v + i, 2 * v) = -1;
    }
    for (int i = 0; i < n - 1; ++i) {
        s(n - 1, i) = 1;
        s(i, n - 1) = -1;
    }
    for (int i = 0; i < n; ++i) s(i, i) = 1;
    return finish(std::move(s), check, true, "blatt_szekeres");
}

namespace {

const data::PlaneRecord* find_plane(int q) {
    for (auto& p : data::datasets().plane)
        if (p.q == q) return &p;
    return nullptr;
}

}  // namespace

bool spence_skew_supported(int q) {
    auto* plane = find_plane(q);
    if (!plane) return false;
    long long m = 1LL + q + 1LL * q * q;
    return plane->v == m * (1 - q + 1LL * q * q) && cds_supported(static_cast<int>((m - 1) / 2));
}

SignMatrix spence_skew(int q, bool check) {
    if (!spence_skew_supported(q)) throw Unsupported("no cyclic plane data for Spence's construction with q=" + std::to_string(q));
    const data::PlaneRecord& plane = *find_plane(q);
    const long long m = 1LL + q + 1LL * q * q;
    const long long co = 1LL - q + 1LL * q * q;
    std::vector<long long> rest;
    std::set<long long> d1;
    for (long long d : plane.points) {
        if (d % co == 0) d1.insert(d % m);
        else rest.push_back(d);
    }
    // One representative per pair of points that agree mod m.
    std::set<long long> d2;
    std::vector<char> used(rest.size(), 0);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (!used[j] && rest[i] % m == rest[j] % m) {
                used[j] = 1;
                d2.insert(rest[i] % m);
                break;
            }
    }
    CdsPair cds = complementary_difference_sets(static_cast<int>((m - 1) / 2));
    if (!cds.group.is_cyclic()) throw Unsupported("Spence's construction needs a cyclic CDS pair");
    const int v = static_cast<int>(m);
    TernarySequence p(v, 1), qq(v, 1), r(v, -1), s(v, -1);
    for (int x : cds.a) p[x] = -1;
    for (int x : cds.b) qq[x] = -1;
    for (long long x : d1) r[x] = 1;
    for (long long x : d2) {
        r[x] = 1;
        s[x] = 1;
    }
    return goethals_seidel(circulant(p), circulant(qq), circulant(r), circulant(s), check, true);
}

bool stored_supported(int n, bool skew) {
    for (auto& s : data::datasets().stored)
        if (s.matrix.order() == n && (s.skew || !skew)) return true;
    return false;
}

SignMatrix stored_matrix(int n, bool skew) {
    for (auto& s : data::datasets().stored)
        if (s.matrix.order() == n && (s.skew || !skew)) return s.matrix;
    throw Unsupported("no stored matrix of order " + std::to_string(n));
}

}  // namespace had
