#include <doctest.h>

#include <random>

#include "hadamard/constructions.hpp"
#include "hadamard/core.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/io.hpp"
#include "hadamard/registry.hpp"
#include "hadamard/verify.hpp"

using namespace had;

namespace {

// Plain triple loop, independent of the packed kernels.
bool naive_hadamard(const Matrix& m) {
    int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long s = 0;
            for (int k = 0; k < n; ++k) s += m(i, k) * m(j, k);
            if (s != (i == j ? n : 0)) return false;
        }
    return true;
}

SignMatrix printed_order4() {
    return SignMatrix::from_rows({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}});
}

}  // namespace

TEST_CASE("is_hadamard on small hand-checked matrices") {
    CHECK(is_hadamard(printed_order4()));
    CHECK(is_hadamard(SignMatrix::from_rows({{-1}})));
    CHECK_FALSE(is_hadamard(SignMatrix::from_rows({{1, 1}, {1, 1}})));
}

TEST_CASE("sign matrix rejects bad entries and shapes") {
    CHECK_THROWS_AS(SignMatrix(Matrix::from_rows({{1, 0}, {1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(SignMatrix(Matrix(2, 3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(SignMatrix{Matrix{}}, std::invalid_argument);
}

TEST_CASE("skew predicate") {
    CHECK(is_skew_hadamard(SignMatrix::from_rows({{1, 1}, {-1, 1}})));
    CHECK_FALSE(is_skew_hadamard(printed_order4()));
    auto p2 = paley_II(12);
    CHECK(is_hadamard(p2));
    CHECK_FALSE(is_skew_hadamard(p2));
    auto p1 = paley_I(4);
    CHECK(is_hadamard(p1));
    CHECK(is_skew_hadamard(p1));
}

TEST_CASE("first_violation names the damaged row pair") {
    Matrix m = printed_order4().matrix();
    CHECK_FALSE(first_violation(SignMatrix(m)).has_value());
    m(2, 3) = -m(2, 3);
    auto v = first_violation(SignMatrix(m));
    REQUIRE(v.has_value());
    CHECK((v->first == 2 || v->second == 2));
}

TEST_CASE("circulant and back-circulant layouts") {
    CHECK(circulant({1, 0, -1}) == Matrix::from_rows({{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}}));
    CHECK(circulant({1}) == Matrix::from_rows({{1}}));
    CHECK(circulant({1, 1}) == Matrix::from_rows({{1, 1}, {1, 1}}));
    CHECK(back_circulant({1, 2, 3}) == Matrix::from_rows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}));
    CHECK(is_circulant(circulant({1, -1, 0, 1})));
    CHECK(is_symmetric(back_circulant({1, -1, 0, 1})));
}

TEST_CASE("back diagonal permutation") {
    CHECK(back_diagonal(1) == Matrix::from_rows({{1}}));
    CHECK(back_diagonal(2) == Matrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(back_diagonal(3) * back_diagonal(3) == Matrix::identity(3));
    // R turns a circulant into a back-circulant with the same first row.
    CHECK(circulant({1, 2, 3, 4}) * back_diagonal(4) == back_circulant({4, 3, 2, 1}));
}

TEST_CASE("normalization") {
    CHECK(normalize(printed_order4()) == printed_order4());
    CHECK(normalize(SignMatrix::from_rows({{-1}})) == SignMatrix::from_rows({{1}}));
    auto s = skew_normalize(paley_I(20));
    for (int j = 0; j < 20; ++j) CHECK(s(0, j) == 1);
    CHECK(is_skew_hadamard(s));
    CHECK_THROWS_AS(normalize(SignMatrix::from_rows({{1, 1}, {1, 1}})), ValidationFailure);
}

TEST_CASE("kronecker product") {
    CHECK(kron(Matrix::identity(2), Matrix::from_rows({{1}})) == Matrix::identity(2));
    Matrix b = Matrix::from_rows({{1, -1}, {1, 1}});
    CHECK(kron(Matrix::from_rows({{1}}), b) == b);
    Matrix k = kron(b, Matrix::from_rows({{1, 1}, {1, -1}}));
    CHECK(k.rows() == 4);
    CHECK(k.is_sign());
    CHECK(naive_hadamard(k));
}

TEST_CASE("gram_sum matches explicit products") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-1, 1);
    std::vector<Matrix> ms;
    for (int t = 0; t < 3; ++t) {
        Matrix m(13, 13);
        for (int i = 0; i < 13; ++i)
            for (int j = 0; j < 13; ++j) m(i, j) = d(rng);
        ms.push_back(m);
    }
    Matrix expect = ms[0] * ms[0].transpose() + ms[1] * ms[1].transpose() + ms[2] * ms[2].transpose();
    CHECK(gram_sum(ms) == expect);
}

TEST_CASE("packed kernels agree with the naive check") {
    std::mt19937 rng(11);
    for (int n : {1, 2, 4, 12, 63, 64, 65, 128, 130}) {
        SignMatrix h = n == 1 ? SignMatrix::from_rows({{1}})
                              : n == 2 ? SignMatrix::from_rows({{1, 1}, {1, -1}}) : SignMatrix();
        if (n % 4 == 0) h = hadamard_matrix(n);
        if (h.order() == 0) {
            Matrix m(n, n, 1);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = rng() & 1 ? 1 : -1;
            h = SignMatrix(m);
        }
        bool truth = naive_hadamard(h.matrix());
        CHECK(is_hadamard(h) == truth);
        CHECK(is_hadamard_serial(h) == truth);
        CHECK(is_hadamard_reference(h) == truth);
        PackedRows p(h);
        CHECK(violation_parallel(p) == violation_serial(p));
        if (n >= 4) {
            Matrix m = h.matrix();
            int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
            m(i, j) = -m(i, j);
            SignMatrix bad(m);
            CHECK_FALSE(is_hadamard(bad));
            PackedRows q(bad);
            CHECK(violation_parallel(q) == violation_serial(q));
            CHECK(violation_serial(q) == first_violation(bad));
        }
    }
}

TEST_CASE("text format round trip and errors") {
    auto h = paley_I(12);
    CHECK(parse_text(to_text(h)) == h);
    CHECK_THROWS_AS(parse_text("++\n+\n"), ParseError);
    CHECK_THROWS_AS(parse_text("+x\n++\n"), ParseError);
    CHECK_THROWS_AS(parse_text(""), ParseError);
}

TEST_CASE("all output formats round trip through parse_any") {
    for (int n : {1, 2, 4, 12, 20, 36}) {
        SignMatrix h = skew_hadamard_matrix(n);
        for (auto f : {OutputFormat::Text, OutputFormat::Json, OutputFormat::Compact})
            CHECK(parse_any(format_matrix(h, f, true)) == h);
    }
}

TEST_CASE("compact format header and padding") {
    auto h = paley_I(12);
    std::string c = to_compact(h, true);
    CHECK(c.rfind("HAD v1 order=12 skew=1\n", 0) == 0);
    bool flag = false;
    CHECK(parse_compact(c, &flag) == h);
    CHECK(flag);
    // Order 2 row "++" is 0xc; nonzero padding bits are rejected.
    CHECK(parse_compact("HAD v1 order=2 skew=0\nc\n8\n") == SignMatrix::from_rows({{1, 1}, {1, -1}}));
    CHECK_THROWS_AS(parse_compact("HAD v1 order=2 skew=0\nd\n8\n"), ParseError);
    CHECK_THROWS_AS(parse_compact("HAD v1 order=3 skew=0\nc\n8\n"), ParseError);
}

TEST_CASE("json parse rejects non-sign entries") {
    CHECK(parse_json("[[1,1],[1,-1]]") == SignMatrix::from_rows({{1, 1}, {1, -1}}));
    CHECK_THROWS_AS(parse_json("[[1,0],[1,-1]]"), ParseError);
    CHECK_THROWS_AS(parse_json("[[1,1],[1]]"), ParseError);
}
