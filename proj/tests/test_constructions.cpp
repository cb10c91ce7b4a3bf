#include <doctest.h>

#include "hadamard/constructions.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/sequences.hpp"

using namespace had;

namespace {

// H H^T = nI by plain integer sums.
bool naive_hadamard(const SignMatrix& h) {
    int n = h.order();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long s = 0;
            for (int k = 0; k < n; ++k) s += h(i, k) * h(j, k);
            if (s != (i == j ? n : 0)) return false;
        }
    return true;
}

bool naive_skew(const SignMatrix& h) {
    int n = h.order();
    for (int i = 0; i < n; ++i) {
        if (h(i, i) != 1) return false;
        for (int j = 0; j < i; ++j)
            if (h(i, j) != -h(j, i)) return false;
    }
    return naive_hadamard(h);
}

Matrix ones11() { return Matrix::from_rows({{1}}); }

}  // namespace

TEST_CASE("paley I") {
    for (int n : {4, 8, 12, 20, 24, 28, 32, 44, 48, 60, 68, 84, 108, 128, 244}) {
        REQUIRE(paley_I_applies(n));
        auto h = paley_I(n);
        CHECK(h.order() == n);
        CHECK_MESSAGE(naive_skew(h), "n = " << n);
    }
    CHECK_FALSE(paley_I_applies(16));  // 15 is not a prime power
    CHECK_THROWS_AS(paley_I(16), Unsupported);
}

TEST_CASE("paley II") {
    for (int n : {12, 20, 28, 36, 52, 60, 76, 100, 108, 164, 244}) {
        REQUIRE(paley_II_applies(n));
        auto h = paley_II(n);
        CHECK(h.order() == n);
        CHECK_MESSAGE(naive_hadamard(h), "n = " << n);
        CHECK(h.matrix() == h.matrix().transpose());
    }
    CHECK_FALSE(paley_II_applies(44));  // 21 is not a prime power
    CHECK_FALSE(paley_II_applies(24));  // 11 is 3 mod 4
}

TEST_CASE("doubling") {
    auto d = sylvester_double(SignMatrix::from_rows({{1}}));
    CHECK(d == SignMatrix::from_rows({{1, 1}, {1, -1}}));
    auto s4 = sylvester_double(d);
    CHECK(s4.order() == 4);
    CHECK(naive_hadamard(s4));
    auto k = skew_double(paley_I(4));
    CHECK(k.order() == 8);
    CHECK(naive_skew(k));
    CHECK(naive_skew(skew_double(paley_I(12))));
}

TEST_CASE("williamson array") {
    auto h = williamson({ones11(), ones11(), ones11(), ones11()});
    CHECK(h.order() == 4);
    CHECK(naive_hadamard(h));
    for (int n : {23, 29, 39, 43}) {
        REQUIRE(williamson_supported(n));
        auto q = williamson_quad(n);
        CHECK(is_williamson_quad(q));
        CHECK(is_symmetric(q.a));
        CHECK(is_circulant(q.b));
        CHECK_MESSAGE(naive_hadamard(williamson(q)), "n = " << n);
    }
    int largest = 0;
    for (int n = 1; n <= 63; n += 2)
        if (williamson_supported(n)) largest = n;
    CHECK(largest <= 63);
    CHECK(largest >= 43);
    CHECK(naive_hadamard(williamson(williamson_quad(largest))));
}

TEST_CASE("williamson quad validation rejects a damaged block") {
    auto q = williamson_quad(23);
    q.b(0, 1) = -q.b(0, 1);
    CHECK_FALSE(is_williamson_quad(q));
    CHECK_THROWS_AS(williamson(q), ValidationFailure);
}

TEST_CASE("goethals-seidel array") {
    auto h = goethals_seidel(ones11(), ones11(), ones11(), ones11());
    CHECK(naive_hadamard(h));
    auto f = skew_sds_292();
    std::vector<Matrix> blocks;
    for (auto& s : f.sets) blocks.push_back(develop(f.group, s));
    // develop marks members with -1, as in a_i = -1 for i in S.
    CHECK(blocks[0](0, f.sets[0][0]) == -1);
    auto s = goethals_seidel(blocks[0], blocks[1], blocks[2], blocks[3], true, true);
    CHECK(s.order() == 292);
    CHECK(naive_skew(s));
    Matrix j3(3, 3, 1);
    CHECK_THROWS_AS(goethals_seidel(j3, j3, j3, j3), ValidationFailure);
}

TEST_CASE("hadamard matrices from stored sds") {
    for (int v : {103, 127, 151, 163}) {
        auto h = hadamard_from_sds(v);
        CHECK(h.order() == 4 * v);
        CHECK(naive_hadamard(h));
    }
    CHECK_THROWS_AS(hadamard_from_sds(9), Unsupported);
}

TEST_CASE("skew hadamard matrices from stored sds and gs quadruples") {
    for (int v : {37, 49, 73, 81}) {
        auto h = skew_hadamard_from_sds(v);
        CHECK(h.order() == 4 * v);
        CHECK(naive_skew(h));
    }
    for (int n : {47, 59, 69}) {
        REQUIRE(gs_skew_supported(n));
        CHECK(naive_skew(gs_skew(n)));
    }
}

TEST_CASE("cooper-wallis") {
    auto a = cooper_wallis(47, 1);
    CHECK(a.order() == 188);
    CHECK(naive_hadamard(a));
    auto b = cooper_wallis(5, 13);
    CHECK(b.order() == 260);
    CHECK(naive_hadamard(b));
    auto c = cooper_wallis(1, 1);
    CHECK(c.order() == 4);
    CHECK(naive_hadamard(c));
    CHECK_FALSE(cooper_wallis_supported(5, 2));
}

TEST_CASE("miyamoto") {
    auto a = miyamoto(73);
    CHECK(a.order() == 292);
    CHECK(naive_hadamard(a));
    CHECK(miyamoto(101).order() == 404);
    auto b = miyamoto(13);
    CHECK(b.order() == 52);
    CHECK(naive_hadamard(b));
    CHECK(naive_hadamard(paley_II(52)));
    CHECK_FALSE(miyamoto_applies(11));
    CHECK_FALSE(miyamoto_applies(21));
}

TEST_CASE("spence hadamard from 4-{2v} families") {
    auto f = spence_sds(1);
    CHECK(f.lambda == 2);
    auto h = spence(1);
    CHECK(h.order() == 12);
    CHECK(naive_hadamard(h));
    for (int v = 2; v <= 8; ++v)
        if (spence_sds_supported(v)) CHECK(naive_hadamard(spence(v)));
    CHECK_THROWS_AS(spence(1000), Unsupported);
}

TEST_CASE("good matrices") {
    GoodQuad one{ones11(), ones11(), ones11(), ones11()};
    CHECK(is_good_quad(one));
    CHECK(naive_skew(good_matrix_array(one)));
    for (int n = 1; n <= 31; n += 2) {
        REQUIRE(good_supported(n));
        auto g = good_quad(n);
        CHECK(g.order() == n);
        CHECK(is_good_quad(g));
        CHECK(is_amicable({g.a, g.b, g.c, g.d}));
        auto h = good_matrix_array(g);
        CHECK(h.order() == 4 * n);
        CHECK_MESSAGE(naive_skew(h), "n = " << n);
    }
    auto g = good_quad(13);
    g.b(0, 0) = -g.b(0, 0);
    CHECK_FALSE(is_good_quad(g));
    CHECK_THROWS_AS(good_matrix_array(g), ValidationFailure);
}

TEST_CASE("skew multiplication") {
    CHECK(skew_multiply_applies(3));
    CHECK_FALSE(skew_multiply_applies(5));
    auto h = williamson_skew_multiply(paley_I(4), 3);
    CHECK(h.order() == 16);
    CHECK(naive_skew(h));
    auto k = williamson_skew_multiply(paley_I(12), 7);
    CHECK(k.order() == 96);
    CHECK(naive_skew(k));
    CHECK_THROWS(williamson_skew_multiply(paley_I(4), 5));
}

TEST_CASE("blatt-szekeres") {
    auto h = blatt_szekeres(1);
    CHECK(h.order() == 8);
    CHECK(naive_skew(h));
    for (int n : {51, 55, 75, 79}) {
        int m = n - 1;
        auto k = blatt_szekeres(m);
        CHECK(k.order() == 4 * n);
        CHECK_MESSAGE(naive_skew(k), "m = " << m);
    }
    CHECK_THROWS_AS(blatt_szekeres(22), Unsupported);
}

TEST_CASE("spence skew construction") {
    REQUIRE(spence_skew_supported(13));
    auto h = spence_skew(13);
    CHECK(h.order() == 732);
    CHECK(naive_skew(h));
    CHECK_FALSE(spence_skew_supported(11));
    CHECK_THROWS_AS(spence_skew(11), Unsupported);
}

TEST_CASE("stored order-756 skew matrix") {
    REQUIRE(stored_supported(756, true));
    auto h = stored_matrix(756, true);
    CHECK(h.order() == 756);
    CHECK(naive_skew(h));
}
