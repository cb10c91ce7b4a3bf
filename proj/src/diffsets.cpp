#include "hadamard/diffsets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hadamard/data.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/gf.hpp"
#include "hadamard/riesel.hpp"

namespace had {

Group::Group(std::vector<int> radices) : radices_(std::move(radices)), order_(1) {
    if (radices_.empty()) throw std::invalid_argument("group needs at least one factor");
    for (int r : radices_) {
        if (r < 1) throw std::invalid_argument("group factor must be positive");
        order_ *= r;
    }
}

int Group::add(int a, int b) const {
    if (radices_.size() == 1) return (a + b) % order_;
    int r = 0, scale = 1;
    for (int rad : radices_) {
        r += ((a % rad + b % rad) % rad) * scale;
        a /= rad;
        b /= rad;
        scale *= rad;
    }
    return r;
}

int Group::neg(int a) const {
    if (radices_.size() == 1) return (order_ - a) % order_;
    int r = 0, scale = 1;
    for (int rad : radices_) {
        r += ((rad - a % rad) % rad) * scale;
        a /= rad;
        scale *= rad;
    }
    return r;
}

std::string Group::name() const {
    if (is_cyclic()) return "Z_" + std::to_string(order_);
    std::string s;
    for (std::size_t i = 0; i < radices_.size(); ++i) s += (i ? "x" : "") + std::string("Z_") + std::to_string(radices_[i]);
    return s;
}

std::vector<int> SdsFamily::ks() const {
    std::vector<int> k;
    for (auto& s : sets) k.push_back(static_cast<int>(s.size()));
    return k;
}

std::optional<int> measured_lambda(const Group& g, const std::vector<std::vector<int>>& sets) {
    int v = g.order();
    std::vector<int> count(v, 0);
    for (auto& s : sets) {
        std::set<int> uniq(s.begin(), s.end());
        if (uniq.size() != s.size()) return std::nullopt;
        for (int x : s)
            if (x < 0 || x >= v) return std::nullopt;
        for (int r : s)
            for (int t : s)
                if (r != t) ++count[g.sub(r, t)];
    }
    if (v == 1) return 0;
    for (int x = 2; x < v; ++x)
        if (count[x] != count[1]) return std::nullopt;
    return count[1];
}

bool is_sds(const SdsFamily& f) {
    auto l = measured_lambda(f.group, f.sets);
    return l && *l == f.lambda;
}

bool is_skew_set(const std::vector<int>& s, const Group& g) {
    int v = g.order();
    std::vector<char> in(v, 0);
    for (int x : s) {
        if (x <= 0 || x >= v || in[x]) return false;
        in[x] = 1;
    }
    for (int x = 1; x < v; ++x)
        if (in[x] == in[g.neg(x)]) return false;
    return true;
}

bool is_skew_set(const std::vector<int>& s, int v) { return is_skew_set(s, Group::cyclic(v)); }

Matrix develop(const Group& g, const std::vector<int>& s) {
    int v = g.order();
    std::vector<int> f(v, 1);
    for (int x : s) f[x] = -1;
    Matrix m(v, v);
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y) m(x, y) = f[g.sub(y, x)];
    return m;
}

namespace {

enum class CdsFamily { None, Squares, Quartic, Octic, Cyclic };

CdsFamily cds_family(int m) {
    if (m < 1) return CdsFamily::None;
    long long q = 2LL * m + 1;
    if (auto pp = prime_power_u64(static_cast<std::uint64_t>(q)); pp && pp->first != 2) {
        if (q % 4 == 3) return CdsFamily::Squares;
        if (pp->first % 8 == 5 && pp->second % 4 != 0) return pp->second % 2 ? CdsFamily::Quartic : CdsFamily::Octic;
    }
    if (is_odd_prime_power(2 * q + 1)) return CdsFamily::Cyclic;
    return CdsFamily::None;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

CdsPair validated(CdsPair c) {
    SdsFamily f{c.group, {c.a, c.b}, c.m - 1};
    if (static_cast<int>(c.a.size()) != c.m || static_cast<int>(c.b.size()) != c.m || !is_sds(f) ||
        !is_skew_set(c.a, c.group))
        throw ValidationFailure("complementary difference sets for m=" + std::to_string(c.m));
    return c;
}

}  // namespace

bool cds_supported(int m) { return cds_family(m) != CdsFamily::None; }

CdsPair complementary_difference_sets(int m) {
    CdsFamily fam = cds_family(m);
    if (fam == CdsFamily::None) throw Unsupported("no complementary difference sets for m=" + std::to_string(m));
    int q = 2 * m + 1;
    CdsPair c;
    c.m = m;
    if (fam == CdsFamily::Cyclic) {
        // Z_q inside GF(2q+1)^* via a -> rho^(2a).
        const FieldSpec& f = field(2 * q + 1);
        c.group = Group::cyclic(q);
        int minus_one = f.neg(f.one());
        for (int a = 0; a < q; ++a) {
            int x = f.exp(2LL * a);
            int d1 = f.sub(x, f.one());
            if (d1 != 0 && f.is_square(d1)) c.a.push_back(a);
            int d2 = f.add(f.mul(minus_one, x), minus_one);
            if (d2 == 0 || !f.is_square(d2)) c.b.push_back(a);
        }
        return validated(c);
    }
    const FieldSpec& f = field(q);
    c.group = Group(std::vector<int>(f.k(), f.p()));
    if (fam == CdsFamily::Squares) {
        for (int x = 1; x < q; ++x)
            if (f.is_square(x)) c.a.push_back(x);
        c.b = c.a;
        return validated(c);
    }
    // Cyclotomic classes of index e: class(x) = log(x) mod e.
    int e = fam == CdsFamily::Quartic ? 4 : 8;
    std::vector<int> in_a = fam == CdsFamily::Quartic ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 2, 3};
    std::vector<int> in_b = fam == CdsFamily::Quartic ? std::vector<int>{0, 3} : std::vector<int>{0, 1, 6, 7};
    for (int x = 1; x < q; ++x) {
        int cls = f.log(x) % e;
        if (std::count(in_a.begin(), in_a.end(), cls)) c.a.push_back(x);
        if (std::count(in_b.begin(), in_b.end(), cls)) c.b.push_back(x);
    }
    return validated(c);
}

SdsFamily skew_sds_292() {
    const int v = 73;
    std::vector<int> h = {1, 2, 4, 8, 16, 32, 37, 55, 64};
    std::vector<std::vector<int>> alpha(8);
    const int reps[4] = {1, 3, 5, 11};
    for (int i = 0; i < 4; ++i)
        for (int x : h) {
            alpha[2 * i].push_back(reps[i] * x % v);
            alpha[2 * i + 1].push_back((v - reps[i] * x % v) % v);
        }
    auto unite = [&](std::initializer_list<int> idx, bool with_zero) {
        std::vector<int> s;
        if (with_zero) s.push_back(0);
        for (int i : idx) s.insert(s.end(), alpha[i].begin(), alpha[i].end());
        return sorted(s);
    };
    SdsFamily f{Group::cyclic(v),
                {unite({1, 3, 4, 6}, false), unite({3, 5, 6, 7}, false), unite({1, 4, 5, 7}, false),
                 unite({0, 2, 7}, true)},
                0};
    int total = 0;
    for (auto& s : f.sets) total += static_cast<int>(s.size());
    f.lambda = total - v;
    if (!is_sds(f) || !is_skew_set(f.sets[0], f.group)) throw ValidationFailure("order-73 skew SDS");
    return f;
}

namespace {

SdsFamily to_family(const data::SdsRecord& r) {
    return SdsFamily{r.group, r.sets, r.lambda};
}

const data::SdsRecord* find_sds(int v, std::initializer_list<const char*> kinds) {
    for (const char* kind : kinds)
        for (auto& r : data::datasets().sds)
            if (r.kind == kind && r.group.order() == v) return &r;
    return nullptr;
}

}  // namespace

bool skew_sds_supported(int v) { return v == 73 || find_sds(v, {"skew"}) != nullptr; }

SdsFamily skew_sds(int v) {
    if (v == 73) return skew_sds_292();
    if (auto* r = find_sds(v, {"skew"})) return to_family(*r);
    throw Unsupported("no skew SDS for v=" + std::to_string(v));
}

bool sds_supported(int v) { return skew_sds_supported(v) || find_sds(v, {"sds"}) != nullptr; }

SdsFamily sds(int v) {
    if (auto* r = find_sds(v, {"sds", "skew"})) return to_family(*r);
    if (v == 73) return skew_sds_292();
    throw Unsupported("no SDS for v=" + std::to_string(v));
}

bool spence_sds_supported(int v) { return find_sds(2 * v, {"spence"}) != nullptr; }

SdsFamily spence_sds(int v) {
    if (auto* r = find_sds(2 * v, {"spence"})) return to_family(*r);
    throw Unsupported("no Spence family for v=" + std::to_string(v));
}

}  // namespace had
