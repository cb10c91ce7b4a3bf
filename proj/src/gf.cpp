#include "hadamard/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "hadamard/errors.hpp"
#include "hadamard/riesel.hpp"

namespace had {

namespace {

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Remainder of a by monic b over Z_p; both constant-first.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int c = a[i] % p;
        if (!c) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(std::min<std::size_t>(a.size(), db));
    return a;
}

std::vector<int> digits_of(int index, int p, int k) {
    std::vector<int> c(k);
    for (int i = k - 1; i >= 0; --i) {
        c[i] = index % p;
        index /= p;
    }
    return c;
}

}  // namespace

bool is_irreducible(const std::vector<int>& poly, int p) {
    int k = static_cast<int>(poly.size()) - 1;
    if (k < 1 || poly.back() % p == 0) return false;
    if (k == 1) return true;
    for (int d = 1; d <= k / 2; ++d) {
        int count = ipow(p, d);
        for (int t = 0; t < count; ++t) {
            std::vector<int> div = digits_of(t, p, d);
            div.push_back(1);
            auto r = poly_mod(poly, div, p);
            bool zero = true;
            for (int x : r)
                if (x % p) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

FieldSpec::FieldSpec(int p, int k) : p_(p), k_(k), q_(ipow(p, k)) {
    if (k < 1 || p < 3 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw NotPrimePower(q_);
    if (k == 1) {
        modulus_ = {0, 1};
    } else {
        for (int t = 0; t < q_; ++t) {
            auto cand = digits_of(t, p, k);
            cand.push_back(1);
            if (is_irreducible(cand, p)) {
                modulus_ = cand;
                break;
            }
        }
        if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");
    }
    one_ = index(FieldElement{[&] {
        std::vector<int> c(k, 0);
        c[0] = 1;
        return c;
    }()});

    std::vector<int> factors;
    {
        int m = q_ - 1;
        for (int d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) factors.push_back(m);
    }
    auto slow_pow = [&](std::vector<int> b, long long e) {
        std::vector<int> r(k, 0);
        r[0] = 1;
        while (e > 0) {
            if (e & 1) r = poly_mulmod(r, b);
            b = poly_mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    std::vector<int> gen;
    for (int g = 1; g < q_ && gen.empty(); ++g) {
        auto gc = element(g).coeffs;
        bool ok = true;
        for (int r : factors)
            if (index(FieldElement{slow_pow(gc, (q_ - 1) / r)}) == one_) ok = false;
        if (ok) gen = gc;
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    std::vector<int> cur(k, 0);
    cur[0] = 1;
    for (int e = 0; e < q_ - 1; ++e) {
        int idx = index(FieldElement{cur});
        exp_[e] = idx;
        log_[idx] = e;
        cur = poly_mulmod(cur, gen);
    }
    square_.assign(q_, 0);
    square_[0] = 1;
    for (int e = 0; e < q_ - 1; e += 2) square_[exp_[e]] = 1;
}

std::vector<int> FieldSpec::poly_mulmod(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> r(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    r = poly_mod(r, modulus_, p_);
    r.resize(k_, 0);
    return r;
}

FieldElement FieldSpec::element(int index) const {
    if (index < 0 || index >= q_) throw std::out_of_range("field element index");
    // index = sum c_i p^(k-1-i)
    return FieldElement{digits_of(index, p_, k_)};
}

int FieldSpec::index(const FieldElement& e) const {
    if (static_cast<int>(e.coeffs.size()) != k_) throw std::invalid_argument("wrong coefficient count");
    int r = 0;
    for (int c : e.coeffs) r = r * p_ + ((c % p_) + p_) % p_;
    return r;
}

int FieldSpec::add(int a, int b) const {
    if (k_ == 1) return (a + b) % p_;
    int r = 0, scale = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

int FieldSpec::neg(int a) const {
    if (k_ == 1) return (p_ - a) % p_;
    int r = 0, scale = 1;
    while (a) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

int FieldSpec::sub(int a, int b) const { return add(a, neg(b)); }

int FieldSpec::mul(int a, int b) const {
    if (!a || !b) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

int FieldSpec::pow(int a, long long e) const {
    if (e == 0) return one_;
    if (!a) return 0;
    long long m = q_ - 1;
    return exp_[static_cast<std::size_t>(((log_[a] * (e % m)) % m + m) % m)];
}

int FieldSpec::exp(long long e) const {
    long long m = q_ - 1;
    return exp_[static_cast<std::size_t>((e % m + m) % m)];
}

int FieldSpec::log(int a) const {
    if (a <= 0 || a >= q_) throw std::domain_error("log of zero");
    return log_[a];
}

int FieldSpec::from_int(long long n) const {
    int c = static_cast<int>(((n % p_) + p_) % p_);
    std::vector<int> v(k_, 0);
    v[0] = c;
    return index(FieldElement{v});
}

const FieldSpec& field(std::int64_t q) {
    static std::mutex mu;
    static std::map<std::int64_t, std::unique_ptr<FieldSpec>> cache;
    if (q < 3 || q > (1 << 24)) throw NotPrimePower(q);
    auto pp = prime_power_u64(static_cast<std::uint64_t>(q));
    if (!pp || pp->first == 2) throw NotPrimePower(q);
    std::lock_guard lock(mu);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::make_unique<FieldSpec>(static_cast<int>(pp->first), pp->second)).first;
    return *it->second;
}

bool is_square(const FieldSpec& f, const FieldElement& x) { return f.is_square(f.index(x)); }

SignMatrix paley_matrix(std::int64_t q) {
    const FieldSpec& f = field(q);
    int n = f.q();
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = f.is_square(f.sub(i, j)) ? 1 : -1;
    return SignMatrix(std::move(m));
}

}  // namespace had
