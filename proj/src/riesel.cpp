#include "hadamard/riesel.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hadamard/errors.hpp"

namespace had {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Integer floor of x^(1/t).
u64 iroot(u64 x, int t) {
    if (t == 1) return x;
    u64 r = static_cast<u64>(std::pow(static_cast<long double>(x), 1.0L / t));
    auto pow_le = [&](u64 b) {
        u128 acc = 1;
        for (int i = 0; i < t; ++i) {
            acc *= b;
            if (acc > x) return false;
        }
        return true;
    };
    while (r > 0 && !pow_le(r)) --r;
    while (pow_le(r + 1)) ++r;
    return r;
}

}  // namespace

bool is_prime_u64(u64 x) {
    if (x < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (x % p == 0) return x == p;
    }
    u64 d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are deterministic for all 64-bit inputs.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 y = powmod(a, d, x);
        if (y == 1 || y == x - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            y = mulmod(y, y, x);
            if (y == x - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<std::pair<u64, int>> prime_power_u64(u64 x) {
    if (x < 2) return std::nullopt;
    for (int t = 63; t >= 1; --t) {
        if (t > 1 && (u64{1} << std::min(t, 63)) > x) continue;
        u64 r = iroot(x, t);
        u128 acc = 1;
        for (int i = 0; i < t; ++i) acc *= r;
        if (acc == x && is_prime_u64(r)) return std::make_pair(r, t);
    }
    return std::nullopt;
}

bool is_odd_prime_power(std::int64_t q) {
    if (q < 3) return false;
    auto pp = prime_power_u64(static_cast<u64>(q));
    return pp && pp->first != 2;
}

bool is_prime(const mpz_class& x) {
    if (x < 2) return false;
    if (x.fits_ulong_p() || mpz_sizeinbase(x.get_mpz_t(), 2) <= 64) {
        u64 v = 0;
        mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, x.get_mpz_t());
        return is_prime_u64(v);
    }
    return mpz_probab_prime_p(x.get_mpz_t(), 64) > 0;
}

std::optional<std::pair<mpz_class, unsigned long>> is_prime_power(const mpz_class& x) {
    if (x < 2) return std::nullopt;
    if (is_prime(x)) return std::make_pair(x, 1ul);
    if (!mpz_perfect_power_p(x.get_mpz_t())) return std::nullopt;
    unsigned long bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    for (unsigned long t = bits; t >= 2; --t) {
        mpz_class r;
        if (!mpz_root(r.get_mpz_t(), x.get_mpz_t(), t)) continue;
        if (r >= 2 && is_prime(r)) return std::make_pair(r, t);
    }
    return std::nullopt;
}

std::optional<int> min_paley_exponent(long long n, PaleyKind kind, int m_max) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("min_paley_exponent needs odd n");
    for (int m = 0; m <= m_max; ++m) {
        mpz_class q;
        int shift = kind == PaleyKind::Skew ? m : m - 1;
        if (shift < 0) continue;
        mpz_mul_2exp(q.get_mpz_t(), mpz_class(static_cast<long>(n)).get_mpz_t(), static_cast<unsigned long>(shift));
        q -= 1;
        if (q < 3) continue;
        unsigned long r = mpz_fdiv_ui(q.get_mpz_t(), 4);
        if (r != (kind == PaleyKind::Skew ? 3u : 1u)) continue;
        // Trial-divide small primes first; q must then be a power of that prime.
        bool rejected = false;
        for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul, 43ul, 47ul}) {
            if (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
                mpz_class t = q;
                while (mpz_divisible_ui_p(t.get_mpz_t(), p)) mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
                rejected = t != 1;
                if (!rejected) return m;
                break;
            }
        }
        if (rejected) continue;
        if (is_prime_power(q)) return m;
    }
    return std::nullopt;
}

long long multiplicative_order(long long a, long long m) {
    if (m < 2 || std::gcd(a, m) != 1) throw std::invalid_argument("order needs gcd(a, m) = 1 and m > 1");
    long long x = ((a % m) + m) % m, r = 1;
    long long cur = x;
    while (cur != 1 % m) {
        cur = static_cast<long long>(static_cast<__int128>(cur) * x % m);
        ++r;
    }
    return r;
}

CoveringCertificate verify_covering(long long k, const std::vector<long long>& primes) {
    CoveringCertificate c;
    c.k = k;
    c.primes = primes;
    c.period = 1;
    for (long long p : primes) {
        if (p < 3 || p % 2 == 0) throw std::invalid_argument("covering primes must be odd");
        c.period = std::lcm(c.period, multiplicative_order(2, p));
    }
    for (long long m = 0; m < c.period; ++m) {
        bool found = false;
        for (long long p : primes) {
            u64 v = (mulmod(powmod(2, static_cast<u64>(m), p), static_cast<u64>(((k % p) + p) % p), p) + p - 1) % p;
            if (v == 0) {
                c.assignment[m] = p;
                found = true;
                break;
            }
        }
        if (!found) throw NotCovered(m);
    }
    return c;
}

bool verify_no_prime_power(long long k, long long p, long long M) {
    if (M < 2 || std::gcd(2ll, M) != 1 || std::gcd(p, M) != 1)
        throw std::invalid_argument("verify_no_prime_power needs gcd(2, M) = gcd(p, M) = 1");
    long long o2 = multiplicative_order(2, M);
    long long op = multiplicative_order(p, M);
    std::vector<char> powers(static_cast<std::size_t>(M), 0);
    for (long long t = 0; t < op; ++t) powers[powmod(static_cast<u64>(p), static_cast<u64>(t), M)] = 1;
    for (long long m = 0; m < o2; ++m) {
        u64 v = (mulmod(powmod(2, static_cast<u64>(m), M), static_cast<u64>(((k % M) + M) % M), M) + M - 1) % M;
        if (powers[v]) return false;
    }
    return true;
}

std::optional<int> first_riesel_prime(long long k, int m_max) {
    for (int m = 0; m <= m_max; ++m) {
        mpz_class x;
        mpz_mul_2exp(x.get_mpz_t(), mpz_class(static_cast<long>(k)).get_mpz_t(), static_cast<unsigned long>(m));
        x -= 1;
        if (is_prime(x)) return m;
    }
    return std::nullopt;
}

std::string format_entry(const MinExponentEntry& e) {
    return std::to_string(e.n) + "(" + std::to_string(e.m) + ") " + e.source;
}

}  // namespace had
