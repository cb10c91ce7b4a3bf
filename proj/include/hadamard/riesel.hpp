#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace had {

// 64-bit fast paths (deterministic Miller-Rabin).
bool is_prime_u64(std::uint64_t x);
std::optional<std::pair<std::uint64_t, int>> prime_power_u64(std::uint64_t x);
bool is_odd_prime_power(std::int64_t q);

bool is_prime(const mpz_class& x);
std::optional<std::pair<mpz_class, unsigned long>> is_prime_power(const mpz_class& x);

enum class PaleyKind { Skew, Symmetric };

std::optional<int> min_paley_exponent(long long n, PaleyKind kind, int m_max);

struct CoveringCertificate {
    long long k = 0;
    std::vector<long long> primes;
    long long period = 0;
    std::map<long long, long long> assignment;  // m mod period -> prime
};

long long multiplicative_order(long long a, long long m);
CoveringCertificate verify_covering(long long k, const std::vector<long long>& primes);
bool verify_no_prime_power(long long k, long long p, long long M);
// Smallest m >= 0 with 2^m k - 1 prime, searching up to m_max.
std::optional<int> first_riesel_prime(long long k, int m_max);

struct MinExponentEntry {
    long long n = 0;
    long long m = 0;
    std::string source;
};

enum class TableKind { Hadamard, Skew };

std::vector<MinExponentEntry> min_exponent_table(TableKind kind, long long n_max);
// Transcribed table data: only the entries the tables print (m != 2).
std::vector<MinExponentEntry> transcribed_min_exponents(TableKind kind, long long n_max);
std::string format_entry(const MinExponentEntry& e);

}  // namespace had
