#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hadamard/core.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/io.hpp"
#include "hadamard/registry.hpp"
#include "hadamard/riesel.hpp"
#include "hadamard/verify.hpp"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kNotExist = 1;
constexpr int kUnknown = 2;
constexpr int kVerifyFailed = 3;
constexpr int kBadInput = 4;

int status_exit(had::KnownStatus s) {
    switch (s) {
        case had::KnownStatus::Exists: return kOk;
        case had::KnownStatus::NotExist: return kNotExist;
        case had::KnownStatus::Unknown: return kUnknown;
    }
    return kBadInput;
}

std::vector<long long> parse_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

int cmd_gen(long long order, bool skew, const std::string& format, bool no_check, bool no_normalize, bool name) {
    auto fmt = had::parse_format(format);
    auto e = skew ? had::skew_hadamard_existence(order) : had::hadamard_existence(order);
    if (e.status != had::KnownStatus::Exists) {
        std::cerr << had::to_string(e.status) << "\n";
        return status_exit(e.status);
    }
    if (name) std::cerr << e.name << "\n";
    had::SignMatrix m = skew ? had::skew_hadamard_matrix(order, !no_check, !no_normalize)
                             : had::hadamard_matrix(order, !no_check);
    std::string out = had::format_matrix(m, fmt, skew);
    std::fwrite(out.data(), 1, out.size(), stdout);
    return kOk;
}

int cmd_exists(long long order, bool skew) {
    auto e = skew ? had::skew_hadamard_existence(order) : had::hadamard_existence(order);
    switch (e.status) {
        case had::KnownStatus::Exists: std::cout << "exists " << e.name << "\n"; break;
        case had::KnownStatus::NotExist: std::cout << "not-exist\n"; break;
        case had::KnownStatus::Unknown: std::cout << "unknown\n"; break;
    }
    return status_exit(e.status);
}

int cmd_verify(const std::string& file, bool skew) {
    std::string text;
    if (file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            std::cerr << "cannot read " << file << "\n";
            return kBadInput;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    had::SignMatrix m;
    try {
        m = had::parse_any(text);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kBadInput;
    }
    if (skew) {
        for (int i = 0; i < m.order(); ++i)
            for (int j = i; j < m.order(); ++j) {
                bool ok = i == j ? m(i, i) == 1 : m(i, j) == -m(j, i);
                if (!ok) {
                    std::cout << "FAIL order=" << m.order() << " not skew at entry (" << i << ", " << j << ")\n";
                    return kVerifyFailed;
                }
            }
    }
    had::PackedRows p(m);
    if (auto v = had::violation_parallel(p)) {
        std::cout << "FAIL order=" << m.order() << " rows (" << v->first << ", " << v->second
                  << ") have dot product " << p.dot(v->first, v->second) << "\n";
        return kVerifyFailed;
    }
    std::cout << "PASS order=" << m.order() << (skew ? " skew" : "") << "\n";
    return kOk;
}

int cmd_table(const std::string& kind, long long max, bool regen, bool bare) {
    had::TableKind k;
    if (kind == "hadamard") k = had::TableKind::Hadamard;
    else if (kind == "skew") k = had::TableKind::Skew;
    else {
        std::cerr << "table kind must be hadamard or skew\n";
        return kBadInput;
    }
    long long cap = k == had::TableKind::Hadamard ? 2999 : 999;
    if (max < 1 || max > cap) {
        std::cerr << "--max must be in 1.." << cap << "\n";
        return kBadInput;
    }
    auto rows = regen ? had::min_exponent_table(k, max) : had::transcribed_min_exponents(k, max);
    for (auto& e : rows) {
        if (e.m == 2) continue;
        if (bare) std::cout << e.n << "(" << e.m << ")\n";
        else std::cout << had::format_entry(e) << "\n";
    }
    return kOk;
}

int cmd_riesel(long long k, const std::string& primes_s, const std::string& moduli_s) {
    if (k < 1 || k % 2 == 0) {
        std::cerr << "k must be a positive odd integer\n";
        return kBadInput;
    }
    auto primes = parse_list(primes_s);
    auto moduli = parse_list(moduli_s);
    if (primes.size() != moduli.size()) {
        std::cerr << "--primes and --moduli must have the same length\n";
        return kBadInput;
    }
    had::CoveringCertificate cert;
    try {
        cert = had::verify_covering(k, primes);
    } catch (const had::NotCovered& e) {
        std::cout << "no covering: residue m = " << e.residue() << " is not covered\n";
        if (auto m = had::first_riesel_prime(k, 10000))
            std::cout << "2^" << *m << "*" << k << " - 1 is prime (m = " << *m << ")\n";
        return kNotExist;
    }
    // A covering prime equal to the number itself does not prove compositeness.
    for (long long m = 0; m < cert.period; ++m) {
        mpz_class x;
        mpz_mul_2exp(x.get_mpz_t(), mpz_class(static_cast<long>(k)).get_mpz_t(), static_cast<unsigned long>(m));
        x -= 1;
        if (x == mpz_class(static_cast<long>(cert.assignment[m]))) {
            std::cout << "no covering: 2^" << m << "*" << k << " - 1 = " << x.get_str() << " is prime\n";
            return kNotExist;
        }
    }
    std::cout << "k = " << k << "\ncovering primes:";
    for (long long p : primes) std::cout << " " << p;
    std::cout << "\nperiod = " << cert.period << "\n";
    for (auto& [m, p] : cert.assignment) std::cout << "  m = " << m << " (mod " << cert.period << "): " << p << " | 2^m*k - 1\n";
    bool all = true;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        bool ok = had::verify_no_prime_power(k, primes[i], moduli[i]);
        all = all && ok;
        std::cout << "no power of " << primes[i] << " (mod " << moduli[i] << "): " << (ok ? "confirmed" : "FAILED") << "\n";
    }
    std::cout << (all ? "certificate complete\n" : "certificate incomplete\n");
    return all ? kOk : kNotExist;
}

int cmd_sweep(long long max, bool skew) {
    std::vector<long long> orders{1, 2};
    for (long long o = 4; o <= max; o += 4) orders.push_back(o);
    std::atomic<int> built{0}, unknown{0}, failed{0};
    auto t0 = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < orders.size(); ++i) {
        long long o = orders[i];
        auto e = skew ? had::skew_hadamard_existence(o) : had::hadamard_existence(o);
        if (e.status != had::KnownStatus::Exists) {
            ++unknown;
            continue;
        }
        try {
            auto m = skew ? had::skew_hadamard_matrix(o) : had::hadamard_matrix(o);
            bool ok = skew ? had::is_skew_hadamard(m) : had::is_hadamard(m);
            ok ? ++built : ++failed;
        } catch (const std::exception& ex) {
#pragma omp critical
            std::cerr << "order " << o << ": " << ex.what() << "\n";
            ++failed;
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (skew ? "skew " : "") << "sweep to " << max << ": " << built << " verified, " << unknown
              << " unknown, " << failed << " failed (" << secs << " s)\n";
    return failed ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct and verify Hadamard and skew Hadamard matrices"};
    app.require_subcommand(1);

    long long order = 0;
    bool skew = false, no_check = false, no_normalize = false, name = false;
    std::string format = "text";
    auto* gen = app.add_subcommand("gen", "Print a matrix of the given order");
    gen->add_option("order", order)->required();
    gen->add_flag("--skew", skew, "Skew Hadamard matrix");
    gen->add_option("--format", format, "text, json or compact")->check(CLI::IsMember({"text", "json", "compact"}));
    gen->add_flag("--no-check", no_check, "Skip the final verification");
    gen->add_flag("--no-skew-normalize", no_normalize, "Keep the construction's own first row");
    gen->add_flag("--name", name, "Print the construction tag to stderr");

    auto* exists = app.add_subcommand("exists", "Report existence status and construction");
    exists->add_option("order", order)->required();
    exists->add_flag("--skew", skew);

    std::string file;
    auto* verify = app.add_subcommand("verify", "Verify a matrix file (any format, '-' for stdin)");
    verify->add_option("file", file)->required();
    verify->add_flag("--skew", skew);

    std::string kind;
    long long max = 0;
    bool regen = false, bare = false;
    auto* table = app.add_subcommand("table", "Minimum-exponent tables");
    table->add_option("kind", kind, "hadamard or skew")->required();
    table->add_option("--max", max, "Largest odd n");
    table->add_flag("--regen", regen, "Recompute instead of printing the transcription");
    table->add_flag("--bare", bare, "Omit the source column");

    long long k = 0;
    std::string primes = "3,5,7,13,17,241", moduli = "85,31,57,105,15,15";
    auto* riesel = app.add_subcommand("riesel", "Covering-set certificate for k");
    riesel->add_option("k", k)->required();
    riesel->add_option("--primes", primes, "Comma-separated covering primes");
    riesel->add_option("--moduli", moduli, "Modulus M per prime for the no-prime-power check");

    long long sweep_max = 1200;
    auto* sweep = app.add_subcommand("sweep", "Build and verify every known order up to --max");
    sweep->add_option("--max", sweep_max);
    sweep->add_flag("--skew", skew);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (*gen) return cmd_gen(order, skew, format, no_check, no_normalize, name);
        if (*exists) return cmd_exists(order, skew);
        if (*verify) return cmd_verify(file, skew);
        if (*table) {
            if (max == 0) max = kind == "skew" ? 999 : 2999;
            return cmd_table(kind, max, regen, bare);
        }
        if (*riesel) return cmd_riesel(k, primes, moduli);
        if (*sweep) return cmd_sweep(sweep_max, skew);
    } catch (const had::ValidationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const had::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kBadInput;
}
