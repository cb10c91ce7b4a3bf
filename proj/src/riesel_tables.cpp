#include <algorithm>
#include <map>

#include "hadamard/data.hpp"
#include "hadamard/registry.hpp"
#include "hadamard/riesel.hpp"

namespace had {

namespace {

// Registry orders are reasoned about up to this exponent; Paley search goes further.
constexpr int kRegistryBits = 60;
constexpr int kPaleyBits = 1024;

int bit_length(long long n) {
    int b = 0;
    while (n) {
        ++b;
        n >>= 1;
    }
    return b;
}

std::string source_tag(const std::string& name) {
    if (name.find("SkewMultiply") != std::string::npos) return "williamson";
    if (name == "PaleyI" || name == "PaleyII") return "paley";
    return name;
}

}  // namespace

std::vector<MinExponentEntry> transcribed_min_exponents(TableKind kind, long long n_max) {
    const auto& rows = kind == TableKind::Skew ? data::datasets().minexp_skew : data::datasets().minexp_hadamard;
    std::vector<MinExponentEntry> out;
    for (auto& r : rows)
        if (r.n <= n_max) out.push_back({r.n, r.m, r.tag});
    return out;
}

std::vector<MinExponentEntry> min_exponent_table(TableKind kind, long long n_max) {
    const bool skew = kind == TableKind::Skew;
    std::map<long long, long long> attested;
    for (auto& e : transcribed_min_exponents(kind, n_max)) attested[e.n] = e.m;

    std::vector<long long> ns;
    for (long long n = 1; n <= n_max; n += 2) ns.push_back(n);
    std::vector<MinExponentEntry> out(ns.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < ns.size(); ++i) {
        long long n = ns[i];
        long long best = -1;
        std::string tag;
        for (int m = 2; m + bit_length(n) <= kRegistryBits; ++m) {
            auto e = skew ? skew_hadamard_existence(n << m) : hadamard_existence(n << m);
            if (e.status == KnownStatus::Exists) {
                best = m;
                tag = source_tag(e.name);
                break;
            }
        }
        if (best < 0) {
            auto kind_p = skew ? PaleyKind::Skew : PaleyKind::Symmetric;
            if (auto m = min_paley_exponent(n, kind_p, kPaleyBits - bit_length(n))) {
                best = *m;
                tag = "paley";
            }
        }
        auto it = attested.find(n);
        long long printed = it == attested.end() ? 2 : it->second;
        if (best < 0 || printed < best) {
            best = printed;
            tag = "attested";
        }
        out[i] = {n, best, tag};
    }
    return out;
}

}  // namespace had
