#include "hadamard/registry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <regex>
#include <stdexcept>

#include "hadamard/constructions.hpp"
#include "hadamard/data.hpp"
#include "hadamard/diffsets.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/riesel.hpp"

namespace had {

std::string to_string(KnownStatus s) {
    switch (s) {
        case KnownStatus::Exists: return "Exists";
        case KnownStatus::NotExist: return "NotExist";
        case KnownStatus::Unknown: return "Unknown";
    }
    return "?";
}

ConstructionEntry parse_entry(int n, const std::string& method) {
    ConstructionEntry e{n, method, {}};
    static const std::regex num(R"(\d+)");
    for (auto it = std::sregex_iterator(method.begin(), method.end(), num); it != std::sregex_iterator(); ++it)
        e.args.push_back(std::stoi(it->str()));
    return e;
}

std::vector<ConstructionEntry> construction_table(bool skew) {
    const auto& rows = skew ? data::datasets().table_skew : data::datasets().table_hadamard;
    std::vector<ConstructionEntry> out;
    for (auto& r : rows) out.push_back(parse_entry(r.n, r.method));
    return out;
}

namespace {

using Builder = std::function<SignMatrix(bool check)>;

struct Plan {
    std::string name;
    Builder build;
};

std::optional<Plan> plan_hadamard(std::int64_t n);
std::optional<Plan> plan_skew(std::int64_t n);

// Orders beyond int range can be reasoned about but never built.
constexpr std::int64_t kBuildLimit = 1 << 15;

std::mutex memo_mu;
std::map<std::pair<bool, std::int64_t>, Existence> memo;

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

int to_int(std::int64_t n) {
    if (n > kBuildLimit) throw Unsupported("order " + std::to_string(n) + " is too large to build");
    return static_cast<int>(n);
}

Existence existence_of(std::int64_t n, bool skew) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (n > 2 && n % 4 != 0) return {KnownStatus::NotExist, ""};
    {
        std::lock_guard lock(memo_mu);
        auto it = memo.find({skew, n});
        if (it != memo.end()) return it->second;
    }
    auto p = skew ? plan_skew(n) : plan_hadamard(n);
    Existence e = p ? Existence{KnownStatus::Exists, p->name} : Existence{KnownStatus::Unknown, ""};
    std::lock_guard lock(memo_mu);
    memo[{skew, n}] = e;
    return e;
}

bool exists_h(std::int64_t n) { return existence_of(n, false).status == KnownStatus::Exists; }
bool exists_s(std::int64_t n) { return existence_of(n, true).status == KnownStatus::Exists; }

SignMatrix build(std::int64_t n, bool skew, bool check) {
    auto p = skew ? plan_skew(n) : plan_hadamard(n);
    if (!p) throw NoConstruction(n, n > 2 && n % 4 ? "NotExist" : "Unknown");
    return p->build(check);
}

std::string doubled_name(const std::string& base, int k) {
    if (k == 1) return "Doubling(" + base + ")";
    return "Doubling^" + std::to_string(k) + "(" + base + ")";
}

// Strips the doubling wrapper so repeated doublings are counted, not nested.
std::pair<std::string, int> split_doubling(const std::string& name) {
    static const std::regex re(R"(Doubling(?:\^(\d+))?\((.*)\))");
    std::smatch m;
    if (std::regex_match(name, m, re)) return {m[2], m[1].matched ? std::stoi(m[1]) : 1};
    return {name, 0};
}

std::optional<Plan> doubling_plan(std::int64_t n, bool skew) {
    auto sub = existence_of(n / 2, skew);
    if (sub.status != KnownStatus::Exists) return std::nullopt;
    auto [base, k] = split_doubling(sub.name);
    return Plan{doubled_name(base, k + 1), [n, skew](bool check) {
                    SignMatrix h = build(n / 2, skew, check);
                    return skew ? skew_double(h, check) : sylvester_double(h, check);
                }};
}

// Entry of a construction table, if it applies to order 4m.
std::optional<Plan> entry_plan(const ConstructionEntry& e, bool skew) {
    if (!entry_executable(e, skew)) return std::nullopt;
    const int m = e.order_factor;
    const std::string& t = e.method;
    auto plan = [&](Builder b) { return Plan{t, std::move(b)}; };
    if (t == "PaleyI") return plan([m](bool c) { return paley_I(4 * m, c); });
    if (t == "PaleyII") return plan([m](bool c) { return paley_II(4 * m, c); });
    if (t == "Will") return plan([m](bool c) { return williamson(williamson_quad(m), c); });
    if (t == "Good") return plan([m](bool c) { return good_matrix_array(good_quad(m), c); });
    if (t == "GS") return plan([m](bool c) { return gs_skew(m, c); });
    if (t == "SDS") {
        if (skew) return plan([m](bool c) { return skew_hadamard_from_sds(m, c); });
        return plan([m](bool c) { return hadamard_from_sds(m, c); });
    }
    if (t == "Miy") return plan([m](bool c) { return miyamoto(m, c); });
    if (t == "CDS") return plan([m](bool c) { return blatt_szekeres(m - 1, c); });
    if (t == "Spence") return plan([m](bool c) { return spence((m - 1) / 2, c); });
    if (t.rfind("CW(", 0) == 0) {
        int tt = e.args.at(0);
        return plan([m, tt](bool c) { return cooper_wallis(tt, m / tt, c); });
    }
    if (t.rfind("Spence(", 0) == 0) {
        int q = e.args.at(0);
        return plan([q](bool c) { return spence_skew(q, c); });
    }
    if (t.rfind("AOD(", 0) == 0 || t == "Stored") return plan([m, skew](bool) { return stored_matrix(4 * m, skew); });
    return std::nullopt;
}

std::optional<ConstructionEntry> table_entry(int m, bool skew) {
    const auto& rows = skew ? data::datasets().table_skew : data::datasets().table_hadamard;
    for (auto& r : rows)
        if (r.n == m) return parse_entry(r.n, r.method);
    return std::nullopt;
}

int table_limit(bool skew) {
    const auto& rows = skew ? data::datasets().table_skew : data::datasets().table_hadamard;
    return rows.empty() ? 0 : rows.back().n;
}

// Tries every method in priority order for order 4m, m odd, beyond the table.
std::optional<Plan> fallback_plan(int m, bool skew) {
    std::vector<std::string> chain;
    if (skew) chain = {"PaleyI", "Good", "GS", "SDS", "CDS", "Spence(q)", "Stored"};
    else chain = {"PaleyI", "PaleyII", "Good", "Will", "SDS", "CW", "Miy", "CDS", "Spence", "Spence(q)", "Stored"};
    for (const std::string& method : chain) {
        std::vector<ConstructionEntry> candidates;
        if (method == "CW") {
            for (int t = 1; t <= m; ++t)
                if (m % t == 0) candidates.push_back(parse_entry(m, "CW(" + std::to_string(t) + ")"));
        } else if (method == "Spence(q)") {
            for (int q = 2; 1 + q + q * q <= m; ++q)
                if (1 + q + q * q == m) candidates.push_back(parse_entry(m, "Spence(" + std::to_string(q) + ")"));
        } else {
            candidates.push_back(parse_entry(m, method));
        }
        for (auto& c : candidates)
            if (auto p = entry_plan(c, skew)) return p;
    }
    return std::nullopt;
}

std::optional<Plan> plan_hadamard(std::int64_t n) {
    if (n == 1) return Plan{"Trivial", [](bool) { return SignMatrix::from_rows({{1}}); }};
    if (n == 2) return Plan{"Sylvester", [](bool) { return SignMatrix::from_rows({{1, 1}, {1, -1}}); }};
    if (n % 4 != 0) return std::nullopt;
    if (is_power_of_two(n))
        return Plan{"Sylvester", [n](bool check) {
                        SignMatrix h = SignMatrix::from_rows({{1}});
                        for (std::int64_t k = 1; k < n; k *= 2) h = sylvester_double(h, check);
                        return h;
                    }};
    if (paley_II_applies(n)) return Plan{"PaleyII", [n](bool c) { return paley_II(to_int(n), c); }};
    std::int64_t m = n;
    while (m % 2 == 0) m /= 2;
    if (n == 4 * m) {
        if (m <= table_limit(false)) {
            auto e = table_entry(static_cast<int>(m), false);
            if (!e || e->method.empty()) return std::nullopt;
            return entry_plan(*e, false);
        }
        if (m <= kBuildLimit)
            if (auto p = fallback_plan(static_cast<int>(m), false)) return p;
        if (paley_I_applies(n)) return Plan{"PaleyI", [n](bool c) { return paley_I(to_int(n), c); }};
        return std::nullopt;
    }
    if (paley_I_applies(n)) return Plan{"PaleyI", [n](bool c) { return paley_I(to_int(n), c); }};
    if (auto p = doubling_plan(n, false)) return p;
    if (auto s = existence_of(n, true); s.status == KnownStatus::Exists)
        return Plan{s.name, [n](bool c) { return build(n, true, c); }};
    return std::nullopt;
}

std::optional<Plan> plan_skew(std::int64_t n) {
    if (n == 1) return Plan{"Trivial", [](bool) { return SignMatrix::from_rows({{1}}); }};
    if (n == 2) return Plan{"Trivial", [](bool) { return SignMatrix::from_rows({{1, 1}, {-1, 1}}); }};
    if (n % 4 != 0) return std::nullopt;
    std::int64_t m = n;
    while (m % 2 == 0) m /= 2;
    if (n == 4 * m) {
        if (m <= table_limit(true)) {
            auto e = table_entry(static_cast<int>(m), true);
            if (!e || e->method.empty()) return std::nullopt;
            return entry_plan(*e, true);
        }
        if (m <= kBuildLimit)
            if (auto p = fallback_plan(static_cast<int>(m), true)) return p;
        if (paley_I_applies(n)) return Plan{"PaleyI", [n](bool c) { return paley_I(to_int(n), c); }};
        return std::nullopt;
    }
    if (paley_I_applies(n)) return Plan{"PaleyI", [n](bool c) { return paley_I(to_int(n), c); }};
    if (auto p = doubling_plan(n, true)) return p;
    // Skew multiplication by pk + 1 = d, d | n, d = 2^b * (odd divisor), b >= 2.
    std::vector<std::int64_t> odd_divisors;
    for (std::int64_t x = 1; x * x <= m; ++x)
        if (m % x == 0) {
            odd_divisors.push_back(x);
            if (x * x != m) odd_divisors.push_back(m / x);
        }
    std::vector<std::int64_t> ds;
    for (std::int64_t two = 4; n % two == 0; two *= 2)
        for (std::int64_t od : odd_divisors)
            if (two * od < n) ds.push_back(two * od);
    std::sort(ds.begin(), ds.end());
    for (std::int64_t d : ds) {
        if (!skew_multiply_applies(d - 1) || !exists_s(n / d)) continue;
        return Plan{"SkewMultiply(" + std::to_string(d - 1) + ")", [n, d](bool c) {
                        return williamson_skew_multiply(build(n / d, true, c), static_cast<int>(d - 1), c);
                    }};
    }
    return std::nullopt;
}

SignMatrix apply_skew_normalize(const SignMatrix& m, bool check) {
    if (check) return skew_normalize(m);
    Matrix r = m.matrix();
    int n = r.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) *= m(0, i) * m(0, j);
    return SignMatrix(std::move(r));
}

Result dispatch(std::int64_t n, const Options& opt, bool skew) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    Existence e = existence_of(n, skew);
    if (opt.existence) {
        if (opt.construction_name) return std::make_pair(e.status, e.name);
        return e.status;
    }
    if (e.status != KnownStatus::Exists) throw NoConstruction(n, to_string(e.status));
    SignMatrix h = build(n, skew, opt.check);
    if (opt.check && !(skew ? is_skew_hadamard(h) : is_hadamard(h)))
        throw ValidationFailure("order " + std::to_string(n) + ": dispatcher output failed verification");
    if (skew && opt.skew_normalize) h = apply_skew_normalize(h, opt.check);
    return h;
}

}  // namespace

bool entry_executable(const ConstructionEntry& e, bool skew) {
    const int m = e.order_factor;
    const std::string& t = e.method;
    if (t.empty()) return false;
    if (t == "PaleyI") return paley_I_applies(4LL * m);
    if (t == "PaleyII") return !skew && paley_II_applies(4LL * m);
    if (t == "Will") return !skew && williamson_supported(m);
    if (t == "Good") return good_supported(m);
    if (t == "GS") return gs_skew_supported(m);
    if (t == "SDS") return skew ? skew_sds_supported(m) : sds_supported(m);
    if (t == "Miy") return !skew && miyamoto_applies(m) && exists_h(m - 1);
    if (t == "CDS") return cds_supported(m - 1);
    if (t == "Spence") return !skew && m % 2 == 1 && m >= 3 && spence_sds_supported((m - 1) / 2);
    if (t.rfind("CW(", 0) == 0) {
        if (skew || e.args.empty()) return false;
        int tt = e.args[0];
        return tt >= 1 && m % tt == 0 && cooper_wallis_supported(tt, m / tt);
    }
    if (t.rfind("Spence(", 0) == 0) {
        if (e.args.empty()) return false;
        long long q = e.args[0];
        return 1 + q + q * q == m && spence_skew_supported(static_cast<int>(q));
    }
    if (t.rfind("AOD(", 0) == 0 || t == "Stored") return stored_supported(4 * m, skew);
    return false;
}

Result hadamard(std::int64_t n, const Options& opt) { return dispatch(n, opt, false); }

Result skew_hadamard(std::int64_t n, const Options& opt) { return dispatch(n, opt, true); }

Existence hadamard_existence(std::int64_t n) { return existence_of(n, false); }
Existence skew_hadamard_existence(std::int64_t n) { return existence_of(n, true); }

SignMatrix hadamard_matrix(std::int64_t n, bool check) {
    Options o;
    o.check = check;
    return std::get<SignMatrix>(hadamard(n, o));
}

SignMatrix skew_hadamard_matrix(std::int64_t n, bool check, bool skew_normalize) {
    Options o;
    o.check = check;
    o.skew_normalize = skew_normalize;
    return std::get<SignMatrix>(skew_hadamard(n, o));
}

namespace {

std::vector<std::int64_t> unknown_scan(std::int64_t limit, bool skew) {
    if (limit > 1200) throw std::invalid_argument("unknown-order scans cover orders up to 1200");
    std::vector<std::int64_t> out;
    for (std::int64_t o = 4; o <= limit; o += 4)
        if (existence_of(o, skew).status == KnownStatus::Unknown) out.push_back(o);
    return out;
}

}  // namespace

std::vector<std::int64_t> unknown_orders(std::int64_t limit) { return unknown_scan(limit, false); }
std::vector<std::int64_t> skew_unknown_orders(std::int64_t limit) { return unknown_scan(limit, true); }

}  // namespace had
