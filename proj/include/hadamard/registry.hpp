#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hadamard/core.hpp"

namespace had {

enum class KnownStatus { Exists, NotExist, Unknown };
std::string to_string(KnownStatus s);

struct Existence {
    KnownStatus status = KnownStatus::Unknown;
    std::string name;  // method tag when status is Exists
};

struct Options {
    bool existence = false;
    bool check = true;
    bool construction_name = false;
    bool skew_normalize = true;  // skew API only
};

using Result = std::variant<SignMatrix, KnownStatus, std::pair<KnownStatus, std::string>>;

// Order-in, matrix-out dispatch. Matrix requests for a NotExist or Unknown
// order throw NoConstruction.
Result hadamard(std::int64_t n, const Options& opt = {});
Result skew_hadamard(std::int64_t n, const Options& opt = {});

Existence hadamard_existence(std::int64_t n);
Existence skew_hadamard_existence(std::int64_t n);
SignMatrix hadamard_matrix(std::int64_t n, bool check = true);
SignMatrix skew_hadamard_matrix(std::int64_t n, bool check = true, bool skew_normalize = true);

std::vector<std::int64_t> unknown_orders(std::int64_t limit);
std::vector<std::int64_t> skew_unknown_orders(std::int64_t limit);

struct ConstructionEntry {
    int order_factor = 0;  // odd n, order 4n
    std::string method;    // empty for a blank row
    std::vector<int> args;
};

ConstructionEntry parse_entry(int n, const std::string& method);
std::vector<ConstructionEntry> construction_table(bool skew);
// Whether the tagged method can build order 4n with the data at hand.
bool entry_executable(const ConstructionEntry& e, bool skew);

}  // namespace had
