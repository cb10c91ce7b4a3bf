#pragma once

#include <string>

#include "hadamard/core.hpp"

namespace had {

enum class OutputFormat { Text, Json, Compact };

OutputFormat parse_format(const std::string& name);
std::string format_matrix(const SignMatrix& m, OutputFormat f, bool skew_flag = false);

// Header "HAD v1 order=N skew=0|1", then one lowercase hex row per line (bit 1 = +1).
std::string to_compact(const SignMatrix& m, bool skew_flag);
SignMatrix parse_compact(const std::string& s, bool* skew_flag = nullptr);
std::string to_json(const SignMatrix& m);
SignMatrix parse_json(const std::string& s);

// Detects the format from the content.
SignMatrix parse_any(const std::string& s);

}  // namespace had
