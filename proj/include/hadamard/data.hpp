#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hadamard/core.hpp"
#include "hadamard/diffsets.hpp"

namespace had::data {

// Four first rows of order n (Williamson, good, GS-skew quadruples).
struct QuadRecord {
    int n = 0;
    std::string source;
    std::vector<TernarySequence> rows;
};

struct TseqRecord {
    std::string kind;  // turyn | turyn-type | t-sequences | t-matrices
    int length = 0;
    std::string source;
    std::vector<TernarySequence> seqs;
};

struct SdsRecord {
    Group group;
    int lambda = 0;
    bool skew = false;
    std::string kind;  // skew | sds | spence
    std::string source;
    std::vector<std::vector<int>> sets;
};

struct PlaneRecord {
    int q = 0;
    long long v = 0;
    int k = 0;
    int lambda = 0;
    std::string source;
    std::vector<long long> points;
};

struct StoredRecord {
    std::string file;
    bool skew = false;
    SignMatrix matrix;
};

struct TableRow {
    int n = 0;
    std::string method;  // empty when no construction is known
};

struct ExponentRow {
    long long n = 0;
    long long m = 0;
    std::string tag;
};

struct Datasets {
    std::vector<QuadRecord> williamson, good, gs_skew;
    std::vector<TseqRecord> tseq;
    std::vector<SdsRecord> sds;
    std::vector<PlaneRecord> plane;
    std::vector<StoredRecord> stored;
    std::vector<TableRow> table_hadamard, table_skew;
    std::vector<ExponentRow> minexp_hadamard, minexp_skew;
    std::map<std::string, std::size_t> counts;  // dataset -> records
};

using FileSource = std::function<std::optional<std::string>(const std::string& file)>;

// Parses and validates every dataset listed in manifest.txt. All or nothing.
Datasets load(const FileSource& source);
Datasets load_dir(const std::filesystem::path& dir);
// HADAMARD_DATA_DIR if set, else the copy embedded at build time.
Datasets load_all();
// Process-wide cached load_all().
const Datasets& datasets();

std::optional<std::string> embedded_file(const std::string& name);

bool is_known_method(const std::string& method);

}  // namespace had::data
