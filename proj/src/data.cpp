#include "hadamard/data.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>

#include "hadamard/constructions.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/io.hpp"
#include "hadamard/sequences.hpp"

namespace had::data {

const std::map<std::string, std::string_view>& embedded_files();

namespace {

struct Block {
    int line = 0;
    std::vector<std::pair<std::string, std::string>> fields;

    const std::string& get(const std::string& key, const std::string& where) const {
        for (auto& [k, v] : fields)
            if (k == key) return v;
        throw ParseError(where + ": missing field '" + key + "'");
    }
};

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> content_lines(const std::string& text, std::vector<int>* numbers = nullptr) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line[0] == '#') continue;
        out.push_back(trim(line));
        if (numbers) numbers->push_back(no);
    }
    return out;
}

// "key: value" records separated by blank lines.
std::vector<Block> parse_blocks(const std::string& text, const std::string& file) {
    std::vector<int> nums;
    auto lines = content_lines(text, &nums);
    std::vector<Block> blocks;
    Block cur;
    for (std::size_t i = 0; i <= lines.size(); ++i) {
        if (i == lines.size() || lines[i].empty()) {
            if (!cur.fields.empty()) blocks.push_back(std::move(cur));
            cur = Block{};
            continue;
        }
        auto colon = lines[i].find(':');
        if (colon == std::string::npos)
            throw ParseError(file + ":" + std::to_string(nums[i]) + ": expected 'key: value'");
        if (cur.fields.empty()) cur.line = nums[i];
        cur.fields.emplace_back(trim(lines[i].substr(0, colon)), trim(lines[i].substr(colon + 1)));
    }
    return blocks;
}

TernarySequence parse_seq(const std::string& s, const std::string& where) {
    TernarySequence r;
    for (char c : s) {
        if (c == '+') r.push_back(1);
        else if (c == '-') r.push_back(-1);
        else if (c == '0') r.push_back(0);
        else throw ParseError(where + ": bad sequence character '" + std::string(1, c) + "'");
    }
    return r;
}

int to_int(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ParseError(where + ": expected an integer, got '" + s + "'");
    }
}

std::string where_of(const std::string& file, int idx, int line) {
    return file + " record " + std::to_string(idx + 1) + " (line " + std::to_string(line) + ")";
}

std::vector<QuadRecord> parse_quads(const std::string& text, const std::string& file) {
    std::vector<QuadRecord> out;
    auto blocks = parse_blocks(text, file);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto& b = blocks[i];
        std::string w = where_of(file, static_cast<int>(i), b.line);
        QuadRecord r;
        r.n = to_int(b.get("length", w), w);
        r.source = b.get("source", w);
        for (const char* k : {"A", "B", "C", "D"}) {
            r.rows.push_back(parse_seq(b.get(k, w), w));
            if (static_cast<int>(r.rows.back().size()) != r.n) throw ValidationFailure(w + ": row " + k + " has wrong length");
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool all_sign(const std::vector<TernarySequence>& rows) {
    for (auto& r : rows)
        for (int x : r)
            if (x != 1 && x != -1) return false;
    return true;
}

void validate_williamson(const QuadRecord& r, const std::string& w) {
    if (!all_sign(r.rows)) throw ValidationFailure(w + ": Williamson rows must be +-1");
    WilliamsonQuad q{circulant(r.rows[0]), circulant(r.rows[1]), circulant(r.rows[2]), circulant(r.rows[3])};
    if (!is_williamson_quad(q)) throw ValidationFailure(w + ": not a Williamson quadruple");
}

void validate_good(const QuadRecord& r, const std::string& w) {
    if (!all_sign(r.rows)) throw ValidationFailure(w + ": good matrix rows must be +-1");
    GoodQuad q{circulant(r.rows[0]), back_circulant(r.rows[1]), back_circulant(r.rows[2]), back_circulant(r.rows[3])};
    if (!is_good_quad(q)) throw ValidationFailure(w + ": not good matrices");
}

void validate_gs_skew(const QuadRecord& r, const std::string& w) {
    if (!all_sign(r.rows)) throw ValidationFailure(w + ": rows must be +-1");
    std::vector<Matrix> ms;
    for (auto& row : r.rows) ms.push_back(circulant(row));
    if (gram_sum(ms) != Matrix::identity(r.n) * (4 * r.n)) throw ValidationFailure(w + ": sum MM^T != 4nI");
    if (ms[0] + ms[0].transpose() != Matrix::identity(r.n) * 2) throw ValidationFailure(w + ": A is not of skew type");
}

std::vector<TseqRecord> parse_tseq(const std::string& text, const std::string& file) {
    std::vector<TseqRecord> out;
    auto blocks = parse_blocks(text, file);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto& b = blocks[i];
        std::string w = where_of(file, static_cast<int>(i), b.line);
        TseqRecord r;
        r.kind = b.get("kind", w);
        r.length = to_int(b.get("length", w), w);
        r.source = b.get("source", w);
        std::vector<std::string> keys;
        std::vector<std::size_t> lens;
        int n = r.length;
        if (r.kind == "turyn") {
            keys = {"X", "U", "Y", "V"};
            lens = {std::size_t(n), std::size_t(n), std::size_t(n - 1), std::size_t(n - 1)};
        } else if (r.kind == "turyn-type") {
            keys = {"X", "Y", "Z", "W"};
            lens = {std::size_t(n), std::size_t(n), std::size_t(n), std::size_t(n - 1)};
        } else if (r.kind == "t-sequences" || r.kind == "t-matrices") {
            keys = {"A", "B", "C", "D"};
            lens.assign(4, std::size_t(n));
        } else {
            throw ParseError(w + ": unknown kind '" + r.kind + "'");
        }
        for (std::size_t k = 0; k < 4; ++k) {
            r.seqs.push_back(parse_seq(b.get(keys[k], w), w));
            if (r.seqs.back().size() != lens[k]) throw ValidationFailure(w + ": sequence " + keys[k] + " has wrong length");
        }
        bool ok = false;
        if (r.kind == "turyn") ok = all_sign(r.seqs) && has_vanishing_npaf(r.seqs) && is_t_sequences(t_sequences_from_turyn(r.seqs));
        else if (r.kind == "turyn-type") ok = all_sign(r.seqs) && has_vanishing_npaf(base_from_turyn_type(r.seqs));
        else if (r.kind == "t-sequences") ok = is_t_sequences({r.seqs[0], r.seqs[1], r.seqs[2], r.seqs[3]});
        else ok = is_t_matrices({circulant(r.seqs[0]), circulant(r.seqs[1]), circulant(r.seqs[2]), circulant(r.seqs[3])});
        if (!ok) throw ValidationFailure(w + ": " + r.kind + " record fails its autocorrelation check");
        out.push_back(std::move(r));
    }
    return out;
}

std::map<std::string, std::string> parse_header(const std::string& line, const std::string& w) {
    std::map<std::string, std::string> kv;
    std::size_t pos = 0;
    while (pos < line.size()) {
        auto eq = line.find('=', pos);
        if (eq == std::string::npos) throw ParseError(w + ": bad header '" + line + "'");
        std::string key = trim(line.substr(pos, eq - pos));
        if (key == "source") {
            kv[key] = trim(line.substr(eq + 1));
            break;
        }
        auto sp = line.find(' ', eq);
        if (sp == std::string::npos) sp = line.size();
        kv[key] = line.substr(eq + 1, sp - eq - 1);
        pos = sp + 1;
    }
    return kv;
}

// Header line "k=v ..." followed by data lines, records separated by blank lines.
std::vector<std::pair<int, std::vector<std::string>>> header_records(const std::string& text) {
    std::vector<int> nums;
    auto lines = content_lines(text, &nums);
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::vector<std::string> cur;
    int start = 0;
    for (std::size_t i = 0; i <= lines.size(); ++i) {
        if (i == lines.size() || lines[i].empty()) {
            if (!cur.empty()) out.emplace_back(start, std::move(cur));
            cur.clear();
            continue;
        }
        if (cur.empty()) start = nums[i];
        cur.push_back(lines[i]);
    }
    return out;
}

std::vector<long long> parse_numbers(const std::string& s, const std::string& w) {
    std::vector<long long> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(to_int(tok, w));
    return out;
}

std::vector<SdsRecord> parse_sds(const std::string& text, const std::string& file) {
    std::vector<SdsRecord> out;
    auto recs = header_records(text);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        auto& [line, lines] = recs[i];
        std::string w = where_of(file, static_cast<int>(i), line);
        auto kv = parse_header(lines[0], w);
        SdsRecord r;
        int v = to_int(kv["v"], w);
        r.lambda = to_int(kv["lambda"], w);
        r.skew = kv["skew"] == "1";
        r.kind = kv["kind"];
        r.source = kv["source"];
        if (kv.count("group")) {
            auto caret = kv["group"].find('^');
            if (caret == std::string::npos) throw ParseError(w + ": bad group");
            int p = to_int(kv["group"].substr(0, caret), w), k = to_int(kv["group"].substr(caret + 1), w);
            r.group = Group::elementary(p, k);
        } else {
            r.group = Group::cyclic(v);
        }
        if (r.group.order() != v) throw ValidationFailure(w + ": group order differs from v");
        for (std::size_t j = 1; j < lines.size(); ++j) {
            std::vector<int> set;
            for (long long x : parse_numbers(lines[j], w)) set.push_back(static_cast<int>(x));
            r.sets.push_back(std::move(set));
        }
        SdsFamily f{r.group, r.sets, r.lambda};
        if (!is_sds(f)) throw ValidationFailure(w + ": difference counts do not equal lambda=" + std::to_string(r.lambda));
        int total = 0;
        for (auto& s : r.sets) total += static_cast<int>(s.size());
        if (r.kind == "skew" || r.kind == "sds") {
            if (r.sets.size() != 4 || r.lambda != total - v) throw ValidationFailure(w + ": expected 4 sets with lambda = sum k - v");
        } else if (r.kind == "spence") {
            int h = v / 2;
            auto ks = f.ks();
            if (v % 2 || r.sets.size() != 4 || r.lambda != v || ks != std::vector<int>{h, h, h, h + 1})
                throw ValidationFailure(w + ": expected a 4-{2v; v,v,v,v+1; 2v} family");
        } else {
            throw ParseError(w + ": unknown kind '" + r.kind + "'");
        }
        if (r.skew && !is_skew_set(r.sets[0], r.group)) throw ValidationFailure(w + ": first set is not skew");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PlaneRecord> parse_plane(const std::string& text, const std::string& file) {
    std::vector<PlaneRecord> out;
    auto recs = header_records(text);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        auto& [line, lines] = recs[i];
        std::string w = where_of(file, static_cast<int>(i), line);
        auto kv = parse_header(lines[0], w);
        PlaneRecord r;
        r.q = to_int(kv["q"], w);
        r.v = to_int(kv["v"], w);
        r.k = to_int(kv["k"], w);
        r.lambda = to_int(kv["lambda"], w);
        r.source = kv["source"];
        for (std::size_t j = 1; j < lines.size(); ++j)
            for (long long x : parse_numbers(lines[j], w)) r.points.push_back(x);
        if (static_cast<int>(r.points.size()) != r.k) throw ValidationFailure(w + ": point count differs from k");
        std::set<long long> pts(r.points.begin(), r.points.end());
        std::vector<int> count(static_cast<std::size_t>(r.v), 0);
        for (long long a : r.points)
            for (long long b : r.points)
                if (a != b) ++count[static_cast<std::size_t>(((a - b) % r.v + r.v) % r.v)];
        for (long long g = 1; g < r.v; ++g)
            if (count[static_cast<std::size_t>(g)] != r.lambda) throw ValidationFailure(w + ": not a planar difference set");
        for (long long a : r.points)
            if (!pts.count(a * r.q % r.v)) throw ValidationFailure(w + ": set is not fixed by multiplication by q");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TableRow> parse_table(const std::string& text, const std::string& file) {
    std::vector<TableRow> out;
    std::vector<int> nums;
    auto lines = content_lines(text, &nums);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::string w = file + ":" + std::to_string(nums[i]);
        auto sp = lines[i].find(' ');
        TableRow r;
        r.n = to_int(lines[i].substr(0, sp), w);
        r.method = sp == std::string::npos ? "" : trim(lines[i].substr(sp + 1));
        if (!r.method.empty() && !is_known_method(r.method)) throw ValidationFailure(w + ": unknown method '" + r.method + "'");
        if (r.n % 2 == 0 || (!out.empty() && r.n <= out.back().n)) throw ValidationFailure(w + ": rows must be increasing odd n");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ExponentRow> parse_exponents(const std::string& text, const std::string& file) {
    static const std::regex re(R"((\d+)\((\d+)\)\s+(\w+))");
    std::vector<ExponentRow> out;
    std::vector<int> nums;
    auto lines = content_lines(text, &nums);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::smatch m;
        if (!std::regex_match(lines[i], m, re)) throw ParseError(file + ":" + std::to_string(nums[i]) + ": expected 'n(m) tag'");
        out.push_back({std::stoll(m[1]), std::stoll(m[2]), m[3]});
    }
    return out;
}

}  // namespace

bool is_known_method(const std::string& method) {
    static const std::regex re(R"(PaleyI|PaleyII|Will|GS|SDS|Good|Miy|CDS|Stored|CW\(\d+\)|Spence\(\d+\)|AOD\(\d+, \d+\))");
    return std::regex_match(method, re);
}

Datasets load(const FileSource& source) {
    auto read = [&](const std::string& f) {
        auto s = source(f);
        if (!s) throw ValidationFailure("data file missing: " + f);
        return *s;
    };
    Datasets ds;
    std::map<std::string, std::size_t> expected;
    std::vector<int> nums;
    auto lines = content_lines(read("manifest.txt"), &nums);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::istringstream in(lines[i]);
        std::string name, file;
        std::size_t count = 0;
        if (!(in >> name >> file >> count)) throw ParseError("manifest.txt:" + std::to_string(nums[i]) + ": expected 'dataset file records'");
        std::string text = read(file);
        std::size_t got = 0;
        if (name == "williamson") {
            ds.williamson = parse_quads(text, file);
            for (std::size_t k = 0; k < ds.williamson.size(); ++k) validate_williamson(ds.williamson[k], where_of(file, int(k), 0));
            got = ds.williamson.size();
        } else if (name == "good") {
            ds.good = parse_quads(text, file);
            for (std::size_t k = 0; k < ds.good.size(); ++k) validate_good(ds.good[k], where_of(file, int(k), 0));
            got = ds.good.size();
        } else if (name == "gs_skew") {
            ds.gs_skew = parse_quads(text, file);
            for (std::size_t k = 0; k < ds.gs_skew.size(); ++k) validate_gs_skew(ds.gs_skew[k], where_of(file, int(k), 0));
            got = ds.gs_skew.size();
        } else if (name == "tseq") {
            ds.tseq = parse_tseq(text, file);
            got = ds.tseq.size();
        } else if (name == "sds") {
            ds.sds = parse_sds(text, file);
            got = ds.sds.size();
        } else if (name == "plane") {
            ds.plane = parse_plane(text, file);
            got = ds.plane.size();
        } else if (name == "stored") {
            bool skew = false;
            SignMatrix m;
            try {
                m = parse_compact(text, &skew);
            } catch (const std::exception& e) {
                throw ValidationFailure(file + ": " + e.what());
            }
            if (!(skew ? is_skew_hadamard(m) : is_hadamard(m))) throw ValidationFailure(file + ": stored matrix fails verification");
            ds.stored.push_back({file, skew, std::move(m)});
            got = 1;
        } else if (name == "table_hadamard") {
            ds.table_hadamard = parse_table(text, file);
            got = ds.table_hadamard.size();
        } else if (name == "table_skew") {
            ds.table_skew = parse_table(text, file);
            got = ds.table_skew.size();
        } else if (name == "minexp_hadamard") {
            ds.minexp_hadamard = parse_exponents(text, file);
            got = ds.minexp_hadamard.size();
        } else if (name == "minexp_skew") {
            ds.minexp_skew = parse_exponents(text, file);
            got = ds.minexp_skew.size();
        } else {
            throw ParseError("manifest.txt: unknown dataset '" + name + "'");
        }
        if (got != count)
            throw ValidationFailure(name + ": manifest lists " + std::to_string(count) + " records, file has " + std::to_string(got));
        ds.counts[name] = got;
    }
    return ds;
}

Datasets load_dir(const std::filesystem::path& dir) {
    return load([dir](const std::string& f) -> std::optional<std::string> {
        std::ifstream in(dir / f, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    });
}

std::optional<std::string> embedded_file(const std::string& name) {
    auto& files = embedded_files();
    auto it = files.find(name);
    if (it == files.end()) return std::nullopt;
    return std::string(it->second);
}

Datasets load_all() {
    if (const char* dir = std::getenv("HADAMARD_DATA_DIR"); dir && *dir) return load_dir(dir);
    return load(embedded_file);
}

const Datasets& datasets() {
    static const Datasets ds = load_all();
    return ds;
}

}  // namespace had::data
