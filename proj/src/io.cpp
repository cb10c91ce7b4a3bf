#include "hadamard/io.hpp"

#include <json.hpp>
#include <sstream>

#include "hadamard/errors.hpp"

namespace had {

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "compact") return OutputFormat::Compact;
    throw ParseError("unknown format: " + name);
}

std::string format_matrix(const SignMatrix& m, OutputFormat f, bool skew_flag) {
    switch (f) {
        case OutputFormat::Text: return to_text(m);
        case OutputFormat::Json: return to_json(m) + "\n";
        case OutputFormat::Compact: return to_compact(m, skew_flag);
    }
    return {};
}

std::string to_compact(const SignMatrix& m, bool skew_flag) {
    static const char* hex = "0123456789abcdef";
    int n = m.order();
    int digits = (n + 3) / 4;
    std::string out = "HAD v1 order=" + std::to_string(n) + " skew=" + (skew_flag ? "1" : "0") + "\n";
    for (int i = 0; i < n; ++i) {
        for (int d = 0; d < digits; ++d) {
            int nib = 0;
            for (int b = 0; b < 4; ++b) {
                int j = 4 * d + b;
                nib = (nib << 1) | (j < n && m(i, j) > 0 ? 1 : 0);
            }
            out += hex[nib];
        }
        out += '\n';
    }
    return out;
}

SignMatrix parse_compact(const std::string& s, bool* skew_flag) {
    std::istringstream in(s);
    std::string magic, version, order_kv, skew_kv;
    in >> magic >> version >> order_kv >> skew_kv;
    if (magic != "HAD" || version != "v1" || order_kv.rfind("order=", 0) != 0 || skew_kv.rfind("skew=", 0) != 0)
        throw ParseError("bad compact header");
    int n = 0;
    try {
        n = std::stoi(order_kv.substr(6));
    } catch (const std::exception&) {
        throw ParseError("bad order in compact header");
    }
    if (n < 1) throw ParseError("bad order in compact header");
    if (skew_flag) *skew_flag = skew_kv == "skew=1";
    int digits = (n + 3) / 4;
    Matrix m(n, n);
    std::string row;
    for (int i = 0; i < n; ++i) {
        if (!(in >> row)) throw ParseError("compact data has fewer rows than its order");
        if (static_cast<int>(row.size()) != digits) throw ParseError("compact row " + std::to_string(i) + " has wrong width");
        for (int d = 0; d < digits; ++d) {
            char c = row[d];
            int nib;
            if (c >= '0' && c <= '9') nib = c - '0';
            else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
            else throw ParseError(std::string("bad hex digit '") + c + "'");
            for (int b = 0; b < 4; ++b) {
                int j = 4 * d + b;
                int bit = (nib >> (3 - b)) & 1;
                if (j < n) m(i, j) = bit ? 1 : -1;
                else if (bit) throw ParseError("nonzero padding bits in compact row");
            }
        }
    }
    if (in >> row) throw ParseError("compact data has more rows than its order");
    return SignMatrix(std::move(m));
}

std::string to_json(const SignMatrix& m) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < m.order(); ++i) j.push_back(std::vector<int>(m.row(i), m.row(i) + m.order()));
    return j.dump();
}

SignMatrix parse_json(const std::string& s) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw ParseError("JSON matrix must be a nonempty array of rows");
    std::vector<std::vector<int>> rows;
    for (auto& r : j) {
        if (!r.is_array() || r.size() != j.size()) throw ParseError("JSON matrix is not square");
        std::vector<int> row;
        for (auto& x : r) {
            if (!x.is_number_integer() || (x.get<int>() != 1 && x.get<int>() != -1))
                throw ParseError("JSON entries must be 1 or -1");
            row.push_back(x.get<int>());
        }
        rows.push_back(std::move(row));
    }
    return SignMatrix(Matrix::from_rows(rows));
}

SignMatrix parse_any(const std::string& s) {
    auto start = s.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw ParseError("empty input");
    if (s.compare(start, 3, "HAD") == 0) return parse_compact(s);
    if (s[start] == '[') return parse_json(s);
    return parse_text(s);
}

}  // namespace had
