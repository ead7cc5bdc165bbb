#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mws/code.hpp"
#include "mws/errors.hpp"
#include "mws/pg.hpp"

namespace mws {

// MatrixFile: header "q k n", then k lines of n space-separated encodings.

inline void write_matrix(std::ostream& os, const LinearCode& C) {
    os << C.field.q() << ' ' << C.k << ' ' << C.n << '\n';
    for (const auto& row : C.G) {
        for (std::int64_t j = 0; j < C.n; ++j) {
            if (j) os << ' ';
            os << row[static_cast<std::size_t>(j)];
        }
        os << '\n';
    }
}

inline LinearCode read_matrix(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing header", 1, 1);
    std::istringstream hdr(line);
    long long q = 0, k = 0, n = 0;
    if (!(hdr >> q >> k >> n) || q < 2 || k < 1 || n < 1) throw ParseError("malformed header (want: q k n)", 1, 1);
    Field F(static_cast<uint32_t>(q));
    std::vector<std::vector<uint32_t>> rows;
    for (long long i = 0; i < k; ++i) {
        if (!std::getline(is, line)) throw ParseError("missing matrix row", static_cast<std::size_t>(i) + 2, 1);
        std::istringstream row_in(line);
        std::vector<uint32_t> row;
        long long v;
        while (row_in >> v) {
            if (v < 0 || v >= q)
                throw EncodingOutOfRange("encoding " + std::to_string(v) + " out of range [0," + std::to_string(q) + ") at row " + std::to_string(i + 1));
            row.push_back(static_cast<uint32_t>(v));
        }
        if (static_cast<long long>(row.size()) != n)
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n),
                             static_cast<std::size_t>(i) + 2, 1);
        rows.push_back(std::move(row));
    }
    return make_code(std::move(F), std::move(rows));
}

// SystemFile: JSON document with keys q, k, field_modulus, points; each
// point is {coords, mult} with the multiplicity as a decimal string.

inline void write_system(std::ostream& os, const ProjectiveSystem& sys) {
    nlohmann::ordered_json doc;
    doc["q"] = sys.q();
    doc["k"] = sys.k();
    doc["field_modulus"] = sys.field().modulus();
    auto& points = doc["points"] = nlohmann::ordered_json::array();
    for (const auto& [pt, mult] : sys.mults()) {
        nlohmann::ordered_json rec;
        rec["coords"] = pt.coords;
        rec["mult"] = mult.str();
        points.push_back(std::move(rec));
    }
    os << doc.dump(2) << '\n';
}

namespace detail {
inline ParseError json_parse_error(const std::string& text, const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line, col = 1;
        else ++col;
    }
    return ParseError(e.what(), line, col);
}
}  // namespace detail

inline ProjectiveSystem read_system(std::istream& is) {
    std::string text(std::istreambuf_iterator<char>(is), {});
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw detail::json_parse_error(text, e);
    }
    if (!doc.is_object() || !doc.contains("q") || !doc.contains("k") || !doc.contains("points"))
        throw ParseError("system document must contain q, k and points", 1, 1);
    Field F(doc["q"].get<uint32_t>());
    if (doc.contains("field_modulus") && doc["field_modulus"].get<std::vector<uint32_t>>() != F.modulus())
        throw ParseError("field_modulus does not match the canonical realization", 1, 1);
    int k = doc["k"].get<int>();
    if (k < 1) throw ParseError("k must be positive", 1, 1);
    if (!doc["points"].is_array() || doc["points"].empty()) throw ParseError("points list must be non-empty", 1, 1);
    ProjectiveSystem sys(F, k);
    for (const auto& rec : doc["points"]) {
        auto coords = rec.at("coords").get<std::vector<uint32_t>>();
        for (uint32_t c : coords)
            if (c >= F.q()) throw EncodingOutOfRange("coordinate encoding out of range");
        if (!is_canonical_coords(F, coords)) throw NonCanonicalPoint("point coordinates are not canonical");
        BigInt mult(rec.at("mult").get<std::string>());
        if (mult < 0) throw ParseError("negative multiplicity", 1, 1);
        sys.add_point({coords}, mult);
    }
    return sys;
}

}  // namespace mws
