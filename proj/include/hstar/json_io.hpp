// JSON and plain-text interchange for simplices, groups, codes and reports.
//
// Integers that do not fit in 64 bits are written as decimal strings; readers
// accept either a JSON number or a decimal string wherever an integer is
// expected. Group coordinates are written as "a/b" strings.

#pragma once

#include "hstar/bernoulli.hpp"
#include "hstar/bigint.hpp"
#include "hstar/codes.hpp"
#include "hstar/error.hpp"
#include "hstar/lattice.hpp"
#include "hstar/torus.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hstar::io {

using Json = nlohmann::json;

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail("ParseError", e.what());
    }
}

// -- scalars -----------------------------------------------------------------

inline Json to_json(const BigInt& v) {
    if (fits_int64(v)) return to_int64(v);
    return to_string(v);
}

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    fail("ParseError", "expected an integer, got " + j.dump());
}

inline std::int64_t int_from_json(const Json& j, const char* what) {
    const BigInt v = bigint_from_json(j);
    if (!fits_int64(v)) fail("ParseError", std::string(what) + " does not fit in 64 bits");
    return to_int64(v);
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail("ParseError", "expected a rational, got " + j.dump());
}

inline const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail("ParseError", std::string("missing field \"") + key + "\"");
    return j.at(key);
}

// -- simplices and h* ----------------------------------------------------------

inline Json to_json(const LatticeSimplex& s) {
    Json verts = Json::array();
    for (const auto& v : s.vertices()) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(to_json(x));
        verts.push_back(std::move(row));
    }
    return {{"dim", s.dim()}, {"vertices", std::move(verts)}};
}

inline std::vector<IntVector> vertices_from_json(const Json& j) {
    const Json& verts = require(j, "vertices");
    if (!verts.is_array()) fail("ParseError", "\"vertices\" must be an array");
    std::vector<IntVector> out;
    for (const auto& row : verts) {
        if (!row.is_array()) fail("ParseError", "each vertex must be an array");
        IntVector v;
        for (const auto& x : row) v.push_back(bigint_from_json(x));
        out.push_back(std::move(v));
    }
    if (j.contains("dim")) {
        const auto d = int_from_json(j.at("dim"), "dim");
        for (const auto& v : out)
            if (static_cast<std::int64_t>(v.size()) != d)
                fail("DimensionMismatch", "vertex length differs from \"dim\"");
    }
    return out;
}

inline LatticeSimplex simplex_from_json(const Json& j) {
    auto verts = vertices_from_json(j);
    if (j.contains("dim") && static_cast<std::int64_t>(verts.size()) != int_from_json(j.at("dim"), "dim") + 1)
        fail("DimensionMismatch", "a d-simplex needs d+1 vertices");
    return LatticeSimplex(std::move(verts));
}

inline Json to_json(const HStarPolynomial& h) {
    Json c = Json::array();
    for (const auto& x : h.coeffs()) c.push_back(to_json(x));
    return {{"coeffs", std::move(c)}};
}

inline HStarPolynomial hstar_from_json(const Json& j) {
    std::vector<BigInt> c;
    for (const auto& x : require(j, "coeffs")) c.push_back(bigint_from_json(x));
    return HStarPolynomial(std::move(c));
}

// -- torus subgroups -----------------------------------------------------------

inline Json to_json(const TorusSubgroup& g) {
    Json elems = Json::array();
    for (std::size_t e = 0; e < g.order(); ++e) {
        Json row = Json::array();
        for (std::size_t i = 0; i < g.ambient(); ++i) row.push_back(to_string(g.coordinate(e, i)));
        elems.push_back(std::move(row));
    }
    return {{"ambient", g.ambient()}, {"order", g.order()}, {"elements", std::move(elems)}};
}

/// The zero element may be omitted from "elements".
inline TorusSubgroup group_from_json(const Json& j) {
    const auto n = int_from_json(require(j, "ambient"), "ambient");
    if (n <= 0) fail("InvalidArgument", "\"ambient\" must be positive");
    std::vector<std::vector<Rational>> elems;
    for (const auto& row : require(j, "elements")) {
        std::vector<Rational> e;
        for (const auto& x : row) e.push_back(rational_from_json(x));
        elems.push_back(std::move(e));
    }
    return make_torus_subgroup(static_cast<std::size_t>(n), elems);
}

// -- codes ---------------------------------------------------------------------

inline Json to_json(const FpMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
}

inline Json to_json(const LinearCode& c) {
    return {{"p", c.p()}, {"n", c.length()}, {"generators", to_json(c.generators())}};
}

inline Json to_json(const MonomialTransform& f) { return {{"sigma", f.sigma}, {"tau", f.tau}}; }

inline FpMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) fail("ParseError", "matrix must be an array of rows");
    FpMatrix m;
    for (const auto& row : j) {
        Codeword r;
        for (const auto& x : row) r.push_back(static_cast<int>(int_from_json(x, "entry")));
        m.push_back(std::move(r));
    }
    return m;
}

inline LinearCode code_from_json(const Json& j) {
    const auto p = int_from_json(require(j, "p"), "p");
    const auto n = int_from_json(require(j, "n"), "n");
    if (n <= 0) fail("InvalidArgument", "\"n\" must be positive");
    return LinearCode(static_cast<int>(p), static_cast<std::size_t>(n), matrix_from_json(require(j, "generators")));
}

/// Whitespace-separated rows, one per line; blank lines and '#' comments skipped.
inline FpMatrix matrix_from_text(const std::string& text) {
    FpMatrix m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        Codeword row;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                row.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                fail("ParseError", "bad matrix entry '" + tok + "'");
            }
        }
        if (!row.empty()) m.push_back(std::move(row));
    }
    if (m.empty()) fail("ParseError", "empty matrix");
    return m;
}

/// JSON code object, or a plain-text matrix when `text` does not start with '{'.
/// A given `p` must agree with the file's "p" field when both are present.
inline LinearCode code_from_text(const std::string& text, std::optional<int> p) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        LinearCode c = code_from_json(parse_json(text));
        if (p && *p != c.p())
            fail("DimensionMismatch", "--p " + std::to_string(*p) + " differs from file p = " + std::to_string(c.p()));
        return c;
    }
    if (!p) fail("InvalidArgument", "plain-text code matrices need an explicit prime");
    FpMatrix m = matrix_from_text(text);
    const std::size_t n = m.front().size();
    return LinearCode(*p, n, std::move(m));
}

inline Json to_json(const PairDecomposition& d) {
    Json pairs = Json::array();
    for (const auto& pb : d.pairs) pairs.push_back({{"plus", pb.plus}, {"minus", pb.minus}});
    return {{"p", d.p},
            {"r", d.r},
            {"s", d.s},
            {"age", d.age},
            {"bonisoli_blocks", d.bonisoli_blocks},
            {"pairs", std::move(pairs)},
            {"p2_unpaired", d.p2_unpaired},
            {"normalizing", to_json(d.normalizing)}};
}

// -- Bernoulli sweep -------------------------------------------------------------

inline Json to_json(const CyclotomicNumber& x) {
    if (x.is_rational()) return to_string(x.coeffs().front());
    Json out = Json::array();
    for (const auto& c : x.coeffs()) out.push_back(to_string(c));
    return out;
}

inline Json to_json(const SweepReport& rep) {
    Json chars = Json::array();
    for (const auto& c : rep.characters)
        chars.push_back({{"j", c.j}, {"odd", c.odd}, {"is_zero", c.is_zero}, {"norm_square", to_json(c.norm_square)}});
    return {{"p", rep.p},
            {"r", rep.r},
            {"modulus", rep.modulus},
            {"generator", rep.generator.coeffs},
            {"characters", std::move(chars)}};
}

// -- errors ------------------------------------------------------------------------

inline Json error_json(const std::string& code, const std::string& message) {
    return {{"error", code}, {"message", message}};
}

}  // namespace hstar::io
