#include "cstarmod/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>

#include <json.hpp>

namespace cstarmod {

using nlohmann::json;

std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // canonicalize -0: "-0" re-parses as integer zero, losing the sign
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

// ---- emission -------------------------------------------------------------

void emit_complex(std::string& out, const Complex& z) {
    out += '[';
    out += format_double(z.real());
    out += ',';
    out += format_double(z.imag());
    out += ']';
}

void emit_matrix(std::string& out, const CMatrix& m) {
    out += '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            emit_complex(out, m(i, j));
        }
        out += ']';
    }
    out += ']';
}

void emit_indices(std::string& out, const std::vector<std::size_t>& xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    out += ']';
}

void emit_element_payload(std::string& out, const AlgElem& a) {
    out += "{\"blocks\":[";
    for (std::size_t b = 0; b < a.block_count(); ++b) {
        if (b) out += ',';
        emit_matrix(out, a.block(b));
    }
    out += "]}";
}

void emit_vector_payload(std::string& out, const ModVector& x) {
    out += "{\"coords\":[";
    for (std::size_t i = 0; i < x.rank(); ++i) {
        if (i) out += ',';
        emit_element_payload(out, x.coord(i));
    }
    out += "]}";
}

std::string open_document() {
    return std::string("{\"version\":\"") + kFormatVersion + "\",";
}

// ---- parsing --------------------------------------------------------------

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) fail(where.empty() ? item.key() : where + "." + item.key(), "unknown field");
    }
}

const json& require(const json& j, const std::string& where, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(where.empty() ? key : where + "." + key, "missing field");
    return *it;
}

std::size_t parse_size(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        fail(where, "expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

std::vector<std::size_t> parse_index_array(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    std::vector<std::size_t> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_size(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

double parse_finite(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(where, "number is not finite");
    return v;
}

Complex parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected an [re,im] pair");
    return Complex(parse_finite(j[0], where + "[0]"), parse_finite(j[1], where + "[1]"));
}

CMatrix parse_matrix(const json& j, const std::string& where, std::size_t rows,
                     std::size_t cols) {
    if (!j.is_array()) fail(where, "expected a matrix (array of rows)");
    if (j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
    CMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string row_where = where + "[" + std::to_string(i) + "]";
        const json& row = j[i];
        if (!row.is_array()) fail(row_where, "expected a row (array)");
        if (row.size() != cols) fail(row_where, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            out(i, c) = parse_complex(row[c], row_where + "[" + std::to_string(c) + "]");
        }
    }
    return out;
}

// Square matrix of size inferred from the row count (element blocks).
CMatrix parse_square_matrix(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a matrix (array of rows)");
    if (j.empty()) fail(where, "block must be at least 1x1");
    return parse_matrix(j, where, j.size(), j.size());
}

BlockAlgebra parse_dims(const json& j, const std::string& where) {
    std::vector<std::size_t> dims = parse_index_array(j, where);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] == 0) fail(where + "[" + std::to_string(i) + "]", "block dimension must be >= 1");
    }
    return BlockAlgebra(std::move(dims));
}

AlgElem parse_element(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an element object");
    check_keys(j, where, {"blocks"});
    const json& jblocks = require(j, where, "blocks");
    if (!jblocks.is_array()) fail(where + ".blocks", "expected an array");
    std::vector<CMatrix> blocks;
    std::vector<std::size_t> dims;
    blocks.reserve(jblocks.size());
    for (std::size_t b = 0; b < jblocks.size(); ++b) {
        CMatrix m = parse_square_matrix(jblocks[b],
                                        where + ".blocks[" + std::to_string(b) + "]");
        dims.push_back(m.rows());
        blocks.push_back(std::move(m));
    }
    return AlgElem(BlockAlgebra(std::move(dims)), std::move(blocks));
}

AlgElem parse_element_over(const json& j, const std::string& where, const BlockAlgebra& alg) {
    AlgElem e = parse_element(j, where);
    if (e.algebra() != alg) fail(where, "element does not match the algebra dims");
    return e;
}

ModVector parse_vector(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected a vector object");
    check_keys(j, where, {"coords"});
    const json& jcoords = require(j, where, "coords");
    if (!jcoords.is_array()) fail(where + ".coords", "expected an array");
    std::vector<AlgElem> coords;
    coords.reserve(jcoords.size());
    for (std::size_t i = 0; i < jcoords.size(); ++i) {
        coords.push_back(parse_element(jcoords[i], where + ".coords[" + std::to_string(i) + "]"));
    }
    const BlockAlgebra alg = coords.empty() ? BlockAlgebra() : coords.front().algebra();
    for (std::size_t i = 1; i < coords.size(); ++i) {
        if (coords[i].algebra() != alg) {
            fail(where + ".coords[" + std::to_string(i) + "]",
                 "coordinate over a different algebra");
        }
    }
    const std::size_t rank = coords.size(); // read before the move below
    return ModVector(FreeModule(alg, rank), std::move(coords));
}

ModVector parse_vector_over(const json& j, const std::string& where, const FreeModule& mod) {
    ModVector x = parse_vector(j, where);
    if (x.module() != mod) fail(where, "vector does not match the module rank/algebra");
    return x;
}

} // namespace

std::string serialize_algebra(const BlockAlgebra& a) {
    std::string out = open_document();
    out += "\"dims\":";
    emit_indices(out, a.dims());
    out += '}';
    return out;
}

std::string serialize_element(const AlgElem& a) {
    std::string out = open_document();
    out += "\"blocks\":[";
    for (std::size_t b = 0; b < a.block_count(); ++b) {
        if (b) out += ',';
        emit_matrix(out, a.block(b));
    }
    out += "]}";
    return out;
}

std::string serialize_seminorm(const std::vector<std::size_t>& support) {
    std::string out = open_document();
    out += "\"support\":";
    emit_indices(out, support);
    out += '}';
    return out;
}

std::string serialize_vector(const ModVector& x) {
    std::string out = open_document();
    out += "\"coords\":[";
    for (std::size_t i = 0; i < x.rank(); ++i) {
        if (i) out += ',';
        emit_element_payload(out, x.coord(i));
    }
    out += "]}";
    return out;
}

std::string serialize_submodule(const Submodule& f) {
    std::string out = open_document();
    out += "\"dims\":";
    emit_indices(out, f.module().algebra().dims());
    out += ",\"rank\":" + std::to_string(f.module().rank());
    out += ",\"generators\":[";
    for (std::size_t g = 0; g < f.generators().size(); ++g) {
        if (g) out += ',';
        emit_vector_payload(out, f.generators()[g]);
    }
    out += "]}";
    return out;
}

std::string serialize_map(const ModuleMap& t) {
    std::string out = open_document();
    out += "\"dims\":";
    emit_indices(out, t.algebra().dims());
    out += ",\"domain_rank\":" + std::to_string(t.domain().rank());
    out += ",\"codomain_rank\":" + std::to_string(t.codomain().rank());
    out += ",\"entries\":[";
    for (std::size_t i = 0; i < t.codomain().rank(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < t.domain().rank(); ++j) {
            if (j) out += ',';
            emit_element_payload(out, t.entry(i, j));
        }
        out += ']';
    }
    out += "]}";
    return out;
}

std::string serialize_raw(const RawLinearMap& r) {
    std::string out = open_document();
    out += "\"dims\":";
    emit_indices(out, r.algebra().dims());
    out += ",\"domain_rank\":" + std::to_string(r.domain_rank());
    out += ",\"codomain_rank\":" + std::to_string(r.codomain_rank());
    out += ",\"blocks\":[";
    for (std::size_t b = 0; b < r.blocks().size(); ++b) {
        if (b) out += ',';
        emit_matrix(out, r.block(b));
    }
    out += "]}";
    return out;
}

std::string serialize_document(const Document& doc) {
    return std::visit(
        [](const auto& payload) -> std::string {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, BlockAlgebra>) return serialize_algebra(payload);
            else if constexpr (std::is_same_v<T, AlgElem>) return serialize_element(payload);
            else if constexpr (std::is_same_v<T, SupportPayload>)
                return serialize_seminorm(payload.support);
            else if constexpr (std::is_same_v<T, ModVector>) return serialize_vector(payload);
            else if constexpr (std::is_same_v<T, Submodule>) return serialize_submodule(payload);
            else if constexpr (std::is_same_v<T, ModuleMap>) return serialize_map(payload);
            else return serialize_raw(payload);
        },
        doc.payload);
}

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail("document", std::string("invalid JSON (") + e.what() + ")");
    }
    if (!j.is_object()) fail("document", "expected a JSON object");

    const json& jver = require(j, "", "version");
    if (!jver.is_string() || jver.get<std::string>() != kFormatVersion) {
        fail("version", std::string("expected \"") + kFormatVersion + "\"");
    }

    Document doc;
    doc.version = kFormatVersion;

    if (j.contains("support")) {
        check_keys(j, "", {"version", "support"});
        doc.payload = SupportPayload{parse_index_array(j["support"], "support")};
        return doc;
    }
    if (j.contains("coords")) {
        check_keys(j, "", {"version", "coords"});
        json wrapper = json::object();
        wrapper["coords"] = j["coords"];
        doc.payload = parse_vector(wrapper, "document");
        return doc;
    }
    if (j.contains("generators")) {
        check_keys(j, "", {"version", "dims", "rank", "generators"});
        const BlockAlgebra alg = parse_dims(require(j, "", "dims"), "dims");
        const std::size_t rank = parse_size(require(j, "", "rank"), "rank");
        const FreeModule mod(alg, rank);
        const json& jgens = require(j, "", "generators");
        if (!jgens.is_array()) fail("generators", "expected an array");
        std::vector<ModVector> gens;
        gens.reserve(jgens.size());
        for (std::size_t g = 0; g < jgens.size(); ++g) {
            gens.push_back(
                parse_vector_over(jgens[g], "generators[" + std::to_string(g) + "]", mod));
        }
        doc.payload = Submodule(mod, std::move(gens));
        return doc;
    }
    if (j.contains("entries")) {
        check_keys(j, "", {"version", "dims", "domain_rank", "codomain_rank", "entries"});
        const BlockAlgebra alg = parse_dims(require(j, "", "dims"), "dims");
        const std::size_t n = parse_size(require(j, "", "domain_rank"), "domain_rank");
        const std::size_t m = parse_size(require(j, "", "codomain_rank"), "codomain_rank");
        const json& jentries = require(j, "", "entries");
        if (!jentries.is_array()) fail("entries", "expected an array");
        if (jentries.size() != m) fail("entries", "expected " + std::to_string(m) + " rows");
        std::vector<AlgElem> entries;
        entries.reserve(m * n);
        for (std::size_t i = 0; i < m; ++i) {
            const std::string row_where = "entries[" + std::to_string(i) + "]";
            const json& row = jentries[i];
            if (!row.is_array()) fail(row_where, "expected a row (array)");
            if (row.size() != n) fail(row_where, "expected " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c) {
                entries.push_back(parse_element_over(
                    row[c], row_where + "[" + std::to_string(c) + "]", alg));
            }
        }
        doc.payload = ModuleMap(FreeModule(alg, n), FreeModule(alg, m), std::move(entries));
        return doc;
    }
    if (j.contains("blocks") && j.contains("domain_rank")) {
        check_keys(j, "", {"version", "dims", "domain_rank", "codomain_rank", "blocks"});
        const BlockAlgebra alg = parse_dims(require(j, "", "dims"), "dims");
        const std::size_t n = parse_size(require(j, "", "domain_rank"), "domain_rank");
        const std::size_t m = parse_size(require(j, "", "codomain_rank"), "codomain_rank");
        const json& jblocks = require(j, "", "blocks");
        if (!jblocks.is_array()) fail("blocks", "expected an array");
        if (jblocks.size() != alg.block_count()) {
            fail("blocks", "expected " + std::to_string(alg.block_count()) + " blocks");
        }
        std::vector<CMatrix> blocks;
        blocks.reserve(jblocks.size());
        for (std::size_t b = 0; b < jblocks.size(); ++b) {
            const std::size_t nb = alg.dim(b);
            blocks.push_back(parse_matrix(jblocks[b], "blocks[" + std::to_string(b) + "]",
                                          m * nb * nb, n * nb * nb));
        }
        doc.payload = RawLinearMap(alg, n, m, std::move(blocks));
        return doc;
    }
    if (j.contains("blocks")) {
        check_keys(j, "", {"version", "blocks"});
        json wrapper = json::object();
        wrapper["blocks"] = j["blocks"];
        doc.payload = parse_element(wrapper, "document");
        return doc;
    }
    if (j.contains("dims")) {
        check_keys(j, "", {"version", "dims"});
        doc.payload = parse_dims(j["dims"], "dims");
        return doc;
    }
    fail("document", "unrecognized payload (no known fields present)");
}

} // namespace cstarmod
