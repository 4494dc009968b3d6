#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cstarmod/operator.hpp"

namespace cstarmod {

inline constexpr const char* kFormatVersion = "cstar-mod/1";

// A seminorm document carries only the support indices; the consumer binds
// them to an algebra.
struct SupportPayload {
    std::vector<std::size_t> support;
};

using DocumentPayload = std::variant<BlockAlgebra, AlgElem, SupportPayload, ModVector,
                                     Submodule, ModuleMap, RawLinearMap>;

struct Document {
    std::string version;
    DocumentPayload payload;
};

// Complex numbers are [re, im] pairs, matrices row-major nested arrays.
// Parsing rejects unknown fields, wrong shapes and non-finite numbers with a
// single-line diagnostic naming the offending field.
Document parse_document(const std::string& text);

// Serializers emit one canonical line per document with every real number
// printed to 17 significant digits, so emitted values re-parse bit-exactly
// and equal inputs produce equal bytes.
std::string serialize_algebra(const BlockAlgebra& a);
std::string serialize_element(const AlgElem& a);
std::string serialize_seminorm(const std::vector<std::size_t>& support);
std::string serialize_vector(const ModVector& x);
std::string serialize_submodule(const Submodule& f);
std::string serialize_map(const ModuleMap& t);
std::string serialize_raw(const RawLinearMap& r);
std::string serialize_document(const Document& doc);

// "%.17g" rendering shared by every emitter in the toolkit.
std::string format_double(double v);

} // namespace cstarmod
