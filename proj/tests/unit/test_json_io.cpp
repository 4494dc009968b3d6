#include <doctest.h>

#include <string>
#include <variant>

#include "cstarmod/json_io.hpp"
#include "cstarmod/random_gen.hpp"

using namespace cstarmod;

namespace {

// Serialize → parse → serialize must reproduce the bytes exactly; this is the
// round-trip contract every emitter promises.
std::string reserialized(const std::string& text) {
    return serialize_document(parse_document(text));
}

std::string parse_failure(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

bool mentions(const std::string& message, const std::string& needle) {
    return message.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("document round-trips") {
    TEST_CASE("algebra documents, including the zero algebra") {
        const std::string a = serialize_algebra(BlockAlgebra({1, 2, 3}));
        CHECK(reserialized(a) == a);
        const Document doc = parse_document(a);
        REQUIRE(std::holds_alternative<BlockAlgebra>(doc.payload));
        CHECK(std::get<BlockAlgebra>(doc.payload).dims() ==
              std::vector<std::size_t>{1, 2, 3});
        const std::string zero = serialize_algebra(BlockAlgebra());
        CHECK(reserialized(zero) == zero);
        CHECK(std::get<BlockAlgebra>(parse_document(zero).payload).block_count() == 0);
    }

    TEST_CASE("element documents carry awkward doubles bit-exactly") {
        const BlockAlgebra alg({2, 1});
        AlgElem a(alg);
        a.block(0)(0, 0) = Complex(1.0 / 3.0, -0.0);
        a.block(0)(0, 1) = Complex(1e-308, 1e300);
        a.block(0)(1, 1) = Complex(-1.0000000000000002, 0.1);
        a.block(1)(0, 0) = Complex(0.0, -2.5e-17);
        const std::string text = serialize_element(a);
        CHECK(reserialized(text) == text);
        const Document doc = parse_document(text);
        REQUIRE(std::holds_alternative<AlgElem>(doc.payload));
        const AlgElem& back = std::get<AlgElem>(doc.payload);
        CHECK(alg_equal(back, a));
        CHECK(back.block(0)(0, 1).real() == 1e-308);
        CHECK(back.block(0)(0, 1).imag() == 1e300);
        CHECK(back.block(0)(1, 1).real() == -1.0000000000000002);
    }

    TEST_CASE("seminorm support documents") {
        const std::string text = serialize_seminorm({0, 2, 5});
        CHECK(reserialized(text) == text);
        const Document doc = parse_document(text);
        REQUIRE(std::holds_alternative<SupportPayload>(doc.payload));
        CHECK(std::get<SupportPayload>(doc.payload).support ==
              std::vector<std::size_t>{0, 2, 5});
        const std::string empty = serialize_seminorm({});
        CHECK(reserialized(empty) == empty);
    }

    TEST_CASE("vector documents, including rank zero") {
        Rng rng(501);
        const FreeModule e(BlockAlgebra({1, 2}), 3);
        const ModVector x = random_vector(rng, e);
        const std::string text = serialize_vector(x);
        CHECK(reserialized(text) == text);
        const Document doc = parse_document(text);
        REQUIRE(std::holds_alternative<ModVector>(doc.payload));
        CHECK(vec_equal(std::get<ModVector>(doc.payload), x));
        // A rank-0 vector keeps nothing but its emptiness.
        const std::string zero = serialize_vector(ModVector(FreeModule(e.algebra(), 0)));
        CHECK(reserialized(zero) == zero);
        CHECK(std::get<ModVector>(parse_document(zero).payload).rank() == 0);
    }

    TEST_CASE("submodule documents, including the zero submodule") {
        Rng rng(502);
        const FreeModule e(BlockAlgebra({2}), 2);
        const Submodule f = Submodule(e, {random_vector(rng, e), random_vector(rng, e)});
        const std::string text = serialize_submodule(f);
        CHECK(reserialized(text) == text);
        const Document doc = parse_document(text);
        REQUIRE(std::holds_alternative<Submodule>(doc.payload));
        const Submodule& back = std::get<Submodule>(doc.payload);
        CHECK(back.module() == e);
        REQUIRE(back.generators().size() == 2);
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(vec_equal(back.generators()[i], f.generators()[i]));
        // Zero generators: the module shape still survives the trip.
        const std::string zero = serialize_submodule(Submodule(e));
        CHECK(reserialized(zero) == zero);
        const Document zdoc = parse_document(zero);
        const Submodule& zback = std::get<Submodule>(zdoc.payload);
        CHECK(zback.module() == e);
        CHECK(zback.generators().empty());
    }

    TEST_CASE("map documents") {
        Rng rng(503);
        const BlockAlgebra alg({1, 2});
        const ModuleMap t = random_map(rng, FreeModule(alg, 2), FreeModule(alg, 3));
        const std::string text = serialize_map(t);
        CHECK(reserialized(text) == text);
        const Document doc = parse_document(text);
        REQUIRE(std::holds_alternative<ModuleMap>(doc.payload));
        CHECK(map_equal(std::get<ModuleMap>(doc.payload), t));
    }

    TEST_CASE("raw linear map documents") {
        Rng rng(504);
        const BlockAlgebra alg({2, 1});
        const RawLinearMap r = random_raw(rng, alg, 1, 2);
        const std::string text = serialize_raw(r);
        CHECK(reserialized(text) == text);
        const Document doc = parse_document(text);
        REQUIRE(std::holds_alternative<RawLinearMap>(doc.payload));
        const RawLinearMap& back = std::get<RawLinearMap>(doc.payload);
        CHECK(back.domain_rank() == 1);
        CHECK(back.codomain_rank() == 2);
        REQUIRE(back.blocks().size() == 2);
        for (std::size_t b = 0; b < 2; ++b) CHECK(back.block(b) == r.block(b));
    }

    TEST_CASE("serialization is deterministic") {
        Rng rng(505);
        const BlockAlgebra alg({2});
        const ModuleMap t = random_map(rng, FreeModule(alg, 1), FreeModule(alg, 2));
        CHECK(serialize_map(t) == serialize_map(t));
        const Document doc{kFormatVersion, t};
        CHECK(serialize_document(doc) == serialize_map(t));
    }
}

TEST_SUITE("document rejection") {
    TEST_CASE("syntactically broken input names the document") {
        const std::string msg = parse_failure("{\"version\": ");
        CHECK(mentions(msg, "document"));
        CHECK(mentions(msg, "invalid JSON"));
    }

    TEST_CASE("version handling") {
        CHECK(mentions(parse_failure("{\"dims\":[1]}"), "version: missing field"));
        CHECK(mentions(parse_failure("{\"version\":\"cstar-mod/9\",\"dims\":[1]}"),
                       "version: expected"));
        CHECK(mentions(parse_failure("{\"version\":1,\"dims\":[1]}"), "version"));
    }

    TEST_CASE("unknown fields are named") {
        const std::string msg =
            parse_failure("{\"version\":\"cstar-mod/1\",\"dims\":[1],\"frobnicate\":0}");
        CHECK(mentions(msg, "frobnicate"));
        CHECK(mentions(msg, "unknown field"));
    }

    TEST_CASE("numeric overflow is rejected") {
        const std::string msg = parse_failure(
            "{\"version\":\"cstar-mod/1\",\"blocks\":[[[[1e999,0]]]]}");
        CHECK(mentions(msg, "document"));
        CHECK(!msg.empty());
    }

    TEST_CASE("complex entries must be [re,im] pairs") {
        const std::string msg = parse_failure(
            "{\"version\":\"cstar-mod/1\",\"blocks\":[[[[1,0,0]]]]}");
        CHECK(mentions(msg, "blocks[0]"));
        CHECK(mentions(msg, "[re,im]"));
        const std::string text = parse_failure(
            "{\"version\":\"cstar-mod/1\",\"blocks\":[[[[\"x\",0]]]]}");
        CHECK(mentions(text, "expected a number"));
    }

    TEST_CASE("ragged blocks are rejected with their position") {
        // A 2x2 block whose second row has one entry.
        const std::string msg = parse_failure(
            "{\"version\":\"cstar-mod/1\",\"blocks\":[[[[1,0],[0,0]],[[0,0]]]]}");
        CHECK(mentions(msg, "blocks[0]"));
        CHECK(mentions(msg, "entries"));
    }

    TEST_CASE("zero block dimensions are rejected") {
        CHECK(mentions(parse_failure("{\"version\":\"cstar-mod/1\",\"dims\":[1,0]}"),
                       "dims[1]: block dimension must be >= 1"));
        CHECK(mentions(parse_failure("{\"version\":\"cstar-mod/1\",\"dims\":[1,-2]}"),
                       "dims[1]"));
    }

    TEST_CASE("submodule generators must match the declared module") {
        // rank 2 declared, generator has one coordinate.
        const std::string msg = parse_failure(
            "{\"version\":\"cstar-mod/1\",\"dims\":[1],\"rank\":2,"
            "\"generators\":[{\"coords\":[{\"blocks\":[[[[1,0]]]]}]}]}");
        CHECK(mentions(msg, "generators[0]"));
        CHECK(mentions(msg, "does not match the module"));
    }

    TEST_CASE("map entry grids must match the declared ranks") {
        const std::string msg = parse_failure(
            "{\"version\":\"cstar-mod/1\",\"dims\":[1],\"domain_rank\":2,"
            "\"codomain_rank\":1,\"entries\":[[{\"blocks\":[[[[1,0]]]]}]]}");
        CHECK(mentions(msg, "entries[0]"));
        CHECK(mentions(msg, "expected 2 entries"));
        const std::string rows = parse_failure(
            "{\"version\":\"cstar-mod/1\",\"dims\":[1],\"domain_rank\":1,"
            "\"codomain_rank\":2,\"entries\":[[{\"blocks\":[[[[1,0]]]]}]]}");
        CHECK(mentions(rows, "entries: expected 2 rows"));
    }

    TEST_CASE("map entries must live over the declared algebra") {
        const std::string msg = parse_failure(
            "{\"version\":\"cstar-mod/1\",\"dims\":[2],\"domain_rank\":1,"
            "\"codomain_rank\":1,\"entries\":[[{\"blocks\":[[[[1,0]]]]}]]}");
        CHECK(mentions(msg, "entries[0][0]"));
        CHECK(mentions(msg, "does not match the algebra"));
    }

    TEST_CASE("raw blocks must have the induced shapes") {
        // dims [2], ranks 1→1: block must be 4x4, give 2x2.
        const std::string msg = parse_failure(
            "{\"version\":\"cstar-mod/1\",\"dims\":[2],\"domain_rank\":1,"
            "\"codomain_rank\":1,\"blocks\":[[[1,0],[0,0]]]}");
        CHECK(mentions(msg, "blocks[0]"));
        const std::string count = parse_failure(
            "{\"version\":\"cstar-mod/1\",\"dims\":[1,1],\"domain_rank\":1,"
            "\"codomain_rank\":1,\"blocks\":[[[[1,0]]]]}");
        CHECK(mentions(count, "blocks: expected 2 blocks"));
    }

    TEST_CASE("documents with no recognizable payload are rejected") {
        const std::string msg = parse_failure("{\"version\":\"cstar-mod/1\"}");
        CHECK(mentions(msg, "unrecognized payload"));
    }

    TEST_CASE("diagnostics are single lines") {
        const std::string msgs[] = {
            parse_failure("{\"version\":\"cstar-mod/1\",\"dims\":[0]}"),
            parse_failure("not json at all"),
            parse_failure("{\"version\":\"cstar-mod/1\",\"coords\":[5]}"),
        };
        for (const std::string& m : msgs) {
            CHECK(!m.empty());
            CHECK(m.find('\n') == std::string::npos);
        }
    }
}
