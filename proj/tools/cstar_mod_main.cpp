// Command-line front end: single computations on JSON documents plus the
// randomized verification suites. Exit code 0 = success / all checks passed,
// 1 = a verification suite reported failures, 2 = malformed input (one-line
// diagnostic on stderr naming the offending field).

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cstarmod/json_io.hpp"
#include "cstarmod/localization.hpp"
#include "cstarmod/verify.hpp"

namespace {

using namespace cstarmod;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Document load(const std::string& path) { return parse_document(read_file(path)); }

template <typename T>
const T& expect_payload(const Document& doc, const char* command, const char* wanted) {
    const T* p = std::get_if<T>(&doc.payload);
    if (!p) throw Error(std::string(command) + ": document is not " + wanted);
    return *p;
}

void print_penrose(const std::array<double, 4>& r) {
    std::cout << "penrose TST-T = " << format_double(r[0]) << "\n";
    std::cout << "penrose STS-S = " << format_double(r[1]) << "\n";
    std::cout << "penrose (TS)*-TS = " << format_double(r[2]) << "\n";
    std::cout << "penrose (ST)*-ST = " << format_double(r[3]) << "\n";
}

int cmd_pinv(const std::string& path) {
    const Document doc = load(path);
    const ModuleMap& t = expect_payload<ModuleMap>(doc, "pinv", "a map");
    const ModuleMap s = pinv_op(t);
    std::cout << serialize_map(s) << "\n";
    print_penrose(penrose_residuals(t, s));
    return 0;
}

int cmd_polar(const std::string& path) {
    const Document doc = load(path);
    const ModuleMap& t = expect_payload<ModuleMap>(doc, "polar", "a map");
    const PolarParts pp = polar_op(t);
    std::cout << serialize_map(pp.v) << "\n";
    std::cout << serialize_map(pp.abs) << "\n";
    const Seminorm full = Seminorm::full(t.algebra());
    const double factor = op_seminorm(full, t - compose(pp.v, pp.abs));
    const ModuleMap vstar_v = compose(adjoint_op(pp.v), pp.v);
    const double isometry = op_seminorm(full, compose(pp.v, vstar_v) - pp.v);
    std::cout << "residual T-V|T| = " << format_double(factor) << "\n";
    std::cout << "residual VV*V-V = " << format_double(isometry) << "\n";
    return 0;
}

int cmd_adjoint(const std::string& path) {
    const Document doc = load(path);
    const ModuleMap& t = expect_payload<ModuleMap>(doc, "adjoint", "a map");
    std::cout << serialize_map(adjoint_op(t)) << "\n";
    return 0;
}

int cmd_graph_proj(const std::string& path) {
    const Document doc = load(path);
    const ModuleMap& t = expect_payload<ModuleMap>(doc, "graph-proj", "a map");
    std::cout << serialize_map(graph_projector(t)) << "\n";
    return 0;
}

int cmd_complement(const std::string& path) {
    const Document doc = load(path);
    const Submodule& f = expect_payload<Submodule>(doc, "complement", "a submodule");
    std::cout << serialize_map(orth_complement(f)) << "\n";
    std::cout << "biorth residual = " << format_double(biorth_residual(f)) << "\n";
    return 0;
}

int cmd_check_raw(const std::string& path) {
    const Document doc = load(path);
    const RawLinearMap& r =
        expect_payload<RawLinearMap>(doc, "check-raw", "a raw linear map");
    const auto verdict = module_map_recognize(r);
    if (const ModuleMap* t = std::get_if<ModuleMap>(&verdict)) {
        std::cout << "verdict = ModuleMap\n";
        std::cout << serialize_map(*t) << "\n";
    } else {
        const auto& rej = std::get<ModuleMapRejection>(verdict);
        std::cout << "verdict = NotAModuleMap\n";
        std::cout << "block = " << rej.block << "\n";
        std::cout << "unit = (" << rej.unit_row << "," << rej.unit_col << ")\n";
        std::cout << "residual = " << format_double(rej.residual) << "\n";
    }
    return 0; // the verdict is the output, not an error
}

int cmd_localize(const std::string& path, const std::vector<std::size_t>& support) {
    const Document doc = load(path);
    // A support document has no algebra to localize over; the quotient of the
    // lattice is plain intersection.
    if (const SupportPayload* sp = std::get_if<SupportPayload>(&doc.payload)) {
        std::vector<std::size_t> sorted = support;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> kept;
        for (std::size_t i : sp->support)
            if (std::binary_search(sorted.begin(), sorted.end(), i)) kept.push_back(i);
        std::cout << serialize_seminorm(kept) << "\n";
        return 0;
    }

    const auto algebra_of = [&]() -> const BlockAlgebra& {
        if (const BlockAlgebra* a = std::get_if<BlockAlgebra>(&doc.payload)) return *a;
        if (const AlgElem* a = std::get_if<AlgElem>(&doc.payload)) return a->algebra();
        if (const ModVector* x = std::get_if<ModVector>(&doc.payload))
            return x->module().algebra();
        if (const Submodule* f = std::get_if<Submodule>(&doc.payload))
            return f->module().algebra();
        if (const ModuleMap* t = std::get_if<ModuleMap>(&doc.payload)) return t->algebra();
        return std::get<RawLinearMap>(doc.payload).algebra();
    };
    const Seminorm p(algebra_of(), support);

    if (const BlockAlgebra* a = std::get_if<BlockAlgebra>(&doc.payload)) {
        (void)a;
        std::cout << serialize_algebra(localized_algebra(p)) << "\n";
    } else if (const AlgElem* a = std::get_if<AlgElem>(&doc.payload)) {
        std::cout << serialize_element(alg_localize(p, *a)) << "\n";
    } else if (const ModVector* x = std::get_if<ModVector>(&doc.payload)) {
        std::cout << serialize_vector(vec_localize(p, *x)) << "\n";
    } else if (const Submodule* f = std::get_if<Submodule>(&doc.payload)) {
        std::cout << serialize_submodule(submodule_localize(p, *f)) << "\n";
    } else if (const ModuleMap* t = std::get_if<ModuleMap>(&doc.payload)) {
        std::cout << serialize_map(localize_op(p, *t).map) << "\n";
    } else {
        const RawLinearMap& r = std::get<RawLinearMap>(doc.payload);
        std::vector<CMatrix> blocks;
        for (std::size_t i : p.support()) blocks.push_back(r.block(i));
        const RawLinearMap lr(localized_algebra(p), r.domain_rank(), r.codomain_rank(),
                              std::move(blocks));
        std::cout << serialize_raw(lr) << "\n";
    }
    return 0;
}

int cmd_c_bound(const std::string& path, const std::vector<std::size_t>& support) {
    const Document doc = load(path);
    const ModuleMap& t = expect_payload<ModuleMap>(doc, "c-bound", "a map");
    const Seminorm p(t.algebra(), support);
    const BoundedBelow bb = bounded_below_constant(t, p);
    std::cout << "c_p = " << format_double(bb.value) << "\n";
    std::cout << "degenerate = " << (bb.degenerate ? "true" : "false") << "\n";
    return 0;
}

int cmd_elem_pinv(const std::string& path) {
    const Document doc = load(path);
    const AlgElem& a = expect_payload<AlgElem>(doc, "elem-pinv", "an element");
    const AlgElem b = elem_pinv(a);
    std::cout << serialize_element(b) << "\n";
    const Seminorm full = Seminorm::full(a.algebra());
    const AlgElem ab = a * b;
    const AlgElem ba = b * a;
    std::cout << "penrose TST-T = " << format_double(alg_seminorm(full, a * b * a - a)) << "\n";
    std::cout << "penrose STS-S = " << format_double(alg_seminorm(full, b * a * b - b)) << "\n";
    std::cout << "penrose (TS)*-TS = " << format_double(alg_seminorm(full, star(ab) - ab))
              << "\n";
    std::cout << "penrose (ST)*-ST = " << format_double(alg_seminorm(full, star(ba) - ba))
              << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const TrialConfig& cfg) {
    TheoremReport report;
    if (suite == "theorem") {
        report = verify_theorem(cfg);
    } else if (suite == "lemmas") {
        report = lemma_suite(cfg);
    } else {
        throw Error("verify: unknown suite '" + suite + "' (expected theorem or lemmas)");
    }
    std::cout << serialize_report(report);
    std::cout << "failures = " << report.total_failures() << "\n";
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert-module toolkit over finite direct sums of matrix algebras"};
    app.require_subcommand(1);

    std::string path;
    std::vector<std::size_t> support;

    auto* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse of a module map");
    pinv->add_option("file", path, "map document")->required();

    auto* polar = app.add_subcommand("polar", "polar decomposition T = V|T|");
    polar->add_option("file", path, "map document")->required();

    auto* adjoint = app.add_subcommand("adjoint", "adjoint of a module map");
    adjoint->add_option("file", path, "map document")->required();

    auto* graph = app.add_subcommand("graph-proj", "projection onto the graph of a map");
    graph->add_option("file", path, "map document")->required();

    auto* complement =
        app.add_subcommand("complement", "orthogonal complement projector of a submodule");
    complement->add_option("file", path, "submodule document")->required();

    auto* checkraw = app.add_subcommand("check-raw", "module-map recognition verdict");
    checkraw->add_option("file", path, "raw linear map document")->required();

    auto* localize = app.add_subcommand("localize", "restrict a document to a block support");
    localize->add_option("--support", support, "0-based block indices")
        ->required()
        ->delimiter(',');
    localize->add_option("file", path, "document")->required();

    auto* cbound = app.add_subcommand("c-bound", "bounded-below constant at a support");
    cbound->add_option("--support", support, "0-based block indices")
        ->required()
        ->delimiter(',');
    cbound->add_option("file", path, "map document")->required();

    auto* elempinv = app.add_subcommand("elem-pinv", "Moore-Penrose inverse of an element");
    elempinv->add_option("file", path, "element document")->required();

    std::string suite;
    cstarmod::TrialConfig cfg;
    auto* verify = app.add_subcommand("verify", "randomized verification suites");
    verify->add_option("--suite", suite, "theorem or lemmas")->required();
    verify->add_option("--dims", cfg.dims, "block sizes")->required()->delimiter(',');
    verify->add_option("--trials", cfg.trials, "trial count");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--tol", cfg.tol, "pass tolerance");
    verify->add_option("--max-rank", cfg.max_rank, "module rank bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pinv->parsed()) return cmd_pinv(path);
        if (polar->parsed()) return cmd_polar(path);
        if (adjoint->parsed()) return cmd_adjoint(path);
        if (graph->parsed()) return cmd_graph_proj(path);
        if (complement->parsed()) return cmd_complement(path);
        if (checkraw->parsed()) return cmd_check_raw(path);
        if (localize->parsed()) return cmd_localize(path, support);
        if (cbound->parsed()) return cmd_c_bound(path, support);
        if (elempinv->parsed()) return cmd_elem_pinv(path);
        if (verify->parsed()) return cmd_verify(suite, cfg);
    } catch (const cstarmod::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
