#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cstarmod/localization.hpp"

namespace cstarmod {

struct TrialConfig {
    std::vector<std::size_t> dims; // block sizes of the model algebra
    std::size_t max_rank = 3;      // module ranks sampled in 1..max_rank
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double tol = 1e-8;
};

struct ConditionReport {
    std::string condition;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst_residual = 0.0;
    // Serialized inputs of the first failing trial ({"trial":k,"input":doc}),
    // replayable through the command-line front end; empty when all passed.
    std::string witness;
};

struct TheoremReport {
    std::vector<ConditionReport> conditions;
    std::size_t total_failures() const;
    bool all_pass() const { return total_failures() == 0; }
};

// Test-only instrumentation: replacing the pseudoinverse lets a harness prove
// that a broken Penrose identity is actually detected instead of the suite
// passing vacuously.
struct VerifyHooks {
    std::function<ModuleMap(const ModuleMap&)> pinv_override;
};

// Randomized verification of the summand/adjoint/polar/inverse equivalences
// on the finite block-matrix model, one report entry per condition:
//   submodule-orthogonal-summand   every submodule is the range of a projection
//   biorthogonal-complement        F equals its double orthogonal complement
//   adjointability                 module maps pair correctly with an adjoint
//   kernel-summand                 Ker(T) is the range of a projection killing T
//   range-summand                  Ran(T) is the range of a projection fixing T
//   polar-decomposition            T = V|T| with matching kernel/range projectors
//   generalized-inverse            T† satisfies the four Penrose identities
//   topological-summand            an idempotent onto each submodule exists
//     (in this finite model the orthogonal projector itself witnesses it,
//     so the topological and orthogonal notions deliberately coincide)
// trials = 0 yields an empty report. Identical configs produce identical
// report bytes; trials are independent and merged by index.
TheoremReport verify_theorem(const TrialConfig& cfg);
TheoremReport verify_theorem(const TrialConfig& cfg, const VerifyHooks& hooks);

// Lemma-by-lemma regression suite over fresh random inputs; biconditional
// statements also run a perturbation branch (break one block, require the
// global predicate to fail):
//   idempotent-localization, complement-localization,
//   range-projector-localization, graph-unitary, adjoint-localization,
//   graph-summand, bounded-below, generalized-inverse, element-inverse,
//   inverse-localization.
TheoremReport lemma_suite(const TrialConfig& cfg);

// One JSON object per condition, newline separated, numbers at 17
// significant digits — byte-deterministic for a fixed config.
std::string serialize_report(const TheoremReport& report);

} // namespace cstarmod
