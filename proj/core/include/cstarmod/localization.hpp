#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cstarmod/operator.hpp"

namespace cstarmod {

// The image of a module map under the quotient at a seminorm: a map over the
// support-restricted algebra, remembering where it came from.
struct LocalizedOp {
    Seminorm seminorm;
    ModuleMap map;
};

LocalizedOp localize_op(const Seminorm& p, const ModuleMap& t);

// Connecting map between localizations: drop the blocks of support(p) not in
// support(q). Functorial: connect(p,q,localize(p,t)) equals localize(q,t)
// bit-for-bit.
LocalizedOp connect_op(const Seminorm& p, const Seminorm& q, const LocalizedOp& tp);

// The seminorm family used for "for each p" checks: every subset when the
// algebra has at most 4 blocks (at most 16 of them), otherwise the full and
// singleton supports plus 8 seeded random subsets.
std::vector<Seminorm> seminorm_family(const BlockAlgebra& algebra, std::uint64_t seed = 0);

// The isomorphism between the localized graph of t and the graph of the
// localized map. u is a partial isometry whose initial projector is the
// localization of graph_projector(t) and whose final projector is the graph
// projector of localize_op(p, t); in this blockwise model the two coincide,
// which is exactly the content of the isomorphism lemma at finite scale.
struct GraphUnitary {
    LocalizedOp u;
    ModuleMap initial; // u*u, on the localized domain ⊕ codomain
    ModuleMap final;   // uu*
};
GraphUnitary graph_unitary(const ModuleMap& t, const Seminorm& p);

// One law × seminorm check inside a commutation report.
struct LawCheck {
    std::string law;
    std::vector<std::size_t> support;
    double residual = 0.0;
    bool pass = false;
};

struct CommutationReport {
    std::vector<LawCheck> entries;
    double worst_residual = 0.0; // over the lawful entries (falsification excluded)
    bool all_pass = false;
};

// For each trial map (the given t, then trials-1 random maps of the same
// shape) and each seminorm, checks that localization commutes with the
// adjoint, the pseudoinverse, the polar parts and the range projector, and
// that the projection predicate transfers. One extra entry per trial,
// law "projection-transfer-falsification", corrupts a single block of a
// genuine projection and passes iff the global predicate detects it.
CommutationReport commutation_suite(const ModuleMap& t, const std::vector<Seminorm>& seminorms,
                                    std::size_t trials, std::uint64_t seed);

} // namespace cstarmod
