#pragma once

#include "bsynth/hitting_set.hpp"
#include "bsynth/interaction.hpp"
#include "bsynth/region.hpp"
#include "bsynth/transition_system.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bsynth {

// The four gadget constructions, named after the hardness results they
// realize.
enum class Construction { T11, T12, T13, T14 };

std::string_view name(Construction c);  // "1.1" ... "1.4"
// Throws Error(Argument) for anything but "1.1", "1.2", "1.3", "1.4".
Construction parse_construction(std::string_view text);

// Output of a reduction: the TS, the restriction bound, the key ESSP atom
// and the interaction type the construction targets.
//
// Identifiers follow a fixed scheme. States: bot_<i>, h_<k> (1.1) or
// h_<g>_<k>, t_<i>_<k>, q_<i> and s_<i>.<j>_<g>_<k> on relevant paths.
// Events: theta_<i>, w_<i>, u_<i>, a_<i>_<j>, c_<i>_<n>, v_<i>.<j>_<n>,
// oplus_<i>.<j>_<n>, k, z, o, z1..z4, o1, o2, plus the universe elements
// under their own names.
struct ReductionArtifact {
    Construction construction;
    TransitionSystem ts;
    std::size_t d;
    EsspAtom alpha;
    NetType default_type;
    // (symbol, identifier) for every gadget symbol, in construction order.
    std::vector<std::pair<std::string, std::string>> naming;
};

// One relevant path P^{i,j}_{g,n}: e^i_j is relevant for gadget g and this
// is the n-th gadget for which it is. Indices are 1-based.
struct RelevantPath {
    std::size_t source_set;   // i
    std::size_t source_pos;   // j
    std::size_t gadget;       // g = i_n
    std::size_t position;     // n
    std::string relevant_event;   // e^i_j
    std::string preceding_event;  // e^i_{j-1}
    std::vector<std::string> states;  // n + 2 states
    std::vector<std::string> events;  // v_n, oplus_n, ..., oplus_1

    friend bool operator==(const RelevantPath&, const RelevantPath&) = default;
};

// Relevant paths grouped by target gadget (index g-1), each group sorted by
// (source_set, source_pos).
std::vector<std::vector<RelevantPath>> relevant_paths(const HittingSetInstance& instance);

// Each reducer throws Error(Argument) if a universe element collides with an
// identifier the construction generates.
ReductionArtifact reduce_t11(const HittingSetInstance& instance);
ReductionArtifact reduce_t12(const HittingSetInstance& instance);
ReductionArtifact reduce_t13(const HittingSetInstance& instance);
ReductionArtifact reduce_t14(const HittingSetInstance& instance);
ReductionArtifact reduce(Construction c, const HittingSetInstance& instance);

// The explicit region solving alpha built from a hitting set (universe
// indices). Throws Error(Argument) if the set does not hit every M_i or is
// larger than kappa.
Region alpha_witness_region(const ReductionArtifact& artifact, const HittingSetInstance& instance,
                            const std::vector<std::size_t>& hitting_set);
// Implicit form of the same region, before expansion.
ImplicitRegion alpha_witness_implicit(const ReductionArtifact& artifact, const HittingSetInstance& instance,
                                      const std::vector<std::size_t>& hitting_set);

// Plain-text table: construction, d, alpha, default type, sizes and the
// naming map.
std::string format_metadata(const ReductionArtifact& artifact);

}  // namespace bsynth
