#pragma once

#include "bsynth/boolean_net.hpp"
#include "bsynth/interaction.hpp"
#include "bsynth/region.hpp"
#include "bsynth/transition_system.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsynth {

// 2 * sum_{i=0}^{min(d, num_events)} C(num_events, i) * num_non_nop^i,
// saturating at UINT64_MAX.
std::uint64_t candidate_count_formula(std::size_t num_events, std::size_t num_non_nop, std::size_t d);

struct EnumerationStats {
    std::uint64_t candidates_examined = 0;
    std::uint64_t valid_regions = 0;
    std::chrono::nanoseconds elapsed{0};
};

// Position of a region in the canonical enumeration order: restriction
// count, then the non-nop event subset (lexicographic), then their
// interactions, then the initial support (0 before 1).
struct CanonicalKey {
    std::size_t count = 0;
    std::vector<EventId> events;
    std::vector<Interaction> interactions;
    bool sup_initial = false;

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const TransitionSystem& ts, const Region& r);

// Lazily walks every candidate (sup(iota), sig) with at most d non-nop
// signature entries in canonical order and yields the ones that are regions.
class RegionEnumerator {
public:
    RegionEnumerator(const TransitionSystem& ts, NetType type, std::size_t d);
    RegionEnumerator(const TransitionSystem& ts, NetType type, std::size_t d, SpanningTree tree);

    // Next valid region, or nullopt once the candidates are exhausted.
    std::optional<Region> next();

    const EnumerationStats& stats() const { return stats_; }

private:
    bool advance();            // moves to the next candidate; false when done
    bool next_combination();
    bool next_assignment();

    const TransitionSystem* ts_;
    NetType type_;
    std::vector<Interaction> non_nop_;
    SpanningTree tree_;
    std::size_t max_count_;

    std::size_t count_ = 0;
    std::vector<EventId> combo_;
    std::vector<std::size_t> choice_;
    bool sup_initial_ = false;
    bool started_ = false;
    bool done_ = false;
    std::vector<Interaction> sig_;
    EnumerationStats stats_;
};

// Every d-restricted region of ts, in canonical order.
std::vector<Region> enumerate_valid_regions(const TransitionSystem& ts, const NetType& type, std::size_t d);

enum class SolveMode {
    Lazy,        // stop as soon as every atom has a witness
    Exhaustive,  // visit every candidate regardless
    Pruned,      // one constraint-propagating search per atom
};

struct SolveOptions {
    SolveMode mode = SolveMode::Lazy;
    // Greedily drop regions whose atoms are all covered by the others.
    bool shrink = false;
};

enum class Verdict { Solvable, Unsolvable };

struct SynthesisOutcome {
    Verdict verdict = Verdict::Unsolvable;
    std::size_t d = 0;  // effective bound after clamping to |E|
    std::vector<Region> admissible_set;
    // Every atom in canonical order with the index of its witness region.
    std::vector<std::pair<SeparationAtom, std::size_t>> witness_map;
    std::vector<SeparationAtom> unsolved_atoms;
    EnumerationStats stats;
};

// Decides whether a d-restricted admissible set exists. The admissible set
// holds, for each atom, the first solving region in canonical order,
// deduplicated and kept in canonical order.
SynthesisOutcome solve_drts(const TransitionSystem& ts, const NetType& type, std::size_t d,
                            const SolveOptions& options = {});

// First d-restricted region in canonical order that solves `atom`, found by
// a constraint-propagating search. Throws Error(Argument) if atom is not an
// atom of ts. `stats`, when given, receives the number of complete
// candidates that were checked.
std::optional<Region> solve_atom(const TransitionSystem& ts, const NetType& type, std::size_t d,
                                 const SeparationAtom& atom, EnumerationStats* stats = nullptr);

// One place per region, named p0, p1, ... in list order; transitions are the
// events of ts. Throws Error(Argument) when a region does not validate.
BooleanNet synthesize_net(const TransitionSystem& ts, const std::vector<Region>& regions, const NetType& type);

// True iff ts is isomorphic to the reachability graph of net.
bool verify_lemma1(const TransitionSystem& ts, const BooleanNet& net,
                   std::size_t cap = kDefaultReachabilityCap);

// Plain-text listing of the verdict, atoms, witness regions (in region file
// format) and counters. Elapsed time is deliberately omitted so the report
// is byte-reproducible.
std::string format_report(const TransitionSystem& ts, const NetType& type, const SynthesisOutcome& outcome);

}  // namespace bsynth
