#pragma once

#include "bsynth/interaction.hpp"
#include "bsynth/transition_system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bsynth {

// A region (sup, sig) of a fixed transition system: support indexed by
// StateId, signature indexed by EventId.
struct Region {
    std::vector<std::uint8_t> support;
    std::vector<Interaction> signature;

    bool sup(StateId s) const { return support[s] != 0; }
    Interaction sig(EventId e) const { return signature[e]; }

    friend bool operator==(const Region&, const Region&) = default;
};

// Implicit form: the initial support plus the non-nop signature entries,
// keyed by event name. This is what region files store.
struct ImplicitRegion {
    bool sup_initial = false;
    std::map<std::string, Interaction> sig;

    friend bool operator==(const ImplicitRegion&, const ImplicitRegion&) = default;
};

// Total signature from the implicit form; absent events are nop. Throws
// Error(Reference) for unknown events and Error(Type) for interactions
// outside `type`.
std::vector<Interaction> to_signature(const TransitionSystem& ts, const NetType& type, const ImplicitRegion& r);
ImplicitRegion implicit_form(const TransitionSystem& ts, const Region& r);

// Propagates the support from the initial state along `tree` and checks the
// result on every edge. nullopt if some application is undefined or an edge
// is inconsistent. Throws Error(Argument) when sig has the wrong length and
// Error(Type) when a signature value is outside `type`.
std::optional<Region> expand_region(const TransitionSystem& ts, const NetType& type, bool sup_initial,
                                    std::span<const Interaction> sig, const SpanningTree& tree);
std::optional<Region> expand_region(const TransitionSystem& ts, const NetType& type, const ImplicitRegion& r);

struct RegionCheck {
    bool valid = true;
    std::optional<IndexedEdge> violation;  // first failing edge in canonical order

    explicit operator bool() const { return valid; }
};

RegionCheck validate_region(const TransitionSystem& ts, const NetType& type, const Region& r);

// Image of the path start -e1-> ... -en-> under r: supports on the states
// and signatures on the events.
struct PathImage {
    std::vector<bool> supports;            // n + 1 entries
    std::vector<Interaction> interactions; // n entries

    friend bool operator==(const PathImage&, const PathImage&) = default;
};

// `path` must be a connected walk through edges of ts beginning at `start`;
// throws Error(Argument) otherwise.
PathImage image_of_path(const TransitionSystem& ts, const Region& r, StateId start,
                        std::span<const IndexedEdge> path);

// Throws Error(Argument) when s == s2.
bool solves_ssp(const Region& r, StateId s, StateId s2);
// Throws Error(Argument) when (e, s) is not an ESSP atom of ts.
bool solves_essp(const TransitionSystem& ts, const Region& r, EventId e, StateId s);
bool solves(const TransitionSystem& ts, const Region& r, const SeparationAtom& atom);

// Number of events with a signature other than nop.
std::size_t restriction_count(const Region& r);

}  // namespace bsynth
