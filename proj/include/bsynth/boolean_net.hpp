#pragma once

#include "bsynth/interaction.hpp"
#include "bsynth/transition_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace bsynth {

using PlaceId = std::uint32_t;
using TransitionId = std::uint32_t;

// Boolean marking, indexed by place in canonical place order.
struct Marking {
    std::vector<std::uint8_t> values;

    bool operator[](PlaceId p) const { return values[p] != 0; }
    // Bit-string in place order, e.g. "10".
    std::string bits() const;

    friend auto operator<=>(const Marking&, const Marking&) = default;
};

struct FlowEntry {
    std::string place;
    std::string transition;
    Interaction interaction;
};

struct PlaceDecl {
    std::string name;
    bool marked;
};

// A Boolean Petri net (P, T, f, M0) of type tau. Places and transitions are
// sorted by identifier; the flow is a dense place x transition table.
class BooleanNet {
public:
    // Omitted (place, transition) pairs default to nop, which then has to be
    // in `type`. Throws Error(Type) for a flow value outside the type,
    // Error(Reference) for unknown identifiers and Error(Argument) for
    // duplicate declarations or conflicting flow entries.
    static BooleanNet build(NetType type,
                            std::vector<PlaceDecl> places,
                            std::vector<std::string> transitions,
                            const std::vector<FlowEntry>& flow);

    const NetType& type() const { return type_; }
    std::size_t num_places() const { return places_.size(); }
    std::size_t num_transitions() const { return transitions_.size(); }
    const std::string& place_name(PlaceId p) const { return places_[p]; }
    const std::string& transition_name(TransitionId t) const { return transitions_[t]; }
    std::optional<TransitionId> find_transition(std::string_view name) const;
    std::optional<PlaceId> find_place(std::string_view name) const;

    Interaction flow(PlaceId p, TransitionId t) const { return flow_[p * transitions_.size() + t]; }
    const Marking& initial_marking() const { return initial_; }

private:
    BooleanNet() = default;

    NetType type_;
    std::vector<std::string> places_;
    std::vector<std::string> transitions_;
    std::vector<Interaction> flow_;
    Marking initial_;
};

// M' with M'(p) = f(p,t)(M(p)) for every place, or nullopt when t is not
// enabled.
std::optional<Marking> fire(const BooleanNet& net, const Marking& m, TransitionId t);
// Name-based variant; throws Error(Reference) for an unknown transition.
std::optional<Marking> fire(const BooleanNet& net, const Marking& m, std::string_view transition);

inline constexpr std::size_t kDefaultReachabilityCap = std::size_t{1} << 20;

// Breadth-first reachability graph. States are named "m" followed by the
// marking bit-string. Throws Error(Limit) when more than `cap` markings are
// reachable.
TransitionSystem reachability_graph(const BooleanNet& net, std::size_t cap = kDefaultReachabilityCap);

struct DependencyNumber {
    std::vector<std::size_t> per_place;
    std::size_t overall = 0;
};

DependencyNumber dependency_number(const BooleanNet& net);

}  // namespace bsynth
