#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bsynth {

using StateId = std::uint32_t;
using EventId = std::uint32_t;

// An edge given by identifier names, as read from a file or built by hand.
struct Edge {
    std::string src;
    std::string event;
    std::string dst;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct IndexedEdge {
    StateId src;
    EventId event;
    StateId dst;

    friend bool operator==(const IndexedEdge&, const IndexedEdge&) = default;
    friend auto operator<=>(const IndexedEdge&, const IndexedEdge&) = default;
};

// Deterministic, initialized, reachable labeled transition system.
//
// States and events are stored sorted by identifier, so index order is the
// canonical (lexicographic) order. Values are immutable once built.
class TransitionSystem {
public:
    // Validates and builds a TS. States and events named by edges or by
    // `initial` must be declared. Throws Error with kind Reference,
    // Determinism or Reachability.
    static TransitionSystem build(std::vector<std::string> states,
                                  std::vector<std::string> events,
                                  const std::vector<Edge>& edges,
                                  const std::string& initial);

    // Declares every state and event implicitly by use.
    static TransitionSystem from_edges(const std::vector<Edge>& edges, const std::string& initial);

    std::size_t num_states() const { return states_.size(); }
    std::size_t num_events() const { return events_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::string& state_name(StateId s) const { return states_[s]; }
    const std::string& event_name(EventId e) const { return events_[e]; }
    std::span<const std::string> state_names() const { return states_; }
    std::span<const std::string> event_names() const { return events_; }

    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<EventId> find_event(std::string_view name) const;

    StateId initial() const { return initial_; }

    // delta(s, e), if defined.
    std::optional<StateId> target(StateId s, EventId e) const {
        const auto t = delta_[static_cast<std::size_t>(s) * events_.size() + e];
        return t < 0 ? std::nullopt : std::optional<StateId>(static_cast<StateId>(t));
    }
    bool occurs(StateId s, EventId e) const { return target(s, e).has_value(); }

    // All edges sorted by (src, event).
    std::span<const IndexedEdge> edges() const { return edges_; }
    // Edges labeled by one event, sorted by source.
    std::span<const IndexedEdge> edges_of(EventId e) const { return by_event_[e]; }

    Edge named(const IndexedEdge& e) const { return {states_[e.src], events_[e.event], states_[e.dst]}; }

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

private:
    TransitionSystem() = default;

    std::vector<std::string> states_;
    std::vector<std::string> events_;
    std::vector<std::int32_t> delta_;
    std::vector<IndexedEdge> edges_;
    std::vector<std::vector<IndexedEdge>> by_event_;
    StateId initial_ = 0;
    std::string label_;
};

struct TreeEdge {
    StateId src;
    EventId event;

    friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// A spanning tree rooted at the initial state: every non-initial state has
// exactly one incoming tree edge.
class SpanningTree {
public:
    // Checks that `parent` describes a spanning tree of `ts`: no entry for
    // the initial state, one existing edge for every other state, and no
    // cycles. Throws Error(Argument) otherwise.
    static SpanningTree from_parents(const TransitionSystem& ts,
                                     std::vector<std::optional<TreeEdge>> parent);

    const std::optional<TreeEdge>& parent(StateId s) const { return parent_[s]; }
    std::size_t num_edges() const { return order_.empty() ? 0 : order_.size() - 1; }

    // States ordered so that each parent precedes its children; starts with
    // the initial state.
    std::span<const StateId> order() const { return order_; }

    friend bool operator==(const SpanningTree& a, const SpanningTree& b) { return a.parent_ == b.parent_; }

private:
    std::vector<std::optional<TreeEdge>> parent_;
    std::vector<StateId> order_;
};

// Breadth-first tree from the initial state; states are expanded in
// discovery order and events in canonical order, first discovery wins.
SpanningTree spanning_tree(const TransitionSystem& ts);

struct SspAtom {
    StateId first;   // first < second
    StateId second;
    friend auto operator<=>(const SspAtom&, const SspAtom&) = default;
};

struct EsspAtom {
    EventId event;
    StateId state;   // event does not occur at state
    friend auto operator<=>(const EsspAtom&, const EsspAtom&) = default;
};

using SeparationAtom = std::variant<SspAtom, EsspAtom>;

SspAtom make_ssp(StateId a, StateId b);

// All SSP atoms (unordered pairs, once each) followed by all ESSP atoms,
// each group in canonical order.
std::vector<SeparationAtom> enumerate_atoms(const TransitionSystem& ts);

bool is_atom_of(const TransitionSystem& ts, const SeparationAtom& atom);

// "ssp:s,s'" or "essp:e,s" with identifier names.
std::string format_atom(const TransitionSystem& ts, const SeparationAtom& atom);
// Inverse of format_atom; throws Error(Parse) on bad syntax and
// Error(Reference) when the atom does not exist in ts.
SeparationAtom parse_atom(const TransitionSystem& ts, std::string_view text);

// The unique label-preserving bijection mapping initial to initial, if one
// exists. Result is indexed by states of `a` and holds states of `b`.
std::optional<std::vector<StateId>> isomorphic(const TransitionSystem& a, const TransitionSystem& b);

}  // namespace bsynth
