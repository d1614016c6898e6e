#include "bsynth/transition_system.hpp"

#include "bsynth/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace bsynth {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::optional<std::uint32_t> index_of(const std::vector<std::string>& sorted, std::string_view name) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == sorted.end() || *it != name) return std::nullopt;
    return static_cast<std::uint32_t>(it - sorted.begin());
}

}  // namespace

TransitionSystem TransitionSystem::build(std::vector<std::string> states,
                                         std::vector<std::string> events,
                                         const std::vector<Edge>& edges,
                                         const std::string& initial) {
    TransitionSystem ts;
    ts.states_ = sorted_unique(std::move(states));
    ts.events_ = sorted_unique(std::move(events));

    auto state = [&](const std::string& n) {
        auto id = index_of(ts.states_, n);
        if (!id) throw Error(ErrorKind::Reference, "undeclared state '" + n + "'");
        return *id;
    };
    auto event = [&](const std::string& n) {
        auto id = index_of(ts.events_, n);
        if (!id) throw Error(ErrorKind::Reference, "undeclared event '" + n + "'");
        return *id;
    };

    ts.initial_ = state(initial);
    const auto n_events = ts.events_.size();
    ts.delta_.assign(ts.states_.size() * n_events, -1);
    for (const auto& e : edges) {
        const auto s = state(e.src);
        const auto ev = event(e.event);
        const auto d = state(e.dst);
        auto& slot = ts.delta_[static_cast<std::size_t>(s) * n_events + ev];
        if (slot >= 0 && static_cast<StateId>(slot) != d) {
            throw Error(ErrorKind::Determinism,
                        "nondeterministic edges at (" + e.src + ", " + e.event + "): targets '" +
                            ts.states_[static_cast<std::size_t>(slot)] + "' and '" + e.dst + "'");
        }
        slot = static_cast<std::int32_t>(d);
    }

    ts.by_event_.assign(n_events, {});
    for (StateId s = 0; s < ts.states_.size(); ++s) {
        for (EventId e = 0; e < n_events; ++e) {
            if (auto t = ts.target(s, e)) {
                ts.edges_.push_back({s, e, *t});
                ts.by_event_[e].push_back({s, e, *t});
            }
        }
    }
    for (EventId e = 0; e < n_events; ++e) {
        if (ts.by_event_[e].empty()) {
            throw Error(ErrorKind::Reference, "event '" + ts.events_[e] + "' labels no edge");
        }
    }

    std::vector<bool> seen(ts.states_.size(), false);
    std::deque<StateId> queue{ts.initial_};
    seen[ts.initial_] = true;
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < n_events; ++e) {
            if (auto t = ts.target(s, e); t && !seen[*t]) {
                seen[*t] = true;
                queue.push_back(*t);
            }
        }
    }
    std::ostringstream unreachable;
    bool any = false;
    for (StateId s = 0; s < seen.size(); ++s) {
        if (!seen[s]) {
            unreachable << (any ? ", " : "") << ts.states_[s];
            any = true;
        }
    }
    if (any) throw Error(ErrorKind::Reachability, "unreachable states: " + unreachable.str());
    return ts;
}

TransitionSystem TransitionSystem::from_edges(const std::vector<Edge>& edges, const std::string& initial) {
    std::vector<std::string> states{initial};
    std::vector<std::string> events;
    for (const auto& e : edges) {
        states.push_back(e.src);
        states.push_back(e.dst);
        events.push_back(e.event);
    }
    return build(std::move(states), std::move(events), edges, initial);
}

std::optional<StateId> TransitionSystem::find_state(std::string_view name) const {
    return index_of(states_, name);
}

std::optional<EventId> TransitionSystem::find_event(std::string_view name) const {
    return index_of(events_, name);
}

SpanningTree SpanningTree::from_parents(const TransitionSystem& ts,
                                        std::vector<std::optional<TreeEdge>> parent) {
    if (parent.size() != ts.num_states()) {
        throw Error(ErrorKind::Argument, "spanning tree size does not match the state count");
    }
    if (parent[ts.initial()]) throw Error(ErrorKind::Argument, "initial state has a tree parent");

    std::vector<std::vector<StateId>> children(ts.num_states());
    for (StateId s = 0; s < parent.size(); ++s) {
        if (s == ts.initial()) continue;
        const auto& p = parent[s];
        if (!p) throw Error(ErrorKind::Argument, "state '" + ts.state_name(s) + "' has no tree parent");
        if (p->src >= ts.num_states() || p->event >= ts.num_events() || ts.target(p->src, p->event) != s) {
            throw Error(ErrorKind::Argument, "tree edge into '" + ts.state_name(s) + "' is not an edge");
        }
        children[p->src].push_back(s);
    }

    SpanningTree tree;
    tree.parent_ = std::move(parent);
    tree.order_.reserve(ts.num_states());
    tree.order_.push_back(ts.initial());
    for (std::size_t k = 0; k < tree.order_.size(); ++k) {
        for (auto c : children[tree.order_[k]]) tree.order_.push_back(c);
    }
    if (tree.order_.size() != ts.num_states()) {
        throw Error(ErrorKind::Argument, "tree parents contain a cycle");
    }
    return tree;
}

SpanningTree spanning_tree(const TransitionSystem& ts) {
    std::vector<std::optional<TreeEdge>> parent(ts.num_states());
    std::vector<bool> seen(ts.num_states(), false);
    std::deque<StateId> queue{ts.initial()};
    seen[ts.initial()] = true;
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < ts.num_events(); ++e) {
            if (auto t = ts.target(s, e); t && !seen[*t]) {
                seen[*t] = true;
                parent[*t] = TreeEdge{s, e};
                queue.push_back(*t);
            }
        }
    }
    return SpanningTree::from_parents(ts, std::move(parent));
}

SspAtom make_ssp(StateId a, StateId b) {
    if (a == b) throw Error(ErrorKind::Argument, "SSP atom needs two distinct states");
    return a < b ? SspAtom{a, b} : SspAtom{b, a};
}

std::vector<SeparationAtom> enumerate_atoms(const TransitionSystem& ts) {
    std::vector<SeparationAtom> atoms;
    const auto n = static_cast<StateId>(ts.num_states());
    for (StateId a = 0; a < n; ++a) {
        for (StateId b = a + 1; b < n; ++b) atoms.emplace_back(SspAtom{a, b});
    }
    for (EventId e = 0; e < ts.num_events(); ++e) {
        for (StateId s = 0; s < n; ++s) {
            if (!ts.occurs(s, e)) atoms.emplace_back(EsspAtom{e, s});
        }
    }
    return atoms;
}

bool is_atom_of(const TransitionSystem& ts, const SeparationAtom& atom) {
    if (const auto* ssp = std::get_if<SspAtom>(&atom)) {
        return ssp->first < ssp->second && ssp->second < ts.num_states();
    }
    const auto& essp = std::get<EsspAtom>(atom);
    return essp.event < ts.num_events() && essp.state < ts.num_states() && !ts.occurs(essp.state, essp.event);
}

std::string format_atom(const TransitionSystem& ts, const SeparationAtom& atom) {
    if (const auto* ssp = std::get_if<SspAtom>(&atom)) {
        return "ssp:" + ts.state_name(ssp->first) + "," + ts.state_name(ssp->second);
    }
    const auto& essp = std::get<EsspAtom>(atom);
    return "essp:" + ts.event_name(essp.event) + "," + ts.state_name(essp.state);
}

SeparationAtom parse_atom(const TransitionSystem& ts, std::string_view text) {
    const auto colon = text.find(':');
    const auto comma = text.find(',');
    if (colon == std::string_view::npos || comma == std::string_view::npos || comma < colon ||
        text.find(',', comma + 1) != std::string_view::npos) {
        throw Error(ErrorKind::Parse, "malformed atom '" + std::string(text) + "'");
    }
    const auto kind = text.substr(0, colon);
    const auto lhs = text.substr(colon + 1, comma - colon - 1);
    const auto rhs = text.substr(comma + 1);
    auto state = [&](std::string_view n) {
        auto s = ts.find_state(n);
        if (!s) throw Error(ErrorKind::Reference, "unknown state '" + std::string(n) + "'");
        return *s;
    };
    if (kind == "ssp") {
        const auto a = state(lhs);
        const auto b = state(rhs);
        if (a == b) throw Error(ErrorKind::Reference, "SSP atom names the same state twice");
        return make_ssp(a, b);
    }
    if (kind == "essp") {
        auto e = ts.find_event(lhs);
        if (!e) throw Error(ErrorKind::Reference, "unknown event '" + std::string(lhs) + "'");
        const auto s = state(rhs);
        if (ts.occurs(s, *e)) {
            throw Error(ErrorKind::Reference,
                        "event '" + std::string(lhs) + "' occurs at '" + std::string(rhs) + "'; not an ESSP atom");
        }
        return EsspAtom{*e, s};
    }
    throw Error(ErrorKind::Parse, "atom kind must be ssp or essp, got '" + std::string(kind) + "'");
}

std::optional<std::vector<StateId>> isomorphic(const TransitionSystem& a, const TransitionSystem& b) {
    if (a.num_states() != b.num_states() || a.num_events() != b.num_events() ||
        a.num_edges() != b.num_edges()) {
        return std::nullopt;
    }
    // Events are sorted in both, so equal name lists give the same indexing.
    for (EventId e = 0; e < a.num_events(); ++e) {
        if (a.event_name(e) != b.event_name(e)) return std::nullopt;
    }

    constexpr StateId kUnset = static_cast<StateId>(-1);
    std::vector<StateId> phi(a.num_states(), kUnset);
    std::vector<bool> used(b.num_states(), false);
    std::deque<StateId> queue{a.initial()};
    phi[a.initial()] = b.initial();
    used[b.initial()] = true;
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < a.num_events(); ++e) {
            const auto ta = a.target(s, e);
            const auto tb = b.target(phi[s], e);
            if (ta.has_value() != tb.has_value()) return std::nullopt;
            if (!ta) continue;
            if (phi[*ta] == kUnset) {
                if (used[*tb]) return std::nullopt;
                phi[*ta] = *tb;
                used[*tb] = true;
                queue.push_back(*ta);
            } else if (phi[*ta] != *tb) {
                return std::nullopt;
            }
        }
    }
    return phi;
}

}  // namespace bsynth
