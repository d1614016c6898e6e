#include "bsynth/boolean_net.hpp"

#include "bsynth/error.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace bsynth {

std::string Marking::bits() const {
    std::string out;
    out.reserve(values.size());
    for (auto v : values) out += v ? '1' : '0';
    return out;
}

BooleanNet BooleanNet::build(NetType type,
                             std::vector<PlaceDecl> places,
                             std::vector<std::string> transitions,
                             const std::vector<FlowEntry>& flow) {
    if (type.empty()) throw Error(ErrorKind::Type, "net type is empty");
    std::sort(places.begin(), places.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    std::sort(transitions.begin(), transitions.end());
    for (std::size_t k = 1; k < places.size(); ++k) {
        if (places[k].name == places[k - 1].name) {
            throw Error(ErrorKind::Argument, "duplicate place '" + places[k].name + "'");
        }
    }
    if (std::adjacent_find(transitions.begin(), transitions.end()) != transitions.end()) {
        throw Error(ErrorKind::Argument, "duplicate transition");
    }

    BooleanNet net;
    net.type_ = type;
    net.transitions_ = std::move(transitions);
    for (const auto& p : places) {
        net.places_.push_back(p.name);
        net.initial_.values.push_back(p.marked ? 1 : 0);
    }

    const auto n_t = net.transitions_.size();
    std::vector<std::uint8_t> given(net.places_.size() * n_t, 0);
    net.flow_.assign(net.places_.size() * n_t, Interaction::Nop);
    for (const auto& f : flow) {
        auto p = net.find_place(f.place);
        if (!p) throw Error(ErrorKind::Reference, "flow names unknown place '" + f.place + "'");
        auto t = net.find_transition(f.transition);
        if (!t) throw Error(ErrorKind::Reference, "flow names unknown transition '" + f.transition + "'");
        if (!type.contains(f.interaction)) {
            throw Error(ErrorKind::Type, "flow (" + f.place + ", " + f.transition + ") = " +
                                             std::string(name(f.interaction)) + " is not in type " +
                                             type.to_string());
        }
        const auto slot = *p * n_t + *t;
        if (given[slot] && net.flow_[slot] != f.interaction) {
            throw Error(ErrorKind::Argument, "conflicting flow for (" + f.place + ", " + f.transition + ")");
        }
        given[slot] = 1;
        net.flow_[slot] = f.interaction;
    }
    if (!type.contains(Interaction::Nop) && std::find(given.begin(), given.end(), 0) != given.end()) {
        throw Error(ErrorKind::Type, "flow is implicitly nop somewhere but nop is not in type " + type.to_string());
    }
    return net;
}

std::optional<TransitionId> BooleanNet::find_transition(std::string_view name) const {
    auto it = std::lower_bound(transitions_.begin(), transitions_.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == transitions_.end() || *it != name) return std::nullopt;
    return static_cast<TransitionId>(it - transitions_.begin());
}

std::optional<PlaceId> BooleanNet::find_place(std::string_view name) const {
    auto it = std::lower_bound(places_.begin(), places_.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == places_.end() || *it != name) return std::nullopt;
    return static_cast<PlaceId>(it - places_.begin());
}

std::optional<Marking> fire(const BooleanNet& net, const Marking& m, TransitionId t) {
    if (t >= net.num_transitions()) throw Error(ErrorKind::Reference, "transition index out of range");
    Marking next = m;
    for (PlaceId p = 0; p < net.num_places(); ++p) {
        auto v = apply(net.flow(p, t), m[p]);
        if (!v) return std::nullopt;
        next.values[p] = *v ? 1 : 0;
    }
    return next;
}

std::optional<Marking> fire(const BooleanNet& net, const Marking& m, std::string_view transition) {
    auto t = net.find_transition(transition);
    if (!t) throw Error(ErrorKind::Reference, "unknown transition '" + std::string(transition) + "'");
    return fire(net, m, *t);
}

TransitionSystem reachability_graph(const BooleanNet& net, std::size_t cap) {
    std::map<Marking, std::string> names;
    std::deque<Marking> queue;
    std::vector<Edge> edges;
    auto visit = [&](const Marking& m) -> const std::string& {
        auto [it, inserted] = names.emplace(m, "m" + m.bits());
        if (inserted) {
            if (names.size() > cap) {
                throw Error(ErrorKind::Limit, "reachability graph exceeds " + std::to_string(cap) + " markings");
            }
            queue.push_back(m);
        }
        return it->second;
    };
    const std::string initial = visit(net.initial_marking());
    while (!queue.empty()) {
        const Marking m = queue.front();
        queue.pop_front();
        const std::string src = names.at(m);
        for (TransitionId t = 0; t < net.num_transitions(); ++t) {
            if (auto next = fire(net, m, t)) {
                const std::string dst = visit(*next);
                edges.push_back({src, net.transition_name(t), dst});
            }
        }
    }
    return TransitionSystem::from_edges(edges, initial);
}

DependencyNumber dependency_number(const BooleanNet& net) {
    DependencyNumber d;
    d.per_place.assign(net.num_places(), 0);
    for (PlaceId p = 0; p < net.num_places(); ++p) {
        for (TransitionId t = 0; t < net.num_transitions(); ++t) {
            if (net.flow(p, t) != Interaction::Nop) ++d.per_place[p];
        }
        d.overall = std::max(d.overall, d.per_place[p]);
    }
    return d;
}

}  // namespace bsynth
