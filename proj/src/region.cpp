#include "bsynth/region.hpp"

#include "bsynth/error.hpp"

#include <algorithm>

namespace bsynth {

std::vector<Interaction> to_signature(const TransitionSystem& ts, const NetType& type, const ImplicitRegion& r) {
    std::vector<Interaction> sig(ts.num_events(), Interaction::Nop);
    for (const auto& [event, i] : r.sig) {
        auto e = ts.find_event(event);
        if (!e) throw Error(ErrorKind::Reference, "signature names unknown event '" + event + "'");
        if (!type.contains(i)) {
            throw Error(ErrorKind::Type, "signature value " + std::string(name(i)) + " for '" + event +
                                             "' is not in type " + type.to_string());
        }
        sig[*e] = i;
    }
    for (auto i : sig) {
        if (!type.contains(i)) {
            throw Error(ErrorKind::Type, "implicit nop signature but nop is not in type " + type.to_string());
        }
    }
    return sig;
}

ImplicitRegion implicit_form(const TransitionSystem& ts, const Region& r) {
    ImplicitRegion out;
    out.sup_initial = r.sup(ts.initial());
    for (EventId e = 0; e < r.signature.size(); ++e) {
        if (r.sig(e) != Interaction::Nop) out.sig.emplace(ts.event_name(e), r.sig(e));
    }
    return out;
}

std::optional<Region> expand_region(const TransitionSystem& ts, const NetType& type, bool sup_initial,
                                    std::span<const Interaction> sig, const SpanningTree& tree) {
    if (sig.size() != ts.num_events()) throw Error(ErrorKind::Argument, "signature length does not match event count");
    for (auto i : sig) {
        if (!type.contains(i)) {
            throw Error(ErrorKind::Type, std::string("signature value ") + std::string(name(i)) +
                                             " is not in type " + type.to_string());
        }
    }
    Region r;
    r.signature.assign(sig.begin(), sig.end());
    r.support.assign(ts.num_states(), 0);
    r.support[ts.initial()] = sup_initial ? 1 : 0;
    for (auto s : tree.order()) {
        const auto& p = tree.parent(s);
        if (!p) continue;
        auto v = apply(sig[p->event], r.sup(p->src));
        if (!v) return std::nullopt;
        r.support[s] = *v ? 1 : 0;
    }
    for (const auto& e : ts.edges()) {
        if (apply(sig[e.event], r.sup(e.src)) != r.sup(e.dst)) return std::nullopt;
    }
    return r;
}

std::optional<Region> expand_region(const TransitionSystem& ts, const NetType& type, const ImplicitRegion& r) {
    const auto sig = to_signature(ts, type, r);
    return expand_region(ts, type, r.sup_initial, sig, spanning_tree(ts));
}

RegionCheck validate_region(const TransitionSystem& ts, const NetType& type, const Region& r) {
    if (r.support.size() != ts.num_states() || r.signature.size() != ts.num_events()) {
        throw Error(ErrorKind::Argument, "region is not total over the transition system");
    }
    for (auto i : r.signature) {
        if (!type.contains(i)) return {false, std::nullopt};
    }
    for (const auto& e : ts.edges()) {
        if (apply(r.sig(e.event), r.sup(e.src)) != r.sup(e.dst)) return {false, e};
    }
    return {};
}

PathImage image_of_path(const TransitionSystem& ts, const Region& r, StateId start,
                        std::span<const IndexedEdge> path) {
    PathImage img;
    img.supports.push_back(r.sup(start));
    StateId at = start;
    for (const auto& e : path) {
        if (e.src != at || ts.target(e.src, e.event) != e.dst) {
            throw Error(ErrorKind::Argument, "path is not a connected walk of the transition system");
        }
        img.interactions.push_back(r.sig(e.event));
        img.supports.push_back(r.sup(e.dst));
        at = e.dst;
    }
    return img;
}

bool solves_ssp(const Region& r, StateId s, StateId s2) {
    if (s == s2) throw Error(ErrorKind::Argument, "SSP atom needs two distinct states");
    return r.sup(s) != r.sup(s2);
}

bool solves_essp(const TransitionSystem& ts, const Region& r, EventId e, StateId s) {
    if (ts.occurs(s, e)) {
        throw Error(ErrorKind::Argument, "'" + ts.event_name(e) + "' occurs at '" + ts.state_name(s) + "'");
    }
    return !apply(r.sig(e), r.sup(s)).has_value();
}

bool solves(const TransitionSystem& ts, const Region& r, const SeparationAtom& atom) {
    if (const auto* ssp = std::get_if<SspAtom>(&atom)) return solves_ssp(r, ssp->first, ssp->second);
    const auto& essp = std::get<EsspAtom>(atom);
    return solves_essp(ts, r, essp.event, essp.state);
}

std::size_t restriction_count(const Region& r) {
    return static_cast<std::size_t>(
        std::count_if(r.signature.begin(), r.signature.end(), [](Interaction i) { return i != Interaction::Nop; }));
}

}  // namespace bsynth
