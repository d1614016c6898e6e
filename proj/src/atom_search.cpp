// Per-atom search for the first solving region in canonical order.
//
// Every edge s -e-> s' turns sig(e) into a constraint on sup(s), sup(s'):
// nop and swap relate the two values, the remaining interactions pin one or
// both of them. Constraints live in a union-find with parity, so a branch is
// cut as soon as the accumulated constraints contradict each other. The
// search walks event subsets, interaction tuples and sup(iota) in the same
// order as RegionEnumerator, so the first hit is the same region.

#include "bsynth/error.hpp"
#include "bsynth/synthesis.hpp"

#include <algorithm>

namespace bsynth {

namespace {

class ParityUnionFind {
public:
    explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), size_(n, 1), value_(n, -1) {
        for (std::size_t k = 0; k < n; ++k) parent_[k] = static_cast<StateId>(k);
    }

    std::size_t mark() const { return trail_.size(); }

    void rollback(std::size_t to) {
        while (trail_.size() > to) {
            const auto& u = trail_.back();
            if (u.kind == Undo::Link) {
                size_[parent_[u.node]] -= size_[u.node];
                parent_[u.node] = u.node;
                parity_[u.node] = 0;
            }
            value_[u.root] = u.old_value;
            trail_.pop_back();
        }
    }

    // Root and parity of x relative to it.
    std::pair<StateId, std::uint8_t> find(StateId x) const {
        std::uint8_t p = 0;
        while (parent_[x] != x) {
            p ^= parity_[x];
            x = parent_[x];
        }
        return {x, p};
    }

    // sup(x) = v
    bool fix(StateId x, bool v) {
        const auto [r, p] = find(x);
        const int want = (v ? 1 : 0) ^ p;
        if (value_[r] >= 0) return value_[r] == want;
        trail_.push_back({Undo::Value, r, r, value_[r]});
        value_[r] = static_cast<std::int8_t>(want);
        return true;
    }

    // sup(x) xor sup(y) = parity
    bool relate(StateId x, StateId y, std::uint8_t parity) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        const std::uint8_t link = px ^ py ^ parity;
        if (rx == ry) return link == 0;
        if (value_[rx] >= 0 && value_[ry] >= 0 && (value_[rx] ^ value_[ry]) != link) return false;
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        // ry hangs below rx; value(ry) = value(rx) ^ link.
        std::int8_t merged = value_[rx];
        if (merged < 0 && value_[ry] >= 0) merged = static_cast<std::int8_t>(value_[ry] ^ link);
        trail_.push_back({Undo::Link, ry, rx, value_[rx]});
        parent_[ry] = rx;
        parity_[ry] = link;
        size_[rx] += size_[ry];
        value_[rx] = merged;
        return true;
    }

    // Value of sup(x) if determined.
    std::optional<bool> value(StateId x) const {
        const auto [r, p] = find(x);
        if (value_[r] < 0) return std::nullopt;
        return (value_[r] ^ p) != 0;
    }

private:
    struct Undo {
        enum Kind : std::uint8_t { Value, Link } kind;
        StateId node;
        StateId root;
        std::int8_t old_value;
    };

    std::vector<StateId> parent_;
    std::vector<std::uint8_t> parity_;
    std::vector<std::uint32_t> size_;
    std::vector<std::int8_t> value_;
    std::vector<Undo> trail_;
};

bool constrain_edge(ParityUnionFind& uf, Interaction i, StateId s, StateId t) {
    switch (i) {
        case Interaction::Nop: return uf.relate(s, t, 0);
        case Interaction::Swap: return uf.relate(s, t, 1);
        case Interaction::Set: return uf.fix(t, true);
        case Interaction::Res: return uf.fix(t, false);
        case Interaction::Inp: return uf.fix(s, true) && uf.fix(t, false);
        case Interaction::Out: return uf.fix(s, false) && uf.fix(t, true);
        case Interaction::Used: return uf.fix(s, true) && uf.fix(t, true);
        case Interaction::Free: return uf.fix(s, false) && uf.fix(t, false);
    }
    return false;
}

class AtomSearch {
public:
    AtomSearch(const TransitionSystem& ts, const NetType& type, std::size_t d, const SeparationAtom& atom)
        : ts_(ts),
          type_(type),
          d_(std::min(d, ts.num_events())),
          atom_(atom),
          non_nop_(type.non_nop()),
          uf_(ts.num_states()),
          sig_(ts.num_events(), Interaction::Nop) {
        allowed_.assign(ts.num_events(), non_nop_);
        if (const auto* essp = std::get_if<EsspAtom>(&atom_)) {
            forced_event_ = essp->event;
            auto& a = allowed_[essp->event];
            a.erase(std::remove_if(a.begin(), a.end(), [](Interaction i) { return !is_partial(i); }), a.end());
        }
    }

    std::optional<Region> run(EnumerationStats* stats) {
        if (const auto* ssp = std::get_if<SspAtom>(&atom_)) {
            if (!uf_.relate(ssp->first, ssp->second, 1)) return std::nullopt;
        }
        const std::size_t lowest = type_.contains(Interaction::Nop) ? 0 : ts_.num_events();
        for (std::size_t r = lowest; r <= d_ && !found_; ++r) {
            target_ = r;
            chosen_.clear();
            choose(0);
        }
        if (stats) {
            stats->candidates_examined += examined_;
            stats->valid_regions += found_ ? 1 : 0;
        }
        return std::move(found_);
    }

private:
    bool apply_event(EventId e, Interaction i) {
        for (const auto& edge : ts_.edges_of(e)) {
            if (!constrain_edge(uf_, i, edge.src, edge.dst)) return false;
        }
        if (forced_event_ && *forced_event_ == e) {
            // The event must be undefined at sup(s).
            const auto s = std::get<EsspAtom>(atom_).state;
            const bool undefined_at = (i == Interaction::Out || i == Interaction::Free);
            if (!uf_.fix(s, undefined_at)) return false;
        }
        return true;
    }

    bool some_interaction_fits(EventId e) {
        for (auto i : allowed_[e]) {
            const auto m = uf_.mark();
            const bool ok = apply_event(e, i);
            uf_.rollback(m);
            if (ok) return true;
        }
        return false;
    }

    // Subset phase: decide events in canonical order, inclusion first.
    void choose(EventId e) {
        if (found_) return;
        const auto n = ts_.num_events();
        if (chosen_.size() == target_) {
            const auto m = uf_.mark();
            bool ok = true;
            for (EventId rest = e; rest < n && ok; ++rest) {
                if (forced_event_ && *forced_event_ == rest) ok = false;
                else ok = apply_event(rest, Interaction::Nop);
            }
            if (ok) assign(0);
            uf_.rollback(m);
            return;
        }
        if (e >= n || n - e < target_ - chosen_.size()) return;
        if (!allowed_[e].empty() && some_interaction_fits(e)) {
            chosen_.push_back(e);
            choose(e + 1);
            chosen_.pop_back();
            if (found_) return;
        }
        if (forced_event_ && *forced_event_ == e) return;
        const auto m = uf_.mark();
        if (apply_event(e, Interaction::Nop)) choose(e + 1);
        uf_.rollback(m);
    }

    // Assignment phase over the chosen events, first position most significant.
    void assign(std::size_t pos) {
        if (found_) return;
        if (pos == chosen_.size()) {
            finish();
            return;
        }
        const auto e = chosen_[pos];
        for (auto i : allowed_[e]) {
            const auto m = uf_.mark();
            if (apply_event(e, i)) {
                sig_[e] = i;
                assign(pos + 1);
                sig_[e] = Interaction::Nop;
            }
            uf_.rollback(m);
            if (found_) return;
        }
    }

    void finish() {
        const auto fixed = uf_.value(ts_.initial());
        for (bool v : {false, true}) {
            ++examined_;
            if (fixed && *fixed != v) continue;
            const auto m = uf_.mark();
            uf_.fix(ts_.initial(), v);
            Region r;
            r.signature = sig_;
            r.support.resize(ts_.num_states());
            for (StateId s = 0; s < ts_.num_states(); ++s) r.support[s] = *uf_.value(s) ? 1 : 0;
            uf_.rollback(m);
            found_ = std::move(r);
            return;
        }
    }

    const TransitionSystem& ts_;
    const NetType& type_;
    std::size_t d_;
    SeparationAtom atom_;
    std::vector<Interaction> non_nop_;
    std::vector<std::vector<Interaction>> allowed_;
    std::optional<EventId> forced_event_;
    ParityUnionFind uf_;
    std::vector<Interaction> sig_;
    std::vector<EventId> chosen_;
    std::size_t target_ = 0;
    std::uint64_t examined_ = 0;
    std::optional<Region> found_;
};

}  // namespace

std::optional<Region> solve_atom(const TransitionSystem& ts, const NetType& type, std::size_t d,
                                 const SeparationAtom& atom, EnumerationStats* stats) {
    if (!is_atom_of(ts, atom)) throw Error(ErrorKind::Argument, "not a separation atom of the transition system");
    return AtomSearch(ts, type, d, atom).run(stats);
}

}  // namespace bsynth
