#include "bsynth/reductions.hpp"

#include "bsynth/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bsynth {

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

std::string bot(std::size_t i) { return "bot_" + num(i); }
std::string theta(std::size_t i) { return "theta_" + num(i); }
std::string w(std::size_t i) { return "w_" + num(i); }
std::string t(std::size_t i, std::size_t k) { return "t_" + num(i) + "_" + num(k); }
std::string h(std::size_t g, std::size_t k) { return "h_" + num(g) + "_" + num(k); }

class Builder {
public:
    explicit Builder(const HittingSetInstance& instance) : instance_(instance) {}

    void edge(const std::string& src, const std::string& event, const std::string& dst) {
        edges_.push_back({src, event, dst});
        events_.insert(event);
    }
    void both(const std::string& a, const std::string& event, const std::string& b) {
        edge(a, event, b);
        edge(b, event, a);
    }
    void name(std::string symbol, const std::string& id) {
        if (named_.insert(symbol).second) naming_.emplace_back(std::move(symbol), id);
    }

    // Universe element at position j (1-based) of M_i (1-based).
    const std::string& x(std::size_t i, std::size_t j) const {
        return instance_.universe[instance_.sets[i - 1].members[j - 1]];
    }
    std::size_t m_i(std::size_t i) const { return instance_.sets[i - 1].members.size(); }

    ReductionArtifact finish(Construction c, std::size_t d, const std::string& alpha_event,
                             const std::string& alpha_state, NetType type) {
        // Universe elements appear as events under their own names; any other
        // generated event with the same name would merge with them.
        const std::set<std::string> universe(instance_.universe.begin(), instance_.universe.end());
        for (const auto& e : generated_) {
            if (universe.count(e)) {
                throw Error(ErrorKind::Argument, "universe element '" + e + "' collides with a generated identifier");
            }
        }
        ReductionArtifact out{c, TransitionSystem::from_edges(edges_, bot(1)), d, {}, type, naming_};
        out.ts.set_label("reduction-" + std::string(bsynth::name(c)));
        out.alpha = {*out.ts.find_event(alpha_event), *out.ts.find_state(alpha_state)};
        return out;
    }

    void generated_events_from_edges() {
        std::set<std::string> universe(instance_.universe.begin(), instance_.universe.end());
        for (const auto& e : events_) {
            if (!universe.count(e)) generated_.insert(e);
        }
    }

private:
    const HittingSetInstance& instance_;
    std::vector<Edge> edges_;
    std::set<std::string> events_;
    std::set<std::string> generated_;
    std::vector<std::pair<std::string, std::string>> naming_;
    std::set<std::string> named_;
};

// Events a gadget uses beyond the universe elements; checked up front so a
// colliding element cannot silently merge with them.
void check_reserved(const HittingSetInstance& instance, const std::vector<std::string>& fixed,
                    const std::vector<std::string>& prefixes) {
    for (const auto& x : instance.universe) {
        bool clash = std::find(fixed.begin(), fixed.end(), x) != fixed.end();
        for (const auto& p : prefixes) {
            if (x.size() > p.size() && x.compare(0, p.size(), p) == 0) clash = true;
        }
        if (clash) {
            throw Error(ErrorKind::Argument, "universe element '" + x + "' collides with a generated identifier");
        }
    }
}

}  // namespace

std::string_view name(Construction c) {
    switch (c) {
        case Construction::T11: return "1.1";
        case Construction::T12: return "1.2";
        case Construction::T13: return "1.3";
        case Construction::T14: return "1.4";
    }
    return "?";
}

Construction parse_construction(std::string_view text) {
    if (text == "1.1") return Construction::T11;
    if (text == "1.2") return Construction::T12;
    if (text == "1.3") return Construction::T13;
    if (text == "1.4") return Construction::T14;
    throw Error(ErrorKind::Argument, "unknown construction '" + std::string(text) + "' (expected 1.1, 1.2, 1.3 or 1.4)");
}

ReductionArtifact reduce_t11(const HittingSetInstance& instance) {
    check_reserved(instance, {"k", "z", "o"}, {"w_", "theta_"});
    Builder b(instance);
    const auto m = instance.m();
    for (std::size_t i = 1; i <= m; ++i) {
        const auto mi = b.m_i(i);
        b.edge(bot(i), w(i), t(i, 0));
        b.edge(t(i, 0), "k", t(i, 1));
        for (std::size_t j = 1; j <= mi; ++j) b.edge(t(i, j), b.x(i, j), t(i, j + 1));
        b.edge(t(i, mi + 1), "z", t(i, mi + 2));
        b.edge(t(i, mi + 2), "k", t(i, mi + 3));
        for (std::size_t k = 0; k <= mi + 3; ++k) b.name("t_{" + num(i) + "," + num(k) + "}", t(i, k));
    }
    const auto hb = bot(m + 1);
    b.edge(hb, w(m + 1), "h_0");
    b.edge("h_0", "k", "h_1");
    b.edge("h_1", "z", "h_2");
    b.edge("h_2", "o", "h_3");
    b.edge("h_3", "k", "h_4");
    for (std::size_t k = 0; k <= 4; ++k) b.name("h_" + num(k), "h_" + num(k));
    for (std::size_t i = 1; i <= m; ++i) b.edge(bot(i), theta(i), bot(i + 1));
    for (std::size_t i = 1; i <= m + 1; ++i) b.name("bot_" + num(i), bot(i));
    for (std::size_t i = 1; i <= m + 1; ++i) b.name("w_" + num(i), w(i));
    for (std::size_t i = 1; i <= m; ++i) b.name("ominus_" + num(i), theta(i));
    b.generated_events_from_edges();
    return b.finish(Construction::T11, instance.kappa + 2, "k", "h_2",
                    NetType{Interaction::Nop, Interaction::Inp, Interaction::Set});
}

ReductionArtifact reduce_t12(const HittingSetInstance& instance) {
    check_reserved(instance, {"k", "z1", "z2", "o1", "o2"}, {"w_", "theta_"});
    Builder b(instance);
    // Every edge s -e-> s' comes with the self-loop s' -e-> s'.
    auto edge = [&](const std::string& s, const std::string& e, const std::string& s2) {
        b.edge(s, e, s2);
        b.edge(s2, e, s2);
    };
    const auto m = instance.m();
    for (std::size_t i = 1; i <= m; ++i) {
        const auto mi = b.m_i(i);
        edge(bot(i), w(i), t(i, 0));
        edge(t(i, 0), "k", t(i, 1));
        edge(t(i, 1), "z1", t(i, 2));
        for (std::size_t j = 1; j <= mi; ++j) edge(t(i, j + 1), b.x(i, j), t(i, j + 2));
        edge(t(i, mi + 2), "z2", t(i, mi + 3));
        edge(t(i, mi + 3), "k", t(i, mi + 4));
        for (std::size_t k = 0; k <= mi + 4; ++k) b.name("t_{" + num(i) + "," + num(k) + "}", t(i, k));
    }
    edge(bot(m + 1), w(m + 1), h(1, 0));
    edge(h(1, 0), "k", h(1, 1));
    edge(h(1, 1), "o1", h(1, 2));
    edge(h(1, 2), "o2", h(1, 3));
    edge(h(1, 3), "k", h(1, 4));
    edge(bot(m + 2), w(m + 2), h(2, 0));
    edge(h(2, 0), "k", h(2, 1));
    edge(h(2, 1), "z1", h(2, 2));
    b.edge(h(2, 2), "o1", h(2, 2));
    edge(bot(m + 3), w(m + 3), h(3, 0));
    edge(bot(m + 3), "o1", h(3, 0));
    edge(bot(m + 3), "z2", h(3, 0));
    for (std::size_t k = 0; k <= 4; ++k) b.name("h_{1," + num(k) + "}", h(1, k));
    for (std::size_t k = 0; k <= 2; ++k) b.name("h_{2," + num(k) + "}", h(2, k));
    b.name("h_{3,0}", h(3, 0));
    for (std::size_t i = 1; i <= m + 2; ++i) edge(bot(i), theta(i), bot(i + 1));
    for (std::size_t i = 1; i <= m + 3; ++i) b.name("bot_" + num(i), bot(i));
    for (std::size_t i = 1; i <= m + 3; ++i) b.name("w_" + num(i), w(i));
    for (std::size_t i = 1; i <= m + 2; ++i) b.name("ominus_" + num(i), theta(i));
    b.generated_events_from_edges();
    return b.finish(Construction::T12, instance.kappa + 5, "k", h(1, 2),
                    NetType{Interaction::Nop, Interaction::Set, Interaction::Res, Interaction::Used});
}

ReductionArtifact reduce_t13(const HittingSetInstance& instance) {
    check_reserved(instance, {"k", "z1", "z2", "o1", "o2"}, {"w_", "theta_", "a_"});
    Builder b(instance);
    const auto m = instance.m();
    for (std::size_t i = 1; i <= m; ++i) {
        const auto mi = b.m_i(i);
        b.both(bot(i), w(i), t(i, 0));
        b.both(t(i, 0), "k", t(i, 1));
        b.both(t(i, 1), "z1", t(i, 2));
        for (std::size_t j = 1; j <= mi; ++j) {
            const auto a = "a_" + num(i) + "_" + num(j);
            const auto& x = b.x(i, j);
            b.both(t(i, 4 * j - 2), a, t(i, 4 * j - 1));
            b.edge(t(i, 4 * j - 1), x, t(i, 4 * j));
            b.both(t(i, 4 * j), x, t(i, 4 * j + 1));
            b.both(t(i, 4 * j + 1), a, t(i, 4 * j + 2));
            b.name("a_{" + num(i) + "," + num(j) + "}", a);
        }
        b.both(t(i, 4 * mi + 2), "z2", t(i, 4 * mi + 3));
        b.both(t(i, 4 * mi + 3), "k", t(i, 4 * mi + 4));
        for (std::size_t k = 0; k <= 4 * mi + 4; ++k) b.name("t_{" + num(i) + "," + num(k) + "}", t(i, k));
    }
    b.both(bot(m + 1), w(m + 1), h(0, 1));
    b.both(h(0, 1), "k", h(0, 2));
    b.both(h(0, 2), "o1", h(0, 3));
    b.both(h(0, 3), "o2", h(0, 4));
    b.both(h(0, 4), "k", h(0, 5));
    b.both(bot(m + 2), w(m + 2), h(1, 1));
    b.both(h(1, 1), "k", h(1, 2));
    b.both(h(1, 2), "z1", h(1, 3));
    b.both(h(1, 3), "o1", h(1, 4));
    b.both(h(1, 4), "z2", h(1, 5));
    b.both(h(1, 5), "k", h(1, 6));
    for (std::size_t k = 1; k <= 5; ++k) b.name("h_{0," + num(k) + "}", h(0, k));
    for (std::size_t k = 1; k <= 6; ++k) b.name("h_{1," + num(k) + "}", h(1, k));
    for (std::size_t i = 1; i <= m + 1; ++i) b.both(bot(i), theta(i), bot(i + 1));
    for (std::size_t i = 1; i <= m + 2; ++i) b.name("bot_" + num(i), bot(i));
    for (std::size_t i = 1; i <= m + 2; ++i) b.name("w_" + num(i), w(i));
    for (std::size_t i = 1; i <= m + 1; ++i) b.name("ominus_" + num(i), theta(i));
    b.generated_events_from_edges();
    return b.finish(Construction::T13, instance.kappa + 4, "k", h(0, 3),
                    NetType{Interaction::Nop, Interaction::Set, Interaction::Swap, Interaction::Used});
}

std::vector<std::vector<RelevantPath>> relevant_paths(const HittingSetInstance& instance) {
    const auto m = instance.m();
    std::vector<std::vector<RelevantPath>> out(m);
    // e^i_j for j = 1..m_i+1; index m_i+1 is z4. Universe indices, with
    // npos standing for z4.
    constexpr auto z4 = static_cast<std::size_t>(-1);
    auto in_gadget = [&](std::size_t g, std::size_t element) {
        return element == z4 || instance.contains(g, element);
    };
    for (std::size_t i = 1; i <= m; ++i) {
        const auto& members = instance.sets[i - 1].members;
        const auto mi = members.size();
        for (std::size_t j = 2; j <= mi + 1; ++j) {
            const auto ej = j <= mi ? members[j - 1] : z4;
            const auto prev = members[j - 2];
            std::size_t n = 0;
            for (std::size_t g = 1; g <= m; ++g) {
                if (g == i || !in_gadget(g - 1, ej) || in_gadget(g - 1, prev)) continue;
                ++n;
                const auto tag = num(i) + "." + num(j);
                RelevantPath p;
                p.source_set = i;
                p.source_pos = j;
                p.gadget = g;
                p.position = n;
                p.relevant_event = ej == z4 ? "z4" : instance.universe[ej];
                p.preceding_event = instance.universe[prev];
                for (std::size_t k = 0; k <= n + 1; ++k) {
                    p.states.push_back("s_" + tag + "_" + num(g) + "_" + num(k));
                }
                p.events.push_back("v_" + tag + "_" + num(n));
                for (std::size_t k = n; k >= 1; --k) p.events.push_back("oplus_" + tag + "_" + num(k));
                out[g - 1].push_back(std::move(p));
            }
        }
    }
    for (auto& group : out) {
        std::stable_sort(group.begin(), group.end(), [](const RelevantPath& a, const RelevantPath& b) {
            return std::tie(a.source_set, a.source_pos) < std::tie(b.source_set, b.source_pos);
        });
    }
    return out;
}

ReductionArtifact reduce_t14(const HittingSetInstance& instance) {
    check_reserved(instance, {"k", "z1", "z2", "z3", "z4", "o1", "o2"},
                   {"w_", "u_", "c_", "v_", "oplus_", "theta_"});
    Builder b(instance);
    const auto m = instance.m();
    const auto paths = relevant_paths(instance);
    for (std::size_t i = 1; i <= m; ++i) {
        const auto mi = b.m_i(i);
        const auto& group = paths[i - 1];
        const auto u = "u_" + num(i);
        if (group.empty()) {
            const auto q = "q_" + num(i);
            b.edge(bot(i), w(i), q);
            b.edge(q, u, t(i, 0));
            b.name("q_" + num(i), q);
        } else {
            std::string at = bot(i);
            std::string via = w(i);
            for (std::size_t n = 0; n < group.size(); ++n) {
                const auto& p = group[n];
                b.edge(at, via, p.states.front());
                for (std::size_t k = 0; k < p.events.size(); ++k) b.edge(p.states[k], p.events[k], p.states[k + 1]);
                const auto sym = "^{" + num(p.source_set) + "," + num(p.source_pos) + "}";
                for (std::size_t k = 0; k < p.states.size(); ++k) {
                    b.name("s" + sym + "_{" + num(p.gadget) + "," + num(k) + "}", p.states[k]);
                }
                b.name("v" + sym + "_" + num(p.position), p.events.front());
                for (std::size_t k = 1; k < p.events.size(); ++k) {
                    b.name("oplus" + sym + "_" + num(p.position + 1 - k), p.events[k]);
                }
                at = p.states.back();
                via = "c_" + num(i) + "_" + num(n + 1);
                if (n + 1 < group.size()) b.name("c^" + num(i) + "_" + num(n + 1), via);
            }
            b.edge(at, u, t(i, 0));
        }
        b.edge(t(i, 0), "k", t(i, 1));
        b.edge(t(i, 1), "z3", t(i, 2));
        for (std::size_t j = 1; j <= mi; ++j) b.edge(t(i, j + 1), b.x(i, j), t(i, j + 2));
        b.edge(t(i, mi + 2), "z4", t(i, mi + 3));
        b.edge(t(i, mi + 3), "k", t(i, mi + 4));
        for (std::size_t k = 0; k <= mi + 4; ++k) b.name("t_{" + num(i) + "," + num(k) + "}", t(i, k));
        b.name("u_" + num(i), u);
    }
    struct Line {
        std::vector<const char*> events;
    };
    const std::vector<Line> gadgets = {
        {{"k", "o1", "o2", "k"}},
        {{"k", "z1", "o2", "k"}},
        {{"k", "z2", "o2", "k"}},
        {{"k", "z1", "z3", "z2", "k"}},
        {{"k", "z1", "z4", "z2", "k"}},
    };
    for (std::size_t g = 0; g < gadgets.size(); ++g) {
        b.edge(bot(m + 1 + g), w(m + 1 + g), h(g, 0));
        const auto& ev = gadgets[g].events;
        for (std::size_t k = 0; k < ev.size(); ++k) b.edge(h(g, k), ev[k], h(g, k + 1));
        for (std::size_t k = 0; k <= ev.size(); ++k) b.name("h_{" + num(g) + "," + num(k) + "}", h(g, k));
    }
    for (std::size_t i = 1; i <= m + 4; ++i) b.edge(bot(i), theta(i), bot(i + 1));
    for (std::size_t i = 1; i <= m + 5; ++i) b.name("bot_" + num(i), bot(i));
    for (std::size_t i = 1; i <= m + 5; ++i) b.name("w_" + num(i), w(i));
    for (std::size_t i = 1; i <= m + 4; ++i) b.name("ominus_" + num(i), theta(i));
    b.generated_events_from_edges();
    return b.finish(Construction::T14, instance.kappa + 4, "k", h(0, 2),
                    NetType{Interaction::Nop, Interaction::Inp, Interaction::Res, Interaction::Swap});
}

ReductionArtifact reduce(Construction c, const HittingSetInstance& instance) {
    switch (c) {
        case Construction::T11: return reduce_t11(instance);
        case Construction::T12: return reduce_t12(instance);
        case Construction::T13: return reduce_t13(instance);
        case Construction::T14: return reduce_t14(instance);
    }
    throw Error(ErrorKind::Argument, "unknown construction");
}

ImplicitRegion alpha_witness_implicit(const ReductionArtifact& artifact, const HittingSetInstance& instance,
                                      const std::vector<std::size_t>& hitting_set) {
    if (hitting_set.size() > instance.kappa) {
        throw Error(ErrorKind::Argument, "hitting set is larger than kappa");
    }
    for (auto x : hitting_set) {
        if (x >= instance.universe.size()) throw Error(ErrorKind::Argument, "hitting set names no universe element");
    }
    if (!is_hitting_set(instance, hitting_set)) {
        throw Error(ErrorKind::Argument, "the given set misses some member of the family");
    }
    ImplicitRegion r;
    r.sup_initial = true;
    Interaction on_s = Interaction::Set;
    switch (artifact.construction) {
        case Construction::T11:
            r.sig["k"] = Interaction::Inp;
            r.sig["o"] = Interaction::Set;
            break;
        case Construction::T12:
            r.sig["k"] = Interaction::Used;
            r.sig["o2"] = Interaction::Set;
            r.sig["o1"] = Interaction::Res;
            r.sig["z1"] = Interaction::Res;
            r.sig[theta(instance.m() + 2)] = Interaction::Res;
            break;
        case Construction::T13:
            r.sig["k"] = Interaction::Used;
            r.sig["o1"] = Interaction::Swap;
            r.sig["o2"] = Interaction::Swap;
            r.sig["z1"] = Interaction::Swap;
            break;
        case Construction::T14:
            r.sig["k"] = Interaction::Inp;
            r.sig["o2"] = Interaction::Swap;
            r.sig["z3"] = Interaction::Swap;
            r.sig["z4"] = Interaction::Swap;
            on_s = Interaction::Res;
            break;
    }
    // Elements of S that occur in no set are not events of the TS.
    for (auto x : hitting_set) {
        if (artifact.ts.find_event(instance.universe[x])) r.sig[instance.universe[x]] = on_s;
    }
    return r;
}

Region alpha_witness_region(const ReductionArtifact& artifact, const HittingSetInstance& instance,
                            const std::vector<std::size_t>& hitting_set) {
    const auto implicit = alpha_witness_implicit(artifact, instance, hitting_set);
    auto r = expand_region(artifact.ts, full_type(), implicit);
    if (!r) throw Error(ErrorKind::Argument, "witness region does not expand on this transition system");
    return *r;
}

std::string format_metadata(const ReductionArtifact& artifact) {
    std::ostringstream os;
    os << "construction " << name(artifact.construction) << '\n';
    os << "d " << artifact.d << '\n';
    os << "alpha " << format_atom(artifact.ts, artifact.alpha) << '\n';
    os << "type " << artifact.default_type.to_string() << '\n';
    os << "states " << artifact.ts.num_states() << '\n';
    os << "events " << artifact.ts.num_events() << '\n';
    os << "edges " << artifact.ts.num_edges() << '\n';
    for (const auto& [symbol, id] : artifact.naming) os << "name " << symbol << ' ' << id << '\n';
    return os.str();
}

}  // namespace bsynth
