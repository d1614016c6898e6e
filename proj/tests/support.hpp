#pragma once

// Fixtures and independent oracles shared by the unit and acceptance suites.

#include "bsynth/boolean_net.hpp"
#include "bsynth/error.hpp"
#include "bsynth/hitting_set.hpp"
#include "bsynth/io.hpp"
#include "bsynth/reductions.hpp"
#include "bsynth/region.hpp"
#include "bsynth/synthesis.hpp"
#include "bsynth/transition_system.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

using namespace bsynth;

inline std::filesystem::path data_dir() { return BSYNTH_TEST_DATA; }

inline TransitionSystem load_ts(const std::string& file) {
    return io::parse_ts(io::read_file(data_dir() / file), file);
}
inline BooleanNet load_net(const std::string& file) { return io::parse_net(io::read_file(data_dir() / file), file); }
inline HittingSetInstance load_hs(const std::string& file) {
    return io::parse_hs(io::read_file(data_dir() / file), file);
}
inline ImplicitRegion load_region(const std::string& file) {
    return io::parse_region(io::read_file(data_dir() / file), file);
}

inline const NetType kTau0{Interaction::Nop, Interaction::Inp, Interaction::Free};
inline const NetType kTau1{Interaction::Nop, Interaction::Swap, Interaction::Used, Interaction::Set};

inline StateId state(const TransitionSystem& ts, std::string_view name) { return ts.find_state(name).value(); }
inline EventId event(const TransitionSystem& ts, std::string_view name) { return ts.find_event(name).value(); }

inline SeparationAtom essp(const TransitionSystem& ts, std::string_view e, std::string_view s) {
    return EsspAtom{event(ts, e), state(ts, s)};
}
inline SeparationAtom ssp(const TransitionSystem& ts, std::string_view a, std::string_view b) {
    return make_ssp(state(ts, a), state(ts, b));
}

// ---------------------------------------------------------------------------
// Arithmetic oracle: 2 * sum C(n, i) k^i with C from Pascal's triangle.
inline std::uint64_t formula_oracle(std::size_t n, std::size_t k, std::size_t d) {
    std::vector<std::vector<std::uint64_t>> c(n + 1);
    for (std::size_t a = 0; a <= n; ++a) {
        c[a].assign(a + 1, 1);
        for (std::size_t b = 1; b < a; ++b) c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i <= std::min(d, n); ++i) {
        std::uint64_t p = 1;
        for (std::size_t q = 0; q < i; ++q) p *= k;
        total += c[n][i] * p;
    }
    return 2 * total;
}

// ---------------------------------------------------------------------------
// Unrestricted reference synthesis: enumerate every support function and
// collect, per event, the interactions of the type that agree with all of
// its edges. An atom is solvable iff some support admits an interaction for
// every event and meets the atom's condition.
struct ReferenceVerdict {
    bool solvable = true;
    std::vector<SeparationAtom> unsolved;
};

inline ReferenceVerdict reference_synthesis(const TransitionSystem& ts, const NetType& type) {
    const auto n = ts.num_states();
    const auto atoms = enumerate_atoms(ts);
    std::vector<bool> solved(atoms.size(), false);
    const auto members = type.members();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto sup = [&](StateId s) { return ((mask >> s) & 1U) != 0; };
        std::vector<std::vector<Interaction>> allowed(ts.num_events());
        bool total = true;
        for (EventId e = 0; e < ts.num_events() && total; ++e) {
            for (auto i : members) {
                bool ok = true;
                for (const auto& edge : ts.edges()) {
                    if (edge.event != e) continue;
                    auto v = apply(i, sup(edge.src));
                    if (!v || *v != sup(edge.dst)) ok = false;
                }
                if (ok) allowed[e].push_back(i);
            }
            total = !allowed[e].empty();
        }
        if (!total) continue;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (solved[a]) continue;
            if (const auto* p = std::get_if<SspAtom>(&atoms[a])) {
                solved[a] = sup(p->first) != sup(p->second);
            } else {
                const auto& q = std::get<EsspAtom>(atoms[a]);
                for (auto i : allowed[q.event]) {
                    if (!apply(i, sup(q.state))) solved[a] = true;
                }
            }
        }
    }
    ReferenceVerdict out;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        if (!solved[a]) {
            out.solvable = false;
            out.unsolved.push_back(atoms[a]);
        }
    }
    return out;
}

// First region of the exhaustive stream solving `atom`.
inline std::optional<Region> first_solving(const TransitionSystem& ts, const NetType& type, std::size_t d,
                                           const SeparationAtom& atom) {
    RegionEnumerator en(ts, type, d);
    while (auto r = en.next()) {
        if (solves(ts, *r, atom)) return r;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Alternative spanning trees.
inline SpanningTree dfs_tree(const TransitionSystem& ts) {
    std::vector<std::optional<TreeEdge>> parent(ts.num_states());
    std::vector<bool> seen(ts.num_states(), false);
    std::vector<StateId> stack{ts.initial()};
    seen[ts.initial()] = true;
    // Stack-driven discovery; parents are fixed when a state is first pushed.
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (EventId e = 0; e < ts.num_events(); ++e) {
            auto t = ts.target(s, e);
            if (t && !seen[*t]) {
                seen[*t] = true;
                parent[*t] = TreeEdge{s, e};
                stack.push_back(*t);
            }
        }
    }
    return SpanningTree::from_parents(ts, parent);
}

inline SpanningTree reverse_bfs_tree(const TransitionSystem& ts) {
    std::vector<std::optional<TreeEdge>> parent(ts.num_states());
    std::vector<bool> seen(ts.num_states(), false);
    std::deque<StateId> queue{ts.initial()};
    seen[ts.initial()] = true;
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        for (EventId e = static_cast<EventId>(ts.num_events()); e-- > 0;) {
            auto t = ts.target(s, e);
            if (t && !seen[*t]) {
                seen[*t] = true;
                parent[*t] = TreeEdge{s, e};
                queue.push_back(*t);
            }
        }
    }
    return SpanningTree::from_parents(ts, parent);
}

// Random reachable-first-discovery tree: repeatedly extend the visited set
// along a uniformly chosen frontier edge.
inline SpanningTree random_tree(const TransitionSystem& ts, std::mt19937& rng) {
    std::vector<std::optional<TreeEdge>> parent(ts.num_states());
    std::vector<bool> seen(ts.num_states(), false);
    seen[ts.initial()] = true;
    std::size_t visited = 1;
    while (visited < ts.num_states()) {
        std::vector<IndexedEdge> frontier;
        for (const auto& e : ts.edges()) {
            if (seen[e.src] && !seen[e.dst]) frontier.push_back(e);
        }
        const auto& pick = frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)];
        seen[pick.dst] = true;
        parent[pick.dst] = TreeEdge{pick.src, pick.event};
        ++visited;
    }
    return SpanningTree::from_parents(ts, parent);
}

// ---------------------------------------------------------------------------
// Random deterministic reachable TS with `states` states and up to `events`
// events (every event is used at least once).
inline TransitionSystem random_ts(std::mt19937& rng, std::size_t states, std::size_t events, double density) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (true) {
        std::vector<std::vector<int>> delta(states, std::vector<int>(events, -1));
        std::vector<Edge> edges;
        auto add = [&](std::size_t s, std::size_t e, std::size_t t) {
            delta[s][e] = static_cast<int>(t);
            edges.push_back({"s" + std::to_string(s), "e" + std::to_string(e), "s" + std::to_string(t)});
        };
        bool ok = true;
        for (std::size_t t = 1; t < states && ok; ++t) {
            // Parent among earlier states with a free event slot.
            std::vector<std::pair<std::size_t, std::size_t>> slots;
            for (std::size_t s = 0; s < t; ++s) {
                for (std::size_t e = 0; e < events; ++e) {
                    if (delta[s][e] < 0) slots.emplace_back(s, e);
                }
            }
            if (slots.empty()) {
                ok = false;
                break;
            }
            auto [s, e] = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
            add(s, e, t);
        }
        if (!ok) continue;
        for (std::size_t s = 0; s < states; ++s) {
            for (std::size_t e = 0; e < events; ++e) {
                if (delta[s][e] < 0 && coin(rng) < density) {
                    add(s, e, std::uniform_int_distribution<std::size_t>(0, states - 1)(rng));
                }
            }
        }
        std::set<std::string> used;
        for (const auto& e : edges) used.insert(e.event);
        if (used.size() != events || edges.empty()) continue;
        return TransitionSystem::from_edges(edges, "s0");
    }
}

// Random Hitting Set instance within the given bounds.
inline HittingSetInstance random_hs(std::mt19937& rng, std::size_t max_universe, std::size_t max_sets,
                                    std::size_t max_set_size, std::size_t max_kappa) {
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    const auto n = pick(1, max_universe);
    std::vector<std::string> universe;
    for (std::size_t x = 1; x <= n; ++x) universe.push_back("X" + std::to_string(x));
    std::vector<std::pair<std::string, std::vector<std::string>>> sets;
    const auto m = pick(1, max_sets);
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<std::string> pool = universe;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(pick(1, std::min(max_set_size, n)));
        sets.emplace_back("M" + std::to_string(i), pool);
    }
    return HittingSetInstance::build(universe, sets, pick(1, max_kappa));
}

// Independent HS oracle: minimum hitting set size by bitmask search, or
// nullopt when it exceeds kappa.
inline std::optional<std::size_t> min_hitting_set_size(const HittingSetInstance& h) {
    const auto n = h.universe.size();
    std::optional<std::size_t> best;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        bool hits = true;
        for (const auto& s : h.sets) {
            bool any = false;
            for (auto x : s.members) any = any || ((mask >> x) & 1U);
            hits = hits && any;
        }
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (hits && (!best || size < *best)) best = size;
    }
    if (best && *best <= h.kappa) return best;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rendering of relevant paths and G_i gadgets in the notation of the
// relevant-path golden file.
inline std::string path_symbol(std::size_t i, std::size_t j, std::size_t g, std::size_t n) {
    return "P^{" + std::to_string(i) + "," + std::to_string(j) + "}_{" + std::to_string(g) + "," +
           std::to_string(n) + "}";
}

inline std::string render_relevant_paths(const std::vector<std::vector<RelevantPath>>& groups) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<const RelevantPath*>> by_source;
    for (const auto& g : groups) {
        for (const auto& p : g) by_source[{p.source_set, p.source_pos}].push_back(&p);
    }
    std::ostringstream os;
    for (auto& [key, paths] : by_source) {
        std::sort(paths.begin(), paths.end(), [](auto* a, auto* b) { return a->gadget < b->gadget; });
        os << "item e^" << key.first << "_" << key.second << " = " << paths.front()->relevant_event << " after "
           << paths.front()->preceding_event << ":";
        for (auto* p : paths) os << ' ' << path_symbol(p->source_set, p->source_pos, p->gadget, p->position);
        os << '\n';
    }
    for (auto& [key, paths] : by_source) {
        for (auto* p : paths) {
            os << path_symbol(p->source_set, p->source_pos, p->gadget, p->position) << " = " << p->states[0];
            for (std::size_t k = 0; k < p->events.size(); ++k) os << " -" << p->events[k] << "-> " << p->states[k + 1];
            os << '\n';
        }
    }
    return os.str();
}

// Walks G_i in the generated TS from bot_i to t_i_0 and names the segments.
inline std::string render_gadget(const TransitionSystem& ts, std::size_t i) {
    const auto id = std::to_string(i);
    auto step = [&](StateId s, std::string_view ev) { return ts.target(s, event(ts, ev)).value(); };
    auto only_successor = [&](StateId s) {
        std::optional<IndexedEdge> out;
        for (const auto& e : ts.edges()) {
            if (e.src == s) out = e;
        }
        return out.value();
    };
    std::ostringstream os;
    os << "G_" << id << " = bot_" << id << " -w_" << id << "->";
    StateId at = step(state(ts, "bot_" + id), "w_" + id);
    while (true) {
        const auto& n = ts.state_name(at);
        if (n == "t_" + id + "_0") {
            os << " T_" << id;
            break;
        }
        std::string via;
        if (n.rfind("q_", 0) == 0) {
            os << ' ' << n;
            via = ts.event_name(only_successor(at).event);
            at = only_successor(at).dst;
        } else {
            // s_<i>.<j>_<g>_0: follow the path to its last state.
            const auto dot = n.find('.');
            const auto u1 = n.find('_', dot);
            const auto u2 = n.find('_', u1 + 1);
            const auto src_i = n.substr(2, dot - 2);
            const auto src_j = n.substr(dot + 1, u1 - dot - 1);
            const auto g = n.substr(u1 + 1, u2 - u1 - 1);
            std::size_t count = 1;
            auto e = only_successor(at);
            while (ts.event_name(e.event).rfind("c_", 0) != 0 && ts.event_name(e.event).rfind("u_", 0) != 0) {
                at = e.dst;
                ++count;
                e = only_successor(at);
            }
            os << ' ' << path_symbol(std::stoul(src_i), std::stoul(src_j), std::stoul(g), count - 2);
            via = ts.event_name(e.event);
            at = e.dst;
        }
        os << " -" << via << "->";
    }
    return os.str();
}

}  // namespace testing_support
