#include "bsynth/synthesis.hpp"

#include "bsynth/error.hpp"
#include "bsynth/io.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace bsynth {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    if (b > std::numeric_limits<std::uint64_t>::max() - a) return std::numeric_limits<std::uint64_t>::max();
    return a + b;
}

// Support propagation without the type checks of expand_region.
bool propagate(const TransitionSystem& ts, const SpanningTree& tree, bool sup_initial,
               const std::vector<Interaction>& sig, std::vector<std::uint8_t>& sup) {
    sup.assign(ts.num_states(), 0);
    sup[ts.initial()] = sup_initial ? 1 : 0;
    for (auto s : tree.order()) {
        const auto& p = tree.parent(s);
        if (!p) continue;
        auto v = apply(sig[p->event], sup[p->src] != 0);
        if (!v) return false;
        sup[s] = *v ? 1 : 0;
    }
    for (const auto& e : ts.edges()) {
        if (apply(sig[e.event], sup[e.src] != 0) != (sup[e.dst] != 0)) return false;
    }
    return true;
}

}  // namespace

std::uint64_t candidate_count_formula(std::size_t num_events, std::size_t num_non_nop, std::size_t d) {
    const auto top = std::min(d, num_events);
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(num_events, i)
    std::uint64_t power = 1;  // num_non_nop^i
    for (std::size_t i = 0; i <= top; ++i) {
        if (i > 0) {
            // C(n, i) = C(n, i-1) * (n - i + 1) / i, divided early so the
            // intermediate product stays exact.
            const std::uint64_t g = std::gcd(binom, std::uint64_t{i});
            binom = sat_mul(binom / g, (num_events - i + 1) / (i / g));
            power = sat_mul(power, num_non_nop);
        }
        total = sat_add(total, sat_mul(binom, power));
    }
    return sat_mul(total, 2);
}

CanonicalKey canonical_key(const TransitionSystem& ts, const Region& r) {
    CanonicalKey key;
    for (EventId e = 0; e < r.signature.size(); ++e) {
        if (r.sig(e) != Interaction::Nop) {
            key.events.push_back(e);
            key.interactions.push_back(r.sig(e));
        }
    }
    key.count = key.events.size();
    key.sup_initial = r.sup(ts.initial());
    return key;
}

RegionEnumerator::RegionEnumerator(const TransitionSystem& ts, NetType type, std::size_t d)
    : RegionEnumerator(ts, type, d, spanning_tree(ts)) {}

RegionEnumerator::RegionEnumerator(const TransitionSystem& ts, NetType type, std::size_t d, SpanningTree tree)
    : ts_(&ts),
      type_(type),
      non_nop_(type.non_nop()),
      tree_(std::move(tree)),
      max_count_(std::min(d, ts.num_events())),
      sig_(ts.num_events(), Interaction::Nop) {}

bool RegionEnumerator::next_combination() {
    const auto n = ts_->num_events();
    const auto k = combo_.size();
    for (std::size_t pos = k; pos-- > 0;) {
        if (combo_[pos] < n - k + pos) {
            ++combo_[pos];
            for (auto q = pos + 1; q < k; ++q) combo_[q] = combo_[q - 1] + 1;
            return true;
        }
    }
    return false;
}

bool RegionEnumerator::next_assignment() {
    for (std::size_t pos = choice_.size(); pos-- > 0;) {
        if (choice_[pos] + 1 < non_nop_.size()) {
            ++choice_[pos];
            std::fill(choice_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, choice_.end(), 0);
            return true;
        }
    }
    return false;
}

bool RegionEnumerator::advance() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        return true;
    }
    if (!sup_initial_) {
        sup_initial_ = true;
        return true;
    }
    sup_initial_ = false;
    if (next_assignment()) return true;
    if (next_combination()) {
        std::fill(choice_.begin(), choice_.end(), 0);
        return true;
    }
    ++count_;
    if (count_ > max_count_ || non_nop_.empty()) {
        done_ = true;
        return false;
    }
    combo_.resize(count_);
    std::iota(combo_.begin(), combo_.end(), EventId{0});
    choice_.assign(count_, 0);
    return true;
}

std::optional<Region> RegionEnumerator::next() {
    const auto start = Clock::now();
    std::optional<Region> found;
    while (!found && advance()) {
        std::fill(sig_.begin(), sig_.end(), Interaction::Nop);
        for (std::size_t k = 0; k < combo_.size(); ++k) sig_[combo_[k]] = non_nop_[choice_[k]];
        ++stats_.candidates_examined;
        // Without nop in the type every event has to carry a restriction.
        if (!type_.contains(Interaction::Nop) && combo_.size() < ts_->num_events()) continue;
        Region r;
        if (propagate(*ts_, tree_, sup_initial_, sig_, r.support)) {
            r.signature = sig_;
            ++stats_.valid_regions;
            found = std::move(r);
        }
    }
    stats_.elapsed += Clock::now() - start;
    return found;
}

std::vector<Region> enumerate_valid_regions(const TransitionSystem& ts, const NetType& type, std::size_t d) {
    RegionEnumerator en(ts, type, d);
    std::vector<Region> out;
    while (auto r = en.next()) out.push_back(std::move(*r));
    return out;
}

namespace {

void assign_witnesses(const TransitionSystem& ts, const std::vector<SeparationAtom>& atoms,
                      SynthesisOutcome& out) {
    out.witness_map.clear();
    out.unsolved_atoms.clear();
    for (const auto& atom : atoms) {
        std::optional<std::size_t> found;
        for (std::size_t k = 0; k < out.admissible_set.size() && !found; ++k) {
            if (solves(ts, out.admissible_set[k], atom)) found = k;
        }
        if (found) {
            out.witness_map.emplace_back(atom, *found);
        } else {
            out.unsolved_atoms.push_back(atom);
        }
    }
}

void shrink_admissible(const TransitionSystem& ts, const std::vector<SeparationAtom>& atoms,
                       SynthesisOutcome& out) {
    for (std::size_t k = out.admissible_set.size(); k-- > 0;) {
        auto candidate = out.admissible_set;
        candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(k));
        const bool covered = std::all_of(atoms.begin(), atoms.end(), [&](const SeparationAtom& a) {
            return std::any_of(candidate.begin(), candidate.end(),
                               [&](const Region& r) { return solves(ts, r, a); });
        });
        if (covered) out.admissible_set = std::move(candidate);
    }
}

}  // namespace

SynthesisOutcome solve_drts(const TransitionSystem& ts, const NetType& type, std::size_t d,
                            const SolveOptions& options) {
    SynthesisOutcome out;
    out.d = std::min(d, ts.num_events());
    const auto atoms = enumerate_atoms(ts);

    // Per-atom witness as an index into the region list; regions are
    // collected in canonical order.
    std::vector<std::optional<std::size_t>> witness(atoms.size());
    std::vector<Region> regions;

    if (options.mode == SolveMode::Pruned) {
        const auto start = Clock::now();
        std::vector<std::pair<CanonicalKey, Region>> found;
        std::vector<std::optional<CanonicalKey>> atom_key(atoms.size());
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            EnumerationStats local;
            auto r = solve_atom(ts, type, out.d, atoms[a], &local);
            out.stats.candidates_examined += local.candidates_examined;
            out.stats.valid_regions += local.valid_regions;
            if (!r) continue;
            auto key = canonical_key(ts, *r);
            atom_key[a] = key;
            found.emplace_back(std::move(key), std::move(*r));
        }
        std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        found.erase(std::unique(found.begin(), found.end(),
                                [](const auto& x, const auto& y) { return x.first == y.first; }),
                    found.end());
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (!atom_key[a]) continue;
            auto it = std::lower_bound(found.begin(), found.end(), *atom_key[a],
                                       [](const auto& x, const CanonicalKey& k) { return x.first < k; });
            witness[a] = static_cast<std::size_t>(it - found.begin());
        }
        for (auto& [key, r] : found) regions.push_back(std::move(r));
        out.stats.elapsed = Clock::now() - start;
    } else {
        RegionEnumerator en(ts, type, out.d);
        std::size_t remaining = atoms.size();
        while (remaining > 0 || options.mode == SolveMode::Exhaustive) {
            auto r = en.next();
            if (!r) break;
            bool useful = false;
            for (std::size_t a = 0; a < atoms.size(); ++a) {
                if (!witness[a] && solves(ts, *r, atoms[a])) {
                    witness[a] = regions.size();
                    useful = true;
                    --remaining;
                }
            }
            if (useful) regions.push_back(std::move(*r));
        }
        out.stats = en.stats();
    }

    for (std::size_t a = 0; a < atoms.size(); ++a) {
        if (witness[a]) {
            out.witness_map.emplace_back(atoms[a], *witness[a]);
        } else {
            out.unsolved_atoms.push_back(atoms[a]);
        }
    }
    if (!out.unsolved_atoms.empty()) {
        out.verdict = Verdict::Unsolvable;
        out.witness_map.clear();
        return out;
    }
    out.verdict = Verdict::Solvable;
    out.admissible_set = std::move(regions);
    if (options.shrink) {
        shrink_admissible(ts, atoms, out);
        assign_witnesses(ts, atoms, out);
    }
    return out;
}

BooleanNet synthesize_net(const TransitionSystem& ts, const std::vector<Region>& regions, const NetType& type) {
    std::vector<PlaceDecl> places;
    std::vector<FlowEntry> flow;
    for (std::size_t k = 0; k < regions.size(); ++k) {
        const auto& r = regions[k];
        if (!validate_region(ts, type, r)) {
            throw Error(ErrorKind::Argument, "region " + std::to_string(k) + " is not a region of the TS");
        }
        const std::string place = "p" + std::to_string(k);
        places.push_back({place, r.sup(ts.initial())});
        for (EventId e = 0; e < ts.num_events(); ++e) {
            flow.push_back({place, ts.event_name(e), r.sig(e)});
        }
    }
    std::vector<std::string> transitions(ts.event_names().begin(), ts.event_names().end());
    return BooleanNet::build(type, std::move(places), std::move(transitions), flow);
}

bool verify_lemma1(const TransitionSystem& ts, const BooleanNet& net, std::size_t cap) {
    return isomorphic(ts, reachability_graph(net, cap)).has_value();
}

std::string format_report(const TransitionSystem& ts, const NetType& type, const SynthesisOutcome& outcome) {
    std::ostringstream os;
    os << "verdict " << (outcome.verdict == Verdict::Solvable ? "solvable" : "unsolvable") << '\n';
    os << "type " << type.to_string() << '\n';
    os << "d " << outcome.d << '\n';
    os << "states " << ts.num_states() << '\n';
    os << "events " << ts.num_events() << '\n';
    os << "atoms " << (outcome.witness_map.size() + outcome.unsolved_atoms.size()) << '\n';
    if (outcome.verdict == Verdict::Solvable) {
        os << "regions " << outcome.admissible_set.size() << '\n';
        for (const auto& [atom, idx] : outcome.witness_map) {
            os << "atom " << format_atom(ts, atom) << " region " << idx << '\n';
        }
        for (std::size_t k = 0; k < outcome.admissible_set.size(); ++k) {
            os << "\n# region " << k << " (restriction " << restriction_count(outcome.admissible_set[k]) << ")\n";
            os << io::write_region(implicit_form(ts, outcome.admissible_set[k]));
        }
    } else {
        os << "unsolved " << outcome.unsolved_atoms.size() << '\n';
        for (const auto& atom : outcome.unsolved_atoms) os << "unsolved " << format_atom(ts, atom) << '\n';
    }
    os << "\nstats candidates_examined " << outcome.stats.candidates_examined << '\n';
    os << "stats valid_regions " << outcome.stats.valid_regions << '\n';
    return os.str();
}

}  // namespace bsynth
