#include "cli.hpp"

#include "bsynth/error.hpp"
#include "bsynth/io.hpp"
#include "bsynth/reductions.hpp"
#include "bsynth/synthesis.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <ostream>

namespace bsynth::cli {

namespace {

struct Options {
    std::string ts, type, net, witnesses, report, atom, construction, hs, out, meta, region;
    std::string synth_mode = "lazy";
    std::string atom_mode = "pruned";
    std::size_t d = 0;
    std::size_t cap = kDefaultReachabilityCap;
    bool stats = false;
    bool shrink = false;
};

TransitionSystem load_ts(const std::string& path) { return io::parse_ts(io::read_file(path), path); }
BooleanNet load_net(const std::string& path) { return io::parse_net(io::read_file(path), path); }

std::string format_stats(const EnumerationStats& s) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(s.elapsed).count();
    return "candidates_examined " + std::to_string(s.candidates_examined) + "\nvalid_regions " +
           std::to_string(s.valid_regions) + "\nelapsed_ms " + std::to_string(ms) + "\n";
}

int cmd_synth(const Options& o, std::ostream& out) {
    const auto ts = load_ts(o.ts);
    const auto type = parse_type(o.type);
    static const std::map<std::string, SolveMode> modes = {
        {"lazy", SolveMode::Lazy}, {"exhaustive", SolveMode::Exhaustive}, {"pruned", SolveMode::Pruned}};
    SolveOptions opts{modes.at(o.synth_mode), o.shrink};
    const auto outcome = solve_drts(ts, type, o.d, opts);
    if (!o.report.empty()) io::write_file(o.report, format_report(ts, type, outcome));
    int code = kNo;
    if (outcome.verdict == Verdict::Solvable) {
        const auto net = synthesize_net(ts, outcome.admissible_set, type);
        out << "solvable: " << outcome.admissible_set.size() << " region(s), d " << outcome.d << '\n';
        if (!o.net.empty()) io::write_file(o.net, io::write_net(net));
        if (!o.witnesses.empty()) {
            std::filesystem::create_directories(o.witnesses);
            for (std::size_t k = 0; k < outcome.admissible_set.size(); ++k) {
                io::write_file(std::filesystem::path(o.witnesses) / ("r" + std::to_string(k) + ".region"),
                               io::write_region(implicit_form(ts, outcome.admissible_set[k])));
            }
        }
        code = kYes;
    } else {
        out << "unsolvable: " << outcome.unsolved_atoms.size() << " atom(s) without a " << outcome.d
            << "-restricted region\n";
        for (const auto& a : outcome.unsolved_atoms) out << "unsolved " << format_atom(ts, a) << '\n';
    }
    if (o.stats) out << format_stats(outcome.stats);
    return code;
}

int cmd_atom(const Options& o, std::ostream& out) {
    const auto ts = load_ts(o.ts);
    const auto type = parse_type(o.type);
    const auto atom = parse_atom(ts, o.atom);
    EnumerationStats stats;
    std::optional<Region> found;
    if (o.atom_mode == "exhaustive") {
        RegionEnumerator en(ts, type, o.d);
        while (auto r = en.next()) {
            if (solves(ts, *r, atom)) {
                found = std::move(r);
                break;
            }
        }
        stats = en.stats();
    } else {
        const auto start = std::chrono::steady_clock::now();
        found = solve_atom(ts, type, o.d, atom, &stats);
        stats.elapsed = std::chrono::steady_clock::now() - start;
    }
    int code = kNo;
    if (found) {
        out << io::write_region(implicit_form(ts, *found));
        code = kYes;
    } else {
        out << "no " << std::min(o.d, ts.num_events()) << "-restricted region solves " << o.atom << '\n';
    }
    if (o.stats) out << format_stats(stats);
    return code;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    const auto c = parse_construction(o.construction);
    const auto instance = io::parse_hs(io::read_file(o.hs), o.hs);
    const auto artifact = reduce(c, instance);
    io::write_file(o.out, io::write_ts(artifact.ts));
    if (!o.meta.empty()) io::write_file(o.meta, format_metadata(artifact));
    out << "construction " << name(c) << ": " << artifact.ts.num_states() << " states, "
        << artifact.ts.num_events() << " events, " << artifact.ts.num_edges() << " edges; d " << artifact.d
        << "; alpha " << format_atom(artifact.ts, artifact.alpha) << '\n';
    return kYes;
}

int cmd_hs(const Options& o, std::ostream& out) {
    const auto instance = io::parse_hs(io::read_file(o.hs), o.hs);
    const auto s = hs_brute_force(instance);
    if (!s) {
        out << "no hitting set of size at most " << instance.kappa << '\n';
        return kNo;
    }
    for (std::size_t k = 0; k < s->size(); ++k) out << (k ? " " : "") << instance.universe[(*s)[k]];
    out << '\n';
    return kYes;
}

int cmd_check_region(const Options& o, std::ostream& out) {
    const auto ts = load_ts(o.ts);
    const auto type = parse_type(o.type);
    const auto implicit = io::parse_region(io::read_file(o.region), o.region);
    const auto sig = to_signature(ts, type, implicit);
    std::optional<SeparationAtom> atom;
    if (!o.atom.empty()) atom = parse_atom(ts, o.atom);

    out << "restriction " << std::count_if(sig.begin(), sig.end(), [](Interaction i) {
        return i != Interaction::Nop;
    }) << '\n';

    // Propagate along the spanning tree ourselves so a failure can name the
    // offending edge.
    const auto tree = spanning_tree(ts);
    Region r{std::vector<std::uint8_t>(ts.num_states(), 0), sig};
    r.support[ts.initial()] = implicit.sup_initial ? 1 : 0;
    for (auto s : tree.order()) {
        const auto& p = tree.parent(s);
        if (!p) continue;
        auto v = apply(sig[p->event], r.sup(p->src));
        if (!v) {
            const auto e = ts.named({p->src, p->event, s});
            out << "invalid: " << name(sig[p->event]) << " is undefined at support " << r.sup(p->src) << " on edge "
                << e.src << ' ' << e.event << ' ' << e.dst << '\n';
            return kNo;
        }
        r.support[s] = *v ? 1 : 0;
    }
    if (const auto check = validate_region(ts, type, r); !check) {
        if (!check.violation) {
            out << "invalid\n";
            return kNo;
        }
        const auto e = ts.named(*check.violation);
        out << "invalid: edge " << e.src << ' ' << e.event << ' ' << e.dst << " is inconsistent with "
            << name(r.sig(check.violation->event)) << '\n';
        return kNo;
    }
    out << "valid\n";
    if (atom) {
        const bool ok = solves(ts, r, *atom);
        out << (ok ? "solves " : "does not solve ") << o.atom << '\n';
        return ok ? kYes : kNo;
    }
    return kYes;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto ts = load_ts(o.ts);
    const auto net = load_net(o.net);
    const bool ok = verify_lemma1(ts, net, o.cap);
    out << (ok ? "isomorphic\n" : "not isomorphic\n");
    return ok ? kYes : kNo;
}

int cmd_reach(const Options& o, std::ostream& out) {
    const auto net = load_net(o.net);
    const auto rg = reachability_graph(net, o.cap);
    io::write_file(o.out, io::write_ts(rg));
    out << rg.num_states() << " states, " << rg.num_edges() << " edges\n";
    return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boolean Petri net synthesis with restricted dependency numbers", "bsynth"};
    app.require_subcommand(1);
    Options o;

    auto add_ts = [&](CLI::App* c) { c->add_option("--ts", o.ts, "transition system file")->required(); };
    auto add_type = [&](CLI::App* c) {
        c->add_option("--type", o.type, "comma-separated interactions, e.g. nop,inp,set")->required();
    };
    auto add_d = [&](CLI::App* c) {
        c->add_option("--d", o.d, "restriction bound")->required()->check(CLI::NonNegativeNumber);
    };

    auto* synth = app.add_subcommand("synth", "decide restricted synthesis and build a net");
    add_ts(synth);
    add_type(synth);
    add_d(synth);
    synth->add_option("--net", o.net, "write the synthesized net");
    synth->add_option("--witnesses", o.witnesses, "directory for the admissible regions");
    synth->add_option("--report", o.report, "write a plain-text report");
    synth->add_option("--mode", o.synth_mode, "lazy, exhaustive or pruned")
        ->check(CLI::IsMember({"lazy", "exhaustive", "pruned"}));
    synth->add_flag("--shrink", o.shrink, "drop regions covered by the others");
    synth->add_flag("--stats", o.stats, "print enumeration counters");

    auto* atom = app.add_subcommand("atom", "search a region solving one separation atom");
    add_ts(atom);
    add_type(atom);
    add_d(atom);
    atom->add_option("--atom", o.atom, "ssp:s1,s2 or essp:e,s")->required();
    atom->add_option("--mode", o.atom_mode, "pruned or exhaustive")->check(CLI::IsMember({"pruned", "exhaustive"}));
    atom->add_flag("--stats", o.stats, "print enumeration counters");

    auto* red = app.add_subcommand("reduce", "compile a Hitting Set instance into a transition system");
    red->add_option("--construction", o.construction, "1.1, 1.2, 1.3 or 1.4")->required();
    red->add_option("--hs", o.hs, "hitting set instance")->required();
    red->add_option("--out", o.out, "output transition system")->required();
    red->add_option("--meta", o.meta, "output metadata table");

    auto* hs = app.add_subcommand("hs", "solve a Hitting Set instance by brute force");
    hs->add_option("--hs", o.hs, "hitting set instance")->required();

    auto* check = app.add_subcommand("check-region", "expand and validate a region");
    add_ts(check);
    add_type(check);
    check->add_option("--region", o.region, "region file")->required();
    check->add_option("--atom", o.atom, "also require the region to solve this atom");

    auto* verify = app.add_subcommand("verify", "compare a net's reachability graph with a transition system");
    add_ts(verify);
    verify->add_option("--net", o.net, "net file")->required();
    verify->add_option("--cap", o.cap, "maximum number of markings");

    auto* reach = app.add_subcommand("reach", "write the reachability graph of a net");
    reach->add_option("--net", o.net, "net file")->required();
    reach->add_option("--out", o.out, "output transition system")->required();
    reach->add_option("--cap", o.cap, "maximum number of markings");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }

    try {
        if (*synth) return cmd_synth(o, out);
        if (*atom) return cmd_atom(o, out);
        if (*red) return cmd_reduce(o, out);
        if (*hs) return cmd_hs(o, out);
        if (*check) return cmd_check_region(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*reach) return cmd_reach(o, out);
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

}  // namespace bsynth::cli
