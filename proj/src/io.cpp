#include "bsynth/io.hpp"

#include "bsynth/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bsynth::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

class Reader {
public:
    Reader(std::string_view text, std::string_view source, std::string_view model) : source_(source) {
        std::size_t number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            auto line = text.substr(pos, end - pos);
            ++number;
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            std::istringstream is{std::string(line)};
            Line l{number, {}};
            for (std::string tok; is >> tok;) l.tokens.push_back(tok);
            if (!l.tokens.empty()) lines_.push_back(std::move(l));
            pos = end + 1;
        }
        if (lines_.empty() || lines_.front().tokens[0] != ".model") {
            fail(lines_.empty() ? 0 : lines_.front().number, "expected '.model " + std::string(model) + "' first");
        }
        const auto& head = lines_.front();
        if (head.tokens.size() != 2 || head.tokens[1] != model) {
            fail(head.number, "expected '.model " + std::string(model) + "'");
        }
    }

    // Directive lines after the header.
    std::span<const Line> body() const { return std::span<const Line>(lines_).subspan(1); }

    [[noreturn]] void fail(std::size_t line, const std::string& message) const {
        throw Error(ErrorKind::Parse, std::string(source_) + ":" + std::to_string(line) + ": " + message);
    }

    void arity(const Line& l, std::size_t n) const {
        if (l.tokens.size() != n + 1) {
            fail(l.number, "'" + l.tokens[0] + "' takes " + std::to_string(n) + " argument(s)");
        }
    }

    const std::string& id(const Line& l, std::size_t k) const {
        if (!is_identifier(l.tokens[k])) fail(l.number, "invalid identifier '" + l.tokens[k] + "'");
        return l.tokens[k];
    }

    bool bit(const Line& l, std::size_t k) const {
        if (l.tokens[k] == "0") return false;
        if (l.tokens[k] == "1") return true;
        fail(l.number, "expected 0 or 1, got '" + l.tokens[k] + "'");
    }

    Interaction interaction(const Line& l, std::size_t k) const {
        auto i = interaction_from_name(l.tokens[k]);
        if (!i) fail(l.number, "unknown interaction '" + l.tokens[k] + "'");
        return *i;
    }

    [[noreturn]] void unknown(const Line& l) const { fail(l.number, "unknown directive '" + l.tokens[0] + "'"); }

private:
    std::string source_;
    std::vector<Line> lines_;
};

// Rethrows library errors raised while building a value as parse-site errors
// of the same kind.
template <class F>
auto with_source(std::string_view source, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(source) + ": " + e.what());
    }
}

}  // namespace

bool is_identifier(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
                        c == '.' || c == '+' || c == '-';
        if (!ok) return false;
    }
    return true;
}

TransitionSystem parse_ts(std::string_view text, std::string_view source) {
    Reader r(text, source, "ts");
    std::optional<std::string> name;
    std::optional<std::string> initial;
    std::vector<Edge> edges;
    for (const auto& l : r.body()) {
        const auto& d = l.tokens[0];
        if (d == ".name") {
            r.arity(l, 1);
            if (name) r.fail(l.number, "duplicate '.name'");
            name = r.id(l, 1);
        } else if (d == ".initial") {
            r.arity(l, 1);
            if (initial) r.fail(l.number, "duplicate '.initial'");
            initial = r.id(l, 1);
        } else if (d == ".edge") {
            r.arity(l, 3);
            edges.push_back({r.id(l, 1), r.id(l, 2), r.id(l, 3)});
        } else {
            r.unknown(l);
        }
    }
    if (!initial) r.fail(0, "missing '.initial'");
    auto ts = with_source(source, [&] { return TransitionSystem::from_edges(edges, *initial); });
    if (name) ts.set_label(*name);
    return ts;
}

BooleanNet parse_net(std::string_view text, std::string_view source) {
    Reader r(text, source, "bnet");
    std::optional<NetType> type;
    std::vector<PlaceDecl> places;
    std::vector<std::string> transitions;
    std::vector<FlowEntry> flow;
    for (const auto& l : r.body()) {
        const auto& d = l.tokens[0];
        if (d == ".type") {
            r.arity(l, 1);
            if (type) r.fail(l.number, "duplicate '.type'");
            try {
                type = parse_type(l.tokens[1]);
            } catch (const Error& e) {
                r.fail(l.number, e.what());
            }
        } else if (d == ".place") {
            r.arity(l, 2);
            places.push_back({r.id(l, 1), r.bit(l, 2)});
        } else if (d == ".transition") {
            r.arity(l, 1);
            transitions.push_back(r.id(l, 1));
        } else if (d == ".flow") {
            r.arity(l, 3);
            flow.push_back({r.id(l, 1), r.id(l, 2), r.interaction(l, 3)});
        } else {
            r.unknown(l);
        }
    }
    if (!type) r.fail(0, "missing '.type'");
    return with_source(source, [&] { return BooleanNet::build(*type, places, transitions, flow); });
}

ImplicitRegion parse_region(std::string_view text, std::string_view source) {
    Reader r(text, source, "region");
    std::optional<bool> sup;
    ImplicitRegion out;
    for (const auto& l : r.body()) {
        const auto& d = l.tokens[0];
        if (d == ".supinit") {
            r.arity(l, 1);
            if (sup) r.fail(l.number, "duplicate '.supinit'");
            sup = r.bit(l, 1);
        } else if (d == ".sig") {
            r.arity(l, 2);
            if (!out.sig.emplace(r.id(l, 1), r.interaction(l, 2)).second) {
                r.fail(l.number, "duplicate signature for '" + l.tokens[1] + "'");
            }
        } else {
            r.unknown(l);
        }
    }
    if (!sup) r.fail(0, "missing '.supinit'");
    out.sup_initial = *sup;
    return out;
}

HittingSetInstance parse_hs(std::string_view text, std::string_view source) {
    Reader r(text, source, "hs");
    std::optional<std::vector<std::string>> universe;
    std::optional<std::size_t> kappa;
    std::vector<std::pair<std::string, std::vector<std::string>>> sets;
    for (const auto& l : r.body()) {
        const auto& d = l.tokens[0];
        if (d == ".universe") {
            if (universe) r.fail(l.number, "duplicate '.universe'");
            universe.emplace();
            for (std::size_t k = 1; k < l.tokens.size(); ++k) universe->push_back(r.id(l, k));
        } else if (d == ".set") {
            if (l.tokens.size() < 2) r.fail(l.number, "'.set' needs a name");
            std::vector<std::string> members;
            for (std::size_t k = 2; k < l.tokens.size(); ++k) members.push_back(r.id(l, k));
            sets.emplace_back(r.id(l, 1), std::move(members));
        } else if (d == ".kappa") {
            r.arity(l, 1);
            if (kappa) r.fail(l.number, "duplicate '.kappa'");
            const auto& tok = l.tokens[1];
            if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos) {
                r.fail(l.number, "kappa must be a non-negative integer");
            }
            kappa = std::stoul(tok);
        } else {
            r.unknown(l);
        }
    }
    if (!universe) r.fail(0, "missing '.universe'");
    if (!kappa) r.fail(0, "missing '.kappa'");
    return with_source(source, [&] { return HittingSetInstance::build(*universe, sets, *kappa); });
}

std::string write_ts(const TransitionSystem& ts) {
    std::ostringstream os;
    os << ".model ts\n";
    if (!ts.label().empty() && is_identifier(ts.label())) os << ".name " << ts.label() << '\n';
    os << ".initial " << ts.state_name(ts.initial()) << '\n';
    for (const auto& e : ts.edges()) {
        os << ".edge " << ts.state_name(e.src) << ' ' << ts.event_name(e.event) << ' ' << ts.state_name(e.dst) << '\n';
    }
    return os.str();
}

std::string write_net(const BooleanNet& net) {
    std::ostringstream os;
    os << ".model bnet\n";
    os << ".type " << net.type().to_string() << '\n';
    for (PlaceId p = 0; p < net.num_places(); ++p) {
        os << ".place " << net.place_name(p) << ' ' << (net.initial_marking()[p] ? 1 : 0) << '\n';
    }
    for (TransitionId t = 0; t < net.num_transitions(); ++t) os << ".transition " << net.transition_name(t) << '\n';
    for (PlaceId p = 0; p < net.num_places(); ++p) {
        for (TransitionId t = 0; t < net.num_transitions(); ++t) {
            if (net.flow(p, t) == Interaction::Nop) continue;
            os << ".flow " << net.place_name(p) << ' ' << net.transition_name(t) << ' ' << name(net.flow(p, t))
               << '\n';
        }
    }
    return os.str();
}

std::string write_region(const ImplicitRegion& r) {
    std::ostringstream os;
    os << ".model region\n";
    os << ".supinit " << (r.sup_initial ? 1 : 0) << '\n';
    for (const auto& [event, i] : r.sig) {
        if (i != Interaction::Nop) os << ".sig " << event << ' ' << name(i) << '\n';
    }
    return os.str();
}

std::string write_hs(const HittingSetInstance& instance) {
    std::ostringstream os;
    os << ".model hs\n.universe";
    for (const auto& x : instance.universe) os << ' ' << x;
    os << '\n';
    for (const auto& s : instance.sets) {
        os << ".set " << s.name;
        for (auto idx : s.members) os << ' ' << instance.universe[idx];
        os << '\n';
    }
    os << ".kappa " << instance.kappa << '\n';
    return os.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Argument, "cannot read '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Argument, "cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw Error(ErrorKind::Argument, "failed writing '" + path.string() + "'");
}

}  // namespace bsynth::io
