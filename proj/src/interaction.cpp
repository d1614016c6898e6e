#include "bsynth/interaction.hpp"

#include "bsynth/error.hpp"

#include <bit>

namespace bsynth {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::Determinism: return "determinism error";
        case ErrorKind::Reachability: return "reachability error";
        case ErrorKind::Reference: return "reference error";
        case ErrorKind::Type: return "type error";
        case ErrorKind::Argument: return "argument error";
        case ErrorKind::Limit: return "limit exceeded";
    }
    return "error";
}

namespace {
constexpr std::array<std::string_view, 8> kNames = {
    "nop", "inp", "out", "set", "res", "swap", "used", "free",
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}
}  // namespace

std::string_view name(Interaction i) { return kNames[static_cast<std::size_t>(i)]; }

std::optional<Interaction> interaction_from_name(std::string_view text) {
    for (std::size_t k = 0; k < kNames.size(); ++k) {
        if (kNames[k] == text) return kAllInteractions[k];
    }
    return std::nullopt;
}

NetType::NetType(std::initializer_list<Interaction> members) {
    for (auto i : members) insert(i);
}

std::size_t NetType::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<Interaction> NetType::members() const {
    std::vector<Interaction> out;
    for (auto i : kAllInteractions) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::vector<Interaction> NetType::non_nop() const {
    std::vector<Interaction> out;
    for (auto i : kAllInteractions) {
        if (i != Interaction::Nop && contains(i)) out.push_back(i);
    }
    return out;
}

std::string NetType::to_string() const {
    std::string out;
    for (auto i : members()) {
        if (!out.empty()) out += ',';
        out += name(i);
    }
    return out;
}

NetType parse_type(std::string_view text) {
    NetType type;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const auto token = trim(text.substr(pos, comma - pos));
        if (!token.empty()) {
            auto i = interaction_from_name(token);
            if (!i) {
                throw Error(ErrorKind::Parse, "unknown interaction '" + std::string(token) + "'");
            }
            type.insert(*i);
        }
        pos = comma + 1;
    }
    if (type.empty()) throw Error(ErrorKind::Parse, "empty type literal");
    return type;
}

NetType full_type() {
    NetType t;
    for (auto i : kAllInteractions) t.insert(i);
    return t;
}

}  // namespace bsynth
