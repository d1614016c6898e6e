#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bsynth {

// The eight Boolean interactions between a place and a transition. The
// enumerator order is the canonical order used by every enumeration.
enum class Interaction : std::uint8_t {
    Nop,
    Inp,
    Out,
    Set,
    Res,
    Swap,
    Used,
    Free,
};

inline constexpr std::array<Interaction, 8> kAllInteractions = {
    Interaction::Nop, Interaction::Inp, Interaction::Out,  Interaction::Set,
    Interaction::Res, Interaction::Swap, Interaction::Used, Interaction::Free,
};

// i(x) for a Boolean value x; nullopt where the interaction is undefined.
constexpr std::optional<bool> apply(Interaction i, bool x) {
    switch (i) {
        case Interaction::Nop: return x;
        case Interaction::Inp: return x ? std::optional<bool>(false) : std::nullopt;
        case Interaction::Out: return x ? std::nullopt : std::optional<bool>(true);
        case Interaction::Set: return true;
        case Interaction::Res: return false;
        case Interaction::Swap: return !x;
        case Interaction::Used: return x ? std::optional<bool>(true) : std::nullopt;
        case Interaction::Free: return x ? std::nullopt : std::optional<bool>(false);
    }
    return std::nullopt;
}

// Interactions undefined on some input; only these can separate an event
// from a state.
constexpr bool is_partial(Interaction i) {
    return i == Interaction::Inp || i == Interaction::Out ||
           i == Interaction::Used || i == Interaction::Free;
}

std::string_view name(Interaction i);
std::optional<Interaction> interaction_from_name(std::string_view text);

// A Boolean type of net: a non-empty set of interactions.
class NetType {
public:
    NetType() = default;
    NetType(std::initializer_list<Interaction> members);

    bool contains(Interaction i) const { return (mask_ >> index(i)) & 1U; }
    void insert(Interaction i) { mask_ |= static_cast<std::uint8_t>(1U << index(i)); }
    bool empty() const { return mask_ == 0; }
    std::size_t size() const;

    // Members in canonical order.
    std::vector<Interaction> members() const;
    // Members other than nop, in canonical order.
    std::vector<Interaction> non_nop() const;

    bool is_subset_of(const NetType& other) const { return (mask_ & ~other.mask_) == 0; }
    std::uint8_t mask() const { return mask_; }

    // Comma-separated names in canonical order, e.g. "nop,inp,set".
    std::string to_string() const;

    friend bool operator==(const NetType&, const NetType&) = default;

private:
    static constexpr unsigned index(Interaction i) { return static_cast<unsigned>(i); }
    std::uint8_t mask_ = 0;
};

inline std::vector<Interaction> non_nop(const NetType& type) { return type.non_nop(); }

// Parses a type literal such as "nop,inp,swap". Whitespace around names is
// ignored and duplicates collapse. Throws Error(Parse) on unknown names or
// an empty list.
NetType parse_type(std::string_view text);

// The full set of eight interactions.
NetType full_type();

}  // namespace bsynth
