#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bsynth {

struct HittingSetFamilyMember {
    std::string name;
    std::vector<std::size_t> members;  // strictly ascending universe indices
};

// Hitting Set instance (U, M, kappa). Universe order is significant: it
// fixes the order of X_{i_1} < ... < X_{i_{m_i}} inside every set.
struct HittingSetInstance {
    std::vector<std::string> universe;
    std::vector<HittingSetFamilyMember> sets;
    std::size_t kappa = 1;

    // Builds an instance from member names in any order; sorts each set by
    // universe index. Throws Error(Reference) for unknown elements and
    // Error(Argument) for duplicates, empty sets or kappa == 0.
    static HittingSetInstance build(std::vector<std::string> universe,
                                    const std::vector<std::pair<std::string, std::vector<std::string>>>& sets,
                                    std::size_t kappa);

    std::size_t m() const { return sets.size(); }
    bool contains(std::size_t set, std::size_t element) const;
};

// True iff `chosen` (universe indices) meets every set.
bool is_hitting_set(const HittingSetInstance& instance, const std::vector<std::size_t>& chosen);

// Smallest hitting set of size at most kappa, ties broken by the
// lexicographic order of the ascending index lists; nullopt if none exists.
std::optional<std::vector<std::size_t>> hs_brute_force(const HittingSetInstance& instance);

}  // namespace bsynth
