#include "bsynth/hitting_set.hpp"

#include "bsynth/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bsynth {

HittingSetInstance HittingSetInstance::build(
    std::vector<std::string> universe,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& sets,
    std::size_t kappa) {
    if (kappa == 0) throw Error(ErrorKind::Argument, "kappa must be at least 1");
    std::set<std::string> seen;
    for (const auto& x : universe) {
        if (!seen.insert(x).second) throw Error(ErrorKind::Argument, "duplicate universe element '" + x + "'");
    }
    HittingSetInstance out;
    out.universe = std::move(universe);
    out.kappa = kappa;
    std::set<std::string> names;
    for (const auto& [name, members] : sets) {
        if (!names.insert(name).second) throw Error(ErrorKind::Argument, "duplicate set name '" + name + "'");
        if (members.empty()) throw Error(ErrorKind::Argument, "set '" + name + "' is empty");
        HittingSetFamilyMember m{name, {}};
        for (const auto& x : members) {
            auto it = std::find(out.universe.begin(), out.universe.end(), x);
            if (it == out.universe.end()) {
                throw Error(ErrorKind::Reference, "set '" + name + "' names unknown element '" + x + "'");
            }
            m.members.push_back(static_cast<std::size_t>(it - out.universe.begin()));
        }
        std::sort(m.members.begin(), m.members.end());
        if (std::adjacent_find(m.members.begin(), m.members.end()) != m.members.end()) {
            throw Error(ErrorKind::Argument, "set '" + name + "' repeats an element");
        }
        out.sets.push_back(std::move(m));
    }
    return out;
}

bool HittingSetInstance::contains(std::size_t set, std::size_t element) const {
    const auto& mem = sets[set].members;
    return std::binary_search(mem.begin(), mem.end(), element);
}

bool is_hitting_set(const HittingSetInstance& instance, const std::vector<std::size_t>& chosen) {
    return std::all_of(instance.sets.begin(), instance.sets.end(), [&](const HittingSetFamilyMember& s) {
        return std::any_of(chosen.begin(), chosen.end(), [&](std::size_t x) {
            return std::binary_search(s.members.begin(), s.members.end(), x);
        });
    });
}

std::optional<std::vector<std::size_t>> hs_brute_force(const HittingSetInstance& instance) {
    const auto n = instance.universe.size();
    const auto top = std::min(instance.kappa, n);
    for (std::size_t size = 0; size <= top; ++size) {
        std::vector<std::size_t> combo(size);
        std::iota(combo.begin(), combo.end(), std::size_t{0});
        while (true) {
            if (is_hitting_set(instance, combo)) return combo;
            std::size_t pos = size;
            while (pos > 0 && combo[pos - 1] == n - size + pos - 1) --pos;
            if (pos == 0) break;
            ++combo[pos - 1];
            for (auto q = pos; q < size; ++q) combo[q] = combo[q - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace bsynth
