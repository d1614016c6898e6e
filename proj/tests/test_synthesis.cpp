#include "support.hpp"

#include <doctest.h>

using namespace bsynth;
using namespace testing_support;

TEST_CASE("candidate formula matches Pascal's triangle") {
    CHECK(candidate_count_formula(16, 2, 4) == 68226);
    CHECK(formula_oracle(16, 2, 4) == 68226);
    for (std::size_t n = 0; n <= 20; ++n) {
        for (std::size_t k = 0; k <= 7; ++k) {
            for (std::size_t d = 0; d <= n + 1; d += 2) CHECK(candidate_count_formula(n, k, d) == formula_oracle(n, k, d));
        }
    }
    CHECK(candidate_count_formula(200, 7, 200) == UINT64_MAX);
}

TEST_CASE("exhaustive stream is canonical and complete") {
    const auto ts = load_ts("a3.ts");
    RegionEnumerator en(ts, full_type(), 2);
    std::vector<CanonicalKey> keys;
    while (auto r = en.next()) {
        CHECK(validate_region(ts, full_type(), *r));
        CHECK(restriction_count(*r) <= 2);
        keys.push_back(canonical_key(ts, *r));
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
    CHECK(en.stats().candidates_examined == candidate_count_formula(3, 7, 2));
    CHECK(en.stats().valid_regions == keys.size());
}

TEST_CASE("d = 0 yields the two constant regions") {
    const auto ts = load_ts("a2.ts");
    const auto regions = enumerate_valid_regions(ts, kTau1, 0);
    REQUIRE(regions.size() == 2);
    CHECK(regions[0].support == std::vector<std::uint8_t>{0, 0});
    CHECK(regions[1].support == std::vector<std::uint8_t>{1, 1});
}

TEST_CASE("Example 2 verdicts") {
    const auto a1 = load_ts("a1.ts");
    const auto a2 = load_ts("a2.ts");
    for (auto mode : {SolveMode::Lazy, SolveMode::Exhaustive, SolveMode::Pruned}) {
        const auto yes = solve_drts(a1, kTau1, 1, {mode, false});
        CHECK(yes.verdict == Verdict::Solvable);
        CHECK(yes.admissible_set.size() == 1);

        const auto no0 = solve_drts(a1, kTau0, 1, {mode, false});
        CHECK(no0.verdict == Verdict::Unsolvable);
        CHECK(no0.unsolved_atoms == std::vector<SeparationAtom>{ssp(a1, "s0", "s1")});
        CHECK(no0.witness_map.empty());

        const auto no2 = solve_drts(a2, kTau1, 2, {mode, false});
        CHECK(no2.verdict == Verdict::Unsolvable);
        CHECK(no2.unsolved_atoms == std::vector<SeparationAtom>{essp(a2, "b", "r1"), essp(a2, "c", "r0")});
    }
    // No tau_0 region of A2 solves any atom.
    for (const auto& r : enumerate_valid_regions(a2, kTau0, 2)) {
        for (const auto& atom : enumerate_atoms(a2)) CHECK_FALSE(solves(a2, r, atom));
    }
}

TEST_CASE("Example 2 net round-trips through verify") {
    const auto a1 = load_ts("a1.ts");
    const auto outcome = solve_drts(a1, kTau1, 1);
    const auto net = synthesize_net(a1, outcome.admissible_set, kTau1);
    CHECK(io::write_net(net) == io::write_net(load_net("a1.bnet")));
    CHECK(verify_lemma1(a1, net));
    CHECK(dependency_number(net).overall == 1);
}

TEST_CASE("Example 1 net round-trips through synthesis") {
    const auto net = load_net("example1.bnet");
    const auto rg = reachability_graph(net);
    const auto outcome = solve_drts(rg, net.type(), 2);
    REQUIRE(outcome.verdict == Verdict::Solvable);
    for (const auto& [atom, idx] : outcome.witness_map) {
        REQUIRE(idx < outcome.admissible_set.size());
        CHECK(solves(rg, outcome.admissible_set[idx], atom));
    }
    CHECK(verify_lemma1(rg, synthesize_net(rg, outcome.admissible_set, net.type())));
    CHECK_FALSE(verify_lemma1(load_ts("a2.ts"), net));
}

TEST_CASE("synthesize_net rejects invalid regions and accepts none") {
    const auto a1 = load_ts("a1.ts");
    CHECK_THROWS_AS(synthesize_net(a1, {Region{{0, 0}, {Interaction::Swap}}}, kTau1), Error);
    const auto empty = synthesize_net(a1, {}, kTau1);
    CHECK(empty.num_places() == 0);
    CHECK_FALSE(verify_lemma1(a1, empty));
}

TEST_CASE("modes agree on the admissible set") {
    std::mt19937 rng(11);
    for (int round = 0; round < 25; ++round) {
        const auto ts = random_ts(rng, 4, 3, 0.4);
        for (std::size_t d = 0; d <= 3; ++d) {
            const auto lazy = solve_drts(ts, kTau1, d, {SolveMode::Lazy, false});
            const auto full = solve_drts(ts, kTau1, d, {SolveMode::Exhaustive, false});
            const auto pruned = solve_drts(ts, kTau1, d, {SolveMode::Pruned, false});
            CHECK(lazy.verdict == full.verdict);
            CHECK(lazy.admissible_set == full.admissible_set);
            CHECK(pruned.admissible_set == full.admissible_set);
            CHECK(pruned.unsolved_atoms == full.unsolved_atoms);
            CHECK(full.stats.candidates_examined == candidate_count_formula(ts.num_events(), 3, d));
        }
    }
}

TEST_CASE("shrink keeps every atom covered") {
    const auto net = load_net("example1.bnet");
    const auto rg = reachability_graph(net);
    const auto plain = solve_drts(rg, full_type(), 2);
    const auto small = solve_drts(rg, full_type(), 2, {SolveMode::Lazy, true});
    REQUIRE(small.verdict == Verdict::Solvable);
    CHECK(small.admissible_set.size() <= plain.admissible_set.size());
    for (const auto& [atom, idx] : small.witness_map) CHECK(solves(rg, small.admissible_set[idx], atom));
}

TEST_CASE("report is deterministic and names the verdict") {
    const auto a2 = load_ts("a2.ts");
    const auto r1 = format_report(a2, kTau1, solve_drts(a2, kTau1, 2));
    const auto r2 = format_report(a2, kTau1, solve_drts(a2, kTau1, 2));
    CHECK(r1 == r2);
    CHECK(r1.find("unsolvable") != std::string::npos);
    CHECK(r1.find("essp:b,r1") != std::string::npos);
}

TEST_CASE("types without nop restrict every event") {
    const auto a1 = load_ts("a1.ts");
    const NetType swap_only{Interaction::Swap};
    RegionEnumerator en(a1, swap_only, 1);
    std::size_t count = 0;
    while (auto r = en.next()) {
        CHECK(r->signature == std::vector<Interaction>{Interaction::Swap});
        ++count;
    }
    CHECK(count == 2);
    CHECK(en.stats().candidates_examined == candidate_count_formula(1, 1, 1));
    CHECK(solve_drts(a1, swap_only, 0).verdict == Verdict::Unsolvable);
}

TEST_CASE("solve_atom rejects foreign atoms") {
    const auto a2 = load_ts("a2.ts");
    CHECK_THROWS_AS(solve_atom(a2, kTau1, 2, SeparationAtom{EsspAtom{0, 0}}), Error);
}
