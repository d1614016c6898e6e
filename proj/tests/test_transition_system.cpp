#include "support.hpp"

#include <doctest.h>

using namespace bsynth;
using namespace testing_support;

namespace {

ErrorKind kind_of(const auto& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("states and events are indexed in lexicographic order") {
    const auto ts = TransitionSystem::from_edges({{"b", "y", "a"}, {"a", "x", "c"}, {"c", "x", "b"}}, "c");
    REQUIRE(ts.num_states() == 3);
    CHECK(ts.state_name(0) == "a");
    CHECK(ts.state_name(2) == "c");
    CHECK(ts.event_name(0) == "x");
    CHECK(ts.initial() == 2);
    CHECK(ts.target(0, 0) == StateId{2});
    CHECK_FALSE(ts.occurs(0, 1));
    CHECK(ts.num_edges() == 3);
    // edges() is sorted by (src, event)
    CHECK(std::is_sorted(ts.edges().begin(), ts.edges().end()));
    CHECK(ts.edges_of(1).size() == 1);
}

TEST_CASE("build rejects malformed systems") {
    CHECK(kind_of([] { TransitionSystem::build({"a", "b"}, {"x"}, {{"a", "x", "c"}}, "a"); }) ==
          ErrorKind::Reference);
    CHECK(kind_of([] { TransitionSystem::build({"a"}, {"x", "y"}, {{"a", "x", "a"}}, "a"); }) ==
          ErrorKind::Reference);
    CHECK(kind_of([] { TransitionSystem::build({"a"}, {"x"}, {{"a", "x", "a"}}, "z"); }) == ErrorKind::Reference);
    CHECK(kind_of([] {
              TransitionSystem::from_edges({{"a", "x", "b"}, {"a", "x", "c"}}, "a");
          }) == ErrorKind::Determinism);
    CHECK(kind_of([] {
              TransitionSystem::from_edges({{"a", "x", "b"}, {"c", "y", "b"}}, "a");
          }) == ErrorKind::Reachability);
    // Duplicate identical edges are harmless.
    CHECK(TransitionSystem::from_edges({{"a", "x", "b"}, {"a", "x", "b"}}, "a").num_edges() == 1);
}

TEST_CASE("single-state system without edges") {
    const auto ts = TransitionSystem::build({"only"}, {}, {}, "only");
    CHECK(ts.num_states() == 1);
    CHECK(enumerate_atoms(ts).empty());
}

TEST_CASE("BFS spanning tree of A3 is the path") {
    const auto ts = load_ts("a3.ts");
    const auto tree = spanning_tree(ts);
    CHECK(tree.num_edges() == 3);
    CHECK_FALSE(tree.parent(ts.initial()).has_value());
    CHECK(tree.parent(state(ts, "s2"))->src == state(ts, "s1"));
    CHECK(tree.order().front() == ts.initial());
}

TEST_CASE("from_parents validates its input") {
    const auto ts = load_ts("a1.ts");
    std::vector<std::optional<TreeEdge>> parents(2);
    parents[state(ts, "s1")] = TreeEdge{state(ts, "s0"), event(ts, "a")};
    CHECK(SpanningTree::from_parents(ts, parents) == spanning_tree(ts));

    auto bad = parents;
    bad[state(ts, "s0")] = TreeEdge{state(ts, "s1"), event(ts, "a")};
    CHECK(kind_of([&] { SpanningTree::from_parents(ts, bad); }) == ErrorKind::Argument);

    bad = parents;
    bad[state(ts, "s1")].reset();
    CHECK(kind_of([&] { SpanningTree::from_parents(ts, bad); }) == ErrorKind::Argument);

    // Cycle between two non-initial states.
    const auto ring = TransitionSystem::from_edges({{"i", "a", "p"}, {"p", "b", "q"}, {"q", "c", "p"}}, "i");
    std::vector<std::optional<TreeEdge>> cyc(3);
    cyc[state(ring, "p")] = TreeEdge{state(ring, "q"), event(ring, "c")};
    cyc[state(ring, "q")] = TreeEdge{state(ring, "p"), event(ring, "b")};
    CHECK(kind_of([&] { SpanningTree::from_parents(ring, cyc); }) == ErrorKind::Argument);
}

TEST_CASE("separation atoms of the small fixtures") {
    const auto a1 = load_ts("a1.ts");
    const auto atoms1 = enumerate_atoms(a1);
    REQUIRE(atoms1.size() == 1);
    CHECK(format_atom(a1, atoms1[0]) == "ssp:s0,s1");

    const auto a2 = load_ts("a2.ts");
    std::vector<std::string> names;
    for (const auto& a : enumerate_atoms(a2)) names.push_back(format_atom(a2, a));
    CHECK(names == std::vector<std::string>{"ssp:r0,r1", "essp:b,r1", "essp:c,r0"});

    const auto a3 = load_ts("a3.ts");
    // 6 pairs plus 3 events * 4 states - 3 occurrences.
    CHECK(enumerate_atoms(a3).size() == 6 + 9);
}

TEST_CASE("atom parsing") {
    const auto ts = load_ts("a2.ts");
    CHECK(parse_atom(ts, "essp:b,r1") == SeparationAtom{EsspAtom{event(ts, "b"), state(ts, "r1")}});
    CHECK(parse_atom(ts, "ssp:r1,r0") == ssp(ts, "r0", "r1"));
    CHECK(is_atom_of(ts, parse_atom(ts, "essp:c,r0")));
    CHECK(kind_of([&] { parse_atom(ts, "essp:b,r0"); }) == ErrorKind::Reference);  // b occurs at r0
    CHECK(kind_of([&] { parse_atom(ts, "essp:b,nosuch"); }) == ErrorKind::Reference);
    CHECK(kind_of([&] { parse_atom(ts, "ssp:r0,r0"); }) == ErrorKind::Reference);
    CHECK(kind_of([&] { parse_atom(ts, "sep:r0,r1"); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { parse_atom(ts, "ssp:r0"); }) == ErrorKind::Parse);
    CHECK_FALSE(is_atom_of(ts, SeparationAtom{EsspAtom{event(ts, "b"), state(ts, "r0")}}));
}

TEST_CASE("isomorphism follows initial states and labels") {
    const auto a = TransitionSystem::from_edges({{"x", "a", "y"}, {"y", "b", "x"}}, "x");
    const auto b = TransitionSystem::from_edges({{"q", "a", "p"}, {"p", "b", "q"}}, "q");
    const auto iso = isomorphic(a, b);
    REQUIRE(iso.has_value());
    CHECK(b.state_name((*iso)[state(a, "x")]) == "q");
    CHECK(b.state_name((*iso)[state(a, "y")]) == "p");

    const auto c = TransitionSystem::from_edges({{"q", "a", "p"}, {"p", "b", "p"}}, "q");
    CHECK_FALSE(isomorphic(a, c).has_value());
    CHECK_FALSE(isomorphic(load_ts("a1.ts"), load_ts("a2.ts")).has_value());
    CHECK(isomorphic(load_ts("a3.ts"), load_ts("a3.ts")).has_value());
}
