#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sss/fixtures.hpp"
#include "sss/omega.hpp"

namespace {

using namespace sss;

FrontierGraph chain_with_optional_cycle(bool cyclic) {
    FrontierGraph g;
    g.states = {"a", "b", "c"};
    g.initial = {0};
    g.transitions.push_back({0, 1, {{"l", "x"}}});
    g.transitions.push_back({1, 2, {{"l", "y"}}});
    if (cyclic) g.transitions.push_back({2, 1, {{"l", "z"}}});
    g.checker = [](const std::string&, const FrontierGraph::Transition&,
                   const std::string&) { return true; };
    return g;
}

std::size_t cross_validation_depth(const FrontierGraph& g) {
    return 2 * g.states.size() + 1;
}

TEST_CASE("infinite paths are exactly reachable cycles") {
    FrontierGraph acyclic = chain_with_optional_cycle(false);
    CHECK(!has_infinite_path(acyclic).has_value());
    CHECK(truncation_nonempty(acyclic, 2));
    CHECK(!truncation_nonempty(acyclic, 3));

    FrontierGraph cyclic = chain_with_optional_cycle(true);
    auto lasso = has_infinite_path(cyclic);
    REQUIRE(lasso.has_value());
    CHECK(verify_lasso(cyclic, *lasso));
    CHECK(truncation_nonempty(cyclic, 100));
}

TEST_CASE("lasso verification rejects tampering") {
    FrontierGraph cyclic = chain_with_optional_cycle(true);
    auto lasso = has_infinite_path(cyclic);
    REQUIRE(lasso.has_value());
    LassoCertificate broken = *lasso;
    broken.cycle = {0};  // transition 0 is not a cycle
    CHECK(!verify_lasso(cyclic, broken));
    LassoCertificate disconnected = *lasso;
    disconnected.stem = {1};  // does not start at an initial state
    CHECK(!verify_lasso(cyclic, disconnected));

    FrontierGraph lying = cyclic;
    lying.checker = [](const std::string&, const FrontierGraph::Transition& t,
                       const std::string&) { return t.labels.at("l") != "z"; };
    CHECK(!verify_lasso(lying, *lasso));
}

TEST_CASE("interval system satisfies both halves of condition S") {
    const SelfSimilaritySystem s = builtin_fixture("freyd").system();
    CHECK(check_S1(s).holds);
    CHECK(check_S2(s).holds);
    CHECK(check_solvable(s));
}

TEST_CASE("interval cospan (s,t) admits no depth-1 extension") {
    const SelfSimilaritySystem s = builtin_fixture("freyd").system();
    FrontierGraph g = s1_graph(s);
    // the (s,t) cospan supports not even one ladder level, and no
    // non-completable cospan supports an infinite ladder
    bool found_st = false;
    for (std::size_t i = 0; i < g.states.size(); ++i) {
        const std::string& st = g.states[i];
        const auto cut = st.find('\x1f');
        REQUIRE(cut != std::string::npos);
        const std::string f = st.substr(0, cut), fp = st.substr(cut + 1);
        if (complete_cospan(s.cat, f, fp).has_value()) continue;
        FrontierGraph q = g;
        q.initial = {i};
        if ((f == "s" && fp == "t") || (f == "t" && fp == "s")) {
            found_st = true;
            CHECK(!truncation_nonempty(q, 1));
        }
        CHECK(!has_infinite_path(q).has_value());
    }
    CHECK(found_st);
}

TEST_CASE("hom module over the parallel pair is unsolvable with witness (s,t)") {
    const SelfSimilaritySystem s = builtin_fixture("parallel-hom").system();
    SVerdict v1 = check_S1(s);
    CHECK(!v1.holds);
    CHECK(v1.witness == std::pair<std::string, std::string>{"s", "t"});
    CHECK(verify_lasso(v1.graph, v1.lasso));
    SVerdict v2 = check_S2(s);
    CHECK(!v2.holds);
    CHECK(v2.witness == std::pair<std::string, std::string>{"s", "t"});
    CHECK(verify_lasso(v2.graph, v2.lasso));
    CHECK(!check_solvable(s));
}

TEST_CASE("remaining fixtures are solvable") {
    for (const std::string name : {"freyd", "discrete-ab", "julia"})
        CHECK_MESSAGE(check_solvable(builtin_fixture(name).system()), name);
}

TEST_CASE("omega verdict equals bounded truncation on every fixture") {
    for (const auto& name : fixture_names()) {
        const SelfSimilaritySystem s = builtin_fixture(name).system();
        for (FrontierGraph g : {s1_graph(s), s2_graph(s)}) {
            const std::size_t depth = cross_validation_depth(g);
            for (std::size_t i = 0; i < g.states.size(); ++i) {
                FrontierGraph q = g;
                q.initial = {i};
                CAPTURE(name);
                CAPTURE(g.states[i]);
                CHECK(has_infinite_path(q).has_value() == truncation_nonempty(q, depth));
            }
        }
    }
}

TEST_CASE("every unsolvability lasso re-verifies square by square") {
    for (const auto& name : fixture_names()) {
        const SelfSimilaritySystem s = builtin_fixture(name).system();
        for (const SVerdict& v : {check_S1(s), check_S2(s)}) {
            if (v.holds) continue;
            CAPTURE(name);
            CHECK(verify_lasso(v.graph, v.lasso));
        }
    }
}

TEST_CASE("free row emits exactly the chains of the module") {
    const Module m = builtin_fixture("freyd").module;
    Row r = free_row(m, "1");
    CHECK(r.state_object.at(r.initial) == "1");
    const auto& steps = r.next.at(r.initial);
    CHECK(steps.size() == 5);  // every element into object 1
    for (const auto& [elem, next] : steps) {
        CHECK(m.target(elem) == "1");
        CHECK(r.state_object.at(next) == m.source(elem));
    }
}

}  // namespace
