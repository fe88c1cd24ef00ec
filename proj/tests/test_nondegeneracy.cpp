#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "sss/fixtures.hpp"
#include "sss/nondegeneracy.hpp"

namespace {

using namespace sss;

FinCategory arrow_category() {
    FinCategory c;
    c.name = "arrow";
    c.objects = {"0", "1"};
    c.morphisms = {{"f", "0", "1"}, {"i0", "0", "0"}, {"i1", "1", "1"}};
    c.identity = {{"0", "i0"}, {"1", "i1"}};
    return c;
}

SetValuedFunctor arrow_functor(const std::vector<std::string>& x0,
                               const std::vector<std::string>& x1,
                               const std::map<std::string, std::string>& ff) {
    SetValuedFunctor x;
    x.name = "arrowX";
    x.base = arrow_category();
    x.elements = {{"0", x0}, {"1", x1}};
    for (const auto& [e, v] : ff) x.action[{"f", e}] = v;
    return x;
}

SetValuedFunctor interval_shape(const std::vector<std::string>& x0,
                                const std::vector<std::string>& x1,
                                const std::map<std::string, std::string>& fs,
                                const std::map<std::string, std::string>& ft) {
    SetValuedFunctor x;
    x.name = "shape";
    x.base = builtin_fixture("freyd").category;
    x.elements = {{"0", x0}, {"1", x1}};
    for (const auto& [e, v] : fs) x.action[{"s", e}] = v;
    for (const auto& [e, v] : ft) x.action[{"t", e}] = v;
    return x;
}

bool injective_disjoint(const SetValuedFunctor& x) {
    std::set<std::string> im_s, im_t;
    for (const auto& e : x.at("0")) {
        if (!im_s.insert(x.apply("s", e)).second) return false;
        if (!im_t.insert(x.apply("t", e)).second) return false;
    }
    for (const auto& v : im_s)
        if (im_t.count(v)) return false;
    return true;
}

/// Does X turn the pullback square of the cospan (f, f) in the arrow
/// category into a pullback square of sets?
bool preserves_ff_pullback(const SetValuedFunctor& x) {
    // pullback of f, f is (0, i0, i0); image square is a pullback iff
    // {(u,v) : Xf u = Xf v} is the diagonal of X0, i.e. Xf is injective
    std::size_t matched = 0;
    for (const auto& u : x.at("0"))
        for (const auto& v : x.at("0"))
            if (x.apply("f", u) == x.apply("f", v)) ++matched;
    return matched == x.at("0").size();
}

TEST_CASE("arrow category: nondegenerate iff the action is injective") {
    SetValuedFunctor good = arrow_functor({"u", "v"}, {"p", "q", "r"},
                                          {{"u", "p"}, {"v", "q"}});
    SetValuedFunctor bad = arrow_functor({"u", "v"}, {"p", "q"},
                                         {{"u", "p"}, {"v", "p"}});
    CHECK(check_nondegenerate_functor(good).holds);
    CHECK(!check_nondegenerate_functor(bad).holds);
    CHECK(check_nondegenerate_functor(good).holds == preserves_ff_pullback(good));
    CHECK(check_nondegenerate_functor(bad).holds == preserves_ff_pullback(bad));
    REQUIRE(!check_nondegenerate_functor(bad).failures.empty());
    NDFailure w = check_nondegenerate_functor(bad).failures.front();
    CHECK(bad.apply(w.f, w.x) == bad.apply(w.fp, w.xp.empty() ? w.x : w.xp));
}

TEST_CASE("arrow category: checker agrees with pullback preservation on all small functors") {
    // all functors with |X0| = 2, |X1| = 2
    const std::vector<std::string> x1 = {"p", "q"};
    for (const auto& a : x1)
        for (const auto& b : x1) {
            SetValuedFunctor x = arrow_functor({"u", "v"}, x1, {{"u", a}, {"v", b}});
            CHECK(check_nondegenerate_functor(x).holds == preserves_ff_pullback(x));
        }
}

TEST_CASE("parallel pair base: nondegenerate iff injections with disjoint images") {
    std::vector<SetValuedFunctor> cases = {
        interval_shape({"star"}, {"a", "b", "c"}, {{"star", "a"}}, {{"star", "c"}}),
        interval_shape({"star"}, {"a", "b", "c"}, {{"star", "a"}}, {{"star", "a"}}),
        interval_shape({"u", "v"}, {"a", "b", "c"}, {{"u", "a"}, {"v", "a"}},
                       {{"u", "b"}, {"v", "c"}}),
        interval_shape({"u", "v"}, {"a", "b", "c", "d"}, {{"u", "a"}, {"v", "b"}},
                       {{"u", "c"}, {"v", "d"}}),
        interval_shape({}, {"a"}, {}, {}),
    };
    for (const auto& x : cases)
        CHECK(check_nondegenerate_functor(x).holds == injective_disjoint(x));
}

TEST_CASE("cofork characterization: circle passes, pinch fails with an ND1 witness") {
    const SystemDocument doc = builtin_fixture("cofork");
    CHECK(check_nondegenerate_functor(*doc.functor("circle")).holds);
    NDVerdict v = check_nondegenerate_functor(*doc.functor("pinch"));
    CHECK(!v.holds);
    REQUIRE(!v.failures.empty());
    CHECK(v.failures.front().kind == "ND1");
    // re-verify the witness: the cospan really identifies the two elements
    // and no square-with-element explains it
    const NDFailure& w = v.failures.front();
    const SetValuedFunctor& x = *doc.functor("pinch");
    CHECK(x.apply(w.f, w.x) == x.apply(w.fp, w.xp));
}

TEST_CASE("coglobular truncation: representable passes, point functor fails") {
    const SystemDocument doc = builtin_fixture("coglobular3");
    CHECK(check_nondegenerate_functor(*doc.functor("rep0")).holds);
    CHECK(!check_nondegenerate_functor(*doc.functor("point")).holds);
}

TEST_CASE("fast path and reference path agree") {
    for (const auto& name : fixture_names()) {
        const SystemDocument doc = builtin_fixture(name);
        std::vector<SetValuedFunctor> xs = doc.functors;
        for (const auto& b : doc.category.objects) xs.push_back(module_row(doc.module, b));
        for (const auto& x : xs) {
            CAPTURE(name);
            CAPTURE(x.name);
            CHECK(check_nondegenerate_functor(x, true).holds ==
                  check_nondegenerate_functor(x, false).holds);
        }
    }
}

TEST_CASE("flatness") {
    const SystemDocument cofork = builtin_fixture("cofork");
    CHECK(check_flat(*cofork.functor("circle")).holds);
    CHECK(!check_flat(*cofork.functor("pinch")).holds);
    SetValuedFunctor empty = interval_shape({}, {}, {}, {});
    CHECK(!check_flat(empty).holds);  // flat requires nonempty
    const SystemDocument cog = builtin_fixture("coglobular3");
    CHECK(check_flat(*cog.functor("rep0")).holds);  // representable
    CHECK(!check_flat(*cog.functor("point")).holds);
}

TEST_CASE("components: two disjoint copies of the endpoint span") {
    SetValuedFunctor x = interval_shape(
        {"u1", "u2"}, {"a1", "c1", "a2", "c2"},
        {{"u1", "a1"}, {"u2", "a2"}}, {{"u1", "c1"}, {"u2", "c2"}});
    auto comps = components_of_functor(x);
    CHECK(comps.size() == 2);
    SetValuedFunctor one = interval_shape({"star"}, {"a", "b", "c"}, {{"star", "a"}},
                                          {{"star", "c"}});
    CHECK(components_of_functor(one).size() == 2);  // b is its own component
}

TEST_CASE("module nondegeneracy: interval system passes, collapsed actions fail") {
    const SystemDocument doc = builtin_fixture("freyd");
    CHECK(check_nondegenerate_module(doc.module).holds);
    Module mut = doc.module;
    mut.left[{"t", "e"}] = "p0";  // both endpoint inclusions now hit 0
    REQUIRE(validate_module(mut).empty());
    ModuleNDVerdict v = check_nondegenerate_module(mut);
    CHECK(!v.holds);
    REQUIRE(!v.failures.empty());
    CHECK(v.failures.front().first == "0");
    // collapsing both endpoint inclusions breaks ND1 (cospan (s,t)) and ND2
    // (parallel pair (s,t)) alike; the checker reports the ND1 instance first
    std::set<std::string> kinds;
    for (const auto& [b, w] : v.failures) kinds.insert(w.kind);
    CHECK(kinds.count("ND1") == 1);
    CHECK(kinds.count("ND2") == 1);
    CHECK(!system_nondegenerate({doc.category, mut, {}, {}}));
    CHECK(system_nondegenerate(doc.system()));
}

TEST_CASE("all fixture modules are nondegenerate") {
    for (const auto& name : fixture_names())
        CHECK_MESSAGE(check_nondegenerate_module(builtin_fixture(name).module).holds, name);
}

}  // namespace
