#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sss/dyadic.hpp"
#include "sss/fixtures.hpp"

namespace {

using namespace sss;

PeriodicAddress addr(std::vector<std::string> pre, std::vector<std::string> period,
                     std::string anchor = "1") {
    return {std::move(anchor), std::move(pre), std::move(period)};
}

/// The five eventually-periodic representations of the midpoint.
std::vector<PeriodicAddress> half_representations() {
    return {
        addr({"lo"}, {"hi"}),       // 0.0111...
        addr({"hi"}, {"lo"}),       // 0.1000...
        addr({"ph"}, {"e"}),        // the pinned midpoint of [0,1]
        addr({"lo", "hi", "p1"}, {"e"}),  // sup of [1/4, 1/2]
        addr({"hi", "lo", "p0"}, {"e"}),  // inf of [1/2, 3/4]
    };
}

/// Doubling on {0, 1/3, 2/3, 1}: the digit extraction walk of the direct
/// proof of the interval's universality.
Coalgebra doubling(const SystemDocument& doc) {
    Coalgebra c;
    c.name = "doubling";
    c.carrier.name = "Y";
    c.carrier.base = doc.category;
    c.carrier.elements = {{"0", {"w"}}, {"1", {"y0", "ya", "yb", "y1"}}};
    c.carrier.action = {{{"s", "w"}, "y0"}, {{"t", "w"}, "y1"}};
    c.structure = {{"w", {"e", "w"}},   {"y0", {"lo", "y0"}}, {"ya", {"lo", "yb"}},
                   {"yb", {"hi", "ya"}}, {"y1", {"hi", "y1"}}};
    return c;
}

TEST_CASE("chain objects and address validation") {
    const Module m = builtin_fixture("freyd").module;
    CHECK(chain_objects(m, {"1", {"lo", "hi"}}) ==
          std::vector<std::string>{"1", "1", "1"});
    CHECK(chain_objects(m, {"1", {"ph", "e"}}) == std::vector<std::string>{"1", "0", "0"});
    CHECK_THROWS(chain_objects(m, {"1", {"e"}}));
    CHECK(validate_address(m, addr({}, {"hi", "lo"})).empty());
    CHECK(!validate_address(m, addr({"lo"}, {"e"})).empty());  // wrap breaks
    CHECK(!validate_address(m, addr({}, {})).empty());         // empty period
    CHECK(address_digit(m, addr({"lo"}, {"hi", "ph"}), 0) == "lo");
    CHECK(address_digit(m, addr({"lo"}, {"hi", "ph"}), 4) == "ph");
    CHECK(address_object(m, addr({"ph"}, {"e"}), 1) == "0");
}

TEST_CASE("behead and prepend") {
    const Module m = builtin_fixture("freyd").module;
    auto [head, tail] = iota(m, addr({}, {"hi", "lo"}));  // 2/3
    CHECK(head == "hi");
    CHECK(tail == addr({}, {"lo", "hi"}));  // 1/3
    CHECK(iota_inverse(m, head, tail) == addr({"hi"}, {"lo", "hi"}));
    auto [h2, t2] = iota(m, addr({"hi"}, {"lo", "hi"}));
    CHECK(h2 == "hi");
    CHECK(t2 == addr({}, {"lo", "hi"}));
    CHECK(decode_dyadic(addr({}, {"hi", "lo"})) == Rational{2, 3});
    CHECK(decode_dyadic(tail) == Rational{1, 3});
}

TEST_CASE("the five midpoint representations are pairwise equal") {
    const SelfSimilaritySystem s = builtin_fixture("freyd").system();
    auto reps = half_representations();
    for (const auto& t : reps) CHECK(decode_dyadic(t) == Rational{1, 2});
    for (const auto& t : reps)
        for (const auto& tp : reps) {
            EqualityVerdict v = decide_equal(s, t, tp);
            CHECK(v.result == Equality::Equal);
            CHECK(verify_lasso(v.graph, v.certificate));
        }
}

TEST_CASE("distinct rationals are told apart") {
    const SelfSimilaritySystem s = builtin_fixture("freyd").system();
    CHECK(decide_equal(s, addr({}, {"hi", "lo"}), addr({}, {"lo", "hi"})).result ==
          Equality::NotEqual);
    CHECK(decide_equal(s, addr({}, {"lo"}), addr({"p0"}, {"e"})).result ==
          Equality::Equal);
    CHECK(decide_equal(s, addr({}, {"lo"}), addr({"p1"}, {"e"})).result ==
          Equality::NotEqual);
}

TEST_CASE("negative verdicts are withheld on unsolvable systems") {
    const SelfSimilaritySystem s = builtin_fixture("parallel-hom").system();
    auto a1 = addr({"h_s"}, {"h_id0"});
    auto a2 = addr({"h_t"}, {"h_id0"});
    for (const auto& l : {a1, a2})
        for (const auto& r : {a1, a2}) {
            EqualityVerdict v = decide_equal(s, l, r);
            CHECK(v.result != Equality::NotEqual);
        }
}

TEST_CASE("level categories of the interval system") {
    const SystemDocument doc = builtin_fixture("freyd");
    const SelfSimilaritySystem s = doc.system();
    CHECK(depth_chains(doc.module, "1", 1).size() == 5);
    CHECK(depth_chains(doc.module, "1", 2).size() == 13);
    LevelCategory lc = level_category(s, "1", 1);
    CHECK(lc.cat.objects.size() == 5);
    CHECK(validate_category(lc.cat).empty());
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(level_components(s, "1", n).classes.class_count() == 1);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(!level_projection(s, "1", n).empty());
}

TEST_CASE("level components of the discrete system count the drop position") {
    const SelfSimilaritySystem s = builtin_fixture("discrete-ab").system();
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(level_components(s, "1", n).classes.class_count() == n + 1);
    // the n-drop addresses and the never-drop address are pairwise distinct
    std::vector<PeriodicAddress> pts = {addr({}, {"b11"})};
    for (std::size_t n = 0; n < 4; ++n) {
        std::vector<std::string> pre(n, "b11");
        pre.push_back("a01");
        pts.push_back(addr(pre, {"a00"}));
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            EqualityVerdict v = decide_equal(s, pts[i], pts[j]);
            CHECK(v.result == (i == j ? Equality::Equal : Equality::NotEqual));
        }
}

TEST_CASE("equal addresses are never separated by level truncation") {
    for (const std::string name : {"freyd", "discrete-ab"}) {
        const SystemDocument doc = builtin_fixture(name);
        const SelfSimilaritySystem s = doc.system();
        for (const auto& a : doc.category.objects)
            for (std::size_t n = 1; n <= 2; ++n) {
                LevelComponents lc = level_components(s, a, n);
                std::vector<std::pair<FiniteChain, PeriodicAddress>> ext;
                for (const auto& c : lc.chains) {
                    PeriodicAddress t{c.anchor, {}, {}};
                    t.pre.assign(c.elems.begin(), c.elems.end() - 1);
                    t.period = {c.elems.back()};
                    if (validate_address(doc.module, t).empty()) ext.push_back({c, t});
                }
                for (const auto& [c1, t1] : ext)
                    for (const auto& [c2, t2] : ext)
                        if (decide_equal(s, t1, t2).result == Equality::Equal)
                            CHECK(lc.classes.same_class(chain_id(c1), chain_id(c2)));
            }
    }
}

TEST_CASE("midpoint coalgebra validates; broken naturality is caught") {
    const SystemDocument doc = builtin_fixture("freyd");
    const SelfSimilaritySystem s = doc.system();
    const Coalgebra* mid = doc.coalgebra("midpoint");
    REQUIRE(mid != nullptr);
    CHECK(validate_coalgebra(s, *mid).empty());
    Coalgebra broken = *mid;
    broken.structure["a"] = {"hi", "a"};  // no longer matches s acting on star
    CHECK(!validate_coalgebra(s, broken).empty());
    CHECK(validate_coalgebra(s, doubling(doc)).empty());
}

TEST_CASE("resolving the midpoint coalgebra decodes to 0, 1/2, 1") {
    const SystemDocument doc = builtin_fixture("freyd");
    const SelfSimilaritySystem s = doc.system();
    const Coalgebra& c = *doc.coalgebra("midpoint");
    CHECK(decode_dyadic(resolve(s, c, "a")) == Rational{0, 1});
    CHECK(decode_dyadic(resolve(s, c, "b")) == Rational{1, 2});
    CHECK(decode_dyadic(resolve(s, c, "c")) == Rational{1, 1});
    CHECK(resolve(s, c, "b") == addr({"ph"}, {"e"}));
    CHECK(decode_dyadic(canonical_map(s, c, "b")) == Rational{1, 2});
}

TEST_CASE("digit extraction: doubling realizes binary expansions") {
    const SystemDocument doc = builtin_fixture("freyd");
    const SelfSimilaritySystem s = doc.system();
    Coalgebra c = doubling(doc);
    CHECK(decode_dyadic(resolve(s, c, "y0")) == Rational{0, 1});
    CHECK(decode_dyadic(resolve(s, c, "ya")) == Rational{1, 3});
    CHECK(decode_dyadic(resolve(s, c, "yb")) == Rational{2, 3});
    CHECK(decode_dyadic(resolve(s, c, "y1")) == Rational{1, 1});
    CHECK(resolve(s, c, "ya") == addr({}, {"lo", "hi"}));
}

TEST_CASE("choice orders give equal resolutions") {
    const SystemDocument doc = builtin_fixture("freyd");
    const SelfSimilaritySystem s = doc.system();
    std::vector<Coalgebra> cs = {*doc.coalgebra("midpoint"), doubling(doc)};
    for (const auto& c : cs)
        for (const auto& [x, mx] : c.structure) {
            PeriodicAddress stored = resolve(s, c, x, ChoiceOrder::Stored);
            for (ChoiceOrder o : {ChoiceOrder::LexAscending, ChoiceOrder::LexDescending,
                                  ChoiceOrder::Middle}) {
                PeriodicAddress other = resolve(s, c, x, o);
                CAPTURE(x);
                CHECK(decide_equal(s, stored, other).result == Equality::Equal);
            }
        }
}

TEST_CASE("canonical map is natural and a coalgebra map up to equality") {
    const SystemDocument doc = builtin_fixture("freyd");
    const SelfSimilaritySystem s = doc.system();
    std::vector<Coalgebra> cs = {*doc.coalgebra("midpoint"), doubling(doc)};
    for (const auto& c : cs) {
        for (const auto& [x, mx] : c.structure) {
            // coalgebra map law: the canonical image beheads to the stored step
            const auto& [m, xp] = mx;
            PeriodicAddress lhs = canonical_map(s, c, x);
            PeriodicAddress rhs = iota_inverse(doc.module, m, canonical_map(s, c, xp));
            CHECK(decide_equal(s, lhs, rhs).result == Equality::Equal);
        }
        // naturality in the base morphisms
        for (const auto& f : doc.category.morphisms) {
            if (doc.category.is_identity(f.id)) continue;
            for (const auto& x : c.carrier.at(f.dom)) {
                PeriodicAddress tx = canonical_map(s, c, x);
                auto [head, tail] = iota(doc.module, tx);
                PeriodicAddress moved =
                    iota_inverse(doc.module, doc.module.left_act(f.id, head), tail);
                PeriodicAddress direct = canonical_map(s, c, c.carrier.apply(f.id, x));
                CHECK(decide_equal(s, moved, direct).result == Equality::Equal);
            }
        }
    }
}

TEST_CASE("resolutions along prefixes and res sets") {
    const SystemDocument doc = builtin_fixture("freyd");
    const SelfSimilaritySystem s = doc.system();
    const Coalgebra& c = *doc.coalgebra("midpoint");
    FiniteChain lo_prefix{"1", {"lo"}};
    FiniteChain hi_prefix{"1", {"hi"}};
    auto rb = resolutions_along_prefix(s, c, "b", lo_prefix);
    REQUIRE(rb.size() == 1);
    CHECK(rb.front() == std::vector<std::string>{"b", "c"});  // 1/2 = sup [0,1/2]
    auto ra = resolutions_along_prefix(s, c, "a", lo_prefix);
    REQUIRE(ra.size() == 1);
    CHECK(ra.front() == std::vector<std::string>{"a", "a"});
    CHECK(resolutions_along_prefix(s, c, "c", lo_prefix).empty());
    CHECK(res_set(s, c, lo_prefix) == std::vector<std::string>{"a", "b"});
    CHECK(res_set(s, c, hi_prefix) == std::vector<std::string>{"b", "c"});
    CHECK(res_set(s, c, FiniteChain{"1", {"lo", "lo"}}) ==
          std::vector<std::string>{"a"});
    CHECK(res_set(s, c, FiniteChain{"1", {"lo", "hi"}}) ==
          std::vector<std::string>{"b"});  // 1/2 = sup of [1/4, 1/2]
}

TEST_CASE("double complex: row classes against the column address") {
    const SystemDocument doc = builtin_fixture("freyd");
    const SelfSimilaritySystem s = doc.system();
    // column digits m_1 = lo, m_k = hi (k >= 2); row n holds an alternative
    // representation t_n of the column's n-th tail
    PeriodicAddress column = addr({"lo"}, {"hi"});  // 1/2
    std::vector<PeriodicAddress> rows = {addr({"ph"}, {"e"}),   // t_0 ~ 1/2
                                         addr({"p1"}, {"e"}),   // t_1 ~ 1
                                         addr({"p1"}, {"e"}),   // t_2 ~ 1
                                         addr({"p1"}, {"e"})};
    std::vector<std::string> column_digits = {"lo", "hi", "hi"};
    // hypothesis: t_n equals m_{n+1} prepended to t_{n+1}
    for (std::size_t n = 0; n + 1 < rows.size(); ++n) {
        PeriodicAddress glued = iota_inverse(doc.module, column_digits[n], rows[n + 1]);
        CHECK(decide_equal(s, rows[n], glued).result == Equality::Equal);
    }
    // conclusion: the top row equals the column
    CHECK(decide_equal(s, rows[0], column).result == Equality::Equal);
}

}  // namespace
