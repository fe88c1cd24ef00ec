#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "sss/fixtures.hpp"
#include "sss/nondegeneracy.hpp"

namespace {

using namespace sss;

using Classes = std::set<std::set<std::string>>;

Classes to_class_set(const Partition& p) {
    Classes out;
    for (const auto& c : p.classes()) out.insert(std::set<std::string>(c.begin(), c.end()));
    return out;
}

/// Naive fixpoint closure: number every raw pair, then rescan all
/// single-relation rewrites until no relabeling happens.
Classes naive_quotient(const Module& m, const SetValuedFunctor& x, const std::string& a) {
    std::map<std::string, int> label;
    int next = 0;
    for (const auto& me : m.elements_into(a))
        for (const auto& xe : x.at(m.source(me)))
            label[QuotientSet::key(me, xe)] = next++;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& me : m.elements_into(a)) {
            const std::string b = m.source(me);
            for (const auto& g : m.dom_cat.morphisms) {
                if (g.cod != b || m.dom_cat.is_identity(g.id)) continue;
                for (const auto& xe : x.at(g.dom)) {
                    const std::string k1 = QuotientSet::key(m.right_act(me, g.id), xe);
                    const std::string k2 = QuotientSet::key(me, x.apply(g.id, xe));
                    int l1 = label.at(k1), l2 = label.at(k2);
                    if (l1 == l2) continue;
                    for (auto& [k, l] : label)
                        if (l == std::max(l1, l2)) l = std::min(l1, l2);
                    changed = true;
                }
            }
        }
    }
    std::map<int, std::set<std::string>> grouped;
    for (const auto& [k, l] : label) grouped[l].insert(k);
    Classes out;
    for (const auto& [l, ks] : grouped) out.insert(ks);
    return out;
}

std::vector<SetValuedFunctor> fixture_test_functors(const SystemDocument& doc) {
    std::vector<SetValuedFunctor> out = doc.functors;
    for (const auto& b : doc.category.objects) out.push_back(module_row(doc.module, b));
    return out;
}

TEST_CASE("fixture modules and systems validate") {
    for (const auto& name : fixture_names()) {
        const SystemDocument doc = builtin_fixture(name);
        CHECK_MESSAGE(validate_module(doc.module).empty(), name);
        CHECK_MESSAGE(validate_system(doc.system()).empty(), name);
    }
}

TEST_CASE("interval system cardinalities") {
    const Module m = builtin_fixture("freyd").module;
    CHECK(m.at("0", "0").size() == 1);
    CHECK(m.at("0", "1").size() == 3);
    CHECK(m.at("1", "1").size() == 2);
    CHECK(m.at("1", "0").empty());
    auto sizes = elt_sizes(m);
    CHECK(sizes.at("1").first == 5);  // 3 + 2 elements over object 1
    CHECK(sizes.at("0").first == 1);
}

TEST_CASE("a compatibility-breaking action entry is flagged") {
    Module m = builtin_fixture("cofork").module;
    m.right[{"k_r", "s"}] = "k_s";  // (r.k_id1).s must equal r.(k_id1.s) = k_rs
    CHECK(!validate_module(m).empty());
}

TEST_CASE("hom modules validate on every fixture category") {
    for (const auto& name : fixture_names()) {
        const FinCategory c = builtin_fixture(name).category;
        CHECK_MESSAGE(validate_module(hom_module(c)).empty(), name);
    }
}

TEST_CASE("unit law: hom tensor X is X, by explicit bijection") {
    for (const auto& name : fixture_names()) {
        const SystemDocument doc = builtin_fixture(name);
        const Module h = hom_module(doc.category);
        for (const auto& x : fixture_test_functors(doc)) {
            std::map<std::string, QuotientSet> qs;
            SetValuedFunctor t = tensor_functor(h, x, &qs);
            for (const auto& a : doc.category.objects) {
                CHECK(t.at(a).size() == x.at(a).size());
                std::set<std::string> image;
                for (const auto& xe : x.at(a))
                    image.insert(qs.at(a).class_of(doc.category.identity.at(a), xe));
                CHECK(image.size() == x.at(a).size());  // injective, hence bijective
            }
        }
    }
}

TEST_CASE("union-find quotient equals naive rewrite closure") {
    for (const auto& name : fixture_names()) {
        const SystemDocument doc = builtin_fixture(name);
        for (const auto& x : fixture_test_functors(doc)) {
            std::map<std::string, QuotientSet> qs;
            tensor_functor(doc.module, x, &qs);
            for (const auto& a : doc.category.objects) {
                CAPTURE(name);
                CAPTURE(x.name);
                CAPTURE(a);
                CHECK(to_class_set(qs.at(a).classes) == naive_quotient(doc.module, x, a));
            }
        }
    }
}

TEST_CASE("interval tensor example: 5 classes over the interval object") {
    const SystemDocument doc = builtin_fixture("freyd");
    const SetValuedFunctor* x = doc.functor("X");
    REQUIRE(x != nullptr);
    std::map<std::string, QuotientSet> qs;
    SetValuedFunctor t = tensor_functor(doc.module, *x, &qs);
    CHECK(t.at("1").size() == 5);
    CHECK(t.at("0").size() == 1);
    const QuotientSet& q = qs.at("1");
    CHECK(q.class_of("p0", "star") == q.class_of("lo", "a"));
    CHECK(q.class_of("ph", "star") == q.class_of("lo", "c"));
    CHECK(q.class_of("ph", "star") == q.class_of("hi", "a"));
    CHECK(q.class_of("p1", "star") == q.class_of("hi", "c"));
    CHECK(q.class_of("p0", "star") != q.class_of("p1", "star"));
}

TEST_CASE("module tensor cardinalities and associativity") {
    const SystemDocument doc = builtin_fixture("freyd");
    Module mm = tensor_modules(doc.module, doc.module);
    CHECK(mm.at("0", "0").size() == 1);
    CHECK(mm.at("0", "1").size() == 5);
    CHECK(mm.at("1", "1").size() == 4);
    for (const auto& name : fixture_names()) {
        const Module m = builtin_fixture(name).module;
        Module left = tensor_modules(tensor_modules(m, m), m);
        Module right = tensor_modules(m, tensor_modules(m, m));
        for (const auto& b : m.dom_cat.objects)
            for (const auto& a : m.cod_cat.objects) {
                CAPTURE(name);
                CHECK(left.at(b, a).size() == right.at(b, a).size());
            }
    }
}

TEST_CASE("span-witness equality: worked interval pairs") {
    const SystemDocument doc = builtin_fixture("freyd");
    const SetValuedFunctor* x = doc.functor("X");
    TensorEqualResult r = tensor_equal(doc.module, *x, {"p0", "star"}, {"lo", "a"});
    CHECK(r.equal);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->left_leg == "id_0");
    CHECK(r.witness->right_leg == "s");
    CHECK(r.witness->apex_element == "star");
    CHECK(!tensor_equal(doc.module, *x, {"p0", "star"}, {"p1", "star"}).equal);
}

TEST_CASE("span-witness equality agrees with class lookup") {
    for (const auto& name : fixture_names()) {
        const SystemDocument doc = builtin_fixture(name);
        for (const auto& x : fixture_test_functors(doc)) {
            if (!check_nondegenerate_functor(x).holds) continue;
            for (const auto& a : doc.category.objects) {
                std::vector<std::pair<std::string, std::string>> pairs;
                for (const auto& me : doc.module.elements_into(a))
                    for (const auto& xe : x.at(doc.module.source(me)))
                        pairs.push_back({me, xe});
                for (const auto& l : pairs)
                    for (const auto& r : pairs) {
                        CAPTURE(name);
                        CHECK(tensor_equal(doc.module, x, l, r).equal ==
                              tensor_equal_by_class(doc.module, x, l, r));
                    }
            }
        }
    }
}

TEST_CASE("span-witness equality refuses degenerate functors") {
    const SystemDocument doc = builtin_fixture("cofork");
    const SetValuedFunctor* bad = doc.functor("pinch");
    REQUIRE(bad != nullptr);
    CHECK_THROWS_AS(tensor_equal(doc.module, *bad, {"k_r", "e0"}, {"k_r", "e1"}),
                    std::invalid_argument);
}

TEST_CASE("tensoring preserves nondegeneracy") {
    for (const auto& name : fixture_names()) {
        const SystemDocument doc = builtin_fixture(name);
        if (!check_nondegenerate_module(doc.module).holds) continue;
        for (const auto& x : fixture_test_functors(doc)) {
            if (!check_nondegenerate_functor(x).holds) continue;
            SetValuedFunctor t = tensor_functor(doc.module, x);
            CAPTURE(name);
            CAPTURE(x.name);
            CHECK(check_nondegenerate_functor(t).holds);
        }
    }
}

}  // namespace
