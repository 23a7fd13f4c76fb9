#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "graphs.hpp"
#include "leafkernel/oracle.hpp"

using namespace leafkernel;
using namespace leafkernel::testing;

namespace {

Graph disjoint(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    const auto shift = static_cast<VertexId>(a.order());
    for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
    return Graph::from_edges(a.order() + b.order(), e);
}

Answer answer_of(const Reduced& r) { return r.decided ? *r.decided : oracle_answer(r.instance); }

}  // namespace

TEST_CASE("nsis_preprocess") {
    CHECK(nsis_preprocess(instance(disjoint(complete(3), complete(3)), Problem::nsis, 1)).decided == Answer::no);

    const auto r = nsis_preprocess(instance(disjoint(complete(3), Graph(1)), Problem::nsis, 2));
    REQUIRE_FALSE(r.decided);
    CHECK(r.instance.parameter == 1);
    CHECK(r.instance.graph.order() == 3);

    CHECK(nsis_preprocess(instance(disjoint(complete(3), complete(3)), Problem::nsis, 0)).decided == Answer::yes);
    CHECK(nsis_preprocess(instance(Graph{}, Problem::nsis, 1)).decided == Answer::no);

    const auto edgeless = nsis_preprocess(instance(Graph(4), Problem::nsis, 4));
    REQUIRE_FALSE(edgeless.decided);
    CHECK(edgeless.instance.graph.order() == 1);
    CHECK(edgeless.instance.parameter == 1);
}

TEST_CASE("separator rule, leaf pair") {
    const auto r = separator_rule_cvc_once(instance(path(3), Problem::cvc, 1), {1});
    REQUIRE(r.trace.steps.size() == 1);
    CHECK(r.trace.steps[0].kind == StepKind::strip_leaf_pair);
    CHECK(r.trace.steps[0].removed == 0);
    CHECK(r.instance.parameter == 1);
    CHECK(r.instance.graph.order() == 2);
}

TEST_CASE("separator rule, contraction drops the optimum by two") {
    const Graph g = joined_triangles();
    const auto r = separator_rule_cvc_once(instance(g, Problem::cvc, 5), {3});
    REQUIRE(r.trace.steps.size() == 1);
    CHECK(r.trace.steps[0].kind == StepKind::contract_separator);
    CHECK(r.instance.parameter == 3);
    CHECK(r.instance.graph.order() == 5);
    CHECK(min_cvc_bruteforce(g).optimum - min_cvc_bruteforce(r.instance.graph).optimum == 2);
}

TEST_CASE("separator rule, one leaf") {
    const Graph g = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}});
    const auto r = separator_rule_cvc_once(instance(g, Problem::cvc, 3), {1});
    REQUIRE(r.trace.steps.size() == 1);
    CHECK(r.trace.steps[0].kind == StepKind::strip_leaf);
    CHECK(r.trace.steps[0].removed == 0);
    CHECK(r.instance.parameter == 2);
    CHECK(min_cvc_bruteforce(g).optimum - min_cvc_bruteforce(r.instance.graph).optimum == 1);
}

TEST_CASE("separator rule rejects non-separators") {
    CHECK_THROWS_AS(separator_rule_cvc_once(instance(complete(3), Problem::cvc, 2), {0}), ReductionError);
    CHECK_THROWS_AS(separator_rule_cvc_once(instance(star(3), Problem::cvc, 1), {0}), ReductionError);
}

TEST_CASE("dual separator rule examples") {
    const auto p3 = reduce_dual_separator_exhaustive(instance(path(3), Problem::nsis, 2));
    REQUIRE_FALSE(p3.decided);
    CHECK(p3.instance.graph.order() == 2);
    CHECK(p3.instance.parameter == 1);
    CHECK(max_nsis_bruteforce(p3.instance.graph).optimum == 1);

    const auto bow = reduce_dual_separator_exhaustive(instance(joined_triangles(), Problem::nsis, 2));
    CHECK(bow.instance.graph.order() == 5);
    CHECK(bow.instance.parameter == 2);
    CHECK(max_nsis_bruteforce(bow.instance.graph).optimum == 2);

    const auto k3 = reduce_dual_separator_exhaustive(instance(complete(3), Problem::nsis, 1));
    CHECK(k3.trace.steps.empty());
    CHECK(k3.instance.graph == complete(3));

    CHECK_THROWS_AS(reduce_dual_separator_exhaustive(instance(make(4, {{0, 1}, {2, 3}}), Problem::nsis, 1)),
                    ReductionError);
}

TEST_CASE("long 2-paths between triangles") {
    // two triangles joined by a path of t internal 2-vertices
    for (std::size_t t = 1; t <= 6; ++t) {
        std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
        VertexId prev = 0;
        VertexId next = 3;
        for (std::size_t i = 0; i < t; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        const VertexId a = next;
        e.emplace_back(prev, a);
        e.emplace_back(a, a + 1);
        e.emplace_back(a + 1, a + 2);
        e.emplace_back(a, a + 2);
        const Graph g = Graph::from_edges(a + 3, e);
        for (std::int64_t l = 1; l <= 4; ++l) {
            const Instance inst = instance(g, Problem::nsis, l);
            const auto r = reduce_dual_separator_exhaustive(inst);
            CHECK_FALSE(deg2_separator_witness(r.instance.graph).has_value());
            CHECK(answer_of(r) == oracle_answer(inst));
        }
    }
}

TEST_CASE("find_deg2_separator agrees with the subset oracle") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            const auto fast = find_deg2_separator(g);
            const auto slow = deg2_separator_witness(g);
            CHECK(fast.has_value() == slow.has_value());
            if (fast) CHECK(components_without(g, *fast).size() >= 2);
        }
    }
}

TEST_CASE("maxleaf rules") {
    CHECK(reduce_maxleaf(instance(path(2), Problem::maxleaf, 2)).decided == Answer::yes);
    CHECK(reduce_maxleaf(instance(path(2), Problem::maxleaf, 3)).decided == Answer::no);
    CHECK(reduce_maxleaf(instance(Graph(1), Problem::maxleaf, 1)).decided == Answer::yes);
    CHECK(reduce_maxleaf(instance(Graph(1), Problem::maxleaf, 2)).decided == Answer::no);
    for (std::int64_t k = 1; k <= 6; ++k) {
        const auto r = reduce_maxleaf(instance(cycle(6), Problem::maxleaf, k));
        CHECK(answer_of(r) == (k <= 2 ? Answer::yes : Answer::no));
    }
    CHECK_THROWS_AS(reduce_maxleaf(instance(make(4, {{0, 1}, {2, 3}}), Problem::maxleaf, 1)), ReductionError);
}

TEST_CASE("reducers preserve answers on connected graphs up to 7 vertices") {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            for (std::int64_t p = 0; p <= static_cast<std::int64_t>(n) + 1; ++p) {
                const Instance inst = instance(g, Problem::nsis, p);
                const auto r = reduce_dual_separator_exhaustive(inst);
                CHECK(answer_of(r) == oracle_answer(inst));
                if (!r.decided) {
                    CHECK_FALSE(deg2_separator_witness(r.instance.graph).has_value());
                    const auto n2 = static_cast<std::int64_t>(r.instance.graph.order());
                    const Instance cvc = instance(g, Problem::cvc, static_cast<std::int64_t>(n) - p);
                    const Instance cvc2 = instance(r.instance.graph, Problem::cvc, n2 - r.instance.parameter);
                    CHECK(oracle_answer(cvc) == oracle_answer(cvc2));
                }
                const Instance ml = instance(g, Problem::maxleaf, p);
                const auto rm = reduce_maxleaf(ml);
                CHECK(answer_of(rm) == oracle_answer(ml));
                if (!rm.decided) {
                    for (auto [u, v] : rm.instance.graph.edges()) {
                        CHECK(std::max(rm.instance.graph.degree(u), rm.instance.graph.degree(v)) >= 3);
                    }
                }
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("traces replay and round-trip through text") {
    for (const Graph& g : random_planar_corpus(30, 5, 40, 3)) {
        for (Problem p : {Problem::nsis, Problem::maxleaf}) {
            const Instance inst = instance(g, p, 4);
            const auto r = p == Problem::nsis ? reduce_dual_separator_exhaustive(inst) : reduce_maxleaf(inst);
            std::ostringstream out;
            r.trace.write(out);
            std::istringstream in(out.str());
            const auto back = ReductionTrace::read(in);
            CHECK(back.steps == r.trace.steps);
            if (!r.decided) CHECK(replay(g, back) == r.instance.graph);
            std::int64_t param = inst.parameter;
            for (const auto& s : r.trace.steps) {
                CHECK(s.delta_k <= 0);
                param += s.delta_parameter;
            }
            if (!r.decided) {
                CHECK(param == r.instance.parameter);
                CHECK(r.instance.graph.order() <= g.order());
            }
        }
    }
}
