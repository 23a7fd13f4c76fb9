#include "doctest.h"
#include "fixtures.hpp"
#include "graphs.hpp"
#include "leafkernel/generators.hpp"
#include "leafkernel/kernel.hpp"
#include "leafkernel/oracle.hpp"

using namespace leafkernel;
using namespace leafkernel::testing;

namespace {

void check_outcome(const Instance& inst, const KernelOutcome& o) {
    const Answer truth = oracle_answer(inst);
    if (o.decided) {
        CHECK(*o.decided == truth);
        if (*o.decided == Answer::yes) {
            std::string why;
            CHECK_MESSAGE(verify_certificate(inst.graph, o.certificate, inst.parameter, &why), why);
        }
        return;
    }
    CHECK(oracle_answer(o.reduced) == truth);
    const auto n = static_cast<std::int64_t>(o.reduced.graph.order());
    CHECK(n < size_factor(o.pipeline) * o.reduced.parameter);
    if (o.pipeline != Pipeline::maxleaf_5k) CHECK(o.cvc_parameter == n - o.reduced.parameter);
}

}  // namespace

TEST_CASE("nsis examples") {
    const auto k3 = kernelize_nsis(instance(complete(3), Problem::nsis, 1), Pipeline::nsis_9k);
    REQUIRE(k3.decided == Answer::yes);
    CHECK(k3.certificate.kind == CertificateKind::nsis_set);
    CHECK(k3.certificate.set.size() == 1);

    for (Pipeline p : {Pipeline::nsis_9k, Pipeline::nsis_12k}) {
        const Instance c4 = instance(cycle(4), Problem::nsis, 2);
        const auto o = kernelize_nsis(c4, p);
        check_outcome(c4, o);
        if (o.decided) CHECK(*o.decided == Answer::no);

        const auto zero = kernelize_nsis(instance(cycle(4), Problem::nsis, 0), p);
        CHECK(zero.decided == Answer::yes);
        CHECK(zero.certificate.set.empty());
        CHECK(verify_certificate(cycle(4), zero.certificate, 0));
    }
}

TEST_CASE("maxleaf examples") {
    CHECK(kernelize_maxleaf(instance(path(2), Problem::maxleaf, 2)).decided == Answer::yes);
    const auto s = kernelize_maxleaf(instance(star(6), Problem::maxleaf, 6));
    REQUIRE(s.decided == Answer::yes);
    CHECK(verify_certificate(star(6), s.certificate, 6));
    CHECK(count_tree_leaves(7, s.certificate.parent_of) == 6);
    CHECK(kernelize_maxleaf(instance(make(4, {{0, 1}, {2, 3}}), Problem::maxleaf, 1)).decided == Answer::no);

    const Graph g2 = hub4(2);
    for (std::int64_t k = 1; k <= 10; ++k) {
        const Instance inst = instance(g2, Problem::maxleaf, k);
        check_outcome(inst, kernelize_maxleaf(inst));
    }
}

TEST_CASE("certificate checks") {
    Certificate c;
    c.kind = CertificateKind::nsis_set;
    c.set = {1, 2, 3};
    CHECK(verify_certificate(star(3), c, 3));
    c.set = {0, 2};
    CHECK_FALSE(verify_certificate(cycle(4), c, 2));
    c.set = {};
    CHECK(verify_certificate(cycle(4), c, 0));
    c.set = {7};
    std::string why;
    CHECK_FALSE(verify_certificate(cycle(4), c, 1, &why));
    CHECK_FALSE(why.empty());

    Certificate t = tree_certificate({{0, 1}, {1, 2}, {2, 3}}, 0);
    CHECK(verify_certificate(cycle(4), t, 2));
    CHECK_FALSE(verify_certificate(cycle(4), t, 3));
    t.parent_of.back().second = 0;  // 3's parent becomes 0, still a tree
    CHECK(verify_certificate(cycle(4), t, 2));
    t.parent_of.back() = {3, 1};
    CHECK_FALSE(verify_certificate(cycle(4), t, 2));
}

TEST_CASE("pipelines are sound on small connected graphs") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            if (!is_planar(g)) continue;
            for (std::int64_t p = -1; p <= static_cast<std::int64_t>(n) + 1; ++p) {
                for (Pipeline pl : {Pipeline::nsis_9k, Pipeline::nsis_12k}) {
                    const Instance inst = instance(g, Problem::nsis, p);
                    check_outcome(inst, kernelize(inst, pl));
                }
                const Instance ml = instance(g, Problem::maxleaf, p);
                check_outcome(ml, kernelize(ml, Pipeline::maxleaf_5k));
            }
        }
    }
}

TEST_CASE("pipelines on larger random planar graphs") {
    for (const Graph& g : random_planar_corpus(120, 10, 300, 17)) {
        const auto n = static_cast<std::int64_t>(g.order());
        for (std::int64_t p : {n / 12, n / 9, n / 6, n / 4}) {
            for (Pipeline pl : {Pipeline::nsis_9k, Pipeline::nsis_12k, Pipeline::maxleaf_5k}) {
                const Instance inst = instance(g, pl == Pipeline::maxleaf_5k ? Problem::maxleaf : Problem::nsis, p);
                const KernelOutcome o = kernelize(inst, pl);
                if (o.decided == Answer::yes) {
                    std::string why;
                    CHECK_MESSAGE(verify_certificate(g, o.certificate, p, &why), why);
                } else if (!o.decided) {
                    CHECK(static_cast<std::int64_t>(o.reduced.graph.order()) < size_factor(pl) * o.reduced.parameter);
                }
            }
        }
    }
}
