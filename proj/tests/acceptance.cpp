// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "graphs.hpp"
#include "leafkernel/bigis.hpp"
#include "leafkernel/generators.hpp"
#include "leafkernel/kernel.hpp"
#include "leafkernel/oracle.hpp"
#include "leafkernel/outerplanar.hpp"
#include "leafkernel/spanning_tree.hpp"

using namespace leafkernel;
using namespace leafkernel::testing;

namespace {

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first_failure = what;
    }
};

int failures = 0;

void report(int id, const char* name, const Tally& t, const std::string& detail = {}) {
    const bool pass = t.failed == 0 && t.checked > 0;
    if (!pass) ++failures;
    std::printf("%s criterion %2d  %-28s checked=%zu violations=%zu tolerance=0%s%s\n", pass ? "PASS" : "FAIL", id, name,
                t.checked, t.failed, detail.empty() ? "" : "  ", detail.c_str());
    if (!t.first_failure.empty()) std::printf("     first violation: %s\n", t.first_failure.c_str());
    std::fflush(stdout);
}

Instance make_instance(const Graph& g, Problem p, std::int64_t param) {
    Instance inst;
    inst.graph = g;
    inst.problem = p;
    inst.parameter = param;
    return inst;
}

std::string label(const Graph& g) {
    std::string s = "n=" + std::to_string(g.order()) + " edges";
    for (auto [u, v] : g.edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
    return s.size() > 300 ? s.substr(0, 300) + "..." : s;
}

Answer answer_of(const Reduced& r) { return r.decided ? *r.decided : oracle_answer(r.instance); }

template <typename F>
void guarded(Tally& t, const std::string& what, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        t.expect(false, what + ": " + e.what());
    }
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Graph> small_planar = connected_planar_graphs(8);
    std::vector<Graph> corpus14 = small_planar;
    for (auto& g : random_planar_corpus(1500, 9, 14, 101)) corpus14.push_back(std::move(g));
    for (auto& g : random_outerplanar_corpus(1500, 9, 14, 102)) corpus14.push_back(std::move(g));
    std::vector<Graph> large = random_planar_corpus(300, 15, 400, 103);
    for (auto& g : random_planar_corpus(20, 1000, 3000, 104)) large.push_back(std::move(g));
    for (std::size_t w = 2; w <= 40; w += 6) large.push_back(grid(w, w + 3));
    for (std::size_t k = 1; k <= 30; k += 3) {
        large.push_back(hub3(k));
        large.push_back(hub4(k));
    }
    std::vector<Graph> planar_all = corpus14;
    planar_all.insert(planar_all.end(), large.begin(), large.end());

    {
        Tally t;
        for (const Graph& g : small_planar) {
            for (std::int64_t p = -1; p <= static_cast<std::int64_t>(g.order()) + 1; ++p) {
                guarded(t, label(g), [&] {
                    const Instance inst = make_instance(g, Problem::nsis, p);
                    const Reduced r = reduce_dual_separator_exhaustive(inst);
                    t.expect(answer_of(r) == oracle_answer(inst), "nsis l=" + std::to_string(p) + " " + label(g));
                    if (!r.decided) {
                        const auto n2 = static_cast<std::int64_t>(r.instance.graph.order());
                        const Instance cvc = make_instance(g, Problem::cvc, static_cast<std::int64_t>(g.order()) - p);
                        const Instance cvc2 = make_instance(r.instance.graph, Problem::cvc, n2 - r.instance.parameter);
                        t.expect(oracle_answer(cvc) == oracle_answer(cvc2), "cvc k=" + std::to_string(cvc.parameter) + " " + label(g));
                    }
                    const Instance ml = make_instance(g, Problem::maxleaf, p);
                    t.expect(answer_of(reduce_maxleaf(ml)) == oracle_answer(ml), "maxleaf k=" + std::to_string(p) + " " + label(g));
                });
            }
        }
        report(1, "rule equivalence", t, "graphs=" + std::to_string(small_planar.size()));
    }

    {
        Tally t;
        for (const Graph& g : corpus14) {
            guarded(t, label(g), [&] {
                if (const auto h = nsis_reduced(g)) t.expect(!deg2_separator_witness(*h).has_value(), label(g));
            });
        }
        report(2, "separator elimination", t);
    }

    Tally bounds, identities, outerplanar;
    for (const Graph& g : planar_all) {
        guarded(bounds, label(g), [&] {
            auto count = [&](const TreeRecord& tr) {
                guarded(identities, label(g), [&] {
                    const TreeStats s = tree_stats(tr);
                    identities.expect(s.x2 <= s.leaves, "|X2| > |L| " + label(g));
                    identities.expect(s.x3_p2 + 1 <= s.leaves, "|X3 P>=2| > |L|-1 " + label(g));
                    identities.expect(s.x4 <= s.x3_p1, "|X4| > |X3 P1| " + label(g));
                });
            };
            if (const auto h = nsis_reduced(g)) {
                const TreeRecord gen = build_spanning_tree(*h, Strategy::generic);
                check_spanning(*h, gen);
                count(gen);
                bounds.expect(leaf_bound_check(*h, gen, {}).holds, "generic " + label(*h));
                outerplanar.expect(std::holds_alternative<OuterplanarEmbedding>(recognize_and_embed(induced_leaf_subgraph(*h, gen))),
                                   "generic " + label(*h));

                const TreeRecord br = build_spanning_tree(*h, Strategy::branching);
                check_spanning(*h, br);
                count(br);
                const Graph lg = induced_leaf_subgraph(*h, br);
                const bool op = std::holds_alternative<OuterplanarEmbedding>(recognize_and_embed(lg));
                outerplanar.expect(op, "branching " + label(*h));
                bounds.expect(leaf_bound_check(*h, br, {}).holds, "branching " + label(*h));
                if (op) bounds.expect(leaf_bound_check(*h, br, independent_set_with_cycles(lg).cycles).holds, "bigis cycles " + label(*h));
                if (lg.order() <= 10) {
                    bounds.expect(leaf_bound_check(*h, br, best_cycle_collection_bruteforce(lg)).holds, "best cycles " + label(*h));
                }
            }
            if (const auto h = maxleaf_reduced(g)) {
                const TreeRecord ml = build_spanning_tree(*h, Strategy::maxleaf);
                check_spanning(*h, ml);
                count(ml);
                bounds.expect(leaf_bound_check(*h, ml, {}).holds, "maxleaf " + label(*h));
            }
        });
    }
    report(3, "leaf bounds", bounds);
    report(4, "counting identities", identities);
    report(5, "outerplanar leaf graphs", outerplanar);

    {
        Tally t;
        auto check = [&](const Graph& g, bool tight) {
            guarded(t, label(g), [&] {
                const BigisResult r = independent_set_with_cycles(g);
                const auto lhs = 9 * static_cast<std::int64_t>(r.independent.size());
                const auto rhs = 4 * static_cast<std::int64_t>(g.order()) - 3 * static_cast<std::int64_t>(r.cycles.size());
                t.expect(is_independent(g, r.independent) && is_valid_cycle_collection(g, r.cycles), "invalid output " + label(g));
                t.expect(tight ? lhs == rhs : lhs >= rhs, "9|I| = " + std::to_string(lhs) + " vs " + std::to_string(rhs) + " " + label(g));
            });
        };
        for (const Graph& g : random_outerplanar_corpus(1000, 1, 200, 105)) check(g, false);
        for (std::size_t k = 1; k <= 20; ++k) check(triangles(k), true);
        report(6, "9|I| >= 4n - 3|C|", t, "random=1000 triangles=20");
    }

    {
        Tally sizes, certs;
        auto run = [&](const Instance& inst, Pipeline pl) {
            guarded(sizes, std::string(to_string(pl)) + " p=" + std::to_string(inst.parameter) + " " + label(inst.graph), [&] {
                const KernelOutcome o = kernelize(inst, pl);
                if (!o.decided) {
                    sizes.expect(static_cast<std::int64_t>(o.reduced.graph.order()) < size_factor(pl) * o.reduced.parameter,
                                 std::string(to_string(pl)) + " " + label(inst.graph));
                } else if (*o.decided == Answer::yes) {
                    std::string why;
                    certs.expect(verify_certificate(inst.graph, o.certificate, inst.parameter, &why),
                                 std::string(to_string(pl)) + " " + why + " " + label(inst.graph));
                }
            });
        };
        for (const Graph& g : small_planar) {
            for (std::int64_t p = -1; p <= static_cast<std::int64_t>(g.order()) + 1; ++p) {
                run(make_instance(g, Problem::nsis, p), Pipeline::nsis_9k);
                run(make_instance(g, Problem::nsis, p), Pipeline::nsis_12k);
                run(make_instance(g, Problem::maxleaf, p), Pipeline::maxleaf_5k);
            }
        }
        std::vector<Graph> rest(small_planar.size() < corpus14.size() ? corpus14.begin() + static_cast<std::ptrdiff_t>(small_planar.size()) : corpus14.end(),
                                corpus14.end());
        rest.insert(rest.end(), large.begin(), large.end());
        for (const Graph& g : rest) {
            const auto n = static_cast<std::int64_t>(g.order());
            for (std::int64_t p : {std::int64_t{1}, n / 12, n / 9, n / 7, n / 5, n / 4, n / 2}) {
                run(make_instance(g, Problem::nsis, p), Pipeline::nsis_9k);
                run(make_instance(g, Problem::nsis, p), Pipeline::nsis_12k);
                run(make_instance(g, Problem::maxleaf, p), Pipeline::maxleaf_5k);
            }
        }
        report(7, "kernel size bounds", sizes);
        report(8, "certificates", certs);
    }

    {
        Tally t;
        for (std::size_t n = 2; n <= 8; ++n) {
            for (const Graph& g : connected_graphs(n)) {
                t.expect(min_cvc_bruteforce(g).optimum + max_nsis_bruteforce(g).optimum == static_cast<std::int64_t>(n), label(g));
            }
        }
        report(9, "duality identity", t);
    }

    {
        Tally t;
        const std::size_t heights[] = {250, 500, 1000, 2000};
        std::vector<double> secs;
        for (std::size_t h : heights) {
            Instance inst = make_instance(grid(100, h), Problem::nsis, static_cast<std::int64_t>(100 * h / 4));
            double best = 1e9;
            for (int rep = 0; rep < 3; ++rep) {
                const auto a = std::chrono::steady_clock::now();
                const KernelOutcome o = kernelize(inst, Pipeline::nsis_9k);
                const auto b = std::chrono::steady_clock::now();
                best = std::min(best, std::chrono::duration<double>(b - a).count());
                t.expect(o.decided.has_value() || static_cast<std::int64_t>(o.reduced.graph.order()) < 9 * o.reduced.parameter, "grid outcome");
            }
            secs.push_back(best);
        }
        std::string detail = "seconds";
        double total = 0;
        for (std::size_t i = 0; i < secs.size(); ++i) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " %.3f", secs[i]);
            detail += buf;
            total += secs[i];
            if (i > 0) {
                const double ratio = secs[i] / secs[i - 1];
                std::snprintf(buf, sizeof buf, "%.2f", ratio);
                t.expect(ratio <= 3.0, "doubling ratio " + std::string(buf) + " > 3.0");
            }
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, " total(best of 3)=%.2fs limit=60s ratio limit=3.0", total);
        detail += buf;
        t.expect(total < 60.0, "total time over 60 s");
        report(10, "near-linear time", t, detail);
    }

    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s: %d of 10 criteria failed (%.1fs)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures, elapsed);
    return failures == 0 ? 0 : 1;
}
