#include "leafkernel/bench.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace leafkernel {

std::vector<CorpusEntry> parse_corpus(std::string_view spec) {
    std::vector<CorpusEntry> out;
    while (!spec.empty()) {
        const auto semi = spec.find(';');
        const auto group = spec.substr(0, semi);
        spec = semi == std::string_view::npos ? std::string_view{} : spec.substr(semi + 1);
        if (group.empty()) continue;
        const auto colon = group.find(':');
        if (colon == std::string_view::npos || colon == 0) {
            throw std::invalid_argument("corpus group '" + std::string(group) + "' needs family:sizes");
        }
        const std::string family(group.substr(0, colon));
        auto sizes = group.substr(colon + 1);
        while (!sizes.empty()) {
            const auto comma = sizes.find(',');
            const auto tok = sizes.substr(0, comma);
            sizes = comma == std::string_view::npos ? std::string_view{} : sizes.substr(comma + 1);
            if (!tok.empty()) out.push_back({family, parse_size(tok)});
        }
    }
    return out;
}

std::vector<BenchRow> run_bench(const std::vector<CorpusEntry>& corpus, Pipeline pipeline, std::uint64_t seed,
                                std::int64_t parameter) {
    const Problem problem = pipeline == Pipeline::maxleaf_5k ? Problem::maxleaf : Problem::nsis;
    std::vector<BenchRow> rows;
    for (const auto& entry : corpus) {
        const Instance inst = generate_instance(entry.family, entry.size, seed, problem, parameter);
        const auto start = std::chrono::steady_clock::now();
        const KernelOutcome o = kernelize(inst, pipeline);
        const auto stop = std::chrono::steady_clock::now();
        BenchRow row;
        row.instance = entry.family + "-" + entry.size.text() + "-s" + std::to_string(seed);
        row.n = inst.graph.order();
        row.m = inst.graph.size();
        row.parameter = inst.parameter;
        row.outcome = o.decided ? (*o.decided == Answer::yes ? "yes" : "no") : "reduced";
        row.kernel_size = o.decided ? 0 : o.reduced.graph.order();
        row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "instance,n,m,parameter,outcome,kernel_size,wall_ms\n";
    for (const auto& r : rows) {
        out << r.instance << ',' << r.n << ',' << r.m << ',' << r.parameter << ',' << r.outcome << ',' << r.kernel_size
            << ',' << std::fixed << std::setprecision(3) << r.wall_ms << '\n';
        out.unsetf(std::ios::floatfield);
    }
}

}  // namespace leafkernel
