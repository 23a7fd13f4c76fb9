#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "leafkernel/bench.hpp"
#include "leafkernel/generators.hpp"
#include "leafkernel/io.hpp"
#include "leafkernel/kernel.hpp"
#include "leafkernel/oracle.hpp"

using namespace leafkernel;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Instance load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return parse_instance(in);
    } catch (const FormatError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    return out;
}

// A CVC instance (G, k) is handled as the NSIS instance (G, n - k); certificates
// are then nonseparating independent sets whose complement is the cover.
Instance as_nsis(Instance inst) {
    if (inst.problem == Problem::cvc) {
        inst.problem = Problem::nsis;
        inst.parameter = static_cast<std::int64_t>(inst.graph.order()) - inst.parameter;
    }
    return inst;
}

int cmd_gen(const std::string& family, const std::string& size, std::uint64_t seed, const std::string& problem,
            std::int64_t parameter, const std::string& path) {
    Instance inst;
    try {
        inst = generate_instance(family, parse_size(size), seed, parse_problem(problem), parameter);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const ReductionError& e) {
        throw UsageError(e.what());
    }
    auto out = open_out(path);
    out << "c " << family << ' ' << size << " seed " << seed << '\n';
    write_instance(out, inst);
    return kOk;
}

int cmd_kernelize(const std::string& pipeline_name, const std::string& input, const std::string& output) {
    Pipeline pipeline;
    try {
        pipeline = parse_pipeline(pipeline_name);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    Instance inst = load(input);
    const bool wants_maxleaf = pipeline == Pipeline::maxleaf_5k;
    if (wants_maxleaf != (inst.problem == Problem::maxleaf)) {
        throw UsageError("pipeline " + std::string(to_string(pipeline)) + " does not fit a " +
                         std::string(to_string(inst.problem)) + " instance");
    }
    inst = as_nsis(std::move(inst));
    const KernelOutcome o = kernelize(inst, pipeline);
    const std::string trace_path = output + ".trace";
    {
        auto out = open_out(trace_path);
        o.trace.write(out);
    }
    auto out = open_out(output);
    write_outcome(out, o, trace_path);
    if (o.decided) {
        std::cout << "decided " << (*o.decided == Answer::yes ? "yes" : "no") << '\n';
        return *o.decided == Answer::yes ? kOk : kNo;
    }
    std::cout << "reduced n'=" << o.reduced.graph.order() << " parameter'=" << o.reduced.parameter << '\n';
    return kOk;
}

int cmd_solve(const std::string& input) {
    const Instance inst = load(input);
    const Answer a = oracle_answer(inst);
    OracleResult r;
    switch (inst.problem) {
        case Problem::nsis: r = max_nsis_bruteforce(inst.graph); break;
        case Problem::cvc: r = min_cvc_bruteforce(inst.graph); break;
        case Problem::maxleaf: r = max_leaf_via_dominating_set(inst.graph); break;
    }
    std::cout << "answer " << (a == Answer::yes ? "yes" : "no") << '\n';
    std::cout << "optimum " << r.optimum << '\n';
    if (!r.witness.empty()) {
        std::cout << "witness";
        for (VertexId v : r.witness) std::cout << ' ' << v;
        std::cout << '\n';
    }
    for (auto [u, v] : r.tree_edges) std::cout << "t " << u << ' ' << v << '\n';
    return a == Answer::yes ? kOk : kNo;
}

int cmd_verify(const std::string& input, const std::string& cert_path) {
    const Instance inst = as_nsis(load(input));
    std::ifstream in(cert_path);
    if (!in) throw UsageError("cannot open " + cert_path);
    Certificate c;
    try {
        c = read_certificate(in);
    } catch (const FormatError& e) {
        throw UsageError(cert_path + ": " + e.what());
    }
    std::string why;
    if (verify_certificate(inst.graph, c, inst.parameter, &why)) {
        std::cout << "valid\n";
        return kOk;
    }
    std::cout << "invalid: " << why << '\n';
    return kNo;
}

int cmd_bench(const std::string& corpus, const std::string& pipeline_name, std::uint64_t seed, std::int64_t parameter,
              const std::string& output) {
    std::vector<CorpusEntry> entries;
    Pipeline pipeline;
    try {
        entries = parse_corpus(corpus);
        pipeline = parse_pipeline(pipeline_name);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    auto rows = run_bench(entries, pipeline, seed, parameter);
    auto out = open_out(output);
    write_bench_csv(out, rows);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernels for planar nonseparating independent set and max leaf spanning tree"};
    app.require_subcommand(1);

    std::string family, size = "1", problem = "nsis", output, input, pipeline, cert, corpus;
    std::uint64_t seed = 1;
    std::int64_t parameter = -1;
    bool oracle = false;

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", family, "grid, hub3, hub4, triangles, outerplanar or planar")->required();
    gen->add_option("--size", size, "N or WxH")->required();
    gen->add_option("--seed", seed);
    gen->add_option("--problem", problem, "nsis, cvc or maxleaf");
    gen->add_option("--param", parameter, "default max(1, n/4)");
    gen->add_option("-o,--output", output)->required();

    auto* kern = app.add_subcommand("kernelize", "run a kernel pipeline");
    kern->add_option("--pipeline", pipeline, "nsis-9k, nsis-12k or maxleaf-5k")->required();
    kern->add_option("-i,--input", input)->required();
    kern->add_option("-o,--output", output)->required();

    auto* solve = app.add_subcommand("solve", "solve exactly by brute force");
    solve->add_flag("--oracle", oracle)->required();
    solve->add_option("-i,--input", input)->required();

    auto* verify = app.add_subcommand("verify", "check a certificate against an instance");
    verify->add_option("-i,--input", input)->required();
    verify->add_option("--certificate", cert)->required();

    auto* bench = app.add_subcommand("bench", "time a pipeline over generated instances");
    bench->add_option("--corpus", corpus, "family:size,size;family:size")->required();
    bench->add_option("--pipeline", pipeline)->required();
    bench->add_option("--seed", seed);
    bench->add_option("--param", parameter);
    bench->add_option("-o,--output", output)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) return cmd_gen(family, size, seed, problem, parameter, output);
        if (*kern) return cmd_kernelize(pipeline, input, output);
        if (*solve) return cmd_solve(input);
        if (*verify) return cmd_verify(input, cert);
        if (*bench) return cmd_bench(corpus, pipeline, seed, parameter, output);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OracleGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return kUsage;
}
