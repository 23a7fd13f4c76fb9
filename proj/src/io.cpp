#include "leafkernel/io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace leafkernel {

namespace {

bool skip(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == 'c';
}

template <typename T>
T field(std::istringstream& ss, std::size_t line_no, const char* what) {
    T value{};
    if (!(ss >> value)) throw FormatError(line_no, std::string("expected ") + what);
    return value;
}

void expect_end(std::istringstream& ss, std::size_t line_no) {
    std::string extra;
    if (ss >> extra) throw FormatError(line_no, "unexpected trailing token '" + extra + "'");
}

}  // namespace

Instance parse_instance(std::istream& in) {
    Instance inst;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (skip(line)) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            if (header) throw FormatError(line_no, "second header line");
            const auto problem = field<std::string>(ss, line_no, "problem name");
            try {
                inst.problem = parse_problem(problem);
            } catch (const ReductionError&) {
                throw FormatError(line_no, "unknown problem '" + problem + "'");
            }
            const auto nn = field<long long>(ss, line_no, "vertex count");
            const auto mm = field<long long>(ss, line_no, "edge count");
            inst.parameter = field<long long>(ss, line_no, "parameter");
            expect_end(ss, line_no);
            if (nn < 0 || mm < 0) throw FormatError(line_no, "negative count");
            n = static_cast<std::size_t>(nn);
            m = static_cast<std::size_t>(mm);
            header = true;
        } else if (tag == "e") {
            if (!header) throw FormatError(line_no, "edge before header");
            const auto u = field<long long>(ss, line_no, "endpoint");
            const auto v = field<long long>(ss, line_no, "endpoint");
            expect_end(ss, line_no);
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
                throw FormatError(line_no, "endpoint outside [0, " + std::to_string(n) + ")");
            }
            if (u == v) throw FormatError(line_no, "loop at vertex " + std::to_string(u));
            Edge e{static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))};
            if (!seen.insert(e).second) throw FormatError(line_no, "duplicate edge " + describe_edge(e.first, e.second));
            edges.push_back(e);
        } else {
            throw FormatError(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (!header) throw FormatError(line_no, "missing header line");
    if (edges.size() != m) {
        throw FormatError(line_no, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    inst.graph = Graph::from_edges(n, edges);
    return inst;
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    const Subgraph s = compact(inst.graph);
    out << "p " << to_string(inst.problem) << ' ' << s.graph.order() << ' ' << s.graph.size() << ' ' << inst.parameter
        << '\n';
    for (auto [u, v] : s.graph.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

void write_certificate(std::ostream& out, const Certificate& c) {
    switch (c.kind) {
        case CertificateKind::empty:
            out << "s empty\n";
            return;
        case CertificateKind::nsis_set:
            out << "s nsis_set " << c.set.size() << '\n';
            for (VertexId v : c.set) out << "v " << v << '\n';
            return;
        case CertificateKind::maxleaf_tree:
            out << "s maxleaf_tree " << c.parent_of.size() + 1 << ' ' << c.root << '\n';
            for (auto [child, parent] : c.parent_of) out << "t " << child << ' ' << parent << '\n';
            return;
    }
}

Certificate read_certificate(std::istream& in) {
    Certificate c;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    std::size_t announced = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skip(line)) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "s") {
            if (header) throw FormatError(line_no, "second certificate header");
            header = true;
            const auto kind = field<std::string>(ss, line_no, "certificate kind");
            if (kind == "empty") {
                c.kind = CertificateKind::empty;
            } else if (kind == "nsis_set") {
                c.kind = CertificateKind::nsis_set;
                announced = field<std::size_t>(ss, line_no, "set size");
            } else if (kind == "maxleaf_tree") {
                c.kind = CertificateKind::maxleaf_tree;
                announced = field<std::size_t>(ss, line_no, "tree order");
                c.root = field<VertexId>(ss, line_no, "root");
            } else {
                throw FormatError(line_no, "unknown certificate kind '" + kind + "'");
            }
            expect_end(ss, line_no);
        } else if (tag == "v") {
            if (!header || c.kind != CertificateKind::nsis_set) throw FormatError(line_no, "set member outside an nsis_set certificate");
            c.set.push_back(field<VertexId>(ss, line_no, "vertex"));
            expect_end(ss, line_no);
        } else if (tag == "t") {
            if (!header || c.kind != CertificateKind::maxleaf_tree) throw FormatError(line_no, "tree edge outside a maxleaf_tree certificate");
            const auto child = field<VertexId>(ss, line_no, "child");
            const auto parent = field<VertexId>(ss, line_no, "parent");
            expect_end(ss, line_no);
            c.parent_of.emplace_back(child, parent);
        }
    }
    if (!header) throw FormatError(line_no, "no certificate found");
    if (c.kind == CertificateKind::nsis_set && c.set.size() != announced) {
        throw FormatError(line_no, "certificate announces " + std::to_string(announced) + " vertices");
    }
    if (c.kind == CertificateKind::maxleaf_tree && c.parent_of.size() + 1 != announced) {
        throw FormatError(line_no, "certificate announces a tree on " + std::to_string(announced) + " vertices");
    }
    return c;
}

void write_outcome(std::ostream& out, const KernelOutcome& o, const std::string& trace_path) {
    out << "c kernel outcome\n";
    if (o.decided) {
        out << "o decided " << (*o.decided == Answer::yes ? "yes" : "no") << '\n';
    } else {
        out << "o reduced\n";
    }
    out << "k pipeline " << to_string(o.pipeline) << '\n';
    out << "k parameter " << o.parameter << '\n';
    out << "k bound " << size_factor(o.pipeline) << '\n';
    out << "k trace_steps " << o.trace.steps.size() << '\n';
    if (!trace_path.empty()) out << "k trace " << trace_path << '\n';
    out << "k tree_leaves " << o.tree_leaves << '\n';
    out << "k leaf_solution " << o.leaf_solution << '\n';
    if (o.decided) {
        if (*o.decided == Answer::yes) write_certificate(out, o.certificate);
        return;
    }
    out << "k reduced_order " << o.reduced.graph.order() << '\n';
    out << "k reduced_parameter " << o.reduced.parameter << '\n';
    if (o.pipeline != Pipeline::maxleaf_5k) out << "k cvc_parameter " << o.cvc_parameter << '\n';
    write_instance(out, o.reduced);
    const auto ids = o.reduced.graph.vertices();
    for (std::size_t i = 0; i < ids.size(); ++i) out << "m " << i << ' ' << ids[i] << '\n';
}

}  // namespace leafkernel
