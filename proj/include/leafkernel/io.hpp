#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "leafkernel/kernel.hpp"
#include "leafkernel/reduction.hpp"

namespace leafkernel {

class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// "p <problem> <n> <m> <parameter>", then m lines "e <u> <v>"; "c" lines are
// comments. Loops, duplicate edges, bad ids and a wrong edge count are errors.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);

// Writes the live vertices relabelled to [0, n) in id order.
void write_instance(std::ostream& out, const Instance& inst);
std::string serialize_instance(const Instance& inst);

// "s empty" | "s nsis_set <N>" + "v <id>" lines | "s maxleaf_tree <N> <root>"
// + "t <child> <parent>" lines.
void write_certificate(std::ostream& out, const Certificate& c);

// Reads a certificate; lines other than s/v/t (an outcome document) are skipped.
Certificate read_certificate(std::istream& in);

// Outcome document: "o decided yes|no" or "o reduced", "k <key> <value>"
// lines, the certificate, and for reduced outcomes the compacted instance
// followed by "m <new> <old>" id map lines.
void write_outcome(std::ostream& out, const KernelOutcome& outcome, const std::string& trace_path);

}  // namespace leafkernel
