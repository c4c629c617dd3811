#ifndef TSG_INSTANCE_IO_HPP
#define TSG_INSTANCE_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsg/errors.hpp"
#include "tsg/partition.hpp"
#include "tsg/subset.hpp"
#include "tsg/ternary_table.hpp"
#include "tsg/topology.hpp"

namespace tsg {

// Parse failures carry the 1-based line (and column when it is a token-level
// problem) so diagnostics can point into the file.
class ParseError : public ArgumentError {
  public:
    ParseError(const std::string& kind, int line, int column, const std::string& detail)
        : ArgumentError(kind + " at line " + std::to_string(line) +
                        (column > 0 ? ", column " + std::to_string(column) : std::string()) +
                        ": " + detail),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

// Malformed text: bad tokens, wrong counts, unknown directives.
class SyntaxError : public ParseError {
  public:
    SyntaxError(int line, int column, const std::string& detail)
        : ParseError("syntax error", line, column, detail) {}
};

// Well-formed text with an index outside the carrier.
class RangeError : public ParseError {
  public:
    RangeError(int line, const std::string& detail) : ParseError("range error", line, 0, detail) {}
};

// Well-formed, in-range text that violates associativity or the open-set
// axioms.
class AxiomError : public ParseError {
  public:
    AxiomError(int line, const std::string& detail)
        : ParseError("axiom violation", line, 0, detail) {}
};

struct Instance {
    TernaryTable table;
    std::optional<FiniteTopology> topology;
    std::vector<std::pair<std::string, SubSet>> sets;            // file order
    std::vector<std::pair<std::string, Partition>> partitions;   // file order

    const SubSet* find_set(const std::string& name) const;
    const Partition* find_partition(const std::string& name) const;
};

// Format (one canonical form):
//   tsg 1
//   order <n>
//   cube            followed by n^2 rows of n integers; row a*n+b, column c
//   topology <m>    optional; m lines of element indices, {} for the empty set
//   set <name> <elements>
//   partition <name> <classes, slash-separated>
// Associativity and the topology axioms are checked here, so a returned
// Instance is always structurally valid.
Instance parse_instance(const std::string& text);

// Canonical text for the instance; parse + serialize is the identity on
// canonical input.
std::string serialize_instance(const Instance& inst);

}  // namespace tsg

#endif  // TSG_INSTANCE_IO_HPP
