#ifndef STONEKIT_DOCUMENT_HPP
#define STONEKIT_DOCUMENT_HPP

// Text documents for lattices and spaces.
//
// One `key: value` pair per line, values written as JSON. Lines starting with
// '#' and blank lines are ignored.
//
//   name: "diamond"
//   elements: ["0","a","b","1"]
//   leq: [["0","a"],["0","b"],["a","1"],["b","1"]]
//
//   name: "sierpinski"
//   points: ["0","1"]
//   opens: [[],["1"],["0","1"]]
//
// `leq` lists generating pairs (reflexive-transitive closure is applied) and
// `opens` lists generating sets (closed under union and intersection).

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "stonekit/lattice.hpp"
#include "stonekit/space.hpp"

namespace stonekit {

struct LatticeDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
};

struct SpaceDocument {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;
};

using Document = std::variant<LatticeDocument, SpaceDocument>;

/// Throws ParseError as "<source>:<line>: <message>".
Document parse_document(std::string_view text, std::string_view source = "<input>");
Document read_document(const std::string& path);

/// Throws CycleError, NotALattice or NotDistributive for bad orders.
LatticeRef load_lattice(const LatticeDocument& doc);
/// Points are sorted by name. Throws InvalidInput or NotATopology.
SpaceRef load_space(const SpaceDocument& doc);

/// Canonical text: elements in canonical order, leq as cover pairs.
std::string save_lattice(std::string_view name, const Lattice& l);
/// Canonical text: the full open family, smallest sets first.
std::string save_space(std::string_view name, const FinSpace& x);

/// Hasse diagram with cover edges pointing upwards.
std::string lattice_dot(std::string_view name, const Lattice& l);
/// Hasse diagram of the specialization order, with the opens as a legend.
std::string space_dot(std::string_view name, const FinSpace& x);

}  // namespace stonekit

#endif
