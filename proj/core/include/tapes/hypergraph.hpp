#pragma once

#include <string>
#include <vector>

#include "tapes/circuit.hpp"

namespace tapes {

struct Hyperedge {
  std::string label;
  std::vector<int> sources;
  std::vector<int> targets;
};

/** A hypergraph with ordered left/right boundary vertex lists. Wires of a
 * circuit become vertices, generator occurrences become labelled edges. */
struct InterfacedHypergraph {
  int vertex_count = 0;
  std::vector<Hyperedge> edges;
  std::vector<int> left;
  std::vector<int> right;
};

/** Compositional translation of a well-typed circuit. Copier/Cocopier merge
 * their three wire endpoints into one vertex, Discharger/Codischarger leave a
 * vertex dangling on one side, Seq identifies boundary vertices pointwise.
 * In plain mode (no Frobenius generators) the result satisfies the linearity
 * invariant checked by is_linear. */
InterfacedHypergraph to_hypergraph(const Circuit& c, const MonSignature& sig);

/** Plain-mode invariant: every vertex is produced exactly once (left boundary
 * position or edge target) and consumed exactly once (right boundary position
 * or edge source). */
bool is_linear(const InterfacedHypergraph& h);

/** Exact canonical form: equal strings iff the hypergraphs are isomorphic by
 * a boundary-preserving, label-preserving, port-order-preserving bijection.
 * Computed by iterative partition refinement anchored at the boundary
 * vertices, with individualization backtracking on ties. */
std::string canonical_key(const InterfacedHypergraph& h);

/** Whether a label/port/boundary-preserving homomorphism `from` → `to`
 * exists (not necessarily injective). Boundary vertices map pointwise to the
 * corresponding boundary vertices of `to`; boundary lengths must match. */
bool hom_exists(const InterfacedHypergraph& from,
                const InterfacedHypergraph& to);

/** Graphviz rendering, one record node per hyperedge. */
std::string to_dot(const InterfacedHypergraph& h, const std::string& name);

}  // namespace tapes
