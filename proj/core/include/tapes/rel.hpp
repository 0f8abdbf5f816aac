#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tapes/tape.hpp"

namespace tapes {

/** A finite-set model: a carrier size per sort (the carrier is {0..n-1}) and
 * a set of (input tuple, output tuple) pairs per generator. */
struct Interpretation {
  std::map<Sort, int> carrier;
  std::map<std::string,
           std::vector<std::pair<std::vector<int>, std::vector<int>>>>
      relations;
};

/** Parses `{"carrier": {"A": 2}, "relations": {"R": [[[0],[1]]]}}`. */
Interpretation interpretation_from_json(const std::string& text);
std::string to_json(const Interpretation& in);

/** The flat index space of a polynomial: summand i covers the index range
 * [offset[i], offset[i] + mono_size[i]), a monomial's tuples being numbered
 * in big-endian mixed radix (first sort most significant). */
struct Space {
  Polynomial poly;
  std::vector<long long> mono_size;
  std::vector<long long> offset;
  long long total = 0;
};

Space make_space(const Polynomial& p, const Interpretation& in);

/** An element of a polynomial space: which summand, and the value at each
 * position of that summand's monomial. */
struct TaggedTuple {
  std::size_t summand = 0;
  std::vector<int> values;

  auto operator<=>(const TaggedTuple&) const = default;
};

long long index_of(const Space& s, const TaggedTuple& t,
                   const Interpretation& in);
TaggedTuple tuple_of(const Space& s, long long flat, const Interpretation& in);

/** A relation between two polynomial spaces, one bitset row per domain
 * element. */
struct FiniteRelation {
  Space dom, cod;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  bool get(long long x, long long y) const {
    return (bits[x * words + static_cast<std::size_t>(y >> 6)] >>
            (y & 63)) &
           1;
  }
  void set(long long x, long long y) {
    bits[x * words + static_cast<std::size_t>(y >> 6)] |=
        std::uint64_t(1) << (y & 63);
  }

  std::vector<std::pair<TaggedTuple, TaggedTuple>> pairs(
      const Interpretation& in) const;
};

FiniteRelation rel_empty(Space dom, Space cod);
FiniteRelation rel_identity(const Space& s);

FiniteRelation rel_compose(const FiniteRelation& r, const FiniteRelation& s);
FiniteRelation rel_converse(const FiniteRelation& r);
FiniteRelation rel_union(const FiniteRelation& r, const FiniteRelation& s);
FiniteRelation rel_intersect(const FiniteRelation& r,
                             const FiniteRelation& s);
/** Disjoint union: block sum of the two relations. */
FiniteRelation rel_oplus(const FiniteRelation& r, const FiniteRelation& s);
/** Cartesian product of relations between single-summand spaces. */
FiniteRelation rel_product(const FiniteRelation& r, const FiniteRelation& s,
                           const Interpretation& in);
bool rel_subset(const FiniteRelation& r, const FiniteRelation& s);
bool rel_equal(const FiniteRelation& r, const FiniteRelation& s);

/** Table-driven semantics of circuits: generators from the interpretation,
 * copier x ↦ (x,x), discharger x ↦ (), their converses, composition and
 * product structurally. */
FiniteRelation eval_circuit(const Circuit& c, const Interpretation& in,
                            const MonSignature& sig);

/** Semantics of tapes: ⊕ as disjoint union, the diagonal x ↦ (x,0)/(x,1) for
 * Diag, the empty relation for Bang/Cobang, lifted circuits unchanged. */
FiniteRelation eval_tape(const Tape& t, const Interpretation& in,
                         const MonSignature& sig);

/** JSON with tagged pairs (untagged when both sides are single-summand). */
std::string to_json(const FiniteRelation& r, const Interpretation& in);

struct SearchOptions {
  int max_carrier = 3;
  long long budget = 65536;  // interpretations examined across all sizes
  std::uint64_t seed = 0;
};

/** Looks for an interpretation with eval_tape(t) ⊄ eval_tape(s): uniform
 * carrier sizes ascending, exhaustive lexicographic relation assignments
 * while the assignment count fits the remaining budget, seeded uniform
 * sampling otherwise. */
std::optional<Interpretation> search_counterexample(
    const Tape& t, const Tape& s, const MonSignature& sig,
    const SearchOptions& opts = {});

}  // namespace tapes
