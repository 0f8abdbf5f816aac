#pragma once

#include <string>
#include <vector>

#include "tapes/tape.hpp"

namespace tapes {

/** Entry discipline of matrix entries and of the order they induce:
 * MULTISET is the plain free category, SET collapses multiplicities, CB
 * additionally collapses entries along the cartesian-bicategory base order
 * (antichain of maximal circuits). */
enum class Mode { MULTISET, SET, CB };

std::string to_text(Mode m);
Mode mode_from_text(const std::string& s);

/** A circuit together with its canonical hypergraph key and printed form;
 * entries order circuits by (key, text) so equality is structural. */
struct CanonCircuit {
  Circuit term;
  std::string key;
  std::string text;
};

struct MonomialEntry {
  Monomial dom, cod;
  std::vector<CanonCircuit> circuits;

  bool empty() const { return circuits.empty(); }
};

/** Canonicalizes a collection of circuits of type dom → cod: sorts by key,
 * collapses duplicates in SET/CB modes, prunes non-maximal circuits under
 * cb_leq in CB mode. */
MonomialEntry make_entry(const Monomial& dom, const Monomial& cod,
                         const std::vector<Circuit>& circuits,
                         const MonSignature& sig, Mode mode);

/** An m×n grid of entries: columns indexed by the n summands of dom, rows by
 * the m summands of cod; entries[j][i] maps dom[i] to cod[j]. */
struct TapeMatrix {
  Polynomial dom, cod;
  Mode mode = Mode::MULTISET;
  std::vector<std::vector<MonomialEntry>> entries;

  std::size_t rows() const { return cod.size(); }
  std::size_t cols() const { return dom.size(); }
};

/** The normal form functor: structural recursion over the tape term with
 * matrix product for ;, block diagonal for ⊕, canonicalizing every entry. */
TapeMatrix to_matrix(const Tape& t, const MonSignature& sig,
                     Mode mode = Mode::MULTISET);

/** The inverse-up-to-normalization functor: column diagonals, a grid of
 * entry sums (empty entry = the zero tape), and a row codiagonal. */
Tape from_matrix(const TapeMatrix& m);

/** Matrix algebra over the (multi)set semiring. mat_compose(M, N) is "M then
 * N"; mat_kron follows the i-major index order of poly_product. */
TapeMatrix mat_compose(const TapeMatrix& m, const TapeMatrix& n,
                       const MonSignature& sig);
TapeMatrix mat_oplus(const TapeMatrix& m, const TapeMatrix& n);
TapeMatrix mat_kron(const TapeMatrix& m, const TapeMatrix& n,
                    const MonSignature& sig);

/** Structural equality: same type, same mode-canonical entries. */
bool matrix_equal(const TapeMatrix& a, const TapeMatrix& b);

/** Entry (j,i), 1-based, of the normal form of t. */
MonomialEntry entry(const Tape& t, std::size_t j, std::size_t i,
                    const MonSignature& sig, Mode mode = Mode::MULTISET);

/** The same entry computed by composing with the i-th injection and the j-th
 * projection and normalizing; agrees with entry() on every tape. */
MonomialEntry entry_by_projection(const Tape& t, std::size_t j, std::size_t i,
                                  const MonSignature& sig,
                                  Mode mode = Mode::MULTISET);

/** Human-readable grid with monomial headers. */
std::string pretty(const TapeMatrix& m);

/** Machine-readable JSON: dom/cod as lists of sort lists, entries as lists of
 * circuit texts in canonical order. */
std::string to_json(const TapeMatrix& m);

}  // namespace tapes
