#pragma once

#include <memory>
#include <string>
#include <utility>

#include "tapes/signature.hpp"

namespace tapes {

enum class CircKind {
  Id,            // id_A on a single sort
  IdUnit,        // id on the empty word
  Gen,           // signature generator, by name
  Sym,           // σ_{A,B} on two sorts
  Seq,           // c ; d
  Tensor,        // c ⊗ d
  Copier,        // ◁_A : A → A·A      (Frobenius mode)
  Discharger,    // !_A : A → 1        (Frobenius mode)
  Cocopier,      // ▷_A : A·A → A      (Frobenius mode)
  Codischarger,  // ¡_A : 1 → A        (Frobenius mode)
};

struct CircuitNode;
using Circuit = std::shared_ptr<const CircuitNode>;

struct CircuitNode {
  CircKind kind;
  Sort sort_a;  // Id/Sym/Copier/... sort, or generator name for Gen
  Sort sort_b;  // second sort of Sym
  Circuit a, b;  // children of Seq/Tensor
};

Circuit cid(const Sort& s);
Circuit cid1();
Circuit cgen(const std::string& name);
Circuit csym(const Sort& a, const Sort& b);
Circuit cseq(Circuit a, Circuit b);
Circuit ctens(Circuit a, Circuit b);
Circuit ccopier(const Sort& s);
Circuit cdischarger(const Sort& s);
Circuit ccocopier(const Sort& s);
Circuit ccodischarger(const Sort& s);

/** Identity circuit on a word: the tensor of per-sort identities. */
Circuit cid_word(const Monomial& u);

/** Returns (domain, codomain) or throws TypeError (middle-word mismatch,
 * unknown generator, Frobenius generator with frobenius_enabled = false). */
std::pair<Monomial, Monomial> type_check_circuit(const Circuit& c,
                                                 const MonSignature& sig);

/** Word-level symmetry σ_{U,V} : U·V → V·U built from sort-level σ. */
Circuit word_symmetry(const Monomial& u, const Monomial& v);

/** Word-level commutative comonoid/monoid, assembled from the per-sort
 * generators by the product recipe: the copier on A·U' is
 * (◁_A ⊗ ◁_U') ; (id_A ⊗ σ_{A,U'} ⊗ id_U'), with identities at the unit. */
Circuit word_copier(const Monomial& u);
Circuit word_discharger(const Monomial& u);
Circuit word_cocopier(const Monomial& u);
Circuit word_codischarger(const Monomial& u);

/** Equality of circuits: in plain mode, interface-preserving isomorphism of
 * the canonical hypergraphs; in Frobenius mode, cb_leq in both directions. */
bool circuits_equal(const Circuit& c, const Circuit& d,
                    const MonSignature& sig);

/** The base order of the free cartesian bicategory: c ≤ d iff there is a
 * hypergraph homomorphism from the graph of d to the graph of c that fixes
 * the interfaces and preserves edge labels and port order. Requires
 * frobenius_enabled. */
bool cb_leq(const Circuit& c, const Circuit& d, const MonSignature& sig);

/** The transpose of c : U → V, of type V → U, built with word-level cups
 * (codischarger;copier) and caps (cocopier;discharger); its hypergraph is the
 * interface swap of the hypergraph of c. Requires frobenius_enabled. */
Circuit transpose(const Circuit& c, const MonSignature& sig);

/** Drops identity factors from Seq/Tensor nodes of a well-typed circuit
 * (composition with an identity is the other side; tensoring with the unit
 * identity likewise). Purely cosmetic: the hypergraph is unchanged. */
Circuit strip_identities(const Circuit& c);

/** Renders a circuit in the textual syntax accepted by parse_circuit. */
std::string to_text(const Circuit& c);

}  // namespace tapes
