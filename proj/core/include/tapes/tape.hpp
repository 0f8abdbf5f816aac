#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tapes/circuit.hpp"

namespace tapes {

enum class TapeKind {
  IdMon,    // id on a one-summand polynomial
  IdZero,   // id on the zero polynomial
  Lift,     // ⌊c⌋, a circuit inside a tape
  SymPlus,  // σ⊕_{U,V} : U⊕V → V⊕U
  Seq,      // t ; s
  Oplus,    // t ⊕ s
  Bang,     // !_U : U → 0
  Diag,     // ◁⊕_U : U → U⊕U
  Cobang,   // ¡_U : 0 → U
  Codiag,   // ▷⊕_U : U⊕U → U
};

struct TapeNode;
using Tape = std::shared_ptr<const TapeNode>;

struct TapeNode {
  TapeKind kind;
  Monomial u, v;  // SymPlus carries two monomials, the other leaves one
  Circuit circ;   // Lift payload
  Tape a, b;      // children of Seq/Oplus
};

Tape tid(const Monomial& u);
Tape tid0();
Tape tlift(Circuit c);
Tape tsymplus(const Monomial& u, const Monomial& v);
Tape tseq(Tape a, Tape b);
Tape toplus(Tape a, Tape b);
Tape tbang(const Monomial& u);
Tape tdiag(const Monomial& u);
Tape tcobang(const Monomial& u);
Tape tcodiag(const Monomial& u);

/** Direct sum with unit collapsing: IdZero operands disappear. Used by the
 * derived-structure builders to avoid zero-summand noise. */
Tape oplus_smart(Tape a, Tape b);
/** Left-associated ⊕ fold of the given tapes; IdZero when empty. */
Tape oplus_fold(const std::vector<Tape>& ts);

/** Returns (domain, codomain) polynomials or throws TypeError. */
std::pair<Polynomial, Polynomial> type_check_tape(const Tape& t,
                                                  const MonSignature& sig);

/** Identity tape on a polynomial: a stack of IdMon, IdZero when P = 0. */
Tape id_poly(const Polynomial& p);

/** Symmetry σ⊕_{P,Q} : P⊕Q → Q⊕P assembled from monomial transpositions. */
Tape sym_plus_poly(const Polynomial& p, const Polynomial& q);

/** Polynomial-level (co)diagonals and (co)bangs, assembled from the monomial
 * generators by the coherence recipe (the diagonal of a sum interleaves the
 * summand diagonals with a symmetry; bangs are summandwise). */
Tape diag_poly(const Polynomial& p);
Tape bang_poly(const Polynomial& p);
Tape codiag_poly(const Polynomial& p);
Tape cobang_poly(const Polynomial& p);

/** Generalized diagonal diag^m_U : U → U^{⊕m} (m = 0 gives !_U) and its dual
 * codiag^n over a whole polynomial Q : Q^{⊕n} → Q (n = 0 gives ¡_Q). */
Tape gen_diag(const Monomial& u, std::size_t m);
Tape gen_codiag(const Polynomial& q, std::size_t n);

/** δl_{P,Q,R} : P⊗(Q⊕R) → (P⊗Q)⊕(P⊗R), built from identities and σ⊕ by
 * recursion on P; inv_left_distributor reverses the construction. */
Tape left_distributor(const Polynomial& p, const Polynomial& q,
                      const Polynomial& r);
Tape inv_left_distributor(const Polynomial& p, const Polynomial& q,
                          const Polynomial& r);

/** σ⊗_{P,Q} : P⊗Q → Q⊗P, built from distributors and lifted circuit
 * symmetries by recursion on Q. */
Tape tensor_symmetry(const Polynomial& p, const Polynomial& q);

/** Whiskering by a monomial: structural recursion that multiplies every
 * monomial annotation and tensors every lifted circuit with an identity.
 * Whiskering by the unit returns the tape unchanged. */
Tape whisker_left(const Monomial& u, const Tape& t);
Tape whisker_right(const Monomial& u, const Tape& t);

/** Whiskering by a polynomial: left whiskering stacks the monomial
 * whiskerings; right whiskering conjugates the stack with distributors at the
 * tape's endpoint types, hence needs the signature to type the tape. */
Tape whisker_left(const Polynomial& s, const Tape& t);
Tape whisker_right(const Polynomial& s, const Tape& t,
                   const MonSignature& sig);

/** t₁ ⊗ t₂ = L_{P₁}(t₂) ; R_{Q₂}(t₁) for t₁ : P₁ → Q₁, t₂ : P₂ → Q₂. */
Tape tensor(const Tape& t1, const Tape& t2, const MonSignature& sig);

/** The convolution monoid: t₁ + t₂ = ◁⊕ ; (t₁ ⊕ t₂) ; ▷⊕ and its unit
 * o = ! ; ¡ of a given type. */
Tape sum(const Tape& t1, const Tape& t2, const MonSignature& sig);
Tape zero(const Polynomial& p, const Polynomial& q);

/** Polynomial-level Frobenius structure (Frobenius mode): copier P → P⊗P,
 * discharger P → 𝟙, cocopier P⊗P → P, codischarger 𝟙 → P, where 𝟙 is the
 * one-summand polynomial on the unit monomial. */
Tape copier_poly(const Polynomial& p);
Tape discharger_poly(const Polynomial& p);
Tape cocopier_poly(const Polynomial& p);
Tape codischarger_poly(const Polynomial& p);

/** Renders a tape in the textual syntax accepted by parse_tape. */
std::string to_text(const Tape& t);

}  // namespace tapes
