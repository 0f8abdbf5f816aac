#pragma once

#include <memory>
#include <optional>
#include <string>

#include "tapes/rel.hpp"
#include "tapes/tape.hpp"

namespace tapes {

/** Expressions of the positive calculus of relations over a set of relation
 * symbols, all typed over a single sort. */
enum class CrKind { Rel, One, Bot, Top, Seq, Union, Inter, Op };

struct CrNode;
using CrExpr = std::shared_ptr<const CrNode>;

struct CrNode {
  CrKind kind;
  std::string name;  // Rel
  CrExpr a, b;
};

CrExpr cr_rel(const std::string& name);
CrExpr cr_one();
CrExpr cr_bot();
CrExpr cr_top();
CrExpr cr_seq(CrExpr a, CrExpr b);
CrExpr cr_union(CrExpr a, CrExpr b);
CrExpr cr_inter(CrExpr a, CrExpr b);
CrExpr cr_op(CrExpr a);

/** Number of operator nodes (everything except relation symbol leaves). */
int cr_size(const CrExpr& e);

std::string to_text(const CrExpr& e);

/** Parses `R`, `id`, `bot`, `top`, `;`, `&`, `|`, postfix `~` and parens.
 * Binding, tightest first: ~ then ; then & then |, all left associative.
 * Relation symbols must be generators of the signature. */
CrExpr parse_cr(const std::string& text, const MonSignature& sig);

/** The single sort a signature must have for relation expressions over it. */
Sort cr_sort(const MonSignature& sig);

/** Encodes an expression as a tape over the signature extended with
 * Frobenius structure. The result normalizes to a 1x1 matrix. */
Tape encode(const CrExpr& e, const MonSignature& sig);

/** Evaluates an expression directly as a finite relation on the carrier of
 * the signature's sort. Oracle for the tape route. */
FiniteRelation eval_cr(const CrExpr& e, const Interpretation& in,
                       const MonSignature& sig);

struct Verdict {
  bool holds;
  /** Present iff !holds and a finite witness was found within budget. */
  std::optional<Interpretation> counterexample;
};

/** Decides e1 <= e2 (inclusion in every relational interpretation) by
 * normalizing both encodings and comparing matrices entrywise.  On failure,
 * searches small models for a witness. */
Verdict decide_leq(const CrExpr& e1, const CrExpr& e2, const MonSignature& sig,
                   const SearchOptions& opts = {});

/** Decides e1 == e2 as inclusion both ways. */
Verdict decide_equiv(const CrExpr& e1, const CrExpr& e2,
                     const MonSignature& sig, const SearchOptions& opts = {});

}  // namespace tapes
