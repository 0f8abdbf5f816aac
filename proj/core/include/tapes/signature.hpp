#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tapes/error.hpp"

namespace tapes {

using Sort = std::string;

/** A word of sorts. The empty word is the tensor unit. */
struct Monomial {
  std::vector<Sort> sorts;

  Monomial() = default;
  explicit Monomial(std::vector<Sort> s) : sorts(std::move(s)) {}
  explicit Monomial(const Sort& s) : sorts{s} {}
  Monomial(std::initializer_list<Sort> s) : sorts(s) {}

  bool is_unit() const { return sorts.empty(); }
  std::size_t size() const { return sorts.size(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.sorts.insert(r.sorts.end(), b.sorts.begin(), b.sorts.end());
    return r;
  }

  auto operator<=>(const Monomial&) const = default;
};

/** A word of monomials. The empty word is the zero object; list order is
 * significant because the direct sum is not commutative on objects. */
struct Polynomial {
  std::vector<Monomial> monomials;

  Polynomial() = default;
  explicit Polynomial(std::vector<Monomial> m) : monomials(std::move(m)) {}
  explicit Polynomial(const Monomial& m) : monomials{m} {}
  Polynomial(std::initializer_list<Monomial> m) : monomials(m) {}

  bool is_zero() const { return monomials.empty(); }
  std::size_t size() const { return monomials.size(); }

  /** Direct sum: concatenation of summand lists. */
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r.monomials.insert(r.monomials.end(), b.monomials.begin(),
                       b.monomials.end());
    return r;
  }

  auto operator<=>(const Polynomial&) const = default;
};

/** The unit monomial as a one-summand polynomial. */
inline Polynomial poly_unit() { return Polynomial(Monomial()); }

/** Product of polynomials: (⊞_i U_i) ⊗ (⊞_j V_j) = ⊞_i ⊞_j U_i·V_j, with the
 * i-index major. This is the object normal form of the tensor. */
Polynomial poly_product(const Polynomial& p, const Polynomial& q);

struct Generator {
  std::string name;
  Monomial arity;
  Monomial coarity;
};

struct MonSignature {
  std::vector<Sort> sorts;
  std::vector<Generator> generators;
  /** Whether the per-sort copier/discharger/cocopier/codischarger are
   * implicitly part of the signature. */
  bool frobenius_enabled = false;

  bool has_sort(const Sort& s) const;
  const Generator* find(const std::string& name) const;
  const Generator& generator(const std::string& name) const;
};

struct RigGenerator {
  std::string name;
  Polynomial arity;
  Polynomial coarity;
};

struct RigSignature {
  std::vector<Sort> sorts;
  std::vector<RigGenerator> generators;
  bool frobenius_enabled = false;
};

/** Parses the textual signature format:
 *
 *   sort A B C ;
 *   gen f : A B -> C ;          # monoidal generator
 *   gen s : A B + C -> A + B ;  # rig generator (polynomial types)
 *
 * Words are space-separated sort names (empty allowed), `+` separates the
 * monomials of a polynomial type, `#` starts a line comment. Returns a
 * MonSignature when every generator is monomial-typed, otherwise a
 * RigSignature. */
std::variant<MonSignature, RigSignature> parse_signature(
    const std::string& text);

/** The family of monoidal generators a rig generator reduces to: entry (j,i)
 * (1-based, row-major storage names[j-1][i-1]) has type U_i → V_j. */
struct ReducedFamily {
  RigGenerator original;
  std::vector<std::vector<std::string>> names;  // m rows, n columns
};

using ReductionTable = std::map<std::string, ReducedFamily>;

/** Splits every rig generator s : ⊞_{i≤n} U_i → ⊞_{j≤m} V_j into n·m monoidal
 * generators s__<j>_<i> : U_i → V_j (a generator that is already
 * monomial-typed keeps its name). Throws Error on a name collision. */
std::pair<MonSignature, ReductionTable> reduce_rig_signature(
    const RigSignature& rs);

struct TapeNode;
using Tape = std::shared_ptr<const TapeNode>;

/** The tape ⊞_i diag^m ; ⊞_i ⊞_j ⌊s__j_i⌋ ; codiag^n of the same type as the
 * rig generator; its matrix normal form has the singleton {s__j_i} at every
 * (j,i). */
Tape expand_generator(const RigGenerator& s, const ReductionTable& table);

/** Renders a monomial as space-separated sorts, or "1" for the unit. */
std::string to_text(const Monomial& m);
/** Renders a polynomial as " + "-separated monomials, or "0" for zero. */
std::string to_text(const Polynomial& p);

}  // namespace tapes
