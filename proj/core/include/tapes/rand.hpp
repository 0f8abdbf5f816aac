#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tapes/cr.hpp"
#include "tapes/matrix.hpp"
#include "tapes/signature.hpp"
#include "tapes/tape.hpp"

namespace tapes {

/** Seeded source for all property-test sampling. */
struct Rand {
  std::mt19937_64 eng;
  explicit Rand(std::uint64_t seed) : eng(seed) {}
  /** Uniform integer in [0, n). */
  int below(int n) {
    return static_cast<int>(
        std::uniform_int_distribution<int>(0, n - 1)(eng));
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(eng) < p;
  }
};

/** Three sorts and a handful of generators with arities of length <= 2,
 * enough to exercise every typing rule while keeping model search cheap. */
MonSignature standard_test_signature(bool frobenius = false);

/** Single sort with endo, growing and shrinking generators, so a circuit
 * between any two words exists; used to sample arbitrary matrices. */
MonSignature chain_signature(bool frobenius = false);

Monomial random_monomial(Rand& r, const std::vector<Sort>& sorts,
                         int max_len = 3);
Polynomial random_polynomial(Rand& r, const std::vector<Sort>& sorts,
                             int max_len = 3, bool allow_zero = true);

/** Random well-typed circuit with the given domain, built by layering
 * generators, symmetries and (in Frobenius mode) (co)monoid atoms. */
Circuit random_circuit_from(Rand& r, const MonSignature& sig,
                            const Monomial& dom, int layers);

/** Random well-typed circuit of type exactly u -> v over chain_signature. */
Circuit random_word_circuit(Rand& r, const MonSignature& sig,
                            const Monomial& u, const Monomial& v);

/** Random well-typed tape with the given domain and at most `budget`
 * constructors past the initial identity stack. */
Tape random_tape_from(Rand& r, const MonSignature& sig, const Polynomial& dom,
                      int budget);
Tape random_tape(Rand& r, const MonSignature& sig, int budget);

/** Random relation expression with at most `ops` operator nodes over the
 * given symbols. */
CrExpr random_cr(Rand& r, const std::vector<std::string>& symbols, int ops);

/** Random matrix of arbitrary shape (0..max_dim summands each side) over
 * chain_signature, with independently sampled entries including empty ones.
 * Unlike matrices obtained by normalizing a tape, these are sampled directly
 * in matrix space. */
TapeMatrix random_matrix(Rand& r, const MonSignature& chain_sig, int max_dim,
                         Mode mode = Mode::MULTISET);

}  // namespace tapes
