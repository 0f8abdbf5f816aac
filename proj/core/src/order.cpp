#include "tapes/order.hpp"

namespace tapes {

bool em_leq(const MonomialEntry& e1, const MonomialEntry& e2,
            const MonSignature& sig, Mode mode) {
  if (mode == Mode::MULTISET)
    throw ModeError("em_leq: multiset mode admits only equality");
  if (e1.dom != e2.dom || e1.cod != e2.cod)
    throw TypeError("em_leq: entry type mismatch");
  for (const CanonCircuit& c : e1.circuits) {
    bool found = false;
    for (const CanonCircuit& d : e2.circuits) {
      if (mode == Mode::SET ? c.key == d.key
                            : cb_leq(c.term, d.term, sig)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool tape_leq(const Tape& t, const Tape& s, const MonSignature& sig,
              Mode mode) {
  if (mode == Mode::MULTISET)
    throw ModeError("tape_leq: multiset mode admits only equality");
  TapeMatrix mt = to_matrix(t, sig, mode);
  TapeMatrix ms = to_matrix(s, sig, mode);
  if (mt.dom != ms.dom || mt.cod != ms.cod)
    throw TypeError("tape_leq: type mismatch: '" + to_text(mt.dom) + " -> " +
                    to_text(mt.cod) + "' vs '" + to_text(ms.dom) + " -> " +
                    to_text(ms.cod) + "'");
  for (std::size_t j = 0; j < mt.rows(); ++j)
    for (std::size_t i = 0; i < mt.cols(); ++i)
      if (!em_leq(mt.entries[j][i], ms.entries[j][i], sig, mode))
        return false;
  return true;
}

bool tape_equiv(const Tape& t, const Tape& s, const MonSignature& sig,
                Mode mode) {
  if (mode == Mode::MULTISET) {
    TapeMatrix mt = to_matrix(t, sig, mode);
    TapeMatrix ms = to_matrix(s, sig, mode);
    if (mt.dom != ms.dom || mt.cod != ms.cod)
      throw TypeError("tape_equiv: type mismatch");
    return matrix_equal(mt, ms);
  }
  return tape_leq(t, s, sig, mode) && tape_leq(s, t, sig, mode);
}

}  // namespace tapes
