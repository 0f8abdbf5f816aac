#pragma once

#include "tapes/matrix.hpp"

namespace tapes {

/** Egli–Milner comparison of entries: e1 ≤ e2 iff every circuit of e1 is
 * below some circuit of e2 in the base order — circuit equality in SET mode,
 * cb_leq in CB mode. MULTISET mode has no order and throws ModeError. */
bool em_leq(const MonomialEntry& e1, const MonomialEntry& e2,
            const MonSignature& sig, Mode mode);

/** Entrywise Egli–Milner comparison of the matrix normal forms. */
bool tape_leq(const Tape& t, const Tape& s, const MonSignature& sig,
              Mode mode);

/** tape_leq both ways in SET/CB mode; structural matrix equality in MULTISET
 * mode. */
bool tape_equiv(const Tape& t, const Tape& s, const MonSignature& sig,
                Mode mode);

}  // namespace tapes
