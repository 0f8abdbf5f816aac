#pragma once

#include <string>

#include "tapes/circuit.hpp"
#include "tapes/signature.hpp"
#include "tapes/tape.hpp"

namespace tapes {

/** Parses circuit syntax: `id(A)`, `id1`, generator names, `sym(A,B)`,
 * `cp(A)`, `dc(A)`, `cocp(A)`, `codc(A)`, `;`, `*` and parens.
 * `*` binds tighter than `;`; both are left associative. */
Circuit parse_circuit(const std::string& text, const MonSignature& sig);

/** Parses tape syntax: `idm(<word>)`, `id0`, `[ <circuit> ]`,
 * `symp(<word>,<word>)`, `diag/bang/codiag/cobang(<word>)`, `;`, `+` (sum),
 * `(+)` (direct sum) and parens.  Binding, loosest first: `;`, `+`, `(+)`.
 * A word is a space-separated sort list; empty or `1` means the unit. */
Tape parse_tape(const std::string& text, const MonSignature& sig);

/** Parses a bare word, e.g. "A B A", "1", or "". */
Monomial parse_word(const std::string& text, const MonSignature& sig);

}  // namespace tapes
