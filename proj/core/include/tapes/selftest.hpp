#pragma once

#include <cstdint>
#include <ostream>

namespace tapes {

/** Runs a condensed, deterministic sweep of the property suites (whiskering
 * laws, axiom schemas, normal-form roundtrips, order soundness, relation
 * calculus decisions) and writes one line per check. Returns true iff every
 * check passed. Identical seeds produce identical transcripts. */
bool run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace tapes
