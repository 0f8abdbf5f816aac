#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "tapes/hypergraph.hpp"
#include "tapes/matrix.hpp"
#include "tapes/rand.hpp"
#include "tapes/text.hpp"

using namespace tapes;

namespace {
MonSignature rels(bool frobenius = false) {
  MonSignature s;
  s.sorts = {"A", "B"};
  s.generators.push_back({"R", Monomial{"A"}, Monomial{"A"}});
  s.generators.push_back({"S", Monomial{"A"}, Monomial{"A"}});
  s.generators.push_back({"f", Monomial{"A"}, Monomial{"B"}});
  s.frobenius_enabled = frobenius;
  return s;
}

std::string key(const Circuit& c, const MonSignature& sig) {
  return canonical_key(to_hypergraph(c, sig));
}
}  // namespace

TEST_CASE("words parse as space-separated sort lists") {
  MonSignature sig = rels();
  CHECK(parse_word("A B A", sig) == Monomial{"A", "B", "A"});
  CHECK(parse_word("A", sig) == Monomial{"A"});
  CHECK(parse_word("1", sig) == Monomial());
  CHECK(parse_word("", sig) == Monomial());
  CHECK(parse_word("  A   B ", sig) == Monomial{"A", "B"});
  CHECK_THROWS_AS(parse_word("A Z", sig), ParseError);
  CHECK_THROWS_AS(parse_word("A 1", sig), ParseError);
}

TEST_CASE("circuit syntax covers every constructor") {
  MonSignature sig = rels(true);
  CHECK(key(parse_circuit("R", sig), sig) == key(cgen("R"), sig));
  CHECK(key(parse_circuit("id(A)", sig), sig) == key(cid("A"), sig));
  CHECK(key(parse_circuit("id1", sig), sig) == key(cid1(), sig));
  CHECK(key(parse_circuit("sym(A,B)", sig), sig) == key(csym("A", "B"), sig));
  CHECK(key(parse_circuit("cp(A)", sig), sig) == key(ccopier("A"), sig));
  CHECK(key(parse_circuit("dc(A)", sig), sig) ==
        key(cdischarger("A"), sig));
  CHECK(key(parse_circuit("cocp(A)", sig), sig) ==
        key(ccocopier("A"), sig));
  CHECK(key(parse_circuit("codc(A)", sig), sig) ==
        key(ccodischarger("A"), sig));
  CHECK(key(parse_circuit("R ; S", sig), sig) ==
        key(cseq(cgen("R"), cgen("S")), sig));
  CHECK(key(parse_circuit("R * f", sig), sig) ==
        key(ctens(cgen("R"), cgen("f")), sig));
}

TEST_CASE("tensor binds tighter than circuit composition") {
  MonSignature sig = rels();
  // R * R ; S * S must group as (R*R) ; (S*S), which is well-typed.
  Circuit c = parse_circuit("R * R ; S * S", sig);
  auto [d, k] = type_check_circuit(c, sig);
  CHECK(d == Monomial{"A", "A"});
  CHECK(k == Monomial{"A", "A"});
  CHECK(key(c, sig) ==
        key(cseq(ctens(cgen("R"), cgen("R")), ctens(cgen("S"), cgen("S"))),
            sig));
  // Parentheses override.
  CHECK(key(parse_circuit("R ; (S ; R)", sig), sig) ==
        key(cseq(cgen("R"), cseq(cgen("S"), cgen("R"))), sig));
}

TEST_CASE("tape syntax covers every constructor") {
  MonSignature sig = rels();
  CHECK(matrix_equal(to_matrix(parse_tape("idm(A B)", sig), sig),
                     to_matrix(tid(Monomial{"A", "B"}), sig)));
  CHECK(matrix_equal(to_matrix(parse_tape("id0", sig), sig),
                     to_matrix(tid0(), sig)));
  CHECK(matrix_equal(to_matrix(parse_tape("[R]", sig), sig),
                     to_matrix(tlift(cgen("R")), sig)));
  CHECK(matrix_equal(to_matrix(parse_tape("symp(A, B A)", sig), sig),
                     to_matrix(tsymplus(Monomial{"A"}, Monomial{"B", "A"}),
                               sig)));
  CHECK(matrix_equal(to_matrix(parse_tape("diag(A)", sig), sig),
                     to_matrix(tdiag(Monomial{"A"}), sig)));
  CHECK(matrix_equal(to_matrix(parse_tape("bang(A B)", sig), sig),
                     to_matrix(tbang(Monomial{"A", "B"}), sig)));
  CHECK(matrix_equal(to_matrix(parse_tape("codiag(A)", sig), sig),
                     to_matrix(tcodiag(Monomial{"A"}), sig)));
  CHECK(matrix_equal(to_matrix(parse_tape("cobang(1)", sig), sig),
                     to_matrix(tcobang(Monomial()), sig)));
  CHECK(matrix_equal(
      to_matrix(parse_tape("[R] (+) [S]", sig), sig),
      to_matrix(toplus(tlift(cgen("R")), tlift(cgen("S"))), sig)));
  CHECK(matrix_equal(to_matrix(parse_tape("[R] + [S]", sig), sig),
                     to_matrix(sum(tlift(cgen("R")), tlift(cgen("S")), sig),
                               sig)));
}

TEST_CASE("the normal form of the worked pipeline example") {
  MonSignature sig = rels();
  Tape t = parse_tape("diag(A) ; ([R] (+) [S]) ; codiag(A)", sig);
  TapeMatrix m = to_matrix(t, sig);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  REQUIRE(m.entries[0][0].circuits.size() == 2);
  CHECK(m.entries[0][0].circuits[0].text == "R");
  CHECK(m.entries[0][0].circuits[1].text == "S");
}

TEST_CASE("tape operators bind loosest to tightest as ;, +, (+)") {
  MonSignature sig = rels();
  // a ; b + c groups as a ; (b + c).
  Tape t1 = parse_tape("diag(A) ; [R] (+) [S] + [S] (+) [R]", sig);
  Tape t2 = parse_tape("diag(A) ; (([R] (+) [S]) + ([S] (+) [R]))", sig);
  CHECK(matrix_equal(to_matrix(t1, sig), to_matrix(t2, sig)));
  // + groups its (+) operands before summing; the reverse grouping would
  // sum a tape of type A -> A + A against one of type 0 -> A and fail.
  Tape s1 = parse_tape("[R] (+) cobang(A) + [S] (+) cobang(A)", sig);
  Tape s2 = parse_tape("([R] (+) cobang(A)) + ([S] (+) cobang(A))", sig);
  CHECK(matrix_equal(to_matrix(s1, sig), to_matrix(s2, sig)));
}

TEST_CASE("random tapes survive a print and parse round trip") {
  MonSignature sig = standard_test_signature();
  Rand r(81);
  for (int i = 0; i < 60; ++i) {
    Tape t = random_tape(r, sig, 6);
    Tape back = parse_tape(to_text(t), sig);
    CHECK(matrix_equal(to_matrix(back, sig), to_matrix(t, sig)));
  }
}

TEST_CASE("random circuits survive a print and parse round trip") {
  MonSignature sig = standard_test_signature(true);
  Rand r(82);
  for (int i = 0; i < 60; ++i) {
    Circuit c = random_circuit_from(r, sig, random_monomial(r, sig.sorts, 2),
                                    3);
    Circuit back = parse_circuit(to_text(c), sig);
    CHECK(key(back, sig) == key(c, sig));
  }
}

TEST_CASE("syntax errors carry positions") {
  MonSignature sig = rels();
  for (const char* bad :
       {"R ;", "(R ; S", "R S", "", "sym(A B)", "id(", "Q", "cp(A)"}) {
    CHECK_THROWS_AS(parse_circuit(bad, sig), Error);
  }
  try {
    parse_circuit("R ;\n; S", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  for (const char* bad :
       {"[R", "[R] ;", "diag(A", "symp(A)", "idm(A) extra", "(+)", "[Q]"}) {
    CHECK_THROWS_AS(parse_tape(bad, sig), Error);
  }
}

TEST_CASE("identity parses for the empty word") {
  MonSignature sig = rels();
  CHECK(matrix_equal(to_matrix(parse_tape("idm(1)", sig), sig),
                     to_matrix(tid(Monomial()), sig)));
  CHECK(matrix_equal(to_matrix(parse_tape("idm()", sig), sig),
                     to_matrix(tid(Monomial()), sig)));
  Circuit c = parse_circuit("id1 * R", sig);
  CHECK(key(c, sig) == key(cgen("R"), sig));
}
