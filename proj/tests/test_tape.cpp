#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "tapes/matrix.hpp"
#include "tapes/rand.hpp"
#include "tapes/tape.hpp"

using namespace tapes;

namespace {
MonSignature letters() {
  MonSignature s;
  s.sorts = {"A"};
  for (const char* n : {"c", "d", "e", "f", "g"})
    s.generators.push_back({n, Monomial{"A"}, Monomial{"A"}});
  return s;
}

bool norm_equal(const Tape& t, const Tape& s, const MonSignature& sig) {
  return matrix_equal(to_matrix(t, sig), to_matrix(s, sig));
}

/** Identity matrix check through the normal form. */
bool norm_identity(const Tape& t, const MonSignature& sig) {
  auto [dom, cod] = type_check_tape(t, sig);
  if (dom != cod) return false;
  return matrix_equal(to_matrix(t, sig), to_matrix(id_poly(dom), sig));
}
}  // namespace

TEST_CASE("typing of tape constructors") {
  MonSignature sig = letters();
  Monomial a{"A"};
  auto [d1, c1] = type_check_tape(tdiag(a), sig);
  CHECK(d1 == Polynomial{a});
  CHECK(c1 == Polynomial{a, a});
  Tape t = tseq(tdiag(a), toplus(tlift(cgen("c")), tlift(cgen("d"))));
  auto [d2, c2] = type_check_tape(t, sig);
  CHECK(d2 == Polynomial{a});
  CHECK(c2 == Polynomial{a, a});
  Tape o = toplus(tid(Monomial{"A", "A"}), tid0());
  auto [d3, c3] = type_check_tape(o, sig);
  CHECK(d3 == Polynomial{Monomial{"A", "A"}});
  CHECK(c3 == d3);
  CHECK_THROWS_AS(type_check_tape(tseq(tdiag(a), tdiag(a)), sig), TypeError);
  auto [d4, c4] = type_check_tape(tsymplus(a, Monomial{"A", "A"}), sig);
  CHECK(d4 == Polynomial{a, Monomial{"A", "A"}});
  CHECK(c4 == Polynomial{Monomial{"A", "A"}, a});
  CHECK(type_check_tape(tbang(a), sig).second.is_zero());
  CHECK(type_check_tape(tcobang(a), sig).first.is_zero());
}

TEST_CASE("polynomial identity and bang stacks") {
  MonSignature sig = standard_test_signature();
  Polynomial p{Monomial{"A", "B"}, Monomial(), Monomial{"C"}};
  Tape idp = id_poly(p);
  auto [d, c] = type_check_tape(idp, sig);
  CHECK(d == p);
  CHECK(c == p);
  // The stack is literally IdMon summands glued by ⊕.
  CHECK(idp->kind == TapeKind::Oplus);
  CHECK(id_poly(Polynomial())->kind == TapeKind::IdZero);
  CHECK(id_poly(Polynomial{Monomial{"A"}})->kind == TapeKind::IdMon);
  CHECK(cobang_poly(Polynomial())->kind == TapeKind::IdZero);
  CHECK(bang_poly(p)->kind != TapeKind::IdZero);
  CHECK(type_check_tape(bang_poly(p), sig).second.is_zero());
  CHECK(type_check_tape(cobang_poly(p), sig).first.is_zero());
}

TEST_CASE("diag_poly of a monomial is the generator") {
  Monomial u{"A", "B"};
  CHECK(diag_poly(Polynomial{u})->kind == TapeKind::Diag);
  CHECK(diag_poly(Polynomial())->kind == TapeKind::IdZero);
}

TEST_CASE("left distributor on a monomial head is an identity matrix") {
  MonSignature sig = standard_test_signature();
  Rand r(21);
  for (int i = 0; i < 25; ++i) {
    Monomial u = random_monomial(r, sig.sorts, 2);
    Polynomial q = random_polynomial(r, sig.sorts, 2);
    Polynomial rr = random_polynomial(r, sig.sorts, 2);
    Tape d = left_distributor(Polynomial{u}, q, rr);
    CHECK(norm_identity(d, sig));
  }
}

TEST_CASE("distributor composed with its inverse is the identity") {
  MonSignature sig = standard_test_signature();
  Rand r(22);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_polynomial(r, sig.sorts, 2);
    Polynomial q = random_polynomial(r, sig.sorts, 2);
    Polynomial rr = random_polynomial(r, sig.sorts, 2);
    Tape fwd = left_distributor(p, q, rr);
    Tape bwd = inv_left_distributor(p, q, rr);
    CHECK(norm_identity(tseq(fwd, bwd), sig));
  }
}

TEST_CASE("distributor degenerate cases") {
  MonSignature sig = standard_test_signature();
  Rand r(23);
  for (int i = 0; i < 25; ++i) {
    Polynomial p = random_polynomial(r, sig.sorts, 2);
    Polynomial q = random_polynomial(r, sig.sorts, 2);
    CHECK(norm_identity(left_distributor(p, Polynomial(), q), sig));
    CHECK(norm_identity(left_distributor(p, q, Polynomial()), sig));
  }
}

TEST_CASE("distributor respects direct sums in the head argument") {
  MonSignature sig = standard_test_signature();
  Rand r(24);
  for (int i = 0; i < 25; ++i) {
    Polynomial p = random_polynomial(r, sig.sorts, 1);
    Polynomial p2 = random_polynomial(r, sig.sorts, 1);
    Polynomial q = random_polynomial(r, sig.sorts, 1);
    Polynomial rr = random_polynomial(r, sig.sorts, 1);
    Tape lhs = left_distributor(p + p2, q, rr);
    Polynomial pq = poly_product(p, q);
    Polynomial pr = poly_product(p, rr);
    Polynomial p2q = poly_product(p2, q);
    Polynomial p2r = poly_product(p2, rr);
    Tape rhs = tseq(
        oplus_smart(left_distributor(p, q, rr),
                    left_distributor(p2, q, rr)),
        oplus_smart(oplus_smart(id_poly(pq), sym_plus_poly(pr, p2q)),
                    id_poly(p2r)));
    CHECK(norm_equal(lhs, rhs, sig));
  }
}

TEST_CASE("tensor symmetry: inverse, monomial case, and sum splitting") {
  MonSignature sig = standard_test_signature();
  Rand r(25);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = random_polynomial(r, sig.sorts, 2);
    Polynomial q = random_polynomial(r, sig.sorts, 2);
    CHECK(norm_identity(tseq(tensor_symmetry(p, q), tensor_symmetry(q, p)),
                        sig));
  }
  // σ⊗ on monomials is the lifted circuit symmetry.
  Monomial u{"A", "B"};
  Monomial v{"C"};
  Tape s = tensor_symmetry(Polynomial{u}, Polynomial{v});
  CHECK(s->kind == TapeKind::Lift);
  // σ⊗_{P,1} is the identity.
  for (int i = 0; i < 25; ++i) {
    Polynomial p = random_polynomial(r, sig.sorts, 2);
    CHECK(norm_identity(tensor_symmetry(p, poly_unit()), sig));
  }
  // σ⊗_{P,Q⊕R} = δl ; (σ⊗_{P,Q} ⊕ σ⊗_{P,R})
  for (int i = 0; i < 25; ++i) {
    Polynomial p = random_polynomial(r, sig.sorts, 1);
    Polynomial q = random_polynomial(r, sig.sorts, 1);
    Polynomial rr = random_polynomial(r, sig.sorts, 1);
    Tape lhs = tensor_symmetry(p, q + rr);
    Tape rhs = tseq(left_distributor(p, q, rr),
                    oplus_smart(tensor_symmetry(p, q),
                                tensor_symmetry(p, rr)));
    CHECK(norm_equal(lhs, rhs, sig));
  }
}

TEST_CASE("monomial whiskering clauses act on the annotations") {
  MonSignature sig = letters();
  Monomial a{"A"};
  Monomial u{"A", "A"};
  Tape lifted = tlift(cgen("c"));
  Tape rw = whisker_right(u, lifted);
  REQUIRE(rw->kind == TapeKind::Lift);
  CHECK(rw->circ->kind == CircKind::Tensor);
  CHECK(rw->circ->a->kind == CircKind::Gen);
  Tape lw = whisker_left(u, lifted);
  REQUIRE(lw->kind == TapeKind::Lift);
  CHECK(lw->circ->b->kind == CircKind::Gen);
  CHECK(whisker_left(u, tdiag(a))->u == u * a);
  CHECK(whisker_right(u, tdiag(a))->u == a * u);
  CHECK(whisker_left(u, tsymplus(a, a))->u == u * a);
  // Unit whiskering is the identity on terms (same node, not just equal).
  CHECK(whisker_left(Monomial(), lifted) == lifted);
  Tape da = tdiag(a);
  CHECK(whisker_right(Monomial(), da) == da);
}

TEST_CASE("polynomial whiskering degenerate cases") {
  MonSignature sig = letters();
  Tape t = tseq(tdiag(Monomial{"A"}),
                toplus(tlift(cgen("c")), tlift(cgen("d"))));
  CHECK(whisker_left(poly_unit(), t) == t);
  CHECK(whisker_right(poly_unit(), t, sig) == t);
  CHECK(whisker_left(Polynomial(), t)->kind == TapeKind::IdZero);
  CHECK(whisker_right(Polynomial(), t, sig)->kind == TapeKind::IdZero);
}

TEST_CASE("tensor of lifted circuits normalizes to the lifted tensor") {
  MonSignature sig = letters();
  Tape l = tlift(cgen("c"));
  Tape rr = tlift(cgen("d"));
  Tape both = tensor(l, rr, sig);
  Tape want = tlift(ctens(cgen("c"), cgen("d")));
  CHECK(norm_equal(both, want, sig));
}

TEST_CASE("tensor is unital at the unit polynomial") {
  MonSignature sig = letters();
  Tape t = tseq(tdiag(Monomial{"A"}),
                toplus(tlift(cgen("c")), tlift(cgen("d"))));
  CHECK(norm_equal(tensor(t, id_poly(poly_unit()), sig), t, sig));
  CHECK(norm_equal(tensor(id_poly(poly_unit()), t, sig), t, sig));
}

TEST_CASE("tensor is functorial") {
  MonSignature sig = standard_test_signature();
  Rand r(26);
  int done = 0;
  for (int i = 0; i < 200 && done < 60; ++i) {
    Tape t1 = random_tape(r, sig, 5);
    Tape t3 = random_tape(r, sig, 5);
    auto [p1, q1] = type_check_tape(t1, sig);
    auto [p3, q3] = type_check_tape(t3, sig);
    Tape t2 = random_tape_from(r, sig, q1, 4);
    Tape t4 = random_tape_from(r, sig, q3, 4);
    Tape lhs = tensor(tseq(t1, t2), tseq(t3, t4), sig);
    Tape rhs = tseq(tensor(t1, t3, sig), tensor(t2, t4, sig));
    CHECK(norm_equal(lhs, rhs, sig));
    ++done;
  }
  CHECK(done >= 60);
}

TEST_CASE("sums normalize to multiset union of entries") {
  MonSignature sig = letters();
  Tape c = tlift(cgen("c"));
  Tape d = tlift(cgen("d"));
  Tape ccd = sum(c, sum(c, d, sig), sig);
  TapeMatrix m = to_matrix(ccd, sig);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  std::vector<std::string> texts;
  for (const auto& cc : m.entries[0][0].circuits) texts.push_back(cc.text);
  CHECK(texts == std::vector<std::string>{"c", "c", "d"});
}

TEST_CASE("sum composition expands all nine products") {
  MonSignature sig = letters();
  auto lift = [](const char* n) { return tlift(cgen(n)); };
  Tape ccd = sum(lift("c"), sum(lift("c"), lift("d"), sig), sig);
  Tape efg = sum(lift("e"), sum(lift("f"), lift("g"), sig), sig);
  TapeMatrix m = to_matrix(tseq(ccd, efg), sig);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  CHECK(m.entries[0][0].circuits.size() == 9);
  int with_c = 0, with_d = 0;
  for (const auto& cc : m.entries[0][0].circuits) {
    if (cc.text.find("c ;") == 0) ++with_c;
    if (cc.text.find("d ;") == 0) ++with_d;
  }
  CHECK(with_c == 6);
  CHECK(with_d == 3);
}

TEST_CASE("sum is a commutative monoid up to normal form") {
  MonSignature sig = standard_test_signature();
  Rand r(27);
  int done = 0;
  for (int i = 0; i < 1500 && done < 40; ++i) {
    Tape t = random_tape(r, sig, 5);
    auto [p, q] = type_check_tape(t, sig);
    Tape s = random_tape_from(r, sig, p, 4);
    if (type_check_tape(s, sig).second != q) continue;
    Tape u = random_tape_from(r, sig, p, 4);
    if (type_check_tape(u, sig).second != q) continue;
    CHECK(norm_equal(sum(t, s, sig), sum(s, t, sig), sig));
    CHECK(norm_equal(sum(sum(t, s, sig), u, sig),
                     sum(t, sum(s, u, sig), sig), sig));
    CHECK(norm_equal(sum(t, zero(p, q), sig), t, sig));
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("composition distributes over sum") {
  MonSignature sig = standard_test_signature();
  Rand r(28);
  int done = 0;
  for (int i = 0; i < 300 && done < 40; ++i) {
    Tape t1 = random_tape(r, sig, 4);
    auto [p, q] = type_check_tape(t1, sig);
    Tape t2 = random_tape_from(r, sig, p, 4);
    if (type_check_tape(t2, sig).second != q) continue;
    Tape s = random_tape_from(r, sig, q, 4);
    Tape lhs = tseq(sum(t1, t2, sig), s);
    Tape rhs = sum(tseq(t1, s), tseq(t2, s), sig);
    CHECK(norm_equal(lhs, rhs, sig));
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("zero annihilates composition") {
  MonSignature sig = standard_test_signature();
  Rand r(29);
  for (int i = 0; i < 20; ++i) {
    Tape t = random_tape(r, sig, 5);
    auto [p, q] = type_check_tape(t, sig);
    Polynomial z = random_polynomial(r, sig.sorts, 2);
    CHECK(norm_equal(tseq(t, zero(q, z)), zero(p, z), sig));
  }
}

TEST_CASE("polynomial Frobenius structure types") {
  MonSignature sig = letters();
  sig.frobenius_enabled = true;
  Polynomial ab{Monomial{"A"}, Monomial{"A", "A"}};
  auto [d, c] = type_check_tape(copier_poly(ab), sig);
  CHECK(d == ab);
  CHECK(c == poly_product(ab, ab));
  auto [dd, cd] = type_check_tape(discharger_poly(ab), sig);
  CHECK(dd == ab);
  CHECK(cd == poly_unit());
  auto [dc2, cc2] = type_check_tape(cocopier_poly(ab), sig);
  CHECK(dc2 == poly_product(ab, ab));
  CHECK(cc2 == ab);
  auto [dcd, ccd] = type_check_tape(codischarger_poly(ab), sig);
  CHECK(dcd == poly_unit());
  CHECK(ccd == ab);

  CHECK(copier_poly(Polynomial())->kind == TapeKind::IdZero);
  CHECK(discharger_poly(Polynomial())->kind == TapeKind::Cobang);
  Tape mono = copier_poly(Polynomial{Monomial{"A", "A"}});
  CHECK(mono->kind == TapeKind::Lift);
}

TEST_CASE("polynomial copier laws under the normal form") {
  MonSignature sig = letters();
  sig.frobenius_enabled = true;
  Rand r(30);
  for (int i = 0; i < 12; ++i) {
    Polynomial p = random_polynomial(r, sig.sorts, 2);
    // Counit: ◁ ; (! ⊗ id) = id, stated via the normal form.
    Tape lhs = tseq(copier_poly(p),
                    tensor(discharger_poly(p), id_poly(p), sig));
    CHECK(norm_identity(lhs, sig));
    // Special: ◁ ; ▷ = id.
    CHECK(norm_identity(tseq(copier_poly(p), cocopier_poly(p)), sig));
  }
}
