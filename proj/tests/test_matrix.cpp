#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "tapes/matrix.hpp"
#include "tapes/rand.hpp"

using namespace tapes;

namespace {
MonSignature letters() {
  MonSignature s;
  s.sorts = {"A"};
  for (const char* n : {"c", "d", "e", "c'", "d'", "e'"})
    s.generators.push_back({n, Monomial{"A"}, Monomial{"A"}});
  return s;
}

/** Matrix over single-sort words built from a table of generator names. */
TapeMatrix table_matrix(const std::vector<std::vector<std::vector<std::string>>>& rows,
                        const Polynomial& dom, const Polynomial& cod,
                        const MonSignature& sig) {
  TapeMatrix m;
  m.dom = dom;
  m.cod = cod;
  m.mode = Mode::MULTISET;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    m.entries.emplace_back();
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      std::vector<Circuit> cs;
      for (const std::string& n : rows[j][i]) cs.push_back(cgen(n));
      m.entries[j].push_back(make_entry(dom.monomials[i], cod.monomials[j],
                                        cs, sig, Mode::MULTISET));
    }
  }
  return m;
}
}  // namespace

TEST_CASE("structural tapes normalize to their defining matrices") {
  MonSignature sig = letters();
  Monomial a{"A"};

  TapeMatrix idm = to_matrix(tid(a), sig);
  REQUIRE(idm.rows() == 1);
  CHECK(idm.entries[0][0].circuits.size() == 1);
  CHECK(idm.entries[0][0].circuits[0].text == "id(A)");

  TapeMatrix sym = to_matrix(tsymplus(a, a), sig);
  REQUIRE(sym.rows() == 2);
  CHECK(sym.entries[0][0].empty());
  CHECK(sym.entries[0][1].circuits.size() == 1);
  CHECK(sym.entries[1][0].circuits.size() == 1);
  CHECK(sym.entries[1][1].empty());

  TapeMatrix dg = to_matrix(tdiag(a), sig);
  REQUIRE(dg.rows() == 2);
  REQUIRE(dg.cols() == 1);
  CHECK(dg.entries[0][0].circuits.size() == 1);
  CHECK(dg.entries[1][0].circuits.size() == 1);

  TapeMatrix bg = to_matrix(tbang(a), sig);
  CHECK(bg.rows() == 0);
  CHECK(bg.cols() == 1);
  TapeMatrix z = to_matrix(tid0(), sig);
  CHECK(z.rows() == 0);
  CHECK(z.cols() == 0);
}

TEST_CASE("composition multiplies matrices over the multiset semiring") {
  MonSignature sig = letters();
  Monomial a{"A"};
  Tape two = tseq(tdiag(a), toplus(tlift(cgen("c")), tlift(cgen("d"))));
  Tape merged = tseq(two, tcodiag(a));
  TapeMatrix m = to_matrix(merged, sig);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  std::vector<std::string> texts;
  for (const auto& cc : m.entries[0][0].circuits) texts.push_back(cc.text);
  CHECK(texts == std::vector<std::string>{"c", "d"});
}

TEST_CASE("the two-by-two example matrices round-trip through tapes") {
  MonSignature sig = letters();
  Monomial a{"A"};
  Polynomial aa{a, a};
  TapeMatrix ft = table_matrix(
      {{{"d", "e"}, {"c", "d", "e"}}, {{"d"}, {"c", "d"}}}, aa, aa, sig);
  TapeMatrix fs = table_matrix(
      {{{"c'", "d'"}, {"d'"}}, {{"c'", "d'", "e'"}, {"d'", "e'"}}}, aa, aa,
      sig);
  Tape t = from_matrix(ft);
  Tape s = from_matrix(fs);
  CHECK(matrix_equal(to_matrix(t, sig), ft));
  CHECK(matrix_equal(to_matrix(s, sig), fs));

  // t then s: entry (j,i) = sum over k of ft[k][i] ; fs[j][k].
  TapeMatrix comp = mat_compose(ft, fs, sig);
  CHECK(matrix_equal(to_matrix(tseq(t, s), sig), comp));
  // Entry (1,1) sums over the middle index: {d,e};{c',d'} contributes 2*2
  // terms and {d};{d'} contributes 1*1, so 5 in total.
  CHECK(comp.entries[0][0].circuits.size() == 5);
}

TEST_CASE("Kronecker product against the hand-expanded four-by-four table") {
  MonSignature sig = letters();
  Monomial a{"A"};
  Polynomial aa{a, a};
  std::vector<std::vector<std::vector<std::string>>> t_tab{
      {{"d", "e"}, {"c", "d", "e"}}, {{"d"}, {"c", "d"}}};
  std::vector<std::vector<std::vector<std::string>>> s_tab{
      {{"c'", "d'"}, {"d'"}}, {{"c'", "d'", "e'"}, {"d'", "e'"}}};
  TapeMatrix ft = table_matrix(t_tab, aa, aa, sig);
  TapeMatrix fs = table_matrix(s_tab, aa, aa, sig);

  TapeMatrix kron = mat_kron(ft, fs, sig);
  REQUIRE(kron.rows() == 4);
  REQUIRE(kron.cols() == 4);
  CHECK(kron.dom == poly_product(aa, aa));

  // Expected entries: ((jm,jn),(im,in)) = all x⊗y with x from t's entry and
  // y from s's entry, rows and columns in i-major order.
  for (int jm = 0; jm < 2; ++jm)
    for (int jn = 0; jn < 2; ++jn)
      for (int im = 0; im < 2; ++im)
        for (int in = 0; in < 2; ++in) {
          std::vector<Circuit> want;
          for (const std::string& x : t_tab[jm][im])
            for (const std::string& y : s_tab[jn][in])
              want.push_back(ctens(cgen(x), cgen(y)));
          MonomialEntry we = make_entry(Monomial{"A", "A"}, Monomial{"A", "A"},
                                        want, sig, Mode::MULTISET);
          const MonomialEntry& got = kron.entries[jm * 2 + jn][im * 2 + in];
          REQUIRE(got.circuits.size() == we.circuits.size());
          for (std::size_t k = 0; k < we.circuits.size(); ++k)
            CHECK(got.circuits[k].key == we.circuits[k].key);
        }

  // The full pipeline: tensor of the tapes normalizes to the same matrix.
  Tape t = from_matrix(ft);
  Tape s = from_matrix(fs);
  CHECK(matrix_equal(to_matrix(tensor(t, s, sig), sig), kron));
}

TEST_CASE("normalization is the inverse of matrix expansion") {
  MonSignature chain = chain_signature();
  Rand r(41);
  for (int i = 0; i < 60; ++i) {
    TapeMatrix m = random_matrix(r, chain, 3);
    CHECK(matrix_equal(to_matrix(from_matrix(m), chain), m));
  }
}

TEST_CASE("expansion is a section on normalized tapes") {
  MonSignature sig = standard_test_signature();
  Rand r(42);
  for (int i = 0; i < 60; ++i) {
    Tape t = random_tape(r, sig, 6);
    TapeMatrix m = to_matrix(t, sig);
    CHECK(matrix_equal(to_matrix(from_matrix(m), sig), m));
  }
}

TEST_CASE("Kronecker agrees with tensor on random tapes") {
  MonSignature sig = standard_test_signature();
  Rand r(43);
  for (int i = 0; i < 40; ++i) {
    Tape t = random_tape(r, sig, 5);
    Tape s = random_tape(r, sig, 5);
    CHECK(matrix_equal(to_matrix(tensor(t, s, sig), sig),
                       mat_kron(to_matrix(t, sig), to_matrix(s, sig), sig)));
  }
}

TEST_CASE("matrix direct sum is block diagonal") {
  MonSignature sig = letters();
  Monomial a{"A"};
  TapeMatrix m = to_matrix(toplus(tlift(cgen("c")), tdiag(a)), sig);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 2);
  CHECK(m.entries[0][0].circuits.size() == 1);
  CHECK(m.entries[0][1].empty());
  CHECK(m.entries[1][0].empty());
  CHECK(m.entries[1][1].circuits.size() == 1);
  CHECK(m.entries[2][1].circuits.size() == 1);
}

TEST_CASE("entries by index agree with entries by projection") {
  MonSignature sig = standard_test_signature();
  Rand r(44);
  for (int i = 0; i < 25; ++i) {
    Tape t = random_tape(r, sig, 5);
    TapeMatrix m = to_matrix(t, sig);
    for (std::size_t j = 1; j <= m.rows(); ++j)
      for (std::size_t i2 = 1; i2 <= m.cols(); ++i2) {
        MonomialEntry a = entry(t, j, i2, sig);
        MonomialEntry b = entry_by_projection(t, j, i2, sig);
        REQUIRE(a.circuits.size() == b.circuits.size());
        for (std::size_t k = 0; k < a.circuits.size(); ++k)
          CHECK(a.circuits[k].key == b.circuits[k].key);
      }
  }
}

TEST_CASE("entry bounds are reported") {
  MonSignature sig = letters();
  Tape t = tdiag(Monomial{"A"});
  CHECK_THROWS_AS(entry(t, 3, 1, sig), Error);
  CHECK_THROWS_AS(entry(t, 0, 1, sig), Error);
}

TEST_CASE("set mode collapses duplicate entries") {
  MonSignature sig = letters();
  Tape c = tlift(cgen("c"));
  Tape cc = sum(c, c, sig);
  TapeMatrix multi = to_matrix(cc, sig, Mode::MULTISET);
  CHECK(multi.entries[0][0].circuits.size() == 2);
  TapeMatrix once = to_matrix(cc, sig, Mode::SET);
  CHECK(once.entries[0][0].circuits.size() == 1);
}

TEST_CASE("cb mode prunes dominated disjuncts") {
  MonSignature sig = letters();
  sig.frobenius_enabled = true;
  // c ∩ c (via copier/cocopier) is dominated by c itself.
  Circuit meet = cseq(cseq(ccopier("A"), ctens(cgen("c"), cgen("c"))),
                      ccocopier("A"));
  Tape both = sum(tlift(cgen("c")), tlift(meet), sig);
  TapeMatrix m = to_matrix(both, sig, Mode::CB);
  REQUIRE(m.entries[0][0].circuits.size() == 1);
  CHECK(m.entries[0][0].circuits[0].text == "c");
}

TEST_CASE("pretty and json rendering carry the dimensions") {
  MonSignature sig = letters();
  Tape t = tseq(tdiag(Monomial{"A"}),
                toplus(tlift(cgen("c")), tlift(cgen("d"))));
  TapeMatrix m = to_matrix(t, sig);
  std::string p = pretty(m);
  CHECK(p.find("2x1") != std::string::npos);
  std::string j = to_json(m);
  CHECK(j.find("\"mode\"") != std::string::npos);
  CHECK(j.find("multiset") != std::string::npos);
}
