#include "tapes/selftest.hpp"

#include <string>

#include "tapes/matrix.hpp"
#include "tapes/order.hpp"
#include "tapes/rand.hpp"
#include "tapes/rel.hpp"

namespace tapes {

namespace {
struct Reporter {
  std::ostream& out;
  bool all_ok = true;
  void check(const std::string& name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) all_ok = false;
  }
};
}  // namespace

bool run_selftest(std::uint64_t seed, std::ostream& out) {
  Reporter rep{out};
  MonSignature sig = standard_test_signature();
  Rand r(seed);

  {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      Tape t = random_tape(r, sig, 6);
      auto [p, q] = type_check_tape(t, sig);
      Polynomial s = random_polynomial(r, sig.sorts, 3);
      TapeMatrix lhs = to_matrix(whisker_left(s, tseq(t, id_poly(q))), sig);
      TapeMatrix rhs =
          mat_compose(to_matrix(whisker_left(s, t), sig),
                      to_matrix(whisker_left(s, id_poly(q)), sig), sig);
      ok = matrix_equal(lhs, rhs);
    }
    rep.check("whiskering distributes over composition", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      Monomial u = random_monomial(r, sig.sorts, 3);
      Tape lhs = tseq(tdiag(u), oplus_smart(tbang(u), tid(u)));
      ok = matrix_equal(to_matrix(lhs, sig), to_matrix(tid(u), sig));
    }
    rep.check("diagonal counit law", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      Tape t = random_tape(r, sig, 6);
      TapeMatrix m = to_matrix(t, sig);
      ok = matrix_equal(to_matrix(from_matrix(m), sig), m);
    }
    rep.check("normal form is a retract of tapes", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
      Tape t = random_tape(r, sig, 5);
      Tape s = random_tape(r, sig, 5);
      TapeMatrix lhs = to_matrix(tensor(t, s, sig), sig);
      TapeMatrix rhs = mat_kron(to_matrix(t, sig), to_matrix(s, sig), sig);
      ok = matrix_equal(lhs, rhs);
    }
    rep.check("tensor normalizes to the Kronecker product", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
      Tape t = random_tape(r, sig, 5);
      Interpretation in;
      for (const Sort& s : sig.sorts) in.carrier[s] = 2;
      // Pin every generator to a fixed small relation derived from the seed.
      for (const Generator& g : sig.generators) {
        auto& prs = in.relations[g.name];
        Space d = make_space(Polynomial(g.arity), in);
        Space c = make_space(Polynomial(g.coarity), in);
        for (long long x = 0; x < d.total; ++x)
          for (long long y = 0; y < c.total; ++y)
            if (r.chance(0.4))
              prs.emplace_back(tuple_of(d, x, in).values,
                               tuple_of(c, y, in).values);
      }
      FiniteRelation direct = eval_tape(t, in, sig);
      FiniteRelation via = eval_tape(from_matrix(to_matrix(t, sig)), in, sig);
      ok = rel_equal(direct, via);
    }
    rep.check("semantics is invariant under normalization", ok);
  }
  {
    MonSignature rsig;
    rsig.sorts = {"X"};
    rsig.generators = {{"R", Monomial({"X"}), Monomial({"X"})},
                       {"S", Monomial({"X"}), Monomial({"X"})}};
    CrExpr e1 = parse_cr("R ; (R | S)", rsig);
    CrExpr e2 = parse_cr("R;R | R;S", rsig);
    Verdict v = decide_equiv(e1, e2, rsig);
    rep.check("composition distributes over union", v.holds);
    CrExpr l = parse_cr("(R;R) & (R;S)", rsig);
    CrExpr rr = parse_cr("R ; (R & S)", rsig);
    Verdict w = decide_leq(l, rr, rsig);
    rep.check("strict converse of the lax law is rejected",
              !w.holds && w.counterexample.has_value());
  }

  out << (rep.all_ok ? "selftest: all checks passed\n"
                     : "selftest: FAILURES above\n");
  return rep.all_ok;
}

}  // namespace tapes
