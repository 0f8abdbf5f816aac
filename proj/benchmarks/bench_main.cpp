#include <benchmark/benchmark.h>

#include <vector>

#include "tapes/circuit.hpp"
#include "tapes/cr.hpp"
#include "tapes/hypergraph.hpp"
#include "tapes/matrix.hpp"
#include "tapes/order.hpp"
#include "tapes/rand.hpp"
#include "tapes/rel.hpp"
#include "tapes/tape.hpp"

using namespace tapes;

/** Normalization of random tapes; the range is the constructor budget. */
static void BM_ToMatrix(benchmark::State& state) {
  MonSignature sig = standard_test_signature(false);
  Rand r(1);
  std::vector<Tape> tapes;
  for (int i = 0; i < 32; ++i)
    tapes.push_back(random_tape(r, sig, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        to_matrix(tapes[i++ % tapes.size()], sig, Mode::MULTISET));
  }
}
BENCHMARK(BM_ToMatrix)->Arg(4)->Arg(8)->Arg(12);

/** Matrix product and Kronecker product of two composable normal forms. */
static void BM_MatCompose(benchmark::State& state) {
  MonSignature sig = chain_signature(false);
  Rand r(2);
  TapeMatrix m = random_matrix(r, sig, static_cast<int>(state.range(0)));
  TapeMatrix n =
      to_matrix(random_tape_from(r, sig, m.cod, 6), sig, Mode::MULTISET);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_compose(m, n, sig));
    benchmark::DoNotOptimize(mat_kron(m, n, sig));
  }
}
BENCHMARK(BM_MatCompose)->Arg(2)->Arg(3);

/** Canonical form of random circuits, the inner-layer hot path. */
static void BM_CanonicalKey(benchmark::State& state) {
  MonSignature sig = standard_test_signature(true);
  Rand r(3);
  std::vector<Circuit> cs;
  for (int i = 0; i < 64; ++i) {
    Monomial u = random_monomial(r, sig.sorts, 2);
    cs.push_back(random_circuit_from(r, sig, u,
                                     static_cast<int>(state.range(0))));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const Circuit& c = cs[i++ % cs.size()];
    benchmark::DoNotOptimize(canonical_key(to_hypergraph(c, sig)));
  }
}
BENCHMARK(BM_CanonicalKey)->Arg(3)->Arg(6)->Arg(9);

/** Order queries that search for a hypergraph homomorphism. */
static void BM_CircuitOrder(benchmark::State& state) {
  MonSignature sig = standard_test_signature(true);
  Rand r(4);
  std::vector<std::pair<Circuit, Circuit>> pairs;
  for (int i = 0; i < 32; ++i) {
    Monomial u = random_monomial(r, sig.sorts, 2);
    Circuit d = random_circuit_from(r, sig, u,
                                    static_cast<int>(state.range(0)));
    auto [du, dv] = type_check_circuit(d, sig);
    Circuit c = cseq(cseq(word_copier(du), ctens(d, d)), word_cocopier(dv));
    pairs.emplace_back(c, d);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [c, d] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(cb_leq(c, d, sig));
  }
}
BENCHMARK(BM_CircuitOrder)->Arg(3)->Arg(5);

/** Full decision of a valid relation-calculus equivalence. */
static void BM_DecideEquiv(benchmark::State& state) {
  MonSignature sig;
  sig.sorts = {"X"};
  for (const char* n : {"R", "S", "T"})
    sig.generators.push_back({n, Monomial("X"), Monomial("X")});
  sig.frobenius_enabled = true;
  CrExpr R = cr_rel("R"), S = cr_rel("S"), T = cr_rel("T");
  CrExpr lhs = cr_seq(R, cr_union(S, T));
  CrExpr rhs = cr_union(cr_seq(R, S), cr_seq(R, T));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_equiv(lhs, rhs, sig));
  }
}
BENCHMARK(BM_DecideEquiv);

/** Relational evaluation of an encoded expression on a small model. */
static void BM_EvalEncoded(benchmark::State& state) {
  MonSignature sig;
  sig.sorts = {"X"};
  for (const char* n : {"R", "S"})
    sig.generators.push_back({n, Monomial("X"), Monomial("X")});
  sig.frobenius_enabled = true;
  CrExpr e = cr_inter(cr_seq(cr_rel("R"), cr_rel("S")),
                      cr_op(cr_union(cr_rel("R"), cr_top())));
  Tape enc = encode(e, sig);
  Interpretation in;
  in.carrier["X"] = static_cast<int>(state.range(0));
  for (int a = 0; a < in.carrier["X"]; ++a) {
    in.relations["R"].push_back({{a}, {(a + 1) % in.carrier["X"]}});
    in.relations["S"].push_back({{a}, {a}});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_tape(enc, in, sig));
  }
}
BENCHMARK(BM_EvalEncoded)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
