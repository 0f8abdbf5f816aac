#include "tapes/tape.hpp"

#include <cassert>

namespace tapes {

namespace {
Tape node(TapeKind k, Monomial u = {}, Monomial v = {}, Circuit c = nullptr,
          Tape a = nullptr, Tape b = nullptr) {
  auto n = std::make_shared<TapeNode>();
  n->kind = k;
  n->u = std::move(u);
  n->v = std::move(v);
  n->circ = std::move(c);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

Monomial tail(const Monomial& u) {
  return Monomial(std::vector<Sort>(u.sorts.begin() + 1, u.sorts.end()));
}

Polynomial tail(const Polynomial& p) {
  return Polynomial(
      std::vector<Monomial>(p.monomials.begin() + 1, p.monomials.end()));
}

Polynomial mono_poly(const Monomial& u) { return Polynomial(u); }
}  // namespace

Tape tid(const Monomial& u) { return node(TapeKind::IdMon, u); }
Tape tid0() { return node(TapeKind::IdZero); }
Tape tlift(Circuit c) {
  return node(TapeKind::Lift, {}, {}, std::move(c));
}
Tape tsymplus(const Monomial& u, const Monomial& v) {
  return node(TapeKind::SymPlus, u, v);
}
Tape tseq(Tape a, Tape b) {
  return node(TapeKind::Seq, {}, {}, nullptr, std::move(a), std::move(b));
}
Tape toplus(Tape a, Tape b) {
  return node(TapeKind::Oplus, {}, {}, nullptr, std::move(a), std::move(b));
}
Tape tbang(const Monomial& u) { return node(TapeKind::Bang, u); }
Tape tdiag(const Monomial& u) { return node(TapeKind::Diag, u); }
Tape tcobang(const Monomial& u) { return node(TapeKind::Cobang, u); }
Tape tcodiag(const Monomial& u) { return node(TapeKind::Codiag, u); }

Tape oplus_smart(Tape a, Tape b) {
  if (a->kind == TapeKind::IdZero) return b;
  if (b->kind == TapeKind::IdZero) return a;
  return toplus(std::move(a), std::move(b));
}

Tape oplus_fold(const std::vector<Tape>& ts) {
  Tape r = tid0();
  for (const Tape& t : ts) r = oplus_smart(r, t);
  return r;
}

std::pair<Polynomial, Polynomial> type_check_tape(const Tape& t,
                                                  const MonSignature& sig) {
  if (!t) throw TypeError("null tape");
  switch (t->kind) {
    case TapeKind::IdMon:
      return {mono_poly(t->u), mono_poly(t->u)};
    case TapeKind::IdZero:
      return {Polynomial(), Polynomial()};
    case TapeKind::Lift: {
      auto [d, c] = type_check_circuit(t->circ, sig);
      return {mono_poly(d), mono_poly(c)};
    }
    case TapeKind::SymPlus:
      return {mono_poly(t->u) + mono_poly(t->v),
              mono_poly(t->v) + mono_poly(t->u)};
    case TapeKind::Seq: {
      auto [da, ca] = type_check_tape(t->a, sig);
      auto [db, cb] = type_check_tape(t->b, sig);
      if (ca != db)
        throw TypeError("tape composition mismatch: '" + to_text(ca) +
                        "' vs '" + to_text(db) + "'");
      return {da, cb};
    }
    case TapeKind::Oplus: {
      auto [da, ca] = type_check_tape(t->a, sig);
      auto [db, cb] = type_check_tape(t->b, sig);
      return {da + db, ca + cb};
    }
    case TapeKind::Bang:
      return {mono_poly(t->u), Polynomial()};
    case TapeKind::Diag:
      return {mono_poly(t->u), mono_poly(t->u) + mono_poly(t->u)};
    case TapeKind::Cobang:
      return {Polynomial(), mono_poly(t->u)};
    case TapeKind::Codiag:
      return {mono_poly(t->u) + mono_poly(t->u), mono_poly(t->u)};
  }
  throw TypeError("malformed tape node");
}

Tape id_poly(const Polynomial& p) {
  if (p.is_zero()) return tid0();
  Tape r = tid(p.monomials[0]);
  for (std::size_t i = 1; i < p.size(); ++i) r = toplus(r, tid(p.monomials[i]));
  return r;
}

namespace {
/** σ⊕ between a single monomial and a polynomial: U⊕Q → Q⊕U. */
Tape sym_mono_poly(const Monomial& u, const Polynomial& q) {
  if (q.is_zero()) return tid(u);
  // (σ⊕_{U,V} ⊕ id_Q') ; (id_V ⊕ σ⊕_{U,Q'})
  const Monomial& v = q.monomials[0];
  Polynomial rest = tail(q);
  if (rest.is_zero()) return tsymplus(u, v);
  return tseq(toplus(tsymplus(u, v), id_poly(rest)),
              toplus(tid(v), sym_mono_poly(u, rest)));
}
}  // namespace

Tape sym_plus_poly(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return id_poly(q);
  if (q.is_zero()) return id_poly(p);
  const Monomial& u = p.monomials[0];
  Polynomial rest = tail(p);
  if (rest.is_zero()) return sym_mono_poly(u, q);
  // (id_U ⊕ σ⊕_{P',Q}) ; (σ⊕_{U,Q} ⊕ id_P')
  return tseq(toplus(tid(u), sym_plus_poly(rest, q)),
              toplus(sym_mono_poly(u, q), id_poly(rest)));
}

Tape diag_poly(const Polynomial& p) {
  if (p.is_zero()) return tid0();
  const Monomial& u = p.monomials[0];
  Polynomial rest = tail(p);
  if (rest.is_zero()) return tdiag(u);
  // (◁_U ⊕ ◁_P') ; (id_U ⊕ σ⊕_{U,P'} ⊕ id_P')
  return tseq(toplus(tdiag(u), diag_poly(rest)),
              toplus(toplus(tid(u), sym_mono_poly(u, rest)), id_poly(rest)));
}

Tape bang_poly(const Polynomial& p) {
  if (p.is_zero()) return tid0();
  Tape r = tbang(p.monomials[0]);
  for (std::size_t i = 1; i < p.size(); ++i)
    r = toplus(r, tbang(p.monomials[i]));
  return r;
}

Tape codiag_poly(const Polynomial& p) {
  if (p.is_zero()) return tid0();
  const Monomial& u = p.monomials[0];
  Polynomial rest = tail(p);
  if (rest.is_zero()) return tcodiag(u);
  // (id_U ⊕ σ⊕_{P',U} ⊕ id_P') ; (▷_U ⊕ ▷_P')
  return tseq(toplus(toplus(tid(u), sym_plus_poly(rest, mono_poly(u))),
                     id_poly(rest)),
              toplus(tcodiag(u), codiag_poly(rest)));
}

Tape cobang_poly(const Polynomial& p) {
  if (p.is_zero()) return tid0();
  Tape r = tcobang(p.monomials[0]);
  for (std::size_t i = 1; i < p.size(); ++i)
    r = toplus(r, tcobang(p.monomials[i]));
  return r;
}

Tape gen_diag(const Monomial& u, std::size_t m) {
  if (m == 0) return tbang(u);
  if (m == 1) return tid(u);
  return tseq(tdiag(u), toplus(tid(u), gen_diag(u, m - 1)));
}

Tape gen_codiag(const Polynomial& q, std::size_t n) {
  if (n == 0) return cobang_poly(q);
  if (n == 1) return id_poly(q);
  return tseq(oplus_smart(id_poly(q), gen_codiag(q, n - 1)), codiag_poly(q));
}

Tape left_distributor(const Polynomial& p, const Polynomial& q,
                      const Polynomial& r) {
  if (p.is_zero()) return tid0();
  const Monomial& u = p.monomials[0];
  Polynomial rest = tail(p);
  Polynomial qr = q + r;
  if (rest.is_zero()) {
    // δl_{U,Q,R} is an identity on U⊗(Q⊕R).
    return id_poly(poly_product(mono_poly(u), qr));
  }
  // (id_{U⊗(Q⊕R)} ⊕ δl_{P',Q,R}) ;
  // (id_{U⊗Q} ⊕ σ⊕_{U⊗R, P'⊗Q} ⊕ id_{P'⊗R})
  Polynomial uq = poly_product(mono_poly(u), q);
  Polynomial ur = poly_product(mono_poly(u), r);
  Polynomial pq = poly_product(rest, q);
  Polynomial pr = poly_product(rest, r);
  return tseq(
      oplus_smart(id_poly(poly_product(mono_poly(u), qr)),
                  left_distributor(rest, q, r)),
      oplus_smart(oplus_smart(id_poly(uq), sym_plus_poly(ur, pq)),
                  id_poly(pr)));
}

namespace {
/** Structural reverse of the iso sub-language the distributors live in:
 * identities, σ⊕, ⊕ and ;. */
Tape reverse_iso(const Tape& t) {
  switch (t->kind) {
    case TapeKind::IdMon:
    case TapeKind::IdZero:
      return t;
    case TapeKind::SymPlus:
      return tsymplus(t->v, t->u);
    case TapeKind::Seq:
      return tseq(reverse_iso(t->b), reverse_iso(t->a));
    case TapeKind::Oplus:
      return toplus(reverse_iso(t->a), reverse_iso(t->b));
    default:
      break;
  }
  assert(false && "reverse_iso outside the distributor sub-language");
  return t;
}
}  // namespace

Tape inv_left_distributor(const Polynomial& p, const Polynomial& q,
                          const Polynomial& r) {
  return reverse_iso(left_distributor(p, q, r));
}

Tape tensor_symmetry(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) return tid0();
  const Monomial& v = q.monomials[0];
  Polynomial rest = tail(q);
  // δl_{P,V,Q'} ; ((⊞_i ⌊σ_{U_i,V}⌋) ⊕ σ⊗_{P,Q'})
  std::vector<Tape> blocks;
  for (const Monomial& u : p.monomials)
    blocks.push_back(tlift(word_symmetry(u, v)));
  Tape head = oplus_fold(blocks);
  if (rest.is_zero()) return head;  // the distributor is an identity here
  return tseq(left_distributor(p, mono_poly(v), rest),
              oplus_smart(head, tensor_symmetry(p, rest)));
}

Tape whisker_left(const Monomial& u, const Tape& t) {
  if (u.is_unit()) return t;
  switch (t->kind) {
    case TapeKind::IdMon:
      return tid(u * t->u);
    case TapeKind::IdZero:
      return tid0();
    case TapeKind::Lift:
      return tlift(ctens(cid_word(u), t->circ));
    case TapeKind::SymPlus:
      return tsymplus(u * t->u, u * t->v);
    case TapeKind::Seq:
      return tseq(whisker_left(u, t->a), whisker_left(u, t->b));
    case TapeKind::Oplus:
      return toplus(whisker_left(u, t->a), whisker_left(u, t->b));
    case TapeKind::Bang:
      return tbang(u * t->u);
    case TapeKind::Diag:
      return tdiag(u * t->u);
    case TapeKind::Cobang:
      return tcobang(u * t->u);
    case TapeKind::Codiag:
      return tcodiag(u * t->u);
  }
  throw TypeError("malformed tape node");
}

Tape whisker_right(const Monomial& u, const Tape& t) {
  if (u.is_unit()) return t;
  switch (t->kind) {
    case TapeKind::IdMon:
      return tid(t->u * u);
    case TapeKind::IdZero:
      return tid0();
    case TapeKind::Lift:
      return tlift(ctens(t->circ, cid_word(u)));
    case TapeKind::SymPlus:
      return tsymplus(t->u * u, t->v * u);
    case TapeKind::Seq:
      return tseq(whisker_right(u, t->a), whisker_right(u, t->b));
    case TapeKind::Oplus:
      return toplus(whisker_right(u, t->a), whisker_right(u, t->b));
    case TapeKind::Bang:
      return tbang(t->u * u);
    case TapeKind::Diag:
      return tdiag(t->u * u);
    case TapeKind::Cobang:
      return tcobang(t->u * u);
    case TapeKind::Codiag:
      return tcodiag(t->u * u);
  }
  throw TypeError("malformed tape node");
}

Tape whisker_left(const Polynomial& s, const Tape& t) {
  if (s.is_zero()) return tid0();
  const Monomial& w = s.monomials[0];
  Polynomial rest = tail(s);
  if (rest.is_zero()) return whisker_left(w, t);
  return toplus(whisker_left(w, t), whisker_left(rest, t));
}

Tape whisker_right(const Polynomial& s, const Tape& t,
                   const MonSignature& sig) {
  if (s.is_zero()) return tid0();
  const Monomial& w = s.monomials[0];
  Polynomial rest = tail(s);
  if (rest.is_zero()) return whisker_right(w, t);
  // δl_{P,W,S'} ; (R_W(t) ⊕ R_{S'}(t)) ; δl⁻¹_{Q,W,S'}
  auto [p, q] = type_check_tape(t, sig);
  return tseq(
      tseq(left_distributor(p, mono_poly(w), rest),
           toplus(whisker_right(w, t), whisker_right(rest, t, sig))),
      inv_left_distributor(q, mono_poly(w), rest));
}

Tape tensor(const Tape& t1, const Tape& t2, const MonSignature& sig) {
  auto [p1, q1] = type_check_tape(t1, sig);
  auto [p2, q2] = type_check_tape(t2, sig);
  (void)q1;
  (void)p2;
  return tseq(whisker_left(p1, t2), whisker_right(q2, t1, sig));
}

Tape sum(const Tape& t1, const Tape& t2, const MonSignature& sig) {
  auto [p, q] = type_check_tape(t1, sig);
  auto [p2, q2] = type_check_tape(t2, sig);
  if (p != p2 || q != q2)
    throw TypeError("sum: operand types differ: '" + to_text(p) + " -> " +
                    to_text(q) + "' vs '" + to_text(p2) + " -> " +
                    to_text(q2) + "'");
  return tseq(tseq(diag_poly(p), toplus(t1, t2)), codiag_poly(q));
}

Tape zero(const Polynomial& p, const Polynomial& q) {
  return tseq(bang_poly(p), cobang_poly(q));
}

Tape copier_poly(const Polynomial& p) {
  if (p.is_zero()) return tid0();
  const Monomial& u = p.monomials[0];
  Polynomial rest = tail(p);
  if (rest.is_zero()) return tlift(word_copier(u));
  // ⌊◁_U⌋ ⊕ ¡_{U⊗P'} ⊕ ((¡_{P'⊗U} ⊕ ◁_{P'}) ; δl⁻¹_{P',U,P'})
  Polynomial up = poly_product(mono_poly(u), rest);
  Polynomial pu = poly_product(rest, mono_poly(u));
  Tape third = tseq(oplus_smart(cobang_poly(pu), copier_poly(rest)),
                    inv_left_distributor(rest, mono_poly(u), rest));
  return toplus(toplus(tlift(word_copier(u)), cobang_poly(up)), third);
}

Tape discharger_poly(const Polynomial& p) {
  if (p.is_zero()) return tcobang(Monomial());  // 0 → 𝟙
  const Monomial& u = p.monomials[0];
  Polynomial rest = tail(p);
  if (rest.is_zero()) return tlift(word_discharger(u));
  return tseq(toplus(tlift(word_discharger(u)), discharger_poly(rest)),
              tcodiag(Monomial()));
}

Tape cocopier_poly(const Polynomial& p) {
  if (p.is_zero()) return tid0();
  const Monomial& u = p.monomials[0];
  Polynomial rest = tail(p);
  if (rest.is_zero()) return tlift(word_cocopier(u));
  // ⌊▷_U⌋ ⊕ !_{U⊗P'} ⊕ (δl_{P',U,P'} ; (!_{P'⊗U} ⊕ ▷_{P'}))
  Polynomial up = poly_product(mono_poly(u), rest);
  Polynomial pu = poly_product(rest, mono_poly(u));
  Tape third = tseq(left_distributor(rest, mono_poly(u), rest),
                    oplus_smart(bang_poly(pu), cocopier_poly(rest)));
  return toplus(toplus(tlift(word_cocopier(u)), bang_poly(up)), third);
}

Tape codischarger_poly(const Polynomial& p) {
  if (p.is_zero()) return tbang(Monomial());  // 𝟙 → 0
  const Monomial& u = p.monomials[0];
  Polynomial rest = tail(p);
  if (rest.is_zero()) return tlift(word_codischarger(u));
  return tseq(tdiag(Monomial()),
              toplus(tlift(word_codischarger(u)), codischarger_poly(rest)));
}

std::string to_text(const Tape& t) {
  // ';' is loosest, '+' (sum) in the middle, '(+)' binds tightest.
  auto prec = [](const Tape& x) {
    if (x->kind == TapeKind::Seq) return 0;
    if (x->kind == TapeKind::Oplus) return 2;
    return 3;
  };
  auto word = [](const Monomial& m) { return to_text(m); };
  auto rec = [&](auto&& self, const Tape& x, int min_prec) -> std::string {
    std::string s;
    switch (x->kind) {
      case TapeKind::IdMon:
        return "idm(" + word(x->u) + ")";
      case TapeKind::IdZero:
        return "id0";
      case TapeKind::Lift:
        return "[ " + to_text(x->circ) + " ]";
      case TapeKind::SymPlus:
        return "symp(" + word(x->u) + "," + word(x->v) + ")";
      case TapeKind::Bang:
        return "bang(" + word(x->u) + ")";
      case TapeKind::Diag:
        return "diag(" + word(x->u) + ")";
      case TapeKind::Cobang:
        return "cobang(" + word(x->u) + ")";
      case TapeKind::Codiag:
        return "codiag(" + word(x->u) + ")";
      case TapeKind::Seq:
        s = self(self, x->a, 0) + " ; " + self(self, x->b, 1);
        break;
      case TapeKind::Oplus:
        s = self(self, x->a, 2) + " (+) " + self(self, x->b, 3);
        break;
    }
    if (prec(x) < min_prec) s = "(" + s + ")";
    return s;
  };
  return rec(rec, t, 0);
}

}  // namespace tapes
