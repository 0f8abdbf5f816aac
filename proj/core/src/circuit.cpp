#include "tapes/circuit.hpp"

#include "tapes/hypergraph.hpp"

namespace tapes {

namespace {
Circuit node(CircKind k, Sort sa = {}, Sort sb = {}, Circuit a = nullptr,
             Circuit b = nullptr) {
  auto n = std::make_shared<CircuitNode>();
  n->kind = k;
  n->sort_a = std::move(sa);
  n->sort_b = std::move(sb);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}
}  // namespace

Circuit cid(const Sort& s) { return node(CircKind::Id, s); }
Circuit cid1() { return node(CircKind::IdUnit); }
Circuit cgen(const std::string& name) { return node(CircKind::Gen, name); }
Circuit csym(const Sort& a, const Sort& b) {
  return node(CircKind::Sym, a, b);
}
Circuit cseq(Circuit a, Circuit b) {
  return node(CircKind::Seq, {}, {}, std::move(a), std::move(b));
}
Circuit ctens(Circuit a, Circuit b) {
  return node(CircKind::Tensor, {}, {}, std::move(a), std::move(b));
}
Circuit ccopier(const Sort& s) { return node(CircKind::Copier, s); }
Circuit cdischarger(const Sort& s) { return node(CircKind::Discharger, s); }
Circuit ccocopier(const Sort& s) { return node(CircKind::Cocopier, s); }
Circuit ccodischarger(const Sort& s) {
  return node(CircKind::Codischarger, s);
}

Circuit cid_word(const Monomial& u) {
  if (u.is_unit()) return cid1();
  Circuit c = cid(u.sorts[0]);
  for (std::size_t i = 1; i < u.sorts.size(); ++i) c = ctens(c, cid(u.sorts[i]));
  return c;
}

std::pair<Monomial, Monomial> type_check_circuit(const Circuit& c,
                                                 const MonSignature& sig) {
  if (!c) throw TypeError("null circuit");
  switch (c->kind) {
    case CircKind::Id: {
      if (!sig.has_sort(c->sort_a))
        throw TypeError("unknown sort '" + c->sort_a + "'");
      Monomial m(c->sort_a);
      return {m, m};
    }
    case CircKind::IdUnit:
      return {Monomial(), Monomial()};
    case CircKind::Gen: {
      const Generator& g = sig.generator(c->sort_a);
      return {g.arity, g.coarity};
    }
    case CircKind::Sym: {
      if (!sig.has_sort(c->sort_a))
        throw TypeError("unknown sort '" + c->sort_a + "'");
      if (!sig.has_sort(c->sort_b))
        throw TypeError("unknown sort '" + c->sort_b + "'");
      Monomial ab({c->sort_a, c->sort_b});
      Monomial ba({c->sort_b, c->sort_a});
      return {ab, ba};
    }
    case CircKind::Seq: {
      auto [da, ca] = type_check_circuit(c->a, sig);
      auto [db, cb] = type_check_circuit(c->b, sig);
      if (ca != db)
        throw TypeError("composition mismatch: '" + to_text(ca) +
                        "' vs '" + to_text(db) + "'");
      return {da, cb};
    }
    case CircKind::Tensor: {
      auto [da, ca] = type_check_circuit(c->a, sig);
      auto [db, cb] = type_check_circuit(c->b, sig);
      return {da * db, ca * cb};
    }
    case CircKind::Copier:
    case CircKind::Discharger:
    case CircKind::Cocopier:
    case CircKind::Codischarger: {
      if (!sig.frobenius_enabled)
        throw ModeError(
            "copier/discharger generators require frobenius_enabled");
      if (!sig.has_sort(c->sort_a))
        throw TypeError("unknown sort '" + c->sort_a + "'");
      Monomial one(c->sort_a);
      Monomial two({c->sort_a, c->sort_a});
      switch (c->kind) {
        case CircKind::Copier:
          return {one, two};
        case CircKind::Discharger:
          return {one, Monomial()};
        case CircKind::Cocopier:
          return {two, one};
        default:
          return {Monomial(), one};
      }
    }
  }
  throw TypeError("malformed circuit node");
}

Circuit word_symmetry(const Monomial& u, const Monomial& v) {
  // Single sort past a word: σ_{A,V} = (σ_{A,B} ⊗ id) ; (id_B ⊗ σ_{A,V'}).
  auto sort_past_word = [](const Sort& a, const Monomial& w) {
    auto rec = [](auto&& self, const Sort& a, const Monomial& w,
                  std::size_t i) -> Circuit {
      if (i == w.sorts.size()) return cid(a);
      Monomial rest(std::vector<Sort>(w.sorts.begin() + i + 1, w.sorts.end()));
      return cseq(ctens(csym(a, w.sorts[i]), cid_word(rest)),
                  ctens(cid(w.sorts[i]), self(self, a, w, i + 1)));
    };
    return rec(rec, a, w, 0);
  };
  if (u.is_unit()) return cid_word(v);
  if (v.is_unit()) return cid_word(u);
  // σ_{A·U',V} = (id_A ⊗ σ_{U',V}) ; (σ_{A,V} ⊗ id_U').
  Monomial u_rest(std::vector<Sort>(u.sorts.begin() + 1, u.sorts.end()));
  Circuit inner = u_rest.is_unit()
                      ? sort_past_word(u.sorts[0], v)
                      : cseq(ctens(cid(u.sorts[0]), word_symmetry(u_rest, v)),
                             ctens(sort_past_word(u.sorts[0], v),
                                   cid_word(u_rest)));
  return inner;
}

Circuit word_copier(const Monomial& u) {
  if (u.is_unit()) return cid1();
  Sort a = u.sorts[0];
  Monomial rest(std::vector<Sort>(u.sorts.begin() + 1, u.sorts.end()));
  if (rest.is_unit()) return ccopier(a);
  // (◁_A ⊗ ◁_U') ; (id_A ⊗ σ_{A,U'} ⊗ id_U')
  return cseq(ctens(ccopier(a), word_copier(rest)),
              ctens(ctens(cid(a), word_symmetry(Monomial(a), rest)),
                    cid_word(rest)));
}

Circuit word_discharger(const Monomial& u) {
  if (u.is_unit()) return cid1();
  Sort a = u.sorts[0];
  Monomial rest(std::vector<Sort>(u.sorts.begin() + 1, u.sorts.end()));
  if (rest.is_unit()) return cdischarger(a);
  return ctens(cdischarger(a), word_discharger(rest));
}

Circuit word_cocopier(const Monomial& u) {
  if (u.is_unit()) return cid1();
  Sort a = u.sorts[0];
  Monomial rest(std::vector<Sort>(u.sorts.begin() + 1, u.sorts.end()));
  if (rest.is_unit()) return ccocopier(a);
  // (id_A ⊗ σ_{U',A} ⊗ id_U') ; (▷_A ⊗ ▷_U')
  return cseq(ctens(ctens(cid(a), word_symmetry(rest, Monomial(a))),
                    cid_word(rest)),
              ctens(ccocopier(a), word_cocopier(rest)));
}

Circuit word_codischarger(const Monomial& u) {
  if (u.is_unit()) return cid1();
  Sort a = u.sorts[0];
  Monomial rest(std::vector<Sort>(u.sorts.begin() + 1, u.sorts.end()));
  if (rest.is_unit()) return ccodischarger(a);
  return ctens(ccodischarger(a), word_codischarger(rest));
}

bool circuits_equal(const Circuit& c, const Circuit& d,
                    const MonSignature& sig) {
  auto tc = type_check_circuit(c, sig);
  auto td = type_check_circuit(d, sig);
  if (tc != td)
    throw TypeError("circuits_equal: type mismatch '" + to_text(tc.first) +
                    " -> " + to_text(tc.second) + "' vs '" +
                    to_text(td.first) + " -> " + to_text(td.second) + "'");
  if (!sig.frobenius_enabled)
    return canonical_key(to_hypergraph(c, sig)) ==
           canonical_key(to_hypergraph(d, sig));
  InterfacedHypergraph hc = to_hypergraph(c, sig);
  InterfacedHypergraph hd = to_hypergraph(d, sig);
  return hom_exists(hd, hc) && hom_exists(hc, hd);
}

bool cb_leq(const Circuit& c, const Circuit& d, const MonSignature& sig) {
  if (!sig.frobenius_enabled)
    throw ModeError("cb_leq requires frobenius_enabled");
  auto tc = type_check_circuit(c, sig);
  auto td = type_check_circuit(d, sig);
  if (tc != td) throw TypeError("cb_leq: type mismatch");
  // c ≤ d iff the graph of d maps homomorphically into the graph of c:
  // the side with more constraints denotes the smaller relation.
  return hom_exists(to_hypergraph(d, sig), to_hypergraph(c, sig));
}

Circuit transpose(const Circuit& c, const MonSignature& sig) {
  if (!sig.frobenius_enabled)
    throw ModeError("transpose requires frobenius_enabled");
  auto [u, v] = type_check_circuit(c, sig);
  Circuit cup_u = cseq(word_codischarger(u), word_copier(u));    // 1 → U·U
  Circuit cap_v = cseq(word_cocopier(v), word_discharger(v));    // V·V → 1
  // V → U·U·V → U·V·V → U
  return cseq(cseq(ctens(cup_u, cid_word(v)),
                   ctens(ctens(cid_word(u), c), cid_word(v))),
              ctens(cid_word(u), cap_v));
}

namespace {
bool identity_only(const Circuit& c) {
  switch (c->kind) {
    case CircKind::Id:
    case CircKind::IdUnit:
      return true;
    case CircKind::Seq:
    case CircKind::Tensor:
      return identity_only(c->a) && identity_only(c->b);
    default:
      return false;
  }
}

/** The word an identity-only circuit is the identity on. */
Monomial identity_word(const Circuit& c) {
  switch (c->kind) {
    case CircKind::Id:
      return Monomial(c->sort_a);
    case CircKind::Seq:
      return identity_word(c->a);
    case CircKind::Tensor:
      return identity_word(c->a) * identity_word(c->b);
    default:
      return Monomial();
  }
}
}  // namespace

Circuit strip_identities(const Circuit& c) {
  if (c->kind == CircKind::Seq) {
    Circuit a = strip_identities(c->a);
    Circuit b = strip_identities(c->b);
    if (identity_only(a)) return b;
    if (identity_only(b)) return a;
    return cseq(a, b);
  }
  if (c->kind == CircKind::Tensor) {
    Circuit a = strip_identities(c->a);
    Circuit b = strip_identities(c->b);
    if (identity_only(a) && identity_word(a).is_unit()) return b;
    if (identity_only(b) && identity_word(b).is_unit()) return a;
    if (identity_only(a) && identity_only(b))
      return cid_word(identity_word(a) * identity_word(b));
    return ctens(a, b);
  }
  return c;
}

std::string to_text(const Circuit& c) {
  // Parenthesize children whenever their operator binds less tightly:
  // ';' is loosest, '*' binds tighter, atoms need no parentheses.
  auto prec = [](const Circuit& x) {
    if (x->kind == CircKind::Seq) return 0;
    if (x->kind == CircKind::Tensor) return 1;
    return 2;
  };
  auto rec = [&](auto&& self, const Circuit& x, int min_prec) -> std::string {
    std::string s;
    switch (x->kind) {
      case CircKind::Id:
        return "id(" + x->sort_a + ")";
      case CircKind::IdUnit:
        return "id1";
      case CircKind::Gen:
        return x->sort_a;
      case CircKind::Sym:
        return "sym(" + x->sort_a + "," + x->sort_b + ")";
      case CircKind::Copier:
        return "cp(" + x->sort_a + ")";
      case CircKind::Discharger:
        return "dc(" + x->sort_a + ")";
      case CircKind::Cocopier:
        return "cocp(" + x->sort_a + ")";
      case CircKind::Codischarger:
        return "codc(" + x->sort_a + ")";
      case CircKind::Seq:
        s = self(self, x->a, 0) + " ; " + self(self, x->b, 1);
        break;
      case CircKind::Tensor:
        s = self(self, x->a, 1) + " * " + self(self, x->b, 2);
        break;
    }
    if (prec(x) < min_prec) s = "(" + s + ")";
    return s;
  };
  return rec(rec, c, 0);
}

}  // namespace tapes
