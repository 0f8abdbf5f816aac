#include "tapes/rand.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>

namespace tapes {

MonSignature standard_test_signature(bool frobenius) {
  MonSignature sig;
  sig.sorts = {"A", "B", "C"};
  sig.generators = {
      {"f", Monomial({"A"}), Monomial({"B"})},
      {"g", Monomial({"B"}), Monomial({"C"})},
      {"h", Monomial({"A", "B"}), Monomial({"C"})},
      {"k", Monomial({"C"}), Monomial({"A", "B"})},
      {"u", Monomial(), Monomial({"A"})},
      {"e", Monomial({"C"}), Monomial()},
  };
  sig.frobenius_enabled = frobenius;
  return sig;
}

MonSignature chain_signature(bool frobenius) {
  MonSignature sig;
  sig.sorts = {"A"};
  sig.generators = {
      {"p", Monomial({"A"}), Monomial({"A"})},
      {"q", Monomial({"A"}), Monomial({"A"})},
      {"grow", Monomial({"A"}), Monomial({"A", "A"})},
      {"shrink", Monomial({"A", "A"}), Monomial({"A"})},
      {"birth", Monomial(), Monomial({"A"})},
      {"death", Monomial({"A"}), Monomial()},
  };
  sig.frobenius_enabled = frobenius;
  return sig;
}

Monomial random_monomial(Rand& r, const std::vector<Sort>& sorts,
                         int max_len) {
  Monomial u;
  int len = r.below(max_len + 1);
  for (int i = 0; i < len; ++i)
    u.sorts.push_back(sorts[r.below(static_cast<int>(sorts.size()))]);
  return u;
}

Polynomial random_polynomial(Rand& r, const std::vector<Sort>& sorts,
                             int max_len, bool allow_zero) {
  Polynomial p;
  int len = allow_zero ? r.below(max_len + 1) : 1 + r.below(max_len);
  for (int i = 0; i < len; ++i)
    p.monomials.push_back(random_monomial(r, sorts, max_len));
  return p;
}

namespace {

struct Layer {
  Circuit circ;
  Monomial cod;
};

/** One random layer id ⊗ atom ⊗ id on the word `dom`, or nothing when no
 * atom applies (empty word without nullary generators). */
std::optional<Layer> random_layer(Rand& r, const MonSignature& sig,
                                  const Monomial& dom) {
  struct Choice {
    Circuit atom;
    std::size_t at, consumed;
    Monomial produces;
  };
  std::vector<Choice> choices;
  for (const Generator& g : sig.generators) {
    std::size_t n = g.arity.size();
    if (n > dom.size()) continue;
    for (std::size_t at = 0; at + n <= dom.size(); ++at) {
      bool match = true;
      for (std::size_t k = 0; k < n; ++k)
        if (dom.sorts[at + k] != g.arity.sorts[k]) match = false;
      if (match) choices.push_back({cgen(g.name), at, n, g.coarity});
    }
  }
  for (std::size_t at = 0; at + 2 <= dom.size(); ++at) {
    Sort a = dom.sorts[at], b = dom.sorts[at + 1];
    choices.push_back({csym(a, b), at, 2, Monomial({b, a})});
  }
  if (sig.frobenius_enabled) {
    for (std::size_t at = 0; at < dom.size(); ++at) {
      Sort a = dom.sorts[at];
      choices.push_back({ccopier(a), at, 1, Monomial({a, a})});
      choices.push_back({cdischarger(a), at, 1, Monomial()});
    }
    for (std::size_t at = 0; at + 2 <= dom.size(); ++at)
      if (dom.sorts[at] == dom.sorts[at + 1])
        choices.push_back({ccocopier(dom.sorts[at]), at, 2,
                           Monomial({dom.sorts[at]})});
    // Codischargers can appear anywhere, including on the empty word.
    for (std::size_t at = 0; at <= dom.size(); ++at)
      for (const Sort& a : sig.sorts)
        choices.push_back({ccodischarger(a), at, 0, Monomial({a})});
  }
  if (choices.empty()) return std::nullopt;
  const Choice& c = choices[r.below(static_cast<int>(choices.size()))];
  Monomial left, right, cod;
  left.sorts.assign(dom.sorts.begin(), dom.sorts.begin() + c.at);
  right.sorts.assign(dom.sorts.begin() + c.at + c.consumed, dom.sorts.end());
  cod = left * c.produces * right;
  Circuit circ = c.atom;
  if (!left.is_unit()) circ = ctens(cid_word(left), circ);
  if (!right.is_unit()) circ = ctens(circ, cid_word(right));
  return Layer{circ, cod};
}

int tape_constructors(const Tape& t) {
  int n = 1;
  if (t->a) n += tape_constructors(t->a);
  if (t->b) n += tape_constructors(t->b);
  return n;
}

}  // namespace

Circuit random_circuit_from(Rand& r, const MonSignature& sig,
                            const Monomial& dom, int layers) {
  Circuit c = cid_word(dom);
  Monomial at = dom;
  for (int i = 0; i < layers; ++i) {
    auto layer = random_layer(r, sig, at);
    if (!layer) break;
    c = cseq(c, layer->circ);
    at = layer->cod;
  }
  return c;
}

Circuit random_word_circuit(Rand& r, const MonSignature& sig,
                            const Monomial& u, const Monomial& v) {
  assert(sig.sorts.size() == 1);
  const Sort& a = sig.sorts[0];
  auto at_pos = [&](const Circuit& atom, std::size_t at, std::size_t width,
                    std::size_t len) {
    Circuit c = atom;
    if (at > 0) c = ctens(cid_word(Monomial(std::vector<Sort>(at, a))), c);
    std::size_t rest = len - at - width;
    if (rest > 0)
      c = ctens(c, cid_word(Monomial(std::vector<Sort>(rest, a))));
    return c;
  };
  std::size_t len = u.size();
  Circuit c = cid_word(u);
  auto append = [&](const Circuit& step) { c = cseq(c, step); };
  while (len > v.size()) {
    if (len >= 2 && r.chance(0.7)) {
      std::size_t at =
          static_cast<std::size_t>(r.below(static_cast<int>(len - 1)));
      append(at_pos(cgen("shrink"), at, 2, len));
    } else {
      std::size_t at = static_cast<std::size_t>(r.below(static_cast<int>(len)));
      append(at_pos(cgen("death"), at, 1, len));
    }
    --len;
  }
  while (len < v.size()) {
    if (len >= 1 && r.chance(0.7)) {
      std::size_t at = static_cast<std::size_t>(r.below(static_cast<int>(len)));
      append(at_pos(cgen("grow"), at, 1, len));
    } else {
      std::size_t at =
          static_cast<std::size_t>(r.below(static_cast<int>(len + 1)));
      append(at_pos(cgen("birth"), at, 0, len));
    }
    ++len;
  }
  int extra = r.below(3);
  for (int i = 0; i < extra && len > 0; ++i) {
    int pick = r.below(len >= 2 ? 3 : 2);
    if (pick == 2) {
      std::size_t at =
          static_cast<std::size_t>(r.below(static_cast<int>(len - 1)));
      append(at_pos(csym(a, a), at, 2, len));
    } else {
      std::size_t at = static_cast<std::size_t>(r.below(static_cast<int>(len)));
      append(at_pos(cgen(pick == 0 ? "p" : "q"), at, 1, len));
    }
  }
  return c;
}

Tape random_tape_from(Rand& r, const MonSignature& sig, const Polynomial& dom,
                      int budget) {
  // One random layer on a stack: identities on every summand except one
  // position where an atom acts (or between two positions for a cobang).
  auto random_tape_layer = [&](const Polynomial& at)
      -> std::optional<std::pair<Tape, Polynomial>> {
    struct Choice {
      Tape atom;
      std::size_t at, consumed;
      Polynomial produces;
    };
    std::vector<Choice> choices;
    for (std::size_t i = 0; i < at.size(); ++i) {
      const Monomial& u = at.monomials[i];
      Polynomial uu(u);
      Circuit c = random_circuit_from(r, sig, u, 1 + r.below(2));
      auto [cd, cc] = type_check_circuit(c, sig);
      choices.push_back({tlift(c), i, 1, Polynomial(cc)});
      choices.push_back({tdiag(u), i, 1, uu + uu});
      choices.push_back({tbang(u), i, 1, Polynomial()});
      if (i + 1 < at.size()) {
        const Monomial& v = at.monomials[i + 1];
        Polynomial vu(v);
        choices.push_back({tsymplus(u, v), i, 2, vu + uu});
        if (u == v) choices.push_back({tcodiag(u), i, 2, uu});
      }
    }
    for (std::size_t i = 0; i <= at.size(); ++i) {
      Monomial w = random_monomial(r, sig.sorts, 2);
      choices.push_back({tcobang(w), i, 0, Polynomial(w)});
    }
    if (choices.empty()) return std::nullopt;
    const Choice& c = choices[r.below(static_cast<int>(choices.size()))];
    std::vector<Tape> stack;
    Polynomial cod;
    for (std::size_t k = 0; k < c.at; ++k) {
      stack.push_back(tid(at.monomials[k]));
      cod.monomials.push_back(at.monomials[k]);
    }
    stack.push_back(c.atom);
    for (const Monomial& m : c.produces.monomials) cod.monomials.push_back(m);
    for (std::size_t k = c.at + c.consumed; k < at.size(); ++k) {
      stack.push_back(tid(at.monomials[k]));
      cod.monomials.push_back(at.monomials[k]);
    }
    return std::make_pair(oplus_fold(stack), cod);
  };

  Tape t;
  Polynomial at = dom;
  int used = 0;
  while (used < budget) {
    auto layer = random_tape_layer(at);
    if (!layer) break;
    int cost = tape_constructors(layer->first) + (t ? 1 : 0);
    if (used + cost > budget) break;
    t = t ? tseq(t, layer->first) : layer->first;
    at = layer->second;
    used += cost;
    if (r.chance(0.35)) break;
  }
  return t ? t : id_poly(dom);
}

Tape random_tape(Rand& r, const MonSignature& sig, int budget) {
  return random_tape_from(r, sig, random_polynomial(r, sig.sorts, 3), budget);
}

TapeMatrix random_matrix(Rand& r, const MonSignature& chain_sig, int max_dim,
                         Mode mode) {
  const Sort& a = chain_sig.sorts[0];
  auto word = [&]() {
    return Monomial(std::vector<Sort>(static_cast<std::size_t>(r.below(4)),
                                      a));
  };
  TapeMatrix m;
  m.mode = mode;
  int cols = r.below(max_dim + 1), rows = r.below(max_dim + 1);
  for (int i = 0; i < cols; ++i) m.dom.monomials.push_back(word());
  for (int j = 0; j < rows; ++j) m.cod.monomials.push_back(word());
  m.entries.resize(rows);
  for (int j = 0; j < rows; ++j)
    for (int i = 0; i < cols; ++i) {
      std::vector<Circuit> cs;
      if (!r.chance(0.25)) {
        int k = 1 + r.below(2);
        for (int x = 0; x < k; ++x)
          cs.push_back(random_word_circuit(r, chain_sig, m.dom.monomials[i],
                                           m.cod.monomials[j]));
      }
      m.entries[j].push_back(make_entry(m.dom.monomials[i],
                                        m.cod.monomials[j], cs, chain_sig,
                                        mode));
    }
  return m;
}

CrExpr random_cr(Rand& r, const std::vector<std::string>& symbols, int ops) {
  if (ops <= 0)
    return cr_rel(symbols[r.below(static_cast<int>(symbols.size()))]);
  switch (r.below(8)) {
    case 0:
      return cr_rel(symbols[r.below(static_cast<int>(symbols.size()))]);
    case 1:
      return cr_one();
    case 2:
      return cr_bot();
    case 3:
      return cr_top();
    case 4:
      return cr_op(random_cr(r, symbols, ops - 1));
    case 5: {
      int left = r.below(ops);
      return cr_seq(random_cr(r, symbols, left),
                    random_cr(r, symbols, ops - 1 - left));
    }
    case 6: {
      int left = r.below(ops);
      return cr_union(random_cr(r, symbols, left),
                      random_cr(r, symbols, ops - 1 - left));
    }
    default: {
      int left = r.below(ops);
      return cr_inter(random_cr(r, symbols, left),
                      random_cr(r, symbols, ops - 1 - left));
    }
  }
}

}  // namespace tapes
