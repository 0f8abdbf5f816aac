#include "tapes/cr.hpp"

#include <cctype>

#include "tapes/circuit.hpp"
#include "tapes/matrix.hpp"
#include "tapes/order.hpp"

namespace tapes {

namespace {
CrExpr node(CrKind k, std::string name, CrExpr a, CrExpr b) {
  auto n = std::make_shared<CrNode>();
  n->kind = k;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}
}  // namespace

CrExpr cr_rel(const std::string& name) {
  return node(CrKind::Rel, name, nullptr, nullptr);
}
CrExpr cr_one() { return node(CrKind::One, "", nullptr, nullptr); }
CrExpr cr_bot() { return node(CrKind::Bot, "", nullptr, nullptr); }
CrExpr cr_top() { return node(CrKind::Top, "", nullptr, nullptr); }
CrExpr cr_seq(CrExpr a, CrExpr b) {
  return node(CrKind::Seq, "", std::move(a), std::move(b));
}
CrExpr cr_union(CrExpr a, CrExpr b) {
  return node(CrKind::Union, "", std::move(a), std::move(b));
}
CrExpr cr_inter(CrExpr a, CrExpr b) {
  return node(CrKind::Inter, "", std::move(a), std::move(b));
}
CrExpr cr_op(CrExpr a) { return node(CrKind::Op, "", std::move(a), nullptr); }

int cr_size(const CrExpr& e) {
  switch (e->kind) {
    case CrKind::Rel:
      return 0;
    case CrKind::One:
    case CrKind::Bot:
    case CrKind::Top:
      return 1;
    case CrKind::Op:
      return 1 + cr_size(e->a);
    case CrKind::Seq:
    case CrKind::Union:
    case CrKind::Inter:
      return 1 + cr_size(e->a) + cr_size(e->b);
  }
  return 0;
}

namespace {
// Binding strength, loosest first: Union < Inter < Seq < postfix Op.
int cr_prec(CrKind k) {
  switch (k) {
    case CrKind::Union:
      return 0;
    case CrKind::Inter:
      return 1;
    case CrKind::Seq:
      return 2;
    case CrKind::Op:
      return 3;
    default:
      return 4;
  }
}

void print_cr(const CrExpr& e, int min_prec, std::string& out) {
  int p = cr_prec(e->kind);
  bool paren = p < min_prec;
  if (paren) out += "(";
  switch (e->kind) {
    case CrKind::Rel:
      out += e->name;
      break;
    case CrKind::One:
      out += "id";
      break;
    case CrKind::Bot:
      out += "bot";
      break;
    case CrKind::Top:
      out += "top";
      break;
    case CrKind::Seq:
      print_cr(e->a, p, out);
      out += " ; ";
      print_cr(e->b, p + 1, out);
      break;
    case CrKind::Union:
      print_cr(e->a, p, out);
      out += " | ";
      print_cr(e->b, p + 1, out);
      break;
    case CrKind::Inter:
      print_cr(e->a, p, out);
      out += " & ";
      print_cr(e->b, p + 1, out);
      break;
    case CrKind::Op:
      print_cr(e->a, p, out);
      out += "~";
      break;
  }
  if (paren) out += ")";
}

struct CrParser {
  const std::string& text;
  const MonSignature& sig;
  std::size_t pos = 0;
  int line = 1, col = 1;

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      advance();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col);
  }

  CrExpr parse_union() {
    CrExpr e = parse_inter();
    while (eat('|')) e = cr_union(e, parse_inter());
    return e;
  }

  CrExpr parse_inter() {
    CrExpr e = parse_seq();
    while (eat('&')) e = cr_inter(e, parse_seq());
    return e;
  }

  CrExpr parse_seq() {
    CrExpr e = parse_post();
    while (eat(';')) e = cr_seq(e, parse_post());
    return e;
  }

  CrExpr parse_post() {
    CrExpr e = parse_atom();
    while (eat('~')) e = cr_op(e);
    return e;
  }

  CrExpr parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("expected a relation expression");
    if (eat('(')) {
      CrExpr e = parse_union();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    char c = text[pos];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
      fail(std::string("unexpected character '") + c + "'");
    std::string id;
    while (pos < text.size()) {
      char d = text[pos];
      if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' ||
          d == '\'') {
        id += d;
        advance();
      } else {
        break;
      }
    }
    if (id == "id") return cr_one();
    if (id == "bot") return cr_bot();
    if (id == "top") return cr_top();
    if (!sig.find(id)) fail("relation symbol '" + id + "' not declared");
    return cr_rel(id);
  }
};
}  // namespace

std::string to_text(const CrExpr& e) {
  std::string out;
  print_cr(e, 0, out);
  return out;
}

CrExpr parse_cr(const std::string& text, const MonSignature& sig) {
  CrParser p{text, sig};
  CrExpr e = p.parse_union();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after expression");
  return e;
}

Sort cr_sort(const MonSignature& sig) {
  if (sig.sorts.size() != 1)
    throw TypeError("relation expressions need a signature with exactly one "
                    "sort, this one has " +
                    std::to_string(sig.sorts.size()));
  Monomial a({sig.sorts[0]});
  for (const Generator& g : sig.generators)
    if (!(g.arity == a && g.coarity == a))
      throw TypeError("relation symbol '" + g.name +
                      "' must be an endo-generator on the single sort");
  return sig.sorts[0];
}

namespace {
Tape encode_at(const CrExpr& e, const Sort& a, const MonSignature& sig) {
  Monomial u({a});
  switch (e->kind) {
    case CrKind::Rel:
      return tlift(cgen(e->name));
    case CrKind::One:
      return tlift(cid(a));
    case CrKind::Bot:
      return tseq(tbang(u), tcobang(u));
    case CrKind::Top:
      return tlift(cseq(cdischarger(a), ccodischarger(a)));
    case CrKind::Seq:
      return tseq(encode_at(e->a, a, sig), encode_at(e->b, a, sig));
    case CrKind::Union: {
      Tape inner = toplus(encode_at(e->a, a, sig), encode_at(e->b, a, sig));
      return tseq(tseq(tdiag(u), inner), tcodiag(u));
    }
    case CrKind::Inter: {
      Tape prod =
          tensor(encode_at(e->a, a, sig), encode_at(e->b, a, sig), sig);
      return tseq(tseq(tlift(ccopier(a)), prod), tlift(ccocopier(a)));
    }
    case CrKind::Op: {
      // Converse distributes over the union of disjuncts, so transpose each
      // circuit of the normalized 1x1 entry and re-sum.
      Tape inner = encode_at(e->a, a, sig);
      TapeMatrix m = to_matrix(inner, sig, Mode::SET);
      const MonomialEntry& cell = m.entries[0][0];
      if (cell.circuits.empty()) return tseq(tbang(u), tcobang(u));
      Tape out;
      for (const CanonCircuit& c : cell.circuits) {
        Tape disjunct = tlift(transpose(c.term, sig));
        out = out ? sum(out, disjunct, sig) : disjunct;
      }
      return out;
    }
  }
  throw TypeError("malformed relation expression");
}
}  // namespace

Tape encode(const CrExpr& e, const MonSignature& sig) {
  // Intersection, top and converse lift Frobenius circuits, so the encoding
  // lives over the signature with that structure switched on.
  MonSignature fsig = sig;
  fsig.frobenius_enabled = true;
  return encode_at(e, cr_sort(fsig), fsig);
}

FiniteRelation eval_cr(const CrExpr& e, const Interpretation& in,
                       const MonSignature& sig) {
  Sort a = cr_sort(sig);
  Space s = make_space(Polynomial(Monomial({a})), in);
  switch (e->kind) {
    case CrKind::Rel:
      return eval_circuit(cgen(e->name), in, sig);
    case CrKind::One:
      return rel_identity(s);
    case CrKind::Bot:
      return rel_empty(s, s);
    case CrKind::Top: {
      FiniteRelation r = rel_empty(s, s);
      for (long long x = 0; x < s.total; ++x)
        for (long long y = 0; y < s.total; ++y) r.set(x, y);
      return r;
    }
    case CrKind::Seq:
      return rel_compose(eval_cr(e->a, in, sig), eval_cr(e->b, in, sig));
    case CrKind::Union:
      return rel_union(eval_cr(e->a, in, sig), eval_cr(e->b, in, sig));
    case CrKind::Inter:
      return rel_intersect(eval_cr(e->a, in, sig), eval_cr(e->b, in, sig));
    case CrKind::Op:
      return rel_converse(eval_cr(e->a, in, sig));
  }
  throw TypeError("malformed relation expression");
}

Verdict decide_leq(const CrExpr& e1, const CrExpr& e2, const MonSignature& sig,
                   const SearchOptions& opts) {
  MonSignature fsig = sig;
  fsig.frobenius_enabled = true;
  Tape t1 = encode(e1, fsig);
  Tape t2 = encode(e2, fsig);
  if (tape_leq(t1, t2, fsig, Mode::CB)) return {true, std::nullopt};
  return {false, search_counterexample(t1, t2, fsig, opts)};
}

Verdict decide_equiv(const CrExpr& e1, const CrExpr& e2,
                     const MonSignature& sig, const SearchOptions& opts) {
  Verdict v = decide_leq(e1, e2, sig, opts);
  if (!v.holds) return v;
  return decide_leq(e2, e1, sig, opts);
}

}  // namespace tapes
