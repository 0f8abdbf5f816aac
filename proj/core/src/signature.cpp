#include "tapes/signature.hpp"

#include <algorithm>
#include <set>

#include "tapes/tape.hpp"

namespace tapes {

Polynomial poly_product(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  r.monomials.reserve(p.size() * q.size());
  for (const Monomial& u : p.monomials)
    for (const Monomial& v : q.monomials) r.monomials.push_back(u * v);
  return r;
}

bool MonSignature::has_sort(const Sort& s) const {
  return std::find(sorts.begin(), sorts.end(), s) != sorts.end();
}

const Generator* MonSignature::find(const std::string& name) const {
  for (const Generator& g : generators)
    if (g.name == name) return &g;
  return nullptr;
}

const Generator& MonSignature::generator(const std::string& name) const {
  const Generator* g = find(name);
  if (!g) throw TypeError("unknown generator '" + name + "'");
  return *g;
}

namespace {

struct SigToken {
  enum Kind { Ident, Colon, Semi, Plus, Arrow, End } kind;
  std::string text;
  int line, col;
};

class SigLexer {
 public:
  explicit SigLexer(const std::string& text) : src_(text) {}

  SigToken next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {SigToken::End, "", line, col};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(
                                        src_[pos_])) ||
                                    src_[pos_] == '_' || src_[pos_] == '\'')) {
        id += src_[pos_];
        advance();
      }
      return {SigToken::Ident, id, line, col};
    }
    if (c == ':') {
      advance();
      return {SigToken::Colon, ":", line, col};
    }
    if (c == ';') {
      advance();
      return {SigToken::Semi, ";", line, col};
    }
    if (c == '+') {
      advance();
      return {SigToken::Plus, "+", line, col};
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      advance();
      advance();
      return {SigToken::Arrow, "->", line, col};
    }
    throw ParseError(std::string("unexpected character '") + c +
                         "' in signature",
                     line, col);
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace

std::variant<MonSignature, RigSignature> parse_signature(
    const std::string& text) {
  SigLexer lex(text);
  SigToken tok = lex.next();

  RigSignature rig;  // accumulate everything as rig, downgrade at the end
  std::set<std::string> sort_names, gen_names;

  auto parse_poly = [&](SigToken& t) {
    // word (+ word)*, each word a possibly-empty sort list
    Polynomial p;
    Monomial cur;
    auto flush = [&] {
      p.monomials.push_back(cur);
      cur = Monomial();
    };
    while (true) {
      if (t.kind == SigToken::Ident) {
        if (!sort_names.count(t.text))
          throw ParseError("undeclared sort '" + t.text + "'", t.line, t.col);
        cur.sorts.push_back(t.text);
        t = lex.next();
      } else if (t.kind == SigToken::Plus) {
        flush();
        t = lex.next();
      } else {
        flush();
        return p;
      }
    }
  };

  while (tok.kind != SigToken::End) {
    if (tok.kind != SigToken::Ident)
      throw ParseError("expected 'sort' or 'gen'", tok.line, tok.col);
    if (tok.text == "sort") {
      tok = lex.next();
      if (tok.kind != SigToken::Ident)
        throw ParseError("expected sort name", tok.line, tok.col);
      while (tok.kind == SigToken::Ident) {
        if (!sort_names.insert(tok.text).second)
          throw ParseError("duplicate sort '" + tok.text + "'", tok.line,
                           tok.col);
        rig.sorts.push_back(tok.text);
        tok = lex.next();
      }
      if (tok.kind != SigToken::Semi)
        throw ParseError("expected ';' after sort declaration", tok.line,
                         tok.col);
      tok = lex.next();
    } else if (tok.text == "gen") {
      tok = lex.next();
      if (tok.kind != SigToken::Ident)
        throw ParseError("expected generator name", tok.line, tok.col);
      std::string name = tok.text;
      if (!gen_names.insert(name).second)
        throw ParseError("duplicate generator '" + name + "'", tok.line,
                         tok.col);
      tok = lex.next();
      if (tok.kind != SigToken::Colon)
        throw ParseError("expected ':' after generator name", tok.line,
                         tok.col);
      tok = lex.next();
      Polynomial ar = parse_poly(tok);
      if (tok.kind != SigToken::Arrow)
        throw ParseError("expected '->' in generator type", tok.line, tok.col);
      tok = lex.next();
      Polynomial coar = parse_poly(tok);
      if (tok.kind != SigToken::Semi)
        throw ParseError("expected ';' after generator declaration", tok.line,
                         tok.col);
      tok = lex.next();
      rig.generators.push_back({name, ar, coar});
    } else {
      throw ParseError("expected 'sort' or 'gen', got '" + tok.text + "'",
                       tok.line, tok.col);
    }
  }

  bool monoidal = std::all_of(
      rig.generators.begin(), rig.generators.end(), [](const RigGenerator& g) {
        return g.arity.size() == 1 && g.coarity.size() == 1;
      });
  if (!monoidal) return rig;

  MonSignature mon;
  mon.sorts = rig.sorts;
  for (const RigGenerator& g : rig.generators)
    mon.generators.push_back(
        {g.name, g.arity.monomials[0], g.coarity.monomials[0]});
  return mon;
}

std::pair<MonSignature, ReductionTable> reduce_rig_signature(
    const RigSignature& rs) {
  MonSignature mon;
  mon.sorts = rs.sorts;
  mon.frobenius_enabled = rs.frobenius_enabled;
  ReductionTable table;
  std::set<std::string> names;

  auto add = [&](const std::string& name, const Monomial& ar,
                 const Monomial& coar) {
    if (!names.insert(name).second)
      throw Error("generator name collision during reduction: '" + name + "'");
    mon.generators.push_back({name, ar, coar});
  };

  for (const RigGenerator& g : rs.generators) {
    std::size_t n = g.arity.size(), m = g.coarity.size();
    ReducedFamily fam{g, {}};
    fam.names.assign(m, std::vector<std::string>(n));
    if (n == 1 && m == 1) {
      add(g.name, g.arity.monomials[0], g.coarity.monomials[0]);
      fam.names[0][0] = g.name;
    } else {
      for (std::size_t j = 1; j <= m; ++j)
        for (std::size_t i = 1; i <= n; ++i) {
          std::string name =
              g.name + "__" + std::to_string(j) + "_" + std::to_string(i);
          add(name, g.arity.monomials[i - 1], g.coarity.monomials[j - 1]);
          fam.names[j - 1][i - 1] = name;
        }
    }
    table.emplace(g.name, std::move(fam));
  }
  return {mon, table};
}

Tape expand_generator(const RigGenerator& s, const ReductionTable& table) {
  auto it = table.find(s.name);
  if (it == table.end())
    throw Error("generator '" + s.name + "' not present in reduction table");
  const ReducedFamily& fam = it->second;
  std::size_t n = s.arity.size(), m = s.coarity.size();

  // ⊞_i ⊞_j ⌊s__j_i⌋ : every input summand fans out to all output summands.
  Tape middle;
  {
    std::vector<Tape> blocks;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        blocks.push_back(tlift(cgen(fam.names[j][i])));
    middle = oplus_fold(blocks);
  }

  Tape result = middle;
  if (m != 1) {
    std::vector<Tape> diags;
    for (std::size_t i = 0; i < n; ++i)
      diags.push_back(gen_diag(s.arity.monomials[i], m));
    result = tseq(oplus_fold(diags), result);
  }
  if (n != 1) result = tseq(result, gen_codiag(s.coarity, n));
  return result;
}

std::string to_text(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.sorts.size(); ++i) {
    if (i) s += ' ';
    s += m.sorts[i];
  }
  return s;
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.monomials.size(); ++i) {
    if (i) s += " + ";
    s += to_text(p.monomials[i]);
  }
  return s;
}

}  // namespace tapes
