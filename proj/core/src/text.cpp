#include "tapes/text.hpp"

#include <cctype>

namespace tapes {

namespace {

struct Cursor {
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

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  /** Consumes "(+)" as one token; plain "(" and "+" stay untouched. */
  bool eat_oplus() {
    skip_ws();
    if (pos + 2 < text.size() && text[pos] == '(' && text[pos + 1] == '+' &&
        text[pos + 2] == ')') {
      advance();
      advance();
      advance();
      return true;
    }
    return false;
  }

  bool peek_ident() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skip_ws();
    if (!peek_ident()) fail("expected an identifier");
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
    return id;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col);
  }

  Sort sort_name() {
    std::string id = ident();
    if (!sig.has_sort(id)) fail("unknown sort '" + id + "'");
    return id;
  }

  /** Word up to a closing delimiter: sorts separated by spaces, or `1`. */
  Monomial word_until(char stop) {
    Monomial u;
    while (peek() != stop && peek() != '\0') {
      if (peek() == '1' && u.sorts.empty()) {
        advance();
        break;
      }
      u.sorts.push_back(sort_name());
    }
    return u;
  }

  // --- circuits ---

  Circuit circ_seq() {
    Circuit c = circ_tensor();
    while (eat(';')) c = cseq(c, circ_tensor());
    return c;
  }

  Circuit circ_tensor() {
    Circuit c = circ_atom();
    while (eat('*')) c = ctens(c, circ_atom());
    return c;
  }

  Circuit circ_atom() {
    if (eat('(')) {
      Circuit c = circ_seq();
      expect(')', "to close the group");
      return c;
    }
    if (!peek_ident()) fail("expected a circuit");
    std::string id = ident();
    if (id == "id1") return cid1();
    if (id == "id") {
      expect('(', "after 'id'");
      Sort a = sort_name();
      expect(')', "after the sort");
      return cid(a);
    }
    if (id == "sym") {
      expect('(', "after 'sym'");
      Sort a = sort_name();
      expect(',', "between the sorts");
      Sort b = sort_name();
      expect(')', "after the sorts");
      return csym(a, b);
    }
    auto unary = [&](Circuit (*make)(const Sort&)) {
      expect('(', "after the keyword");
      Sort a = sort_name();
      expect(')', "after the sort");
      return make(a);
    };
    if (id == "cp") return unary(&ccopier);
    if (id == "dc") return unary(&cdischarger);
    if (id == "cocp") return unary(&ccocopier);
    if (id == "codc") return unary(&ccodischarger);
    if (!sig.find(id)) fail("unknown generator '" + id + "'");
    return cgen(id);
  }

  // --- tapes ---

  Tape tape_seq() {
    Tape t = tape_sum();
    while (eat(';')) t = tseq(t, tape_sum());
    return t;
  }

  Tape tape_sum() {
    Tape t = tape_oplus();
    while (true) {
      skip_ws();
      // A bare '+' is sum; "(+)" belongs to the tighter level.
      if (pos < text.size() && text[pos] == '+') {
        advance();
        t = sum(t, tape_oplus(), sig);
      } else {
        break;
      }
    }
    return t;
  }

  Tape tape_oplus() {
    Tape t = tape_atom();
    while (eat_oplus()) t = toplus(t, tape_atom());
    return t;
  }

  Tape tape_atom() {
    if (eat('[')) {
      Circuit c = circ_seq();
      expect(']', "to close the circuit");
      return tlift(c);
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '(' && !eat_oplus() && eat('(')) {
      Tape t = tape_seq();
      expect(')', "to close the group");
      return t;
    }
    if (!peek_ident()) fail("expected a tape");
    std::string id = ident();
    if (id == "id0") return tid0();
    if (id == "idm") {
      expect('(', "after 'idm'");
      Monomial u = word_until(')');
      expect(')', "after the word");
      return tid(u);
    }
    if (id == "symp") {
      expect('(', "after 'symp'");
      Monomial u = word_until(',');
      expect(',', "between the words");
      Monomial v = word_until(')');
      expect(')', "after the words");
      return tsymplus(u, v);
    }
    auto unary = [&](Tape (*make)(const Monomial&)) {
      expect('(', "after the keyword");
      Monomial u = word_until(')');
      expect(')', "after the word");
      return make(u);
    };
    if (id == "diag") return unary(&tdiag);
    if (id == "bang") return unary(&tbang);
    if (id == "codiag") return unary(&tcodiag);
    if (id == "cobang") return unary(&tcobang);
    fail("unknown tape keyword '" + id + "'");
  }
};

}  // namespace

Circuit parse_circuit(const std::string& text, const MonSignature& sig) {
  Cursor c{text, sig};
  Circuit out = c.circ_seq();
  if (!c.at_end()) c.fail("trailing input after circuit");
  type_check_circuit(out, sig);
  return out;
}

Tape parse_tape(const std::string& text, const MonSignature& sig) {
  Cursor c{text, sig};
  Tape out = c.tape_seq();
  if (!c.at_end()) c.fail("trailing input after tape");
  type_check_tape(out, sig);
  return out;
}

Monomial parse_word(const std::string& text, const MonSignature& sig) {
  Cursor c{text, sig};
  Monomial u = c.word_until('\0');
  if (!c.at_end()) c.fail("trailing input after word");
  return u;
}

}  // namespace tapes
