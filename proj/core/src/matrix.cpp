#include "tapes/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "tapes/hypergraph.hpp"

namespace tapes {

std::string to_text(Mode m) {
  switch (m) {
    case Mode::MULTISET:
      return "multiset";
    case Mode::SET:
      return "set";
    case Mode::CB:
      return "cb";
  }
  return "?";
}

Mode mode_from_text(const std::string& s) {
  if (s == "multiset") return Mode::MULTISET;
  if (s == "set") return Mode::SET;
  if (s == "cb") return Mode::CB;
  throw Error("unknown mode '" + s + "' (expected multiset, set or cb)");
}

MonomialEntry make_entry(const Monomial& dom, const Monomial& cod,
                         const std::vector<Circuit>& circuits,
                         const MonSignature& sig, Mode mode) {
  if (mode == Mode::CB && !sig.frobenius_enabled)
    throw ModeError("CB mode requires frobenius_enabled");
  MonomialEntry e{dom, cod, {}};
  for (const Circuit& raw : circuits) {
    Circuit c = strip_identities(raw);
    e.circuits.push_back(
        {c, canonical_key(to_hypergraph(c, sig)), to_text(c)});
  }
  std::sort(e.circuits.begin(), e.circuits.end(),
            [](const CanonCircuit& a, const CanonCircuit& b) {
              return a.key != b.key ? a.key < b.key : a.text < b.text;
            });
  if (mode == Mode::SET || mode == Mode::CB) {
    e.circuits.erase(std::unique(e.circuits.begin(), e.circuits.end(),
                                 [](const CanonCircuit& a,
                                    const CanonCircuit& b) {
                                   return a.key == b.key;
                                 }),
                     e.circuits.end());
  }
  if (mode == Mode::CB && e.circuits.size() > 1) {
    // Keep only cb_leq-maximal circuits; among equivalent ones the earliest
    // in (key, text) order survives.
    std::size_t k = e.circuits.size();
    std::vector<bool> drop(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k && !drop[i]; ++j) {
        if (i == j || drop[j]) continue;
        if (!cb_leq(e.circuits[i].term, e.circuits[j].term, sig)) continue;
        bool back = cb_leq(e.circuits[j].term, e.circuits[i].term, sig);
        if (!back || j < i) drop[i] = true;
      }
    }
    std::vector<CanonCircuit> keep;
    for (std::size_t i = 0; i < k; ++i)
      if (!drop[i]) keep.push_back(e.circuits[i]);
    e.circuits = std::move(keep);
  }
  return e;
}

namespace {

std::vector<Circuit> terms_of(const MonomialEntry& e) {
  std::vector<Circuit> r;
  for (const CanonCircuit& c : e.circuits) r.push_back(c.term);
  return r;
}

TapeMatrix empty_matrix(const Polynomial& dom, const Polynomial& cod,
                        Mode mode) {
  TapeMatrix m;
  m.dom = dom;
  m.cod = cod;
  m.mode = mode;
  m.entries.assign(cod.size(), {});
  for (std::size_t j = 0; j < cod.size(); ++j) {
    m.entries[j].reserve(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i)
      m.entries[j].push_back(
          MonomialEntry{dom.monomials[i], cod.monomials[j], {}});
  }
  return m;
}

}  // namespace

TapeMatrix to_matrix(const Tape& t, const MonSignature& sig, Mode mode) {
  switch (t->kind) {
    case TapeKind::IdMon: {
      TapeMatrix m = empty_matrix(Polynomial(t->u), Polynomial(t->u), mode);
      m.entries[0][0] = make_entry(t->u, t->u, {cid_word(t->u)}, sig, mode);
      return m;
    }
    case TapeKind::IdZero:
      return empty_matrix(Polynomial(), Polynomial(), mode);
    case TapeKind::Lift: {
      auto [d, c] = type_check_circuit(t->circ, sig);
      TapeMatrix m = empty_matrix(Polynomial(d), Polynomial(c), mode);
      m.entries[0][0] = make_entry(d, c, {t->circ}, sig, mode);
      return m;
    }
    case TapeKind::SymPlus: {
      Polynomial dom = Polynomial(t->u) + Polynomial(t->v);
      Polynomial cod = Polynomial(t->v) + Polynomial(t->u);
      TapeMatrix m = empty_matrix(dom, cod, mode);
      m.entries[0][1] = make_entry(t->v, t->v, {cid_word(t->v)}, sig, mode);
      m.entries[1][0] = make_entry(t->u, t->u, {cid_word(t->u)}, sig, mode);
      return m;
    }
    case TapeKind::Seq:
      return mat_compose(to_matrix(t->a, sig, mode),
                         to_matrix(t->b, sig, mode), sig);
    case TapeKind::Oplus:
      return mat_oplus(to_matrix(t->a, sig, mode),
                       to_matrix(t->b, sig, mode));
    case TapeKind::Bang:
      return empty_matrix(Polynomial(t->u), Polynomial(), mode);
    case TapeKind::Diag: {
      TapeMatrix m = empty_matrix(Polynomial(t->u),
                                  Polynomial(t->u) + Polynomial(t->u), mode);
      m.entries[0][0] = make_entry(t->u, t->u, {cid_word(t->u)}, sig, mode);
      m.entries[1][0] = m.entries[0][0];
      return m;
    }
    case TapeKind::Cobang:
      return empty_matrix(Polynomial(), Polynomial(t->u), mode);
    case TapeKind::Codiag: {
      TapeMatrix m = empty_matrix(Polynomial(t->u) + Polynomial(t->u),
                                  Polynomial(t->u), mode);
      m.entries[0][0] = make_entry(t->u, t->u, {cid_word(t->u)}, sig, mode);
      m.entries[0][1] = m.entries[0][0];
      return m;
    }
  }
  throw TypeError("malformed tape node");
}

TapeMatrix mat_compose(const TapeMatrix& m, const TapeMatrix& n,
                       const MonSignature& sig) {
  if (m.cod != n.dom)
    throw TypeError("mat_compose: middle polynomial mismatch: '" +
                    to_text(m.cod) + "' vs '" + to_text(n.dom) + "'");
  if (m.mode != n.mode) throw TypeError("mat_compose: mode mismatch");
  TapeMatrix r = empty_matrix(m.dom, n.cod, m.mode);
  for (std::size_t j = 0; j < r.rows(); ++j)
    for (std::size_t i = 0; i < r.cols(); ++i) {
      std::vector<Circuit> acc;
      for (std::size_t k = 0; k < m.rows(); ++k)
        for (const CanonCircuit& c : m.entries[k][i].circuits)
          for (const CanonCircuit& d : n.entries[j][k].circuits)
            acc.push_back(cseq(c.term, d.term));
      r.entries[j][i] = make_entry(m.dom.monomials[i], n.cod.monomials[j],
                                   acc, sig, m.mode);
    }
  return r;
}

TapeMatrix mat_oplus(const TapeMatrix& m, const TapeMatrix& n) {
  if (m.mode != n.mode) throw TypeError("mat_oplus: mode mismatch");
  TapeMatrix r;
  r.dom = m.dom + n.dom;
  r.cod = m.cod + n.cod;
  r.mode = m.mode;
  r.entries.assign(r.rows(), {});
  for (std::size_t j = 0; j < r.rows(); ++j)
    for (std::size_t i = 0; i < r.cols(); ++i) {
      bool in_m = j < m.rows() && i < m.cols();
      bool in_n = j >= m.rows() && i >= m.cols();
      if (in_m)
        r.entries[j].push_back(m.entries[j][i]);
      else if (in_n)
        r.entries[j].push_back(n.entries[j - m.rows()][i - m.cols()]);
      else
        r.entries[j].push_back(MonomialEntry{r.dom.monomials[i],
                                             r.cod.monomials[j],
                                             {}});
    }
  return r;
}

TapeMatrix mat_kron(const TapeMatrix& m, const TapeMatrix& n,
                    const MonSignature& sig) {
  if (m.mode != n.mode) throw TypeError("mat_kron: mode mismatch");
  TapeMatrix r = empty_matrix(poly_product(m.dom, n.dom),
                              poly_product(m.cod, n.cod), m.mode);
  for (std::size_t jm = 0; jm < m.rows(); ++jm)
    for (std::size_t jn = 0; jn < n.rows(); ++jn)
      for (std::size_t im = 0; im < m.cols(); ++im)
        for (std::size_t in = 0; in < n.cols(); ++in) {
          std::vector<Circuit> acc;
          for (const CanonCircuit& a : m.entries[jm][im].circuits)
            for (const CanonCircuit& b : n.entries[jn][in].circuits)
              acc.push_back(ctens(a.term, b.term));
          std::size_t j = jm * n.rows() + jn;
          std::size_t i = im * n.cols() + in;
          r.entries[j][i] = make_entry(r.dom.monomials[i],
                                       r.cod.monomials[j], acc, sig, m.mode);
        }
  return r;
}

Tape from_matrix(const TapeMatrix& m) {
  std::size_t n = m.cols(), rows = m.rows();
  if (n == 0 && rows == 0) return tid0();
  if (n == 0) return cobang_poly(m.cod);
  if (rows == 0) return bang_poly(m.dom);

  // Sum of lifted circuits at a fixed entry type; zero when empty.
  auto entry_tape = [&](const MonomialEntry& e) -> Tape {
    if (e.circuits.empty()) return tseq(tbang(e.dom), tcobang(e.cod));
    Tape t = tlift(e.circuits[0].term);
    for (std::size_t k = 1; k < e.circuits.size(); ++k)
      t = tseq(tseq(tdiag(e.dom), toplus(t, tlift(e.circuits[k].term))),
               tcodiag(e.cod));
    return t;
  };

  std::vector<Tape> middle_blocks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rows; ++j)
      middle_blocks.push_back(entry_tape(m.entries[j][i]));
  Tape result = oplus_fold(middle_blocks);

  if (rows != 1) {
    std::vector<Tape> diags;
    for (std::size_t i = 0; i < n; ++i)
      diags.push_back(gen_diag(m.dom.monomials[i], rows));
    result = tseq(oplus_fold(diags), result);
  }
  if (n != 1) result = tseq(result, gen_codiag(m.cod, n));
  return result;
}

bool matrix_equal(const TapeMatrix& a, const TapeMatrix& b) {
  if (a.dom != b.dom || a.cod != b.cod || a.mode != b.mode) return false;
  for (std::size_t j = 0; j < a.rows(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const auto& ca = a.entries[j][i].circuits;
      const auto& cb = b.entries[j][i].circuits;
      if (ca.size() != cb.size()) return false;
      for (std::size_t k = 0; k < ca.size(); ++k)
        if (ca[k].key != cb[k].key) return false;
    }
  return true;
}

MonomialEntry entry(const Tape& t, std::size_t j, std::size_t i,
                    const MonSignature& sig, Mode mode) {
  TapeMatrix m = to_matrix(t, sig, mode);
  if (j < 1 || j > m.rows() || i < 1 || i > m.cols())
    throw Error("entry index (" + std::to_string(j) + "," +
                std::to_string(i) + ") out of range for a " +
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                " matrix");
  return m.entries[j - 1][i - 1];
}

MonomialEntry entry_by_projection(const Tape& t, std::size_t j, std::size_t i,
                                  const MonSignature& sig, Mode mode) {
  auto [p, q] = type_check_tape(t, sig);
  if (j < 1 || j > q.size() || i < 1 || i > p.size())
    throw Error("entry index out of range");
  std::vector<Tape> inj, proj;
  for (std::size_t k = 0; k < p.size(); ++k)
    inj.push_back(k + 1 == i ? tid(p.monomials[k])
                             : tcobang(p.monomials[k]));
  for (std::size_t k = 0; k < q.size(); ++k)
    proj.push_back(k + 1 == j ? tid(q.monomials[k])
                              : tbang(q.monomials[k]));
  Tape composed = tseq(tseq(oplus_fold(inj), t), oplus_fold(proj));
  TapeMatrix m = to_matrix(composed, sig, mode);
  return m.entries[0][0];
}

std::string pretty(const TapeMatrix& m) {
  auto entry_text = [](const MonomialEntry& e) {
    std::string s = "{";
    for (std::size_t k = 0; k < e.circuits.size(); ++k) {
      if (k) s += ", ";
      s += e.circuits[k].text;
    }
    return s + "}";
  };

  std::vector<std::string> row_heads;
  for (const Monomial& u : m.cod.monomials) row_heads.push_back(to_text(u));
  std::vector<std::string> col_heads;
  for (const Monomial& u : m.dom.monomials) col_heads.push_back(to_text(u));

  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<std::size_t> width(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) width[i] = col_heads[i].size();
  std::size_t head_width = 0;
  for (const std::string& h : row_heads)
    head_width = std::max(head_width, h.size());
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) {
      cells[j].push_back(entry_text(m.entries[j][i]));
      width[i] = std::max(width[i], cells[j][i].size());
    }

  std::ostringstream os;
  os << m.rows() << "x" << m.cols() << " matrix (" << to_text(m.mode)
     << "), " << to_text(m.dom) << " -> " << to_text(m.cod) << "\n";
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  os << "  " << pad("", head_width) << " |";
  for (std::size_t i = 0; i < m.cols(); ++i)
    os << " " << pad(col_heads[i], width[i]) << " |";
  os << "\n";
  for (std::size_t j = 0; j < m.rows(); ++j) {
    os << "  " << pad(row_heads[j], head_width) << " |";
    for (std::size_t i = 0; i < m.cols(); ++i)
      os << " " << pad(cells[j][i], width[i]) << " |";
    os << "\n";
  }
  return os.str();
}

std::string to_json(const TapeMatrix& m) {
  nlohmann::json j;
  auto poly_json = [](const Polynomial& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const Monomial& u : p.monomials) a.push_back(u.sorts);
    return a;
  };
  j["dom"] = poly_json(m.dom);
  j["cod"] = poly_json(m.cod);
  j["mode"] = to_text(m.mode);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      nlohmann::json cell = nlohmann::json::array();
      for (const CanonCircuit& cc : m.entries[r][c].circuits)
        cell.push_back(cc.text);
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j.dump(2);
}

}  // namespace tapes
