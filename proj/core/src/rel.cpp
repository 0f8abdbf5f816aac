#include "tapes/rel.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "json.hpp"

namespace tapes {

Interpretation interpretation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(std::string("interpretation JSON: ") + e.what());
  }
  Interpretation in;
  if (!j.contains("carrier") || !j["carrier"].is_object())
    throw ModelError("interpretation JSON: missing 'carrier' object");
  for (auto& [k, v] : j["carrier"].items()) {
    if (!v.is_number_integer() || v.get<int>() < 1)
      throw ModelError("carrier of sort '" + k + "' must be a positive int");
    in.carrier[k] = v.get<int>();
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_object())
      throw ModelError("interpretation JSON: 'relations' must be an object");
    for (auto& [name, prs] : j["relations"].items()) {
      auto& out = in.relations[name];
      if (!prs.is_array())
        throw ModelError("relation '" + name + "' must be an array of pairs");
      for (auto& pr : prs) {
        if (!pr.is_array() || pr.size() != 2)
          throw ModelError("relation '" + name +
                           "': each element must be a [tuple, tuple] pair");
        out.emplace_back(pr[0].get<std::vector<int>>(),
                         pr[1].get<std::vector<int>>());
      }
    }
  }
  return in;
}

std::string to_json(const Interpretation& in) {
  nlohmann::json j;
  j["carrier"] = nlohmann::json::object();
  for (auto& [s, n] : in.carrier) j["carrier"][s] = n;
  j["relations"] = nlohmann::json::object();
  for (auto& [name, prs] : in.relations) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& [x, y] : prs) a.push_back({x, y});
    j["relations"][name] = a;
  }
  return j.dump(2);
}

namespace {
int carrier_of(const Interpretation& in, const Sort& s) {
  auto it = in.carrier.find(s);
  if (it == in.carrier.end())
    throw ModelError("no carrier for sort '" + s + "'");
  return it->second;
}

long long mono_size_of(const Monomial& u, const Interpretation& in) {
  long long n = 1;
  for (const Sort& s : u.sorts) n *= carrier_of(in, s);
  return n;
}

long long mono_index(const Monomial& u, const std::vector<int>& values,
                     const Interpretation& in) {
  if (values.size() != u.size())
    throw ModelError("tuple length mismatch for monomial '" + to_text(u) +
                     "'");
  long long idx = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    int n = carrier_of(in, u.sorts[k]);
    if (values[k] < 0 || values[k] >= n)
      throw ModelError("tuple component out of carrier range");
    idx = idx * n + values[k];
  }
  return idx;
}

std::vector<int> mono_tuple(const Monomial& u, long long idx,
                            const Interpretation& in) {
  std::vector<int> vals(u.size());
  for (std::size_t k = u.size(); k-- > 0;) {
    int n = carrier_of(in, u.sorts[k]);
    vals[k] = static_cast<int>(idx % n);
    idx /= n;
  }
  return vals;
}
}  // namespace

Space make_space(const Polynomial& p, const Interpretation& in) {
  Space s;
  s.poly = p;
  long long off = 0;
  for (const Monomial& u : p.monomials) {
    s.mono_size.push_back(mono_size_of(u, in));
    s.offset.push_back(off);
    off += s.mono_size.back();
  }
  s.total = off;
  return s;
}

long long index_of(const Space& s, const TaggedTuple& t,
                   const Interpretation& in) {
  if (t.summand >= s.poly.size()) throw ModelError("summand tag out of range");
  return s.offset[t.summand] +
         mono_index(s.poly.monomials[t.summand], t.values, in);
}

TaggedTuple tuple_of(const Space& s, long long flat,
                     const Interpretation& in) {
  if (flat < 0 || flat >= s.total)
    throw ModelError("flat index out of range");
  for (std::size_t i = s.poly.size(); i-- > 0;) {
    if (flat >= s.offset[i]) {
      return {i, mono_tuple(s.poly.monomials[i], flat - s.offset[i], in)};
    }
  }
  throw ModelError("flat index out of range");
}

FiniteRelation rel_empty(Space dom, Space cod) {
  FiniteRelation r;
  r.dom = std::move(dom);
  r.cod = std::move(cod);
  r.words = static_cast<std::size_t>((r.cod.total + 63) / 64);
  r.bits.assign(static_cast<std::size_t>(r.dom.total) * r.words, 0);
  return r;
}

FiniteRelation rel_identity(const Space& s) {
  FiniteRelation r = rel_empty(s, s);
  for (long long x = 0; x < s.total; ++x) r.set(x, x);
  return r;
}

FiniteRelation rel_compose(const FiniteRelation& r, const FiniteRelation& s) {
  assert(r.cod.total == s.dom.total);
  FiniteRelation out = rel_empty(r.dom, s.cod);
  for (long long x = 0; x < r.dom.total; ++x) {
    for (long long y = 0; y < r.cod.total; ++y) {
      if (!r.get(x, y)) continue;
      for (std::size_t w = 0; w < out.words; ++w)
        out.bits[x * out.words + w] |= s.bits[y * s.words + w];
    }
  }
  return out;
}

FiniteRelation rel_converse(const FiniteRelation& r) {
  FiniteRelation out = rel_empty(r.cod, r.dom);
  for (long long x = 0; x < r.dom.total; ++x)
    for (long long y = 0; y < r.cod.total; ++y)
      if (r.get(x, y)) out.set(y, x);
  return out;
}

FiniteRelation rel_union(const FiniteRelation& r, const FiniteRelation& s) {
  assert(r.bits.size() == s.bits.size());
  FiniteRelation out = r;
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] |= s.bits[i];
  return out;
}

FiniteRelation rel_intersect(const FiniteRelation& r,
                             const FiniteRelation& s) {
  assert(r.bits.size() == s.bits.size());
  FiniteRelation out = r;
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] &= s.bits[i];
  return out;
}

FiniteRelation rel_oplus(const FiniteRelation& r, const FiniteRelation& s) {
  Space dom, cod;
  dom.poly = r.dom.poly + s.dom.poly;
  cod.poly = r.cod.poly + s.cod.poly;
  auto shift = [](Space& out, const Space& a, const Space& b) {
    out.mono_size = a.mono_size;
    out.offset = a.offset;
    for (std::size_t i = 0; i < b.mono_size.size(); ++i) {
      out.mono_size.push_back(b.mono_size[i]);
      out.offset.push_back(a.total + b.offset[i]);
    }
    out.total = a.total + b.total;
  };
  shift(dom, r.dom, s.dom);
  shift(cod, r.cod, s.cod);
  FiniteRelation out = rel_empty(dom, cod);
  for (long long x = 0; x < r.dom.total; ++x)
    for (long long y = 0; y < r.cod.total; ++y)
      if (r.get(x, y)) out.set(x, y);
  for (long long x = 0; x < s.dom.total; ++x)
    for (long long y = 0; y < s.cod.total; ++y)
      if (s.get(x, y)) out.set(r.dom.total + x, r.cod.total + y);
  return out;
}

FiniteRelation rel_product(const FiniteRelation& r, const FiniteRelation& s,
                           const Interpretation& in) {
  assert(r.dom.poly.size() == 1 && r.cod.poly.size() == 1);
  assert(s.dom.poly.size() == 1 && s.cod.poly.size() == 1);
  Space dom = make_space(poly_product(r.dom.poly, s.dom.poly), in);
  Space cod = make_space(poly_product(r.cod.poly, s.cod.poly), in);
  FiniteRelation out = rel_empty(dom, cod);
  for (long long x1 = 0; x1 < r.dom.total; ++x1)
    for (long long y1 = 0; y1 < r.cod.total; ++y1) {
      if (!r.get(x1, y1)) continue;
      for (long long x2 = 0; x2 < s.dom.total; ++x2)
        for (long long y2 = 0; y2 < s.cod.total; ++y2)
          if (s.get(x2, y2))
            out.set(x1 * s.dom.total + x2, y1 * s.cod.total + y2);
    }
  return out;
}

bool rel_subset(const FiniteRelation& r, const FiniteRelation& s) {
  assert(r.bits.size() == s.bits.size());
  for (std::size_t i = 0; i < r.bits.size(); ++i)
    if (r.bits[i] & ~s.bits[i]) return false;
  return true;
}

bool rel_equal(const FiniteRelation& r, const FiniteRelation& s) {
  return r.bits == s.bits && r.dom.poly == s.dom.poly &&
         r.cod.poly == s.cod.poly;
}

std::vector<std::pair<TaggedTuple, TaggedTuple>> FiniteRelation::pairs(
    const Interpretation& in) const {
  std::vector<std::pair<TaggedTuple, TaggedTuple>> out;
  for (long long x = 0; x < dom.total; ++x)
    for (long long y = 0; y < cod.total; ++y)
      if (get(x, y)) out.emplace_back(tuple_of(dom, x, in),
                                      tuple_of(cod, y, in));
  return out;
}

FiniteRelation eval_circuit(const Circuit& c, const Interpretation& in,
                            const MonSignature& sig) {
  auto [d, co] = type_check_circuit(c, sig);
  auto mono_space = [&](const Monomial& u) {
    return make_space(Polynomial(u), in);
  };
  switch (c->kind) {
    case CircKind::Id:
    case CircKind::IdUnit:
      return rel_identity(mono_space(d));
    case CircKind::Gen: {
      const Generator& g = sig.generator(c->sort_a);
      auto it = in.relations.find(g.name);
      if (it == in.relations.end())
        throw ModelError("generator '" + g.name + "' not interpreted");
      FiniteRelation r =
          rel_empty(mono_space(g.arity), mono_space(g.coarity));
      for (const auto& [xs, ys] : it->second)
        r.set(mono_index(g.arity, xs, in), mono_index(g.coarity, ys, in));
      return r;
    }
    case CircKind::Sym: {
      int na = carrier_of(in, c->sort_a), nb = carrier_of(in, c->sort_b);
      FiniteRelation r = rel_empty(mono_space(d), mono_space(co));
      for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
          r.set(static_cast<long long>(a) * nb + b,
                static_cast<long long>(b) * na + a);
      return r;
    }
    case CircKind::Copier: {
      int n = carrier_of(in, c->sort_a);
      FiniteRelation r = rel_empty(mono_space(d), mono_space(co));
      for (int a = 0; a < n; ++a)
        r.set(a, static_cast<long long>(a) * n + a);
      return r;
    }
    case CircKind::Discharger: {
      int n = carrier_of(in, c->sort_a);
      FiniteRelation r = rel_empty(mono_space(d), mono_space(co));
      for (int a = 0; a < n; ++a) r.set(a, 0);
      return r;
    }
    case CircKind::Cocopier: {
      int n = carrier_of(in, c->sort_a);
      FiniteRelation r = rel_empty(mono_space(d), mono_space(co));
      for (int a = 0; a < n; ++a)
        r.set(static_cast<long long>(a) * n + a, a);
      return r;
    }
    case CircKind::Codischarger: {
      int n = carrier_of(in, c->sort_a);
      FiniteRelation r = rel_empty(mono_space(d), mono_space(co));
      for (int a = 0; a < n; ++a) r.set(0, a);
      return r;
    }
    case CircKind::Seq:
      return rel_compose(eval_circuit(c->a, in, sig),
                         eval_circuit(c->b, in, sig));
    case CircKind::Tensor:
      return rel_product(eval_circuit(c->a, in, sig),
                         eval_circuit(c->b, in, sig), in);
  }
  throw TypeError("malformed circuit node");
}

FiniteRelation eval_tape(const Tape& t, const Interpretation& in,
                         const MonSignature& sig) {
  auto mono_space = [&](const Monomial& u) {
    return make_space(Polynomial(u), in);
  };
  switch (t->kind) {
    case TapeKind::IdMon:
      return rel_identity(mono_space(t->u));
    case TapeKind::IdZero:
      return rel_empty(make_space(Polynomial(), in),
                       make_space(Polynomial(), in));
    case TapeKind::Lift:
      return eval_circuit(t->circ, in, sig);
    case TapeKind::SymPlus: {
      Space dom = make_space(Polynomial(t->u) + Polynomial(t->v), in);
      Space cod = make_space(Polynomial(t->v) + Polynomial(t->u), in);
      FiniteRelation r = rel_empty(dom, cod);
      long long nu = dom.mono_size[0], nv = dom.mono_size[1];
      for (long long x = 0; x < nu; ++x) r.set(x, nv + x);
      for (long long x = 0; x < nv; ++x) r.set(nu + x, x);
      return r;
    }
    case TapeKind::Seq:
      return rel_compose(eval_tape(t->a, in, sig), eval_tape(t->b, in, sig));
    case TapeKind::Oplus:
      return rel_oplus(eval_tape(t->a, in, sig), eval_tape(t->b, in, sig));
    case TapeKind::Bang:
      return rel_empty(mono_space(t->u), make_space(Polynomial(), in));
    case TapeKind::Diag: {
      Space dom = mono_space(t->u);
      Space cod = make_space(Polynomial(t->u) + Polynomial(t->u), in);
      FiniteRelation r = rel_empty(dom, cod);
      for (long long x = 0; x < dom.total; ++x) {
        r.set(x, x);
        r.set(x, dom.total + x);
      }
      return r;
    }
    case TapeKind::Cobang:
      return rel_empty(make_space(Polynomial(), in), mono_space(t->u));
    case TapeKind::Codiag: {
      Space dom = make_space(Polynomial(t->u) + Polynomial(t->u), in);
      Space cod = mono_space(t->u);
      FiniteRelation r = rel_empty(dom, cod);
      for (long long x = 0; x < cod.total; ++x) {
        r.set(x, x);
        r.set(cod.total + x, x);
      }
      return r;
    }
  }
  throw TypeError("malformed tape node");
}

std::string to_json(const FiniteRelation& r, const Interpretation& in) {
  nlohmann::json j;
  auto poly_json = [](const Polynomial& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const Monomial& u : p.monomials) a.push_back(u.sorts);
    return a;
  };
  j["dom"] = poly_json(r.dom.poly);
  j["cod"] = poly_json(r.cod.poly);
  bool simple = r.dom.poly.size() == 1 && r.cod.poly.size() == 1;
  nlohmann::json prs = nlohmann::json::array();
  for (const auto& [x, y] : r.pairs(in)) {
    if (simple)
      prs.push_back({x.values, y.values});
    else
      prs.push_back({{x.summand, x.values}, {y.summand, y.values}});
  }
  j["pairs"] = prs;
  return j.dump(2);
}

namespace {

/** All generator relation slots of the signature, flattened to a bit vector:
 * generator g contributes |dom(g)| × |cod(g)| bits. */
struct RelationLayout {
  struct Slot {
    std::string name;
    long long dom_size, cod_size;
  };
  std::vector<Slot> slots;
  long long total_bits = 0;
};

RelationLayout layout_of(const MonSignature& sig, const Interpretation& in) {
  RelationLayout lay;
  for (const Generator& g : sig.generators) {
    long long ds = mono_size_of(g.arity, in);
    long long cs = mono_size_of(g.coarity, in);
    lay.slots.push_back({g.name, ds, cs});
    lay.total_bits += ds * cs;
  }
  return lay;
}

}  // namespace

std::optional<Interpretation> search_counterexample(
    const Tape& t, const Tape& s, const MonSignature& sig,
    const SearchOptions& opts) {
  long long remaining = opts.budget;
  std::mt19937_64 rng(opts.seed);

  for (int size = 1; size <= opts.max_carrier && remaining > 0; ++size) {
    Interpretation in;
    for (const Sort& so : sig.sorts) in.carrier[so] = size;
    RelationLayout lay = layout_of(sig, in);

    // Decode a bitmask into relation pair lists (MSB-first lexicographic).
    auto decode = [&](unsigned long long mask) {
      in.relations.clear();
      long long bit = lay.total_bits;
      for (const auto& slot : lay.slots) {
        const Generator& g = sig.generator(slot.name);
        auto& prs = in.relations[slot.name];
        for (long long x = 0; x < slot.dom_size; ++x)
          for (long long y = 0; y < slot.cod_size; ++y) {
            --bit;
            if ((mask >> bit) & 1)
              prs.emplace_back(mono_tuple(g.arity, x, in),
                               mono_tuple(g.coarity, y, in));
          }
      }
    };

    auto check = [&]() -> bool {
      FiniteRelation rt = eval_tape(t, in, sig);
      FiniteRelation rs = eval_tape(s, in, sig);
      return !rel_subset(rt, rs);
    };

    if (lay.total_bits >= 63) {
      // Assignment space far beyond any realistic budget: sample.
      std::uniform_int_distribution<unsigned long long> dist;
      for (; remaining > 0; --remaining) {
        decode(dist(rng));
        if (check()) return in;
      }
      break;
    }
    unsigned long long count = 1ull << lay.total_bits;
    if (static_cast<long long>(count) <= remaining) {
      for (unsigned long long mask = 0; mask < count; ++mask) {
        decode(mask);
        if (check()) return in;
      }
      remaining -= static_cast<long long>(count);
    } else {
      std::uniform_int_distribution<unsigned long long> dist(0, count - 1);
      for (; remaining > 0; --remaining) {
        decode(dist(rng));
        if (check()) return in;
      }
    }
  }
  return std::nullopt;
}

}  // namespace tapes
