#include "finmod/hom.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace finmod {

bool HomMap::is_identity() const {
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i] != (int)i) return false;
  return true;
}

bool HomMap::is_zero() const {
  for (int v : table)
    if (v != target->zero) return false;
  return true;
}

HomMap identity_hom(const ModulePtr& m) {
  HomMap f{m, m, std::vector<int>(m->order)};
  for (int i = 0; i < m->order; ++i) f.table[i] = i;
  return f;
}

HomMap zero_hom(const ModulePtr& source, const ModulePtr& target) {
  return HomMap{source, target, std::vector<int>(source->order, target->zero)};
}

HomMap hom_add(const HomMap& f, const HomMap& g) {
  HomMap h{f.source, f.target, std::vector<int>(f.table.size())};
  for (size_t i = 0; i < f.table.size(); ++i)
    h.table[i] = f.target->plus(f.table[i], g.table[i]);
  return h;
}

HomMap hom_compose(const HomMap& f, const HomMap& g) {
  HomMap h{g.source, f.target, std::vector<int>(g.table.size())};
  for (size_t i = 0; i < g.table.size(); ++i) h.table[i] = f.table[g.table[i]];
  return h;
}

namespace {

// Extends a partial map by one forced value; closes the defined part under
// addition and (finite base) scalar action. Returns false on conflict.
bool close_partial(const ModuleTable& src, const ModuleTable& dst,
                   std::vector<int>& map, std::vector<int>& defined,
                   int x, int v) {
  size_t start = defined.size();
  if (map[x] >= 0) {
    if (map[x] != v) return false;
  } else {
    map[x] = v;
    defined.push_back(x);
  }
  const bool finite = !src.base->is_integers();
  const int ro = finite ? src.base->table().order : 0;
  for (size_t i = start; i < defined.size(); ++i) {
    int a = defined[i];
    for (size_t j = 0; j < defined.size(); ++j) {
      int b = defined[j];
      int c = src.plus(a, b);
      int w = dst.plus(map[a], map[b]);
      if (map[c] < 0) {
        map[c] = w;
        defined.push_back(c);
      } else if (map[c] != w) {
        return false;
      }
    }
    if (finite) {
      for (int r = 0; r < ro; ++r) {
        int c = src.apply(a, r);
        int w = dst.apply(map[a], r);
        if (map[c] < 0) {
          map[c] = w;
          defined.push_back(c);
        } else if (map[c] != w) {
          return false;
        }
      }
    } else {
      int c = src.neg(a);
      int w = dst.neg(map[a]);
      if (map[c] < 0) {
        map[c] = w;
        defined.push_back(c);
      } else if (map[c] != w) {
        return false;
      }
    }
  }
  return true;
}

void hom_search(const ModulePtr& m, const ModulePtr& n,
                const std::vector<int>& gens, size_t k,
                const std::vector<int>& map, const std::vector<int>& defined,
                std::vector<HomMap>& out) {
  if (k == gens.size()) {
    // generators generate M, so the map is total here
    out.push_back(HomMap{m, n, map});
    return;
  }
  for (int y = 0; y < n->order; ++y) {
    std::vector<int> map2 = map;
    std::vector<int> defined2 = defined;
    if (close_partial(*m, *n, map2, defined2, gens[k], y))
      hom_search(m, n, gens, k + 1, map2, defined2, out);
  }
}

}  // namespace

std::vector<HomMap> hom_set(const ModulePtr& m, const ModulePtr& n,
                            long long bound) {
  if (!same_base(*m, *n))
    throw ArgumentError("hom_set requires the same base ring");
  auto gens = minimal_generating_set(*m);
  long long space = 1;
  for (size_t i = 0; i < gens.size(); ++i) {
    space *= n->order;
    if (space > bound)
      throw SizeLimitError("hom search space exceeds bound " +
                           std::to_string(bound));
  }
  std::vector<int> map(m->order, -1);
  std::vector<int> defined;
  map[m->zero] = n->zero;
  defined.push_back(m->zero);
  std::vector<HomMap> out;
  hom_search(m, n, gens, 0, map, defined, out);
  std::sort(out.begin(), out.end(),
            [](const HomMap& a, const HomMap& b) { return a.table < b.table; });
  return out;
}

std::vector<HomMap> end_homs(const ModulePtr& m, long long bound) {
  return hom_set(m, m, bound);
}

EndRing end_ring(const ModulePtr& m, int table_bound) {
  EndRing s;
  s.module = m;
  s.elements = end_homs(m);
  int e = (int)s.elements.size();
  if (e > table_bound)
    throw SizeLimitError("endomorphism ring order " + std::to_string(e) +
                         " exceeds table bound " + std::to_string(table_bound));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < e; ++i) index[s.elements[i].table] = i;
  s.ring.order = e;
  s.ring.add.resize((size_t)e * e);
  s.ring.mul.resize((size_t)e * e);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      s.ring.add[(size_t)i * e + j] =
          index.at(hom_add(s.elements[i], s.elements[j]).table);
      s.ring.mul[(size_t)i * e + j] =
          index.at(hom_compose(s.elements[i], s.elements[j]).table);
    }
  s.ring.zero = 0;  // the zero map sorts first
  for (int i = 0; i < e; ++i)
    if (s.elements[i].is_identity()) s.ring.one = i;
  return s;
}

Bits kernel(const HomMap& f) {
  Bits k(f.source->order);
  for (int x = 0; x < f.source->order; ++x)
    if (f.table[x] == f.target->zero) k.set(x);
  return k;
}

Bits image(const HomMap& f) {
  Bits i(f.target->order);
  for (int x = 0; x < f.source->order; ++x) i.set(f.table[x]);
  return i;
}

Bits preimage(const HomMap& f, const Bits& k) {
  if (!is_submodule(*f.target, k))
    throw ArgumentError("preimage requires a submodule of the target");
  Bits p(f.source->order);
  for (int x = 0; x < f.source->order; ++x)
    if (k.test(f.table[x])) p.set(x);
  return p;
}

bool is_relatively_injective(const ModulePtr& a, const ModulePtr& b) {
  auto extensions = hom_set(b, a);
  auto lat = all_submodules(b);
  for (const Bits& k : lat.all) {
    auto sub = restrict_to_submodule(b, k);
    auto homs = hom_set(sub.mod, a);
    for (const HomMap& h : homs) {
      bool extendable = false;
      for (const HomMap& big : extensions) {
        bool agrees = true;
        for (int i = 0; i < sub.mod->order && agrees; ++i)
          agrees = big.table[sub.to_parent[i]] == h.table[i];
        if (agrees) {
          extendable = true;
          break;
        }
      }
      if (!extendable) return false;
    }
  }
  return true;
}

bool is_quasi_injective(const ModulePtr& m) {
  return is_relatively_injective(m, m);
}

bool is_quasi_projective(const ModulePtr& m) {
  auto endos = end_homs(m);
  auto lat = all_submodules(m);
  for (const Bits& n : lat.all) {
    auto q = quotient_module(m, n);
    for (const HomMap& g : hom_set(m, q.mod)) {
      bool lifts = false;
      for (const HomMap& f : endos) {
        bool agrees = true;
        for (int x = 0; x < m->order && agrees; ++x)
          agrees = q.proj[f.table[x]] == g.table[x];
        if (agrees) {
          lifts = true;
          break;
        }
      }
      if (!lifts) return false;
    }
  }
  return true;
}

bool is_injective_module(const ModulePtr& m) {
  if (m->base->is_integers())
    throw UnsupportedError("injectivity test requires a finite base ring");
  const RingTable& r = m->base->table();
  auto reg = regular_module(m->base);
  // homs R -> M are exactly x |-> y*x for y in M, so extension is a search
  // over candidate images of 1
  for (const Bits& ideal : right_ideals(m->base)) {
    auto sub = restrict_to_submodule(reg, ideal);
    for (const HomMap& h : hom_set(sub.mod, m)) {
      bool extends = false;
      for (int y = 0; y < m->order && !extends; ++y) {
        bool agrees = true;
        for (int i = 0; i < sub.mod->order && agrees; ++i)
          agrees = m->apply(y, sub.to_parent[i]) == h.table[i];
        extends = agrees;
      }
      if (!extends) return false;
    }
  }
  return true;
}

bool is_projective_module(const ModulePtr& m) {
  if (m->base->is_integers())
    throw UnsupportedError("projectivity test requires a finite base ring");
  auto gens = minimal_generating_set(*m);
  if (gens.empty()) return true;  // zero module
  auto reg = regular_module(m->base);
  ModulePtr free = reg;
  std::vector<std::vector<int>> projections;  // free index -> coordinate
  projections.push_back({});
  {
    std::vector<int> id(reg->order);
    for (int i = 0; i < reg->order; ++i) id[i] = i;
    projections[0] = id;
  }
  for (size_t i = 1; i < gens.size(); ++i) {
    DirectSum ds = direct_sum(free, reg);
    for (auto& p : projections) {
      std::vector<int> lifted(ds.sum->order);
      for (int x = 0; x < ds.sum->order; ++x) lifted[x] = p[ds.proj1[x]];
      p = lifted;
    }
    std::vector<int> last(ds.sum->order);
    for (int x = 0; x < ds.sum->order; ++x) last[x] = ds.proj2[x];
    projections.push_back(last);
    free = ds.sum;
  }
  // canonical surjection p(r_1..r_g) = sum gens[i] * r_i
  std::vector<int> p(free->order);
  for (int x = 0; x < free->order; ++x) {
    int acc = m->zero;
    for (size_t i = 0; i < gens.size(); ++i)
      acc = m->plus(acc, m->apply(gens[i], projections[i][x]));
    p[x] = acc;
  }
  for (const HomMap& s : hom_set(m, free)) {
    bool splits = true;
    for (int x = 0; x < m->order && splits; ++x)
      splits = p[s.table[x]] == x;
    if (splits) return true;
  }
  return false;
}

bool modules_isomorphic(const ModulePtr& a, const ModulePtr& b) {
  if (a->order != b->order || !same_base(*a, *b)) return false;
  // cheap invariant: multiset of element orders
  std::vector<int> oa, ob;
  for (int i = 0; i < a->order; ++i) oa.push_back(a->elem_order(i));
  for (int i = 0; i < b->order; ++i) ob.push_back(b->elem_order(i));
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return false;
  for (const HomMap& f : hom_set(a, b)) {
    Bits img = image(f);
    if (img.count() == b->order) return true;  // surjective + equal order
  }
  return false;
}

}  // namespace finmod
