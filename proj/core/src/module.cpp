#include "finmod/module.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>

namespace finmod {

int ModuleTable::neg(int a) const {
  for (int b = 0; b < order; ++b)
    if (plus(a, b) == zero) return b;
  return -1;
}

int ModuleTable::apply_int(int m, long long n) const {
  int x = m;
  if (n < 0) {
    x = neg(x);
    n = -n;
  }
  int acc = zero;
  while (n > 0) {
    if (n & 1) acc = plus(acc, x);
    x = plus(x, x);
    n >>= 1;
  }
  return acc;
}

int ModuleTable::elem_order(int m) const {
  int acc = m;
  int t = 1;
  while (acc != zero) {
    acc = plus(acc, m);
    ++t;
  }
  return t;
}

void ModuleTable::validate() const {
  if (order <= 0) throw ValidationError("module order must be positive");
  if ((int)add.size() != order * order)
    throw ValidationError("module add table size mismatch");
  if (zero != 0) throw ValidationError("module zero must be element 0");
  for (int a = 0; a < order; ++a) {
    if (plus(a, zero) != a)
      throw ValidationError("additive identity fails at " + std::to_string(a));
    std::vector<bool> seen(order, false);
    for (int b = 0; b < order; ++b) {
      int v = plus(a, b);
      if (v < 0 || v >= order || seen[v])
        throw ValidationError("add row not a permutation at " +
                              std::to_string(a));
      seen[v] = true;
    }
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      if (plus(a, b) != plus(b, a))
        throw ValidationError("module addition not commutative");
      for (int c = 0; c < order; ++c)
        if (plus(plus(a, b), c) != plus(a, plus(b, c)))
          throw ValidationError("module addition not associative");
    }
  if (base->is_integers()) return;  // action derived from addition
  const RingTable& r = base->table();
  if ((int)act.size() != order * r.order)
    throw ValidationError("module action table size mismatch");
  for (int m = 0; m < order; ++m) {
    if (apply(m, r.one) != m)
      throw ValidationError("unital action fails at " + std::to_string(m));
    for (int s = 0; s < r.order; ++s) {
      for (int t = 0; t < r.order; ++t) {
        if (apply(apply(m, s), t) != apply(m, r.times(s, t)))
          throw ValidationError("action associativity fails");
        if (apply(m, r.plus(s, t)) != plus(apply(m, s), apply(m, t)))
          throw ValidationError("action distributivity over ring fails");
      }
      for (int m2 = 0; m2 < order; ++m2)
        if (apply(plus(m, m2), s) != plus(apply(m, s), apply(m2, s)))
          throw ValidationError("action distributivity over module fails");
    }
  }
}

bool same_base(const ModuleTable& a, const ModuleTable& b) {
  if (a.base->is_integers() != b.base->is_integers()) return false;
  if (a.base->is_integers()) return true;
  if (a.base.get() == b.base.get()) return true;
  const RingTable &ra = a.base->table(), &rb = b.base->table();
  return ra.order == rb.order && ra.add == rb.add && ra.mul == rb.mul &&
         ra.one == rb.one;
}

ModulePtr regular_module(const RingPtr& rp) {
  const RingTable& r = rp->table();  // throws on integer backend
  auto m = std::make_shared<ModuleTable>();
  m->base = rp;
  m->order = r.order;
  m->add = r.add;
  m->act = r.mul;  // right multiplication
  m->zero = r.zero;
  return m;
}

ModulePtr zbackend_module(const std::vector<int>& invariants, int bound) {
  long long n = 1;
  for (int d : invariants) {
    if (d < 2) throw ArgumentError("invariant factors must be >= 2");
    n *= d;
    if (n > bound)
      throw SizeLimitError("abelian group order exceeds bound " +
                           std::to_string(bound));
  }
  int k = (int)invariants.size();
  auto m = std::make_shared<ModuleTable>();
  m->base = BaseRing::integers();
  m->order = (int)n;
  m->add.resize(n * n);
  auto decode = [&](int x) {
    std::vector<int> e(k);
    for (int i = k - 1; i >= 0; --i) {
      e[i] = x % invariants[i];
      x /= invariants[i];
    }
    return e;
  };
  auto encode = [&](const std::vector<int>& e) {
    int x = 0;
    for (int i = 0; i < k; ++i) x = x * invariants[i] + e[i];
    return x;
  };
  for (int a = 0; a < m->order; ++a) {
    auto ea = decode(a);
    for (int b = 0; b < m->order; ++b) {
      auto eb = decode(b);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (ea[i] + eb[i]) % invariants[i];
      m->add[a * m->order + b] = encode(s);
    }
  }
  m->zero = 0;
  return m;
}

DirectSum direct_sum(const ModulePtr& m1, const ModulePtr& m2, int bound) {
  if (!same_base(*m1, *m2))
    throw ArgumentError("direct sum requires the same base ring");
  long long n = (long long)m1->order * m2->order;
  if (n > bound)
    throw SizeLimitError("direct sum order " + std::to_string(n) +
                         " exceeds bound " + std::to_string(bound));
  auto m = std::make_shared<ModuleTable>();
  m->base = m1->base;
  m->order = (int)n;
  m->add.resize(n * n);
  auto pack = [&](int a, int b) { return a * m2->order + b; };
  for (int a1 = 0; a1 < m1->order; ++a1)
    for (int a2 = 0; a2 < m2->order; ++a2)
      for (int b1 = 0; b1 < m1->order; ++b1)
        for (int b2 = 0; b2 < m2->order; ++b2)
          m->add[pack(a1, a2) * m->order + pack(b1, b2)] =
              pack(m1->plus(a1, b1), m2->plus(a2, b2));
  m->zero = 0;
  if (!m1->base->is_integers()) {
    int ro = m1->base->table().order;
    m->act.resize(n * ro);
    for (int a1 = 0; a1 < m1->order; ++a1)
      for (int a2 = 0; a2 < m2->order; ++a2)
        for (int r = 0; r < ro; ++r)
          m->act[pack(a1, a2) * ro + r] =
              pack(m1->apply(a1, r), m2->apply(a2, r));
  }
  DirectSum out;
  out.sum = m;
  out.inj1.resize(m1->order);
  out.inj2.resize(m2->order);
  out.proj1.resize(m->order);
  out.proj2.resize(m->order);
  for (int a = 0; a < m1->order; ++a) out.inj1[a] = pack(a, m2->zero);
  for (int b = 0; b < m2->order; ++b) out.inj2[b] = pack(m1->zero, b);
  for (int a = 0; a < m1->order; ++a)
    for (int b = 0; b < m2->order; ++b) {
      out.proj1[pack(a, b)] = a;
      out.proj2[pack(a, b)] = b;
    }
  return out;
}

Quotient quotient_module(const ModulePtr& m, const Bits& n) {
  if (!is_submodule(*m, n))
    throw ArgumentError("quotient requires a submodule");
  std::vector<int> rep(m->order, -1);
  std::vector<int> reps;
  for (int a = 0; a < m->order; ++a) {
    if (rep[a] >= 0) continue;
    for (int i : n.elements()) rep[m->plus(a, i)] = a;
    reps.push_back(a);
  }
  std::vector<int> idx(m->order, -1);
  for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = (int)i;

  auto q = std::make_shared<ModuleTable>();
  q->base = m->base;
  q->order = (int)reps.size();
  q->add.resize(q->order * q->order);
  for (int i = 0; i < q->order; ++i)
    for (int j = 0; j < q->order; ++j)
      q->add[i * q->order + j] = idx[rep[m->plus(reps[i], reps[j])]];
  q->zero = 0;
  if (!m->base->is_integers()) {
    int ro = m->base->table().order;
    q->act.resize(q->order * ro);
    for (int i = 0; i < q->order; ++i)
      for (int r = 0; r < ro; ++r)
        q->act[i * ro + r] = idx[rep[m->apply(reps[i], r)]];
  }
  Quotient out;
  out.mod = q;
  out.proj.resize(m->order);
  for (int a = 0; a < m->order; ++a) out.proj[a] = idx[rep[a]];
  return out;
}

Bits submodule_generated(const ModuleTable& m, const std::vector<int>& gens) {
  Bits s(m.order);
  s.set(m.zero);
  std::deque<int> work;
  auto push = [&](int x) {
    if (!s.test(x)) {
      s.set(x);
      work.push_back(x);
    }
  };
  for (int g : gens) push(g);
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    for (int y : s.elements()) push(m.plus(x, y));
    if (!m.base->is_integers()) {
      int ro = m.base->table().order;
      for (int r = 0; r < ro; ++r) push(m.apply(x, r));
    } else {
      push(m.neg(x));  // integer action is generated by +-1
    }
  }
  return s;
}

bool is_submodule(const ModuleTable& m, const Bits& s) {
  if (s.size() != m.order || !s.test(m.zero)) return false;
  auto elems = s.elements();
  for (int a : elems) {
    for (int b : elems)
      if (!s.test(m.plus(a, b))) return false;
    if (m.base->is_integers()) {
      if (!s.test(m.neg(a))) return false;
    } else {
      int ro = m.base->table().order;
      for (int r = 0; r < ro; ++r)
        if (!s.test(m.apply(a, r))) return false;
    }
  }
  return true;
}

Bits submodule_sum(const ModuleTable& m, const Bits& a, const Bits& b) {
  Bits s(m.order);
  for (int x : a.elements())
    for (int y : b.elements()) s.set(m.plus(x, y));
  return s;
}

SubmoduleLattice all_submodules(const ModulePtr& m, int guard) {
  std::set<Bits> found;
  Bits zero(m->order);
  zero.set(m->zero);
  found.insert(zero);
  std::vector<Bits> cyclics;
  for (int x = 0; x < m->order; ++x) {
    Bits c = submodule_generated(*m, {x});
    if (found.insert(c).second) cyclics.push_back(c);
  }
  std::deque<Bits> work(found.begin(), found.end());
  while (!work.empty()) {
    Bits s = work.front();
    work.pop_front();
    for (const Bits& c : cyclics) {
      if (s.contains(c)) continue;
      Bits t = submodule_sum(*m, s, c);
      if (found.insert(t).second) {
        if ((int)found.size() > guard)
          throw SizeLimitError("submodule lattice exceeds guard of " +
                               std::to_string(guard));
        work.push_back(t);
      }
    }
  }
  SubmoduleLattice out;
  out.parent = m;
  out.all.assign(found.begin(), found.end());
  return out;
}

std::optional<Bits> find_complement(const ModuleTable& m, const Bits& k,
                                    const std::vector<Bits>& lattice) {
  long long target = m.order;
  long long kc = k.count();
  for (const Bits& n : lattice) {
    if (kc * n.count() != target) continue;
    if ((k & n).count() != 1) continue;
    // |K||N| = |M| and K cap N = 0 imply K + N = M for finite subgroups
    return n;
  }
  return std::nullopt;
}

bool is_direct_summand(const ModulePtr& m, const Bits& k) {
  auto lat = all_submodules(m);
  return find_complement(*m, k, lat.all).has_value();
}

std::vector<int> minimal_generating_set(const ModuleTable& m) {
  std::vector<int> gens;
  Bits cur = submodule_generated(m, gens);
  for (int x = 0; x < m.order; ++x)
    if (!cur.test(x)) {
      gens.push_back(x);
      cur = submodule_generated(m, gens);
    }
  // drop generators made redundant by later ones
  for (size_t i = 0; i < gens.size();) {
    std::vector<int> rest;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (submodule_generated(m, rest).count() == m.order)
      gens = rest;
    else
      ++i;
  }
  return gens;
}

bool is_essential_submodule(const ModuleTable& m, const Bits& n,
                            const Bits& in_) {
  if (!in_.contains(n))
    throw ArgumentError("essentiality requires n <= in_");
  for (int x : in_.elements()) {
    if (x == m.zero) continue;
    Bits c = submodule_generated(m, {x});
    bool meets = false;
    for (int y : c.elements())
      if (y != m.zero && n.test(y)) {
        meets = true;
        break;
      }
    if (!meets) return false;
  }
  return true;
}

RestrictedModule restrict_to_submodule(const ModulePtr& m, const Bits& s) {
  if (!is_submodule(*m, s))
    throw ArgumentError("restriction requires a submodule");
  RestrictedModule out;
  out.to_parent = s.elements();
  out.from_parent.assign(m->order, -1);
  for (size_t i = 0; i < out.to_parent.size(); ++i)
    out.from_parent[out.to_parent[i]] = (int)i;
  auto sub = std::make_shared<ModuleTable>();
  sub->base = m->base;
  sub->order = (int)out.to_parent.size();
  sub->add.resize(sub->order * sub->order);
  for (int i = 0; i < sub->order; ++i)
    for (int j = 0; j < sub->order; ++j)
      sub->add[i * sub->order + j] =
          out.from_parent[m->plus(out.to_parent[i], out.to_parent[j])];
  sub->zero = 0;
  if (!m->base->is_integers()) {
    int ro = m->base->table().order;
    sub->act.resize(sub->order * ro);
    for (int i = 0; i < sub->order; ++i)
      for (int r = 0; r < ro; ++r)
        sub->act[i * ro + r] = out.from_parent[m->apply(out.to_parent[i], r)];
  }
  out.mod = sub;
  return out;
}

}  // namespace finmod
