#include "finmod/ring.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace finmod {

namespace {

std::string tuple_str(int a, int b, int c = -1) {
  std::string s = "(" + std::to_string(a) + "," + std::to_string(b);
  if (c >= 0) s += "," + std::to_string(c);
  return s + ")";
}

}  // namespace

int RingTable::neg(int a) const {
  for (int b = 0; b < order; ++b)
    if (plus(a, b) == zero) return b;
  return -1;  // unreachable for a valid ring
}

void RingTable::validate() const {
  if (order <= 0) throw ValidationError("ring order must be positive");
  if ((int)add.size() != order * order || (int)mul.size() != order * order)
    throw ValidationError("ring table size mismatch");
  if (zero != 0) throw ValidationError("zero must be element 0");
  for (int v : add)
    if (v < 0 || v >= order) throw ValidationError("add entry out of range");
  for (int v : mul)
    if (v < 0 || v >= order) throw ValidationError("mul entry out of range");
  for (int a = 0; a < order; ++a) {
    if (plus(a, zero) != a || plus(zero, a) != a)
      throw ValidationError("additive identity fails at " + std::to_string(a));
    if (times(a, one) != a || times(one, a) != a)
      throw ValidationError("multiplicative identity fails at " +
                            std::to_string(a));
    // each add-row a permutation (gives inverses in a finite setting)
    std::vector<bool> seen(order, false);
    for (int b = 0; b < order; ++b) {
      int v = plus(a, b);
      if (seen[v])
        throw ValidationError("add row not a permutation at " +
                              std::to_string(a));
      seen[v] = true;
    }
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      if (plus(a, b) != plus(b, a))
        throw ValidationError("addition not commutative at " + tuple_str(a, b));
      for (int c = 0; c < order; ++c) {
        if (plus(plus(a, b), c) != plus(a, plus(b, c)))
          throw ValidationError("addition not associative at " +
                                tuple_str(a, b, c));
        if (times(times(a, b), c) != times(a, times(b, c)))
          throw ValidationError("multiplication not associative at " +
                                tuple_str(a, b, c));
        if (times(a, plus(b, c)) != plus(times(a, b), times(a, c)))
          throw ValidationError("left distributivity fails at " +
                                tuple_str(a, b, c));
        if (times(plus(a, b), c) != plus(times(a, c), times(b, c)))
          throw ValidationError("right distributivity fails at " +
                                tuple_str(a, b, c));
      }
    }
}

RingTable make_zmod(int n, int bound) {
  if (n <= 0) throw ArgumentError("zmod order must be positive");
  if (n > bound)
    throw SizeLimitError("zmod order " + std::to_string(n) + " exceeds " +
                         std::to_string(bound));
  RingTable r;
  r.order = n;
  r.add.resize(n * n);
  r.mul.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add[a * n + b] = (a + b) % n;
      r.mul[a * n + b] = (a * b) % n;
    }
  r.zero = 0;
  r.one = n == 1 ? 0 : 1;
  return r;
}

RingTable make_product(const RingTable& r1, const RingTable& r2, int bound) {
  long long n = (long long)r1.order * r2.order;
  if (n > bound)
    throw SizeLimitError("product ring order " + std::to_string(n) +
                         " exceeds bound " + std::to_string(bound));
  RingTable r;
  r.order = (int)n;
  r.add.resize(n * n);
  r.mul.resize(n * n);
  auto pack = [&](int a, int b) { return a * r2.order + b; };
  for (int a1 = 0; a1 < r1.order; ++a1)
    for (int a2 = 0; a2 < r2.order; ++a2)
      for (int b1 = 0; b1 < r1.order; ++b1)
        for (int b2 = 0; b2 < r2.order; ++b2) {
          int a = pack(a1, a2), b = pack(b1, b2);
          r.add[a * r.order + b] = pack(r1.plus(a1, b1), r2.plus(a2, b2));
          r.mul[a * r.order + b] = pack(r1.times(a1, b1), r2.times(a2, b2));
        }
  r.zero = 0;
  r.one = pack(r1.one, r2.one);
  return r;
}

namespace {

// Rings of k x k matrices over r restricted to a given entry pattern.
// Entries are listed in row-major order; an element is a mixed-radix number
// over the listed positions.
RingTable make_entrywise(const RingTable& r, int k,
                         const std::vector<std::pair<int, int>>& positions,
                         int bound) {
  int m = (int)positions.size();
  long long n = 1;
  for (int i = 0; i < m; ++i) {
    n *= r.order;
    if (n > bound)
      throw SizeLimitError("matrix-style ring order exceeds bound " +
                           std::to_string(bound));
  }
  // position lookup: -1 means forced zero entry
  std::vector<int> pos_index(k * k, -1);
  for (int i = 0; i < m; ++i)
    pos_index[positions[i].first * k + positions[i].second] = i;

  auto decode = [&](int x) {
    std::vector<int> e(m);
    for (int i = m - 1; i >= 0; --i) {
      e[i] = x % r.order;
      x /= r.order;
    }
    return e;
  };
  auto encode = [&](const std::vector<int>& e) {
    int x = 0;
    for (int i = 0; i < m; ++i) x = x * r.order + e[i];
    return x;
  };
  auto entry = [&](const std::vector<int>& e, int i, int j) {
    int p = pos_index[i * k + j];
    return p < 0 ? r.zero : e[p];
  };

  RingTable out;
  out.order = (int)n;
  out.add.resize(n * n);
  out.mul.resize(n * n);
  for (int a = 0; a < out.order; ++a) {
    auto ea = decode(a);
    for (int b = 0; b < out.order; ++b) {
      auto eb = decode(b);
      std::vector<int> sum(m), prod(m);
      for (int i = 0; i < m; ++i) sum[i] = r.plus(ea[i], eb[i]);
      for (int p = 0; p < m; ++p) {
        auto [i, j] = positions[p];
        int acc = r.zero;
        for (int l = 0; l < k; ++l)
          acc = r.plus(acc, r.times(entry(ea, i, l), entry(eb, l, j)));
        prod[p] = acc;
      }
      out.add[a * out.order + b] = encode(sum);
      out.mul[a * out.order + b] = encode(prod);
    }
  }
  out.zero = 0;
  std::vector<int> id(m, r.zero);
  for (int p = 0; p < m; ++p)
    if (positions[p].first == positions[p].second) id[p] = r.one;
  out.one = encode(id);
  return out;
}

}  // namespace

RingTable make_triangular(const RingTable& r, int k, TriangularShape shape,
                          int bound) {
  if (k <= 0) throw ArgumentError("triangular size must be positive");
  std::vector<std::pair<int, int>> positions;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (shape == TriangularShape::Upper ? i <= j : i >= j)
        positions.emplace_back(i, j);
  return make_entrywise(r, k, positions, bound);
}

RingTable make_matrix_ring(const RingTable& r, int k, int bound) {
  if (k <= 0) throw ArgumentError("matrix size must be positive");
  std::vector<std::pair<int, int>> positions;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) positions.emplace_back(i, j);
  return make_entrywise(r, k, positions, bound);
}

RingTable make_gf4() {
  // GF(2)[x]/(x^2+x+1); elements 0, 1, x, x+1 as bit pairs.
  RingTable r;
  r.order = 4;
  r.add.resize(16);
  r.mul.resize(16);
  auto mul2 = [](int a, int b) {
    int p = 0;
    if (b & 1) p ^= a;
    if (b & 2) p ^= a << 1;
    if (p & 4) p ^= 7;  // reduce by x^2 + x + 1
    return p & 3;
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      r.add[a * 4 + b] = a ^ b;
      r.mul[a * 4 + b] = mul2(a, b);
    }
  r.zero = 0;
  r.one = 1;
  return r;
}

RingTable opposite_ring(const RingTable& r) {
  RingTable out = r;
  for (int a = 0; a < r.order; ++a)
    for (int b = 0; b < r.order; ++b)
      out.mul[a * r.order + b] = r.times(b, a);
  return out;
}

RingTable quotient_ring(const RingTable& r, const Bits& ideal) {
  if (!ideal.test(r.zero)) throw ArgumentError("ideal must contain zero");
  for (int a : ideal.elements())
    for (int b = 0; b < r.order; ++b) {
      if (ideal.test(b) && !ideal.test(r.plus(a, b)))
        throw ArgumentError("quotient_ring: set not additively closed");
      if (!ideal.test(r.times(a, b)) || !ideal.test(r.times(b, a)))
        throw ArgumentError("quotient_ring: set not a two-sided ideal");
    }
  // coset representative: least element index
  std::vector<int> rep(r.order, -1);
  std::vector<int> reps;
  for (int a = 0; a < r.order; ++a) {
    if (rep[a] >= 0) continue;
    for (int i : ideal.elements()) rep[r.plus(a, i)] = a;
    reps.push_back(a);
  }
  std::vector<int> idx(r.order, -1);
  for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = (int)i;

  RingTable out;
  out.order = (int)reps.size();
  out.add.resize(out.order * out.order);
  out.mul.resize(out.order * out.order);
  for (int i = 0; i < out.order; ++i)
    for (int j = 0; j < out.order; ++j) {
      out.add[i * out.order + j] = idx[rep[r.plus(reps[i], reps[j])]];
      out.mul[i * out.order + j] = idx[rep[r.times(reps[i], reps[j])]];
    }
  out.zero = 0;
  out.one = idx[rep[r.one]];
  return out;
}

std::shared_ptr<const BaseRing> BaseRing::finite(RingTable table) {
  auto p = std::make_shared<BaseRing>();
  p->table_ = std::move(table);
  return p;
}

std::shared_ptr<const BaseRing> BaseRing::integers() {
  return std::make_shared<BaseRing>();
}

const RingTable& BaseRing::table() const {
  if (!table_)
    throw UnsupportedError("integer backend has no element table");
  return *table_;
}

Bits right_ideal_generated(const RingTable& r, const std::vector<int>& gens) {
  Bits s(r.order);
  s.set(r.zero);
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
    for (int y : s.elements()) push(r.plus(x, y));
    for (int b = 0; b < r.order; ++b) push(r.times(x, b));
  }
  return s;
}

std::vector<Bits> right_ideals(const RingPtr& rp) {
  if (rp->is_integers())
    throw UnsupportedError("cannot enumerate right ideals of the integers");
  const RingTable& r = rp->table();
  std::set<Bits> found;
  std::deque<Bits> work;
  Bits zero(r.order);
  zero.set(r.zero);
  found.insert(zero);
  work.push_back(zero);
  while (!work.empty()) {
    Bits i = work.front();
    work.pop_front();
    for (int x = 0; x < r.order; ++x) {
      if (i.test(x)) continue;
      auto gens = i.elements();
      gens.push_back(x);
      Bits j = right_ideal_generated(r, gens);
      if (found.insert(j).second) work.push_back(j);
    }
  }
  return std::vector<Bits>(found.begin(), found.end());
}

bool is_essential_right_ideal(const RingTable& r, const Bits& i) {
  // I essential iff it meets aR nontrivially for every nonzero a.
  for (int a = 0; a < r.order; ++a) {
    if (a == r.zero) continue;
    bool meets = false;
    for (int b = 0; b < r.order && !meets; ++b) {
      int ab = r.times(a, b);
      if (ab != r.zero && i.test(ab)) meets = true;
    }
    if (!meets) return false;
  }
  return true;
}

bool is_essential_right_ideal(const RingPtr& rp, const RightIdeal& i) {
  if (rp->is_integers()) return i.gen != 0;
  return is_essential_right_ideal(rp->table(), i.elements);
}

std::vector<int> idempotents(const RingTable& r) {
  std::vector<int> out;
  for (int e = 0; e < r.order; ++e)
    if (r.times(e, e) == e) out.push_back(e);
  return out;
}

bool is_von_neumann_regular(const RingTable& r) {
  for (int a = 0; a < r.order; ++a) {
    bool ok = false;
    for (int x = 0; x < r.order && !ok; ++x)
      if (r.times(r.times(a, x), a) == a) ok = true;
    if (!ok) return false;
  }
  return true;
}

bool is_semisimple(const RingTable& r) {
  auto rp = BaseRing::finite(r);
  auto ideals = right_ideals(rp);
  for (const Bits& i : ideals) {
    bool summand = false;
    for (const Bits& j : ideals) {
      if ((long long)i.count() * j.count() != r.order) continue;
      Bits meet = i & j;
      if (meet.count() != 1) continue;  // must be {0}
      // |I||J| = |R| and I cap J = 0 forces I + J = R for additive subgroups
      summand = true;
      break;
    }
    if (!summand) return false;
  }
  return true;
}

namespace {

// Greedy minimal generating set of (R, +, *) as a ring: elements whose
// generated subring (with 1) grows the closure.
std::vector<int> ring_generators(const RingTable& r) {
  auto closure = [&](const std::vector<int>& gens) {
    Bits s(r.order);
    s.set(r.zero);
    s.set(r.one);
    std::deque<int> work = {r.one};
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
      for (int y : s.elements()) {
        push(r.plus(x, y));
        push(r.times(x, y));
        push(r.times(y, x));
      }
    }
    return s;
  };
  std::vector<int> gens;
  Bits cur = closure(gens);
  for (int x = 0; x < r.order; ++x)
    if (!cur.test(x)) {
      gens.push_back(x);
      cur = closure(gens);
    }
  return gens;
}

bool extend_iso(const RingTable& a, const RingTable& b,
                const std::vector<int>& gens, size_t k, std::vector<int>& img) {
  if (k == gens.size()) return true;
  // candidate image for generator k, then close and check consistency
  for (int y = 0; y < b.order; ++y) {
    std::vector<int> map(a.order, -1);
    map[a.zero] = b.zero;
    map[a.one] = b.one;
    bool ok = true;
    std::vector<int> defined = {a.zero, a.one};
    auto define = [&](int x, int v) {
      if (map[x] < 0) {
        map[x] = v;
        defined.push_back(x);
        return true;
      }
      return map[x] == v;
    };
    for (size_t i = 0; i <= k && ok; ++i)
      ok = define(gens[i], i < k ? img[i] : y);
    // closure under both operations on the defined part
    for (size_t i = 0; i < defined.size() && ok; ++i)
      for (size_t j = 0; j < defined.size() && ok; ++j) {
        int x1 = defined[i], x2 = defined[j];
        ok = ok && define(a.plus(x1, x2), b.plus(map[x1], map[x2]));
        ok = ok && define(a.times(x1, x2), b.times(map[x1], map[x2]));
      }
    if (!ok) continue;
    // injectivity on the defined part
    std::set<int> vals;
    for (int x : defined) vals.insert(map[x]);
    if (vals.size() != defined.size()) continue;
    img.push_back(y);
    if (extend_iso(a, b, gens, k + 1, img)) return true;
    img.pop_back();
  }
  return false;
}

}  // namespace

bool rings_isomorphic(const RingTable& a, const RingTable& b) {
  if (a.order != b.order) return false;
  if (idempotents(a).size() != idempotents(b).size()) return false;
  auto gens = ring_generators(a);
  std::vector<int> img;
  if (!extend_iso(a, b, gens, 0, img)) return false;
  // rebuild the full map from generator images and verify it is bijective
  // and operation-preserving everywhere
  std::vector<int> map(a.order, -1);
  map[a.zero] = b.zero;
  map[a.one] = b.one;
  std::vector<int> defined = {a.zero, a.one};
  auto define = [&](int x, int v) {
    if (map[x] < 0) {
      map[x] = v;
      defined.push_back(x);
      return true;
    }
    return map[x] == v;
  };
  for (size_t i = 0; i < gens.size(); ++i)
    if (!define(gens[i], img[i])) return false;
  for (size_t i = 0; i < defined.size(); ++i)
    for (size_t j = 0; j < defined.size(); ++j) {
      int x1 = defined[i], x2 = defined[j];
      if (!define(a.plus(x1, x2), b.plus(map[x1], map[x2]))) return false;
      if (!define(a.times(x1, x2), b.times(map[x1], map[x2]))) return false;
    }
  if ((int)defined.size() != a.order) return false;
  std::set<int> vals;
  for (int x = 0; x < a.order; ++x) vals.insert(map[x]);
  if ((int)vals.size() != a.order) return false;
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < a.order; ++y) {
      if (map[a.plus(x, y)] != b.plus(map[x], map[y])) return false;
      if (map[a.times(x, y)] != b.times(map[x], map[y])) return false;
    }
  return true;
}

}  // namespace finmod
