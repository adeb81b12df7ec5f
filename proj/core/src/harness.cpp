#include "finmod/harness.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "harness_internal.hpp"
#include "finmod/instance.hpp"

namespace finmod {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
    case CheckStatus::Partial: return "PARTIAL";
  }
  return "?";
}

std::vector<std::string> default_family_names() {
  return {"zmod4", "zmod8", "zmod6", "f2", "f4",
          "t2f2",  "m2f2",  "z2xz4", "zbackend"};
}

namespace {

std::string module_key(const ModuleTable& m) {
  std::string k = m.base->is_integers() ? "Z|" : "F|";
  if (!m.base->is_integers()) {
    const RingTable& r = m.base->table();
    for (int v : r.add) k += (char)('0' + v % 10), k += (char)('a' + v / 10 % 26);
    for (int v : r.mul) k += (char)('0' + v % 10), k += (char)('a' + v / 10 % 26);
  }
  k += '#';
  auto app = [&](int v) {
    k += std::to_string(v);
    k += ',';
  };
  app(m.order);
  for (int v : m.add) app(v);
  for (int v : m.act) app(v);
  return k;
}

// generators of a submodule, greedy over parent indices
std::vector<int> submodule_gens(const ModuleTable& m, const Bits& s) {
  std::vector<int> gens;
  Bits cur = submodule_generated(m, gens);
  for (int x : s.elements())
    if (!cur.test(x)) {
      gens.push_back(x);
      cur = submodule_generated(m, gens);
    }
  return gens;
}

std::string gens_suffix(const std::vector<int>& gens) {
  std::string s = " gens";
  for (int g : gens) s += " " + std::to_string(g);
  return s;
}

struct Candidate {
  std::string id;
  ModulePtr mod;
  bool cyclic = false;
};

void admit(GeneratedFamily& fam, std::set<std::string>& seen,
           const HarnessConfig& cfg, const Candidate& c) {
  if (fam.truncated) return;
  if (c.mod->order > cfg.module_order_cap) {
    fam.skipped.push_back(c.id + ": order exceeds cap");
    return;
  }
  std::string key = module_key(*c.mod);
  if (!seen.insert(key).second) return;  // duplicate table
  try {
    auto homs = end_homs(c.mod);
    if ((int)homs.size() > cfg.end_cap) {
      fam.skipped.push_back(c.id + ": endomorphism ring exceeds cap");
      return;
    }
  } catch (const SizeLimitError&) {
    fam.skipped.push_back(c.id + ": hom search space exceeds bound");
    return;
  }
  if ((int)fam.instances.size() >= cfg.family_cap) {
    fam.truncated = true;
    fam.skipped.push_back(c.id + ": family cap reached, truncated");
    return;
  }
  fam.instances.push_back({c.id, c.mod});
  if (c.cyclic) fam.cyclics.push_back({c.id, c.mod});
}

GeneratedFamily generate_finite(const std::string& name,
                                const std::string& ring_text,
                                RingTable ring_table,
                                const HarnessConfig& cfg) {
  GeneratedFamily fam;
  fam.name = name;
  fam.ring_spec = ring_text;
  fam.ring = BaseRing::finite(std::move(ring_table));
  auto reg = regular_module(fam.ring);
  std::set<std::string> seen;

  std::string reg_id = "module regular (" + ring_text + ")";
  std::vector<Candidate> cyclics;
  for (const Bits& ideal : right_ideals(fam.ring)) {
    auto gens = submodule_gens(*reg, ideal);
    Candidate c;
    c.id = "module quotient (" + reg_id + ")" + gens_suffix(gens);
    c.mod = quotient_module(reg, ideal).mod;
    c.cyclic = true;
    cyclics.push_back(c);
    admit(fam, seen, cfg, c);
  }
  std::vector<Candidate> base = cyclics;
  for (size_t i = 0; i < cyclics.size(); ++i)
    for (size_t j = i; j < cyclics.size(); ++j) {
      long long ord = (long long)cyclics[i].mod->order * cyclics[j].mod->order;
      if (ord > cfg.module_order_cap) continue;
      Candidate c;
      c.id = "module sum (" + cyclics[i].id + ") (" + cyclics[j].id + ")";
      c.mod = direct_sum(cyclics[i].mod, cyclics[j].mod).sum;
      base.push_back(c);
      admit(fam, seen, cfg, c);
      for (size_t k = j; k < cyclics.size(); ++k) {
        long long ord3 = ord * cyclics[k].mod->order;
        if (ord3 > cfg.module_order_cap) continue;
        Candidate c3;
        c3.id = "module sum (" + c.id + ") (" + cyclics[k].id + ")";
        c3.mod = direct_sum(c.mod, cyclics[k].mod).sum;
        base.push_back(c3);
        admit(fam, seen, cfg, c3);
      }
    }
  // submodules and quotients of the seeds
  for (const Candidate& b : base) {
    SubmoduleLattice lat;
    try {
      lat = all_submodules(b.mod);
    } catch (const SizeLimitError&) {
      fam.skipped.push_back(b.id + ": lattice guard exceeded");
      continue;
    }
    for (const Bits& s : lat.all) {
      auto gens = submodule_gens(*b.mod, s);
      Candidate sub;
      sub.id = "module sub (" + b.id + ")" + gens_suffix(gens);
      sub.mod = restrict_to_submodule(b.mod, s).mod;
      admit(fam, seen, cfg, sub);
      Candidate quo;
      quo.id = "module quotient (" + b.id + ")" + gens_suffix(gens);
      quo.mod = quotient_module(b.mod, s).mod;
      admit(fam, seen, cfg, quo);
    }
  }
  return fam;
}

GeneratedFamily generate_zbackend(const HarnessConfig& cfg) {
  GeneratedFamily fam;
  fam.name = "zbackend";
  fam.ring_spec = "integers";
  fam.ring = BaseRing::integers();
  std::set<std::string> seen;
  const std::vector<int> invariants = {2, 3, 4, 8, 9};
  // all multisets (nondecreasing tuples) with product within the cap
  std::vector<std::vector<int>> stack = {{}};
  std::vector<std::vector<int>> tuples;
  for (size_t i = 0; i < stack.size(); ++i) {
    std::vector<int> cur = stack[i];
    tuples.push_back(cur);
    long long prod = 1;
    for (int d : cur) prod *= d;
    for (int d : invariants) {
      if (!cur.empty() && d < cur.back()) continue;
      if (prod * d > cfg.zgroup_order_cap) continue;
      auto next = cur;
      next.push_back(d);
      stack.push_back(next);
    }
  }
  std::sort(tuples.begin(), tuples.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              long long pa = 1, pb = 1;
              for (int d : a) pa *= d;
              for (int d : b) pb *= d;
              return pa != pb ? pa < pb : a < b;
            });
  for (const auto& t : tuples) {
    Candidate c;
    c.id = "module zabelian";
    for (int d : t) c.id += " " + std::to_string(d);
    c.mod = zbackend_module(t, cfg.zgroup_order_cap);
    c.cyclic = t.size() <= 1;
    admit(fam, seen, cfg, c);
  }
  return fam;
}

}  // namespace

GeneratedFamily generate_family(const std::string& name,
                                const HarnessConfig& cfg) {
  int b = cfg.module_order_cap;
  if (name == "zmod4") return generate_finite(name, "ring zmod 4", make_zmod(4), cfg);
  if (name == "zmod8") return generate_finite(name, "ring zmod 8", make_zmod(8), cfg);
  if (name == "zmod6") return generate_finite(name, "ring zmod 6", make_zmod(6), cfg);
  if (name == "f2") return generate_finite(name, "ring zmod 2", make_zmod(2), cfg);
  if (name == "f4") return generate_finite(name, "ring gf4", make_gf4(), cfg);
  if (name == "t2f2")
    return generate_finite(name, "ring triangular upper 2 (ring zmod 2)",
                           make_triangular(make_zmod(2), 2,
                                           TriangularShape::Upper, b),
                           cfg);
  if (name == "m2f2")
    return generate_finite(name, "ring matrix 2 (ring zmod 2)",
                           make_matrix_ring(make_zmod(2), 2, b), cfg);
  if (name == "z2xz4")
    return generate_finite(name, "ring product (ring zmod 2) (ring zmod 4)",
                           make_product(make_zmod(2), make_zmod(4), b), cfg);
  if (name == "zbackend") return generate_zbackend(cfg);
  throw ArgumentError("unknown family: " + name);
}

std::vector<GeneratedFamily> generate_families(const HarnessConfig& cfg) {
  std::vector<std::string> names =
      cfg.families.empty() ? default_family_names() : cfg.families;
  std::vector<GeneratedFamily> out;
  for (const auto& n : names) out.push_back(generate_family(n, cfg));
  return out;
}

namespace internal {

Ctx build_ctx(const std::vector<GeneratedFamily>& families,
              const HarnessConfig& cfg) {
  Ctx ctx;
  ctx.cfg = &cfg;
  for (const auto& fam : families) {
    FamilyCtx fc;
    fc.fam = &fam;
    for (const auto& inst : fam.instances) {
      auto e = std::make_shared<Entry>();
      e->inst = inst;
      e->an = std::make_shared<Analysis>(inst.mod);
      fc.entries.push_back(e);
      for (const auto& c : fam.cyclics)
        if (c.id == inst.id) fc.cyclic_entries.push_back(e);
    }
    ctx.fams.push_back(std::move(fc));
  }
  // warm the memoized cores in parallel; everything after reads cached data
  std::vector<std::shared_ptr<Entry>> all = ctx.all();
  int jobs = std::max(1, cfg.jobs);
  if (jobs > 1) {
    std::vector<std::thread> threads;
    std::atomic<size_t> next{0};
    for (int t = 0; t < jobs; ++t)
      threads.emplace_back([&]() {
        for (size_t i = next.fetch_add(1); i < all.size();
             i = next.fetch_add(1)) {
          all[i]->an->lattice();
          all[i]->an->torsion();
          all[i]->an->endos();
        }
      });
    for (auto& t : threads) t.join();
  }
  return ctx;
}

std::shared_ptr<Analysis> analyze_restricted(const ModulePtr& m,
                                             const Bits& s) {
  return std::make_shared<Analysis>(restrict_to_submodule(m, s).mod);
}

bool verdict(Entry& e, const std::string& name) {
  auto it = e.verdicts.find(name);
  if (it != e.verdicts.end()) return it->second;
  Analysis& a = *e.an;
  const ModulePtr& m = e.inst.mod;
  bool v;
  if (name == "rickart") v = is_rickart(a);
  else if (name == "goldie_rickart") v = is_goldie_rickart(a);
  else if (name == "t_baer") v = is_t_baer(a);
  else if (name == "t_extending") v = is_t_extending(a);
  else if (name == "extending") v = is_extending(a);
  else if (name == "duo") v = is_duo(a);
  else if (name == "abelian") v = is_abelian_module(a);
  else if (name == "c2") v = has_c2(a);
  else if (name == "sip_over_z2") v = has_sip_over_z2(a);
  else if (name == "ssip_over_z2") v = has_ssip_over_z2(a);
  else if (name == "semisimple") v = is_semisimple_module(a);
  else if (name == "nonsingular") v = a.torsion().z.count() == 1;
  else if (name == "singular") v = a.torsion().z.count() == m->order;
  else if (name == "z2_torsion") v = a.torsion().z2.count() == m->order;
  else if (name == "indecomposable") v = is_indecomposable(a);
  else if (name == "quasi_injective") v = is_quasi_injective(m);
  else if (name == "quasi_projective") v = is_quasi_projective(m);
  else if (name == "injective")
    v = m->base->is_integers() ? false : is_injective_module(m);
  else if (name == "projective")
    v = m->base->is_integers() ? false : is_projective_module(m);
  else
    throw ArgumentError("unknown predicate: " + name);
  e.verdicts.emplace(name, v);
  return v;
}

}  // namespace internal

std::vector<TheoremCheck> run_theorems(
    const std::vector<GeneratedFamily>& families, const HarnessConfig& cfg) {
  internal::Ctx ctx = internal::build_ctx(families, cfg);
  return internal::run_registry(ctx);
}

SearchResult search_counterexample(
    const std::string& conjunction,
    const std::vector<GeneratedFamily>& families) {
  // parse "name&!name&..."
  std::vector<std::pair<std::string, bool>> terms;  // (predicate, wanted)
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw ArgumentError("empty term in conjunction");
    bool wanted = true;
    std::string name = cur;
    if (name[0] == '!') {
      wanted = false;
      name = name.substr(1);
    }
    if (name.empty()) throw ArgumentError("empty predicate name");
    terms.emplace_back(name, wanted);
    cur.clear();
  };
  for (char c : conjunction) {
    if (c == '&')
      flush();
    else if (!std::isspace((unsigned char)c))
      cur += c;
  }
  flush();

  SearchResult res;
  for (const auto& fam : families)
    for (const auto& inst : fam.instances) {
      internal::Entry e;
      e.inst = inst;
      e.an = std::make_shared<Analysis>(inst.mod);
      ++res.examined;
      bool match = true;
      for (const auto& [name, wanted] : terms)
        if (internal::verdict(e, name) != wanted) {
          match = false;
          break;
        }
      if (match) {
        res.found = true;
        res.witness_id = inst.id;
        return res;
      }
    }
  return res;
}

bool CrosscheckReport::all_pass() const {
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

namespace {

// naive essentiality: meets every nonzero right ideal
bool essential_naive(const RingPtr& rp, const Bits& i) {
  for (const Bits& j : right_ideals(rp)) {
    if (j.count() == 1) continue;
    Bits meet = i & j;
    if (meet.count() == 1) return false;
  }
  return true;
}

// all additive, R-linear maps by scanning every function with f(0)=0
long long hom_count_bruteforce(const ModulePtr& m, const ModulePtr& n) {
  int s = m->order, t = n->order;
  std::vector<int> f(s, 0);
  long long count = 0;
  const bool finite = !m->base->is_integers();
  int ro = finite ? m->base->table().order : 0;
  while (true) {
    bool ok = true;
    for (int a = 0; a < s && ok; ++a)
      for (int b = 0; b < s && ok; ++b)
        ok = f[m->plus(a, b)] == n->plus(f[a], f[b]);
    if (ok && finite)
      for (int a = 0; a < s && ok; ++a)
        for (int r = 0; r < ro && ok; ++r)
          ok = f[m->apply(a, r)] == n->apply(f[a], r);
    if (ok) ++count;
    // next function, keeping f(0) = 0
    int i = 1;
    while (i < s && f[i] == t - 1) f[i++] = 0;
    if (i >= s) break;
    ++f[i];
  }
  return count;
}

}  // namespace

CrosscheckReport oracle_crosschecks(
    const std::vector<GeneratedFamily>& families) {
  CrosscheckReport rep;

  // (a) summand by complement vs summand by End-idempotent image
  {
    bool pass = true;
    std::string detail;
    int checked = 0;
    for (const auto& fam : families)
      for (const auto& inst : fam.instances) {
        if (inst.mod->order > 32) continue;
        Analysis a(inst.mod);
        std::set<Bits> by_idem;
        for (const HomMap& f : a.endos())
          if (hom_compose(f, f).table == f.table) by_idem.insert(image(f));
        std::set<Bits> by_comp(a.summands().begin(), a.summands().end());
        ++checked;
        if (by_idem != by_comp) {
          pass = false;
          detail = "disagreement on " + inst.id;
        }
      }
    if (pass) detail = "agreed on " + std::to_string(checked) + " instances";
    rep.items.push_back({"summand_complement_vs_idempotent", pass, detail});
  }

  // (b) principal-ideal essentiality vs all-ideal oracle
  {
    bool pass = true;
    std::string detail;
    int checked = 0;
    for (const auto& fam : families) {
      if (fam.ring->is_integers()) continue;
      const RingTable& r = fam.ring->table();
      if (r.order > 16) continue;
      for (const Bits& i : right_ideals(fam.ring)) {
        ++checked;
        if (is_essential_right_ideal(r, i) != essential_naive(fam.ring, i)) {
          pass = false;
          detail = "disagreement in family " + fam.name;
        }
      }
    }
    if (pass) detail = "agreed on " + std::to_string(checked) + " ideals";
    rep.items.push_back({"essential_principal_vs_all_ideals", pass, detail});
  }

  // (c) hom_set vs full map scan at tiny sizes
  {
    bool pass = true;
    std::string detail;
    int checked = 0;
    for (const auto& fam : families) {
      std::vector<Instance> small;
      for (const auto& inst : fam.instances)
        if (inst.mod->order <= 8) small.push_back(inst);
      if (small.size() > 4) small.resize(4);
      for (const auto& a : small)
        for (const auto& b : small) {
          ++checked;
          long long fast = (long long)hom_set(a.mod, b.mod).size();
          long long slow = hom_count_bruteforce(a.mod, b.mod);
          if (fast != slow) {
            pass = false;
            detail = "count mismatch for " + a.id + " -> " + b.id;
          }
        }
    }
    if (pass) detail = "agreed on " + std::to_string(checked) + " hom sets";
    rep.items.push_back({"hom_set_vs_bruteforce_scan", pass, detail});
  }

  // (d) t-operator vs pairwise intersection identity
  {
    bool pass = true;
    std::string detail;
    int checked = 0;
    for (const auto& fam : families)
      for (const auto& inst : fam.instances) {
        if (inst.mod->order > 16) continue;
        Analysis a(inst.mod);
        const auto& endos = a.endos();
        size_t n = std::min<size_t>(endos.size(), 6);
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) {
            Bits lhs = t_operator(inst.mod, {endos[i], endos[j]});
            Bits rhs = a.pz2(endos[i]) & a.pz2(endos[j]);
            ++checked;
            if (!(lhs == rhs)) {
              pass = false;
              detail = "identity fails on " + inst.id;
            }
          }
      }
    if (pass) detail = "agreed on " + std::to_string(checked) + " pairs";
    rep.items.push_back({"t_operator_vs_intersection", pass, detail});
  }

  return rep;
}

}  // namespace finmod
