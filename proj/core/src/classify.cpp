#include "finmod/classify.hpp"

#include <algorithm>
#include <set>

namespace finmod {

const std::vector<Bits>& Analysis::lattice() {
  if (!lattice_) lattice_ = all_submodules(m_).all;
  return *lattice_;
}

const TorsionProfile& Analysis::torsion() {
  if (!torsion_) torsion_ = goldie_torsion(m_);
  return *torsion_;
}

const std::vector<HomMap>& Analysis::endos() {
  if (!endos_) endos_ = end_homs(m_);
  return *endos_;
}

std::optional<Bits> Analysis::complement(const Bits& k) {
  auto it = complement_cache_.find(k);
  if (it != complement_cache_.end()) return it->second;
  auto c = find_complement(*m_, k, lattice());
  complement_cache_.emplace(k, c);
  return c;
}

bool Analysis::is_summand(const Bits& k) { return complement(k).has_value(); }

Bits Analysis::pz2(const HomMap& f) { return preimage(f, torsion().z2); }

const std::vector<Bits>& Analysis::summands() {
  if (!summands_) {
    std::vector<Bits> out;
    for (const Bits& k : lattice())
      if (is_summand(k)) out.push_back(k);
    summands_ = std::move(out);
  }
  return *summands_;
}

namespace {

void witness_endo(Witness* w, const HomMap& f) {
  if (w) w->endos.push_back(f.table);
}
void witness_sub(Witness* w, const Bits& s) {
  if (w) w->submodules.push_back(s.elements());
}

}  // namespace

bool is_rickart(Analysis& a, Witness* w) {
  for (const HomMap& f : a.endos()) {
    Bits k = kernel(f);
    if (!a.is_summand(k)) {
      witness_endo(w, f);
      witness_sub(w, k);
      if (w) w->note = "kernel is not a direct summand";
      return false;
    }
  }
  return true;
}

bool is_goldie_rickart(Analysis& a, Witness* w) {
  for (const HomMap& f : a.endos()) {
    Bits p = a.pz2(f);
    if (!a.is_summand(p)) {
      witness_endo(w, f);
      witness_sub(w, p);
      if (w) w->note = "preimage of Z2 is not a direct summand";
      return false;
    }
  }
  return true;
}

bool is_t_baer(Analysis& a, Witness* w) {
  // {f^{-1}(Z2)} closed under finite intersection covers t_M of every left
  // ideal of End(M)
  std::set<Bits> family;
  for (const HomMap& f : a.endos()) family.insert(a.pz2(f));
  std::vector<Bits> work(family.begin(), family.end());
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Bits meet = work[i] & work[j];
      if (family.insert(meet).second) work.push_back(meet);
    }
  for (const Bits& t : work)
    if (!a.is_summand(t)) {
      witness_sub(w, t);
      if (w) w->note = "t-operator value is not a direct summand";
      return false;
    }
  return true;
}

bool is_t_extending(Analysis& a, Witness* w) {
  for (const Bits& n : t_closed_submodules(a.mod()))
    if (!a.is_summand(n)) {
      witness_sub(w, n);
      if (w) w->note = "t-closed submodule is not a direct summand";
      return false;
    }
  return true;
}

std::vector<Bits> closed_submodules(Analysis& a) {
  const auto& lat = a.lattice();
  std::vector<Bits> out;
  for (const Bits& n : lat) {
    bool closed = true;
    for (const Bits& k : lat) {
      if (k == n || !k.contains(n)) continue;
      if (is_essential_submodule(*a.mod(), n, k)) {
        closed = false;
        break;
      }
    }
    if (closed) out.push_back(n);
  }
  return out;
}

bool is_extending(Analysis& a, Witness* w) {
  for (const Bits& n : closed_submodules(a))
    if (!a.is_summand(n)) {
      witness_sub(w, n);
      if (w) w->note = "closed submodule is not a direct summand";
      return false;
    }
  return true;
}

bool is_duo(Analysis& a, Witness* w) {
  for (const Bits& n : a.lattice())
    for (const HomMap& f : a.endos())
      for (int x : n.elements())
        if (!n.test(f.table[x])) {
          witness_endo(w, f);
          witness_sub(w, n);
          if (w) w->note = "submodule is not fully invariant";
          return false;
        }
  return true;
}

bool is_abelian_module(Analysis& a, Witness* w) {
  for (const HomMap& e : a.endos()) {
    if (hom_compose(e, e).table != e.table) continue;
    for (const HomMap& f : a.endos())
      if (hom_compose(e, f).table != hom_compose(f, e).table) {
        witness_endo(w, e);
        witness_endo(w, f);
        if (w) w->note = "idempotent endomorphism is not central";
        return false;
      }
  }
  return true;
}

namespace {

// k (a submodule of inside.mod()) isomorphic to some direct summand of of_?
bool isomorphic_to_summand(Analysis& inside, const Bits& k, Analysis& of_) {
  auto kr = restrict_to_submodule(inside.mod(), k);
  for (const Bits& s : of_.summands()) {
    auto sr = restrict_to_submodule(of_.mod(), s);
    if (modules_isomorphic(kr.mod, sr.mod)) return true;
  }
  return false;
}

}  // namespace

bool is_relative_c2(Analysis& m, Analysis& n, Witness* w) {
  for (const Bits& k : n.lattice()) {
    if (n.is_summand(k)) continue;
    if (isomorphic_to_summand(n, k, m)) {
      witness_sub(w, k);
      if (w)
        w->note =
            "submodule isomorphic to a direct summand but not a summand";
      return false;
    }
  }
  return true;
}

bool has_c2(Analysis& a, Witness* w) { return is_relative_c2(a, a, w); }

bool has_sip_over_z2(Analysis& a, Witness* w) {
  const Bits& z2 = a.torsion().z2;
  std::vector<Bits> over;
  for (const Bits& s : a.summands())
    if (s.contains(z2)) over.push_back(s);
  for (size_t i = 0; i < over.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Bits meet = over[i] & over[j];
      if (!a.is_summand(meet)) {
        witness_sub(w, over[i]);
        witness_sub(w, over[j]);
        if (w) w->note = "summand intersection over Z2 is not a summand";
        return false;
      }
    }
  return true;
}

bool has_ssip_over_z2(Analysis& a, Witness* w) {
  const Bits& z2 = a.torsion().z2;
  std::set<Bits> family;
  std::vector<Bits> work;
  for (const Bits& s : a.summands())
    if (s.contains(z2)) {
      family.insert(s);
      work.push_back(s);
    }
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Bits meet = work[i] & work[j];
      if (family.insert(meet).second) work.push_back(meet);
    }
  for (const Bits& t : work)
    if (!a.is_summand(t)) {
      witness_sub(w, t);
      if (w) w->note = "iterated summand intersection is not a summand";
      return false;
    }
  return true;
}

bool is_relative_goldie_rickart(Analysis& m, Analysis& n, Witness* w) {
  const Bits& z2n = n.torsion().z2;
  for (const HomMap& f : hom_set(m.mod(), n.mod())) {
    Bits p = preimage(f, z2n);
    if (!m.is_summand(p)) {
      witness_endo(w, f);
      witness_sub(w, p);
      if (w) w->note = "preimage of Z2 of the target is not a summand";
      return false;
    }
  }
  return true;
}

bool is_semisimple_module(Analysis& a, Witness* w) {
  for (const Bits& n : a.lattice())
    if (!a.is_summand(n)) {
      witness_sub(w, n);
      if (w) w->note = "submodule is not a direct summand";
      return false;
    }
  return true;
}

bool is_indecomposable(Analysis& a) {
  if (a.mod()->order == 1) return false;  // zero module, by convention
  return a.summands().size() == 2;
}

RingPredicates ring_predicates(const RingTable& r) {
  RingPredicates out{};
  {
    Analysis a(regular_module(BaseRing::finite(r)));
    out.right_goldie_rickart = is_goldie_rickart(a);
    out.right_rickart = is_rickart(a);
  }
  {
    Analysis a(regular_module(BaseRing::finite(opposite_ring(r))));
    out.left_goldie_rickart = is_goldie_rickart(a);
    out.left_rickart = is_rickart(a);
  }
  return out;
}

PropertyReport classify(const ModulePtr& m, const std::string& instance_id,
                        bool with_witnesses) {
  Analysis a(m);
  PropertyReport rep;
  rep.instance_id = instance_id;
  // a predicate that exceeds a size bound is omitted from the report rather
  // than aborting the remaining verdicts
  auto run = [&](const std::string& name, auto&& pred) {
    Witness w;
    try {
      bool v = pred(a, with_witnesses ? &w : nullptr);
      rep.verdicts.emplace_back(name, v);
      if (!v && with_witnesses) rep.witnesses[name] = std::move(w);
    } catch (const SizeLimitError&) {
    }
  };
  run("rickart", [](Analysis& a, Witness* w) { return is_rickart(a, w); });
  run("goldie_rickart",
      [](Analysis& a, Witness* w) { return is_goldie_rickart(a, w); });
  run("t_baer", [](Analysis& a, Witness* w) { return is_t_baer(a, w); });
  run("t_extending",
      [](Analysis& a, Witness* w) { return is_t_extending(a, w); });
  run("extending", [](Analysis& a, Witness* w) { return is_extending(a, w); });
  run("duo", [](Analysis& a, Witness* w) { return is_duo(a, w); });
  run("abelian",
      [](Analysis& a, Witness* w) { return is_abelian_module(a, w); });
  run("c2", [](Analysis& a, Witness* w) { return has_c2(a, w); });
  run("sip_over_z2",
      [](Analysis& a, Witness* w) { return has_sip_over_z2(a, w); });
  run("ssip_over_z2",
      [](Analysis& a, Witness* w) { return has_ssip_over_z2(a, w); });
  run("semisimple",
      [](Analysis& a, Witness* w) { return is_semisimple_module(a, w); });
  const auto& t = a.torsion();
  rep.verdicts.emplace_back("nonsingular", t.z.count() == 1);
  rep.verdicts.emplace_back("singular", t.z.count() == m->order);
  rep.verdicts.emplace_back("z2_torsion", t.z2.count() == m->order);
  rep.verdicts.emplace_back("indecomposable", is_indecomposable(a));
  auto run_plain = [&](const std::string& name, auto&& pred) {
    try {
      rep.verdicts.emplace_back(name, pred());
    } catch (const SizeLimitError&) {
    }
  };
  run_plain("quasi_injective", [&] { return is_quasi_injective(m); });
  run_plain("quasi_projective", [&] { return is_quasi_projective(m); });
  if (!m->base->is_integers()) {
    run_plain("injective", [&] { return is_injective_module(m); });
    run_plain("projective", [&] { return is_projective_module(m); });
  }
  return rep;
}

}  // namespace finmod
