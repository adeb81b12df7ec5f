#include <algorithm>
#include <functional>
#include <set>

#include "harness_internal.hpp"

namespace finmod::internal {

namespace {

using Violation = std::optional<std::string>;  // witness id + note

// Sweep all instances; the checker returns a violation message or nothing.
// SizeLimitError from a checker skips that instance (counted, never silent).
TheoremCheck per_module(Ctx& ctx, const std::string& id,
                        const std::string& kind,
                        const std::function<Violation(Entry&)>& check,
                        const std::string& note = "") {
  int checked = 0, skipped = 0;
  for (auto& fam : ctx.fams)
    for (auto& e : fam.entries) {
      try {
        Violation v = check(*e);
        ++checked;
        if (v) {
          return {id, kind, "per-module", CheckStatus::Fail,
                  "implementation bug: " + *v, e->inst.id};
        }
      } catch (const SizeLimitError&) {
        ++skipped;
      }
    }
  std::string detail = "checked " + std::to_string(checked) + " instances";
  if (skipped) detail += ", " + std::to_string(skipped) + " skipped by caps";
  if (!note.empty()) detail += "; " + note;
  return {id, kind, "per-module", CheckStatus::Pass, detail, ""};
}

bool restricted_gr(const ModulePtr& m, const Bits& s) {
  Analysis a(restrict_to_submodule(m, s).mod);
  return is_goldie_rickart(a);
}

bool rel_gr(const ModulePtr& a, const ModulePtr& b) {
  Analysis aa(a), ab(b);
  return is_relative_goldie_rickart(aa, ab);
}

bool end_is_vnr(Analysis& a) {
  const auto& endos = a.endos();
  for (const HomMap& f : endos) {
    bool ok = false;
    for (const HomMap& g : endos)
      if (hom_compose(hom_compose(f, g), f).table == f.table) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

// ring right-nonsingularity: Z(R_R) = 0 (always true for the integers)
bool ring_right_nonsingular(const RingPtr& r) {
  if (r->is_integers()) return true;
  return singular_submodule(regular_module(r)).count() == 1;
}

// free modules R, R^2, R^3 within caps
std::vector<ModulePtr> free_modules(const RingPtr& r, int order_cap) {
  std::vector<ModulePtr> out;
  ModulePtr cur = regular_module(r);
  for (int rank = 1; rank <= 3; ++rank) {
    if (cur->order > order_cap) break;
    out.push_back(cur);
    if (rank < 3) {
      if ((long long)cur->order * r->table().order > order_cap) break;
      cur = direct_sum(cur, regular_module(r), order_cap).sum;
    }
  }
  return out;
}

bool field_base(const RingPtr& r) {
  if (r->is_integers()) return false;
  const RingTable& t = r->table();
  if (t.order < 2) return false;
  for (int a = 1; a < t.order; ++a)
    for (int b = 1; b < t.order; ++b)
      if (t.times(a, b) == t.zero) return false;
  return true;  // finite + no zero divisors = field
}

// elements of the sum lattice image of a submodule under the projection
Bits project_set(const Quotient& q, const Bits& s, int qorder) {
  Bits out(qorder);
  for (int x : s.elements()) out.set(q.proj[x]);
  return out;
}

struct TupleSuite {
  // per family: factors for the relative suite and their sums
  struct Tuple {
    std::vector<std::shared_ptr<Entry>> factors;
    ModulePtr sum;
  };
  std::vector<Tuple> tuples;  // pairs then triples, deterministic
};

TupleSuite make_tuples(Ctx& ctx) {
  TupleSuite out;
  for (auto& fam : ctx.fams) {
    std::vector<std::shared_ptr<Entry>> factors;
    for (auto& e : fam.cyclic_entries)
      if (e->inst.mod->order <= ctx.cfg->relative_factor_cap)
        factors.push_back(e);
    size_t n = factors.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j) {
        long long ord =
            (long long)factors[i]->inst.mod->order * factors[j]->inst.mod->order;
        if (ord > ctx.cfg->module_order_cap) continue;
        TupleSuite::Tuple t;
        t.factors = {factors[i], factors[j]};
        t.sum = direct_sum(factors[i]->inst.mod, factors[j]->inst.mod).sum;
        out.tuples.push_back(t);
        for (size_t k = j; k < n; ++k) {
          long long o3 = ord * factors[k]->inst.mod->order;
          if (o3 > ctx.cfg->module_order_cap) continue;
          TupleSuite::Tuple t3;
          t3.factors = {factors[i], factors[j], factors[k]};
          t3.sum = direct_sum(t.sum, factors[k]->inst.mod).sum;
          out.tuples.push_back(t3);
        }
      }
  }
  return out;
}

std::string tuple_id(const TupleSuite::Tuple& t) {
  std::string s = "sum of [";
  for (size_t i = 0; i < t.factors.size(); ++i) {
    if (i) s += "; ";
    s += t.factors[i]->inst.id;
  }
  return s + "]";
}

}  // namespace

std::vector<TheoremCheck> run_registry(Ctx& ctx) {
  std::vector<TheoremCheck> out;
  auto add = [&](TheoremCheck c) { out.push_back(std::move(c)); };

  // --- torsion-operator identities ---
  add(per_module(ctx, "t_operator_identities", "construction", [](Entry& e) -> Violation {
    Analysis& a = *e.an;
    const Bits& z2 = a.torsion().z2;
    Bits inter(e.inst.mod->order);
    for (int x = 0; x < e.inst.mod->order; ++x) inter.set(x);
    for (const HomMap& f : a.endos()) {
      Bits p = a.pz2(f);
      if (!p.contains(kernel(f))) return "kernel not inside preimage of Z2";
      if (f.is_identity() && !(p == z2))
        return "identity preimage differs from Z2";
      inter = inter & p;
    }
    if (!(inter == z2))
      return "intersection of preimages differs from Z2";
    return std::nullopt;
  }));

  add(per_module(ctx, "singular_essential_in_goldie_torsion", "construction",
                 [](Entry& e) -> Violation {
    const auto& t = e.an->torsion();
    if (!is_essential_submodule(*e.inst.mod, t.z, t.z2))
      return "Z not essential in Z2";
    return std::nullopt;
  }));

  add(per_module(ctx, "trivially_goldie_rickart_classes", "implication",
                 [](Entry& e) -> Violation {
    bool hyp = verdict(e, "semisimple") || verdict(e, "singular") ||
               verdict(e, "z2_torsion");
    if (hyp && !verdict(e, "goldie_rickart"))
      return "trivially Goldie Rickart class member fails the predicate";
    return std::nullopt;
  }));

  add(per_module(ctx, "nonsingular_rickart_iff_goldie_rickart", "equivalence",
                 [](Entry& e) -> Violation {
    if (verdict(e, "nonsingular") &&
        verdict(e, "rickart") != verdict(e, "goldie_rickart"))
      return "Rickart and Goldie Rickart disagree on a nonsingular module";
    return std::nullopt;
  }));

  add(per_module(ctx, "indecomposable_goldie_rickart_rickart_or_z2_torsion",
                 "implication", [](Entry& e) -> Violation {
    if (verdict(e, "indecomposable") && verdict(e, "goldie_rickart") &&
        !(verdict(e, "rickart") || verdict(e, "z2_torsion")))
      return "indecomposable Goldie Rickart module neither Rickart nor torsion";
    return std::nullopt;
  }));

  add(per_module(ctx, "indecomposable_extending_nonsingular_or_goldie_rickart",
                 "implication", [](Entry& e) -> Violation {
    if (verdict(e, "indecomposable") && verdict(e, "extending") &&
        !(verdict(e, "nonsingular") || verdict(e, "goldie_rickart")))
      return "indecomposable extending module fails both branches";
    return std::nullopt;
  }));

  add(per_module(ctx, "t_baer_implies_goldie_rickart", "implication",
                 [](Entry& e) -> Violation {
    if (verdict(e, "t_baer") && !verdict(e, "goldie_rickart"))
      return "t-Baer module is not Goldie Rickart";
    return std::nullopt;
  }));

  add(per_module(ctx, "goldie_rickart_ssip_implies_t_baer", "implication",
                 [](Entry& e) -> Violation {
    if (verdict(e, "goldie_rickart") && verdict(e, "ssip_over_z2") &&
        !verdict(e, "t_baer"))
      return "Goldie Rickart with strong SIP over Z2 is not t-Baer";
    return std::nullopt;
  }));

  add(per_module(ctx, "t_extending_implies_goldie_rickart", "implication",
                 [](Entry& e) -> Violation {
    if (verdict(e, "t_extending") && !verdict(e, "goldie_rickart"))
      return "t-extending module is not Goldie Rickart";
    return std::nullopt;
  }));

  // --- Sigma-t-extending ring equivalences: catalog observation ---
  {
    std::string detail;
    for (auto& fam : ctx.fams) {
      if (fam.fam->ring->is_integers()) continue;
      bool free_text = true;
      int free_count = 0;
      for (const ModulePtr& f : free_modules(fam.fam->ring, ctx.cfg->module_order_cap)) {
        try {
          Analysis a(f);
          if (!is_t_extending(a)) free_text = false;
          ++free_count;
        } catch (const SizeLimitError&) {
        }
      }
      bool all_text = true, all_tbaer = true, all_gr = true;
      for (auto& e : fam.entries) {
        if (!verdict(*e, "t_extending")) all_text = false;
        if (!verdict(*e, "t_baer")) all_tbaer = false;
        if (!verdict(*e, "goldie_rickart")) all_gr = false;
      }
      detail += fam.fam->name + "(free<=3 t-ext=" + std::to_string(free_text) +
                " over " + std::to_string(free_count) +
                ", mods: t-ext=" + std::to_string(all_text) +
                " t-baer=" + std::to_string(all_tbaer) +
                " gr=" + std::to_string(all_gr) + ") ";
    }
    add({"sigma_t_extending_ring_equivalences", "equivalence", "per-ring",
         CheckStatus::Partial,
         "quantifiers truncated to the catalog and free rank <= 3; observed: " +
             detail,
         ""});
  }

  // --- triangular-matrix-ring catalogs: observed verdicts only ---
  {
    std::string detail;
    for (auto& fam : ctx.fams) {
      if (fam.fam->name != "t2f2") continue;
      bool all_gr = true;
      for (auto& e : fam.entries)
        if (!verdict(*e, "goldie_rickart")) all_gr = false;
      detail = "t2f2 catalog all Goldie Rickart: " + std::to_string(all_gr);
    }
    add({"triangular_ring_catalog_observation", "construction", "per-ring",
         CheckStatus::Partial,
         "finite analog observation (the Morita statement itself is out of "
         "scope); " + detail,
         ""});
  }

  add(per_module(ctx, "goldie_rickart_decomposition", "equivalence",
                 [](Entry& e) -> Violation {
    Analysis& a = *e.an;
    const Bits& z2 = a.torsion().z2;
    auto comp = a.complement(z2);
    bool rhs = false;
    if (comp) {
      auto rest = restrict_to_submodule(e.inst.mod, *comp);
      Analysis ca(rest.mod);
      bool comp_rickart = is_rickart(ca);
      bool comp_nonsingular = singular_submodule(rest.mod).count() == 1;
      rhs = comp_rickart;
      if (verdict(e, "goldie_rickart") && !comp_nonsingular)
        return "complement of Z2 in a Goldie Rickart module is singular";
    }
    if (verdict(e, "goldie_rickart") != rhs)
      return "decomposition equivalence fails";
    return std::nullopt;
  }));

  // --- Z2-semiperfect rings ---
  {
    std::string detail;
    TheoremCheck fail{};
    bool failed = false;
    for (auto& fam : ctx.fams) {
      if (fam.fam->ring->is_integers()) continue;
      if (!is_z2_semiperfect(fam.fam->ring->table())) continue;
      for (auto& e : fam.entries)
        if (!verdict(*e, "goldie_rickart")) {
          failed = true;
          fail = {"z2_semiperfect_all_modules_goldie_rickart", "implication",
                  "per-ring", CheckStatus::Fail,
                  "implementation bug: module over Z2-semiperfect ring not "
                  "Goldie Rickart",
                  e->inst.id};
        }
      detail += fam.fam->name + " ";
    }
    if (failed)
      add(fail);
    else
      add({"z2_semiperfect_all_modules_goldie_rickart", "implication",
           "per-ring", CheckStatus::Partial,
           "all-modules quantifier swept over catalog; semiperfect rings: " +
               (detail.empty() ? std::string("none") : detail),
           ""});
  }

  add({"qf_ring_modules_goldie_rickart", "implication", "per-ring",
       CheckStatus::Skipped, "QF-ring detection out of scope", ""});
  add({"infinite_product_counterexample", "construction", "per-module",
       CheckStatus::Skipped,
       "infinite product over all primes; out of scope", ""});

  // --- worked example: Z4 over the integers ---
  {
    auto z4 = zbackend_module({4});
    Analysis a(z4);
    std::string err;
    if (!is_goldie_rickart(a)) err = "Z4 not Goldie Rickart";
    if (a.torsion().z.count() != 4 || a.torsion().z2.count() != 4)
      err = "Z(Z4) != Z4";
    if (is_rickart(a)) err = "Z4 reported Rickart";
    // the doubling endomorphism must witness the Rickart failure
    bool witnessed = false;
    for (const HomMap& f : a.endos())
      if (f.table[1] == 2) {
        Bits k = kernel(f);
        if (k.count() == 2 && k.test(0) && k.test(2) && !a.is_summand(k))
          witnessed = true;
      }
    if (!witnessed) err = "doubling endomorphism witness missing";
    add({"z4_goldie_rickart_not_rickart", "construction", "per-module",
         err.empty() ? CheckStatus::Pass : CheckStatus::Fail,
         err.empty() ? "worked example reproduced"
                     : "implementation bug: " + err,
         err.empty() ? "" : "module zabelian 4"});
  }

  add(per_module(ctx, "rickart_vs_goldie_rickart", "equivalence",
                 [](Entry& e) -> Violation {
    Analysis& a = *e.an;
    bool lhs = verdict(e, "goldie_rickart");
    if (lhs)
      for (const HomMap& f : a.endos()) {
        Bits p = a.pz2(f);
        auto rest = restrict_to_submodule(e.inst.mod, p);
        Bits k(rest.mod->order);
        for (int i = 0; i < rest.mod->order; ++i)
          if (f.table[rest.to_parent[i]] == e.inst.mod->zero) k.set(i);
        if (!is_direct_summand(rest.mod, k)) {
          lhs = false;
          break;
        }
      }
    bool rhs = verdict(e, "rickart") && a.is_summand(a.torsion().z2);
    if (lhs != rhs) return "two characterizations disagree";
    return std::nullopt;
  }));

  add(per_module(ctx, "rickart_z_summand_implies_goldie_rickart", "implication",
                 [](Entry& e) -> Violation {
    Analysis& a = *e.an;
    if (verdict(e, "rickart") && a.is_summand(a.torsion().z) &&
        !verdict(e, "goldie_rickart"))
      return "Rickart with Z a summand but not Goldie Rickart";
    return std::nullopt;
  }));

  add(per_module(ctx, "nonsingular_ring_goldie_rickart_z_summand", "implication",
                 [](Entry& e) -> Violation {
    if (!ring_right_nonsingular(e.inst.mod->base)) return std::nullopt;
    Analysis& a = *e.an;
    if (verdict(e, "goldie_rickart") && !a.is_summand(a.torsion().z))
      return "Z not a summand over a right nonsingular ring";
    return std::nullopt;
  }));

  add(per_module(ctx, "split_sequence_characterization", "equivalence",
                 [](Entry& e) -> Violation {
    if (e.inst.mod->order > 16) throw SizeLimitError("restricted to order 16");
    Analysis& a = *e.an;
    for (const HomMap& f : a.endos()) {
      Bits p = a.pz2(f);
      bool summand = a.is_summand(p);
      Quotient q = quotient_module(e.inst.mod, p);
      bool split = false;
      for (const HomMap& s : hom_set(q.mod, e.inst.mod)) {
        bool section = true;
        for (int x = 0; x < q.mod->order && section; ++x)
          section = q.proj[s.table[x]] == x;
        if (section) {
          split = true;
          break;
        }
      }
      if (summand != split) return "summand and split section disagree";
    }
    return std::nullopt;
  }, "independent section-search route"));

  // --- semisimple ring characterization ---
  {
    std::string detail;
    bool failed = false;
    TheoremCheck fail{};
    for (auto& fam : ctx.fams) {
      if (fam.fam->ring->is_integers()) continue;
      bool ss = is_semisimple(fam.fam->ring->table());
      if (ss) {
        for (auto& e : fam.entries) {
          bool ok = verdict(*e, "goldie_rickart");
          if (ok) {
            const Bits& z2 = e->an->torsion().z2;
            ok = is_projective_module(
                restrict_to_submodule(e->inst.mod, z2).mod);
          }
          if (!ok) {
            failed = true;
            fail = {"semisimple_ring_characterization", "equivalence",
                    "per-ring", CheckStatus::Fail,
                    "implementation bug: semisimple ring with a module "
                    "failing Goldie Rickart + projective Z2",
                    e->inst.id};
          }
        }
        detail += fam.fam->name + "=semisimple:sweep-ok ";
      } else {
        std::string witness;
        for (auto& e : fam.entries) {
          bool conj = verdict(*e, "goldie_rickart");
          if (conj) {
            const Bits& z2 = e->an->torsion().z2;
            conj = is_projective_module(
                restrict_to_submodule(e->inst.mod, z2).mod);
          }
          if (!conj) {
            witness = e->inst.id;
            break;
          }
        }
        detail += fam.fam->name + "=not-semisimple:" +
                  (witness.empty() ? "no-witness-in-catalog" : "witness-found") +
                  " ";
      }
    }
    if (failed)
      add(fail);
    else
      add({"semisimple_ring_characterization", "equivalence", "per-ring",
           CheckStatus::Partial,
           "all-modules quantifier swept over catalog; " + detail, ""});
  }

  add(per_module(ctx, "fully_invariant_extendable_inherits", "implication",
                 [](Entry& e) -> Violation {
    if (e.inst.mod->order > 24) throw SizeLimitError("restricted to order 24");
    if (!verdict(e, "goldie_rickart")) return std::nullopt;
    Analysis& a = *e.an;
    for (const Bits& n : a.lattice()) {
      bool fully_invariant = true;
      for (const HomMap& f : a.endos()) {
        for (int x : n.elements())
          if (!n.test(f.table[x])) {
            fully_invariant = false;
            break;
          }
        if (!fully_invariant) break;
      }
      if (!fully_invariant) continue;
      auto rest = restrict_to_submodule(e.inst.mod, n);
      bool all_extend = true;
      for (const HomMap& g : end_homs(rest.mod)) {
        bool found = false;
        for (const HomMap& f : a.endos()) {
          bool agrees = true;
          for (int i = 0; i < rest.mod->order && agrees; ++i)
            agrees = f.table[rest.to_parent[i]] ==
                     rest.to_parent[g.table[i]];
          if (agrees) {
            found = true;
            break;
          }
        }
        if (!found) {
          all_extend = false;
          break;
        }
      }
      if (!all_extend) continue;
      Analysis na(rest.mod);
      if (!is_goldie_rickart(na))
        return "fully invariant extendable submodule not Goldie Rickart";
    }
    return std::nullopt;
  }));

  add({"injective_hull_transfer", "implication", "per-module",
       CheckStatus::Skipped, "injective hulls out of scope", ""});

  add(per_module(ctx, "quasi_injective_duo_inherits", "implication",
                 [](Entry& e) -> Violation {
    if (e.inst.mod->order > 24) throw SizeLimitError("restricted to order 24");
    if (!(verdict(e, "duo") && verdict(e, "goldie_rickart") &&
          verdict(e, "quasi_injective")))
      return std::nullopt;
    for (const Bits& n : e.an->lattice())
      if (!restricted_gr(e.inst.mod, n))
        return "submodule of quasi-injective duo module not Goldie Rickart";
    return std::nullopt;
  }));

  add(per_module(ctx, "direct_summand_closure", "implication",
                 [](Entry& e) -> Violation {
    if (!verdict(e, "goldie_rickart")) return std::nullopt;
    for (const Bits& s : e.an->summands())
      if (!restricted_gr(e.inst.mod, s))
        return "direct summand of Goldie Rickart module not Goldie Rickart";
    return std::nullopt;
  }));

  // --- direct-sum counterexample search (the known witnesses are infinite;
  //     outcome recorded, never asserted) ---
  {
    std::string found;
    TupleSuite tuples = make_tuples(ctx);
    for (const auto& t : tuples.tuples) {
      if (t.factors.size() != 2) continue;
      bool both_gr = true;
      for (auto& f : t.factors)
        if (!verdict(*f, "goldie_rickart")) both_gr = false;
      if (!both_gr) continue;
      try {
        Analysis sa(t.sum);
        if (!is_goldie_rickart(sa)) {
          found = tuple_id(t);
          break;
        }
      } catch (const SizeLimitError&) {
      }
    }
    add({"direct_sum_counterexample_search", "construction", "per-pair",
         CheckStatus::Partial,
         found.empty()
             ? "no Goldie Rickart pair with a non-Goldie-Rickart sum within caps"
             : "witness found: " + found,
         found});
  }

  // --- hom-zero direct sums ---
  {
    TupleSuite tuples = make_tuples(ctx);
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0, skipped = 0;
    for (const auto& t : tuples.tuples) {
      try {
        bool hom_zero = true;
        for (size_t i = 0; i < t.factors.size() && hom_zero; ++i)
          for (size_t j = 0; j < t.factors.size() && hom_zero; ++j) {
            if (i == j) continue;
            hom_zero = hom_set(t.factors[i]->inst.mod,
                               t.factors[j]->inst.mod).size() == 1;
          }
        if (!hom_zero) continue;
        bool each = true;
        for (auto& f : t.factors)
          if (!verdict(*f, "goldie_rickart")) each = false;
        Analysis sa(t.sum);
        ++checked;
        if (is_goldie_rickart(sa) != each) {
          failed = true;
          fail = {"hom_zero_direct_sums", "equivalence", "per-pair",
                  CheckStatus::Fail,
                  "implementation bug: hom-zero sum equivalence fails",
                  tuple_id(t)};
          break;
        }
      } catch (const SizeLimitError&) {
        ++skipped;
      }
    }
    if (failed)
      add(fail);
    else
      add({"hom_zero_direct_sums", "equivalence", "per-pair", CheckStatus::Pass,
           "checked " + std::to_string(checked) + " hom-zero tuples, " +
               std::to_string(skipped) + " skipped by caps",
           ""});
  }

  // --- abelian direct sums ---
  {
    TupleSuite tuples = make_tuples(ctx);
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0, skipped = 0;
    for (const auto& t : tuples.tuples) {
      try {
        Analysis sa(t.sum);
        if (!is_abelian_module(sa)) continue;
        bool each = true;
        for (auto& f : t.factors)
          if (!verdict(*f, "goldie_rickart")) each = false;
        ++checked;
        if (is_goldie_rickart(sa) != each) {
          failed = true;
          fail = {"abelian_direct_sums", "equivalence", "per-pair",
                  CheckStatus::Fail,
                  "implementation bug: abelian sum equivalence fails",
                  tuple_id(t)};
          break;
        }
      } catch (const SizeLimitError&) {
        ++skipped;
      }
    }
    if (failed)
      add(fail);
    else
      add({"abelian_direct_sums", "equivalence", "per-pair", CheckStatus::Pass,
           "checked " + std::to_string(checked) + " abelian tuples, " +
               std::to_string(skipped) + " skipped by caps",
           ""});
  }

  add(per_module(ctx, "vnr_end_finite_copies", "implication",
                 [&ctx](Entry& e) -> Violation {
    if (!verdict(e, "goldie_rickart")) return std::nullopt;
    if (e.inst.mod->order > 8) throw SizeLimitError("factor cap");
    if (!end_is_vnr(*e.an)) return std::nullopt;
    ModulePtr cur = e.inst.mod;
    for (int k = 2; k <= 3; ++k) {
      if ((long long)cur->order * e.inst.mod->order >
          ctx.cfg->module_order_cap)
        break;
      cur = direct_sum(cur, e.inst.mod).sum;
      Analysis a(cur);
      if (!is_goldie_rickart(a))
        return "copy power of regular-End Goldie Rickart module fails";
    }
    return std::nullopt;
  }));

  add(per_module(ctx, "sip_over_z2_lemma", "implication",
                 [](Entry& e) -> Violation {
    if (!verdict(e, "goldie_rickart")) return std::nullopt;
    Analysis& a = *e.an;
    const Bits& z2 = a.torsion().z2;
    for (const Bits& n : a.summands()) {
      if (!n.contains(z2)) continue;
      for (const Bits& k : a.summands())
        if (!a.is_summand(n & k))
          return "summand-over-Z2 intersection with summand not a summand";
    }
    return std::nullopt;
  }));

  add(per_module(ctx, "goldie_rickart_implies_sip_over_z2", "implication",
                 [](Entry& e) -> Violation {
    if (verdict(e, "goldie_rickart") && !verdict(e, "sip_over_z2"))
      return "Goldie Rickart module without SIP over Z2";
    return std::nullopt;
  }));

  add(per_module(ctx, "finite_subset_t_operator", "equivalence",
                 [](Entry& e) -> Violation {
    Analysis& a = *e.an;
    std::set<Bits> family;
    for (const HomMap& f : a.endos()) family.insert(a.pz2(f));
    std::vector<Bits> singles(family.begin(), family.end());
    bool gr = verdict(e, "goldie_rickart");
    // subsets of size <= 3
    auto all_summand = [&](const std::set<Bits>& sets) {
      for (const Bits& s : sets)
        if (!a.is_summand(s)) return false;
      return true;
    };
    std::set<Bits> up_to_three(family);
    for (size_t i = 0; i < singles.size(); ++i)
      for (size_t j = i; j < singles.size(); ++j) {
        Bits p = singles[i] & singles[j];
        up_to_three.insert(p);
        for (size_t k = j; k < singles.size(); ++k)
          up_to_three.insert(p & singles[k]);
      }
    if (all_summand(up_to_three) != gr)
      return "size-3 subset characterization disagrees";
    if ((int)a.endos().size() <= 64) {
      std::set<Bits> closure(family);
      std::vector<Bits> work(family.begin(), family.end());
      for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
          Bits p = work[i] & work[j];
          if (closure.insert(p).second) work.push_back(p);
        }
      if (all_summand(closure) != gr)
        return "full finite-subset characterization disagrees";
    }
    return std::nullopt;
  }));

  add(per_module(ctx, "z2_plus_summand_projective_injective", "implication",
                 [](Entry& e) -> Violation {
    if (e.inst.mod->base->is_integers()) return std::nullopt;
    if (e.inst.mod->order > 32) throw SizeLimitError("restricted to order 32");
    if (!verdict(e, "goldie_rickart")) return std::nullopt;
    Analysis& a = *e.an;
    const Bits& z2 = a.torsion().z2;
    bool proj = verdict(e, "projective");
    bool inj = verdict(e, "injective");
    if (!proj && !inj) return std::nullopt;
    for (const Bits& n : a.summands()) {
      Bits zn = submodule_sum(*e.inst.mod, z2, n);
      auto rest = restrict_to_submodule(e.inst.mod, zn);
      if (proj && !is_projective_module(rest.mod))
        return "Z2 + summand not projective";
      if (inj && !is_injective_module(rest.mod))
        return "Z2 + summand not injective";
    }
    return std::nullopt;
  }));

  add(per_module(ctx, "quotient_singular_inclusions", "construction",
                 [](Entry& e) -> Violation {
    Analysis& a = *e.an;
    const auto& t = a.torsion();
    bool field = field_base(e.inst.mod->base);
    for (const Bits& n : a.lattice()) {
      Quotient q = quotient_module(e.inst.mod, n);
      TorsionProfile qt = goldie_torsion(q.mod);
      Bits zi = project_set(q, t.z, q.mod->order);
      Bits z2i = project_set(q, t.z2, q.mod->order);
      if (!qt.z.contains(zi)) return "image of Z not inside Z of quotient";
      if (!qt.z2.contains(z2i)) return "image of Z2 not inside Z2 of quotient";
      if (field && !(qt.z == zi && qt.z2 == z2i))
        return "equality over a field fails";
    }
    return std::nullopt;
  }));

  add(per_module(ctx, "quasi_projective_quotient_inclusion", "construction",
                 [](Entry& e) -> Violation {
    if (e.inst.mod->order > 16) throw SizeLimitError("restricted to order 16");
    if (!verdict(e, "quasi_projective")) return std::nullopt;
    Analysis& a = *e.an;
    bool field = field_base(e.inst.mod->base);
    for (const Bits& n : a.lattice()) {
      Quotient q = quotient_module(e.inst.mod, n);
      Bits z2q = goldie_torsion(q.mod).z2;
      for (const HomMap& fbar : end_homs(q.mod)) {
        // a lift exists by quasi-projectivity
        const HomMap* lift = nullptr;
        for (const HomMap& f : a.endos()) {
          bool commutes = true;
          for (int x = 0; x < e.inst.mod->order && commutes; ++x)
            commutes = q.proj[f.table[x]] == fbar.table[q.proj[x]];
          if (commutes) {
            lift = &f;
            break;
          }
        }
        if (!lift) return "quasi-projective lift missing";
        Bits p = a.pz2(*lift);
        Bits pn = submodule_sum(*e.inst.mod, p, n);
        Bits lhs = project_set(q, pn, q.mod->order);
        Bits rhs = preimage(fbar, z2q);
        if (!rhs.contains(lhs)) return "quotient inclusion fails";
        if (field && !(lhs == rhs)) return "quotient equality over field fails";
      }
    }
    return std::nullopt;
  }));

  add(per_module(ctx, "quasi_projective_quotient_goldie_rickart", "implication",
                 [](Entry& e) -> Violation {
    if (!field_base(e.inst.mod->base)) return std::nullopt;
    if (!(verdict(e, "quasi_projective") && verdict(e, "goldie_rickart")))
      return std::nullopt;
    // over a finite field the only torsion submodule is 0, so the quotient
    // is the module itself
    if (!verdict(e, "goldie_rickart"))
      return "degenerate quotient fails";
    return std::nullopt;
  }, "degenerate at this scale: finite base without zero divisors is a field, "
     "whose only torsion submodule is 0"));

  // --- left/right asymmetry search over catalog rings ---
  {
    std::string found;
    for (auto& fam : ctx.fams) {
      if (fam.fam->ring->is_integers()) continue;
      RingPredicates p = ring_predicates(fam.fam->ring->table());
      if (p.right_goldie_rickart != p.left_goldie_rickart) {
        found = fam.fam->ring_spec;
        break;
      }
    }
    add({"left_right_asymmetry_search", "construction", "per-ring",
         CheckStatus::Partial,
         found.empty() ? "no finite left/right asymmetric ring in catalog "
                         "(the known witnesses are infinite)"
                       : "asymmetric ring found: " + found,
         found});
  }

  // --- Rickart ring = Goldie Rickart + nonsingular ---
  {
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0;
    for (auto& fam : ctx.fams) {
      if (fam.fam->ring->is_integers()) continue;
      const RingTable& r = fam.fam->ring->table();
      RingPredicates p = ring_predicates(r);
      bool right_ns = ring_right_nonsingular(fam.fam->ring);
      bool left_ns = ring_right_nonsingular(
          BaseRing::finite(opposite_ring(r)));
      ++checked;
      if (p.right_rickart != (p.right_goldie_rickart && right_ns) ||
          p.left_rickart != (p.left_goldie_rickart && left_ns)) {
        failed = true;
        fail = {"rickart_ring_iff_goldie_rickart_nonsingular", "equivalence",
                "per-ring", CheckStatus::Fail,
                "implementation bug: ring-level equivalence fails",
                fam.fam->ring_spec};
      }
    }
    if (failed)
      add(fail);
    else
      add({"rickart_ring_iff_goldie_rickart_nonsingular", "equivalence",
           "per-ring", CheckStatus::Pass,
           "checked " + std::to_string(checked) + " rings (both sides)", ""});
  }

  // --- Goldie Rickart does not ascend from submodules: search ---
  {
    std::string found;
    for (auto& fam : ctx.fams) {
      for (auto& e : fam.entries) {
        if (e->inst.mod->order > 32) continue;
        if (verdict(*e, "goldie_rickart")) continue;
        for (const Bits& n : e->an->lattice()) {
          if (n.count() == e->inst.mod->order) continue;
          try {
            if (n.count() > 1 && restricted_gr(e->inst.mod, n)) {
              found = e->inst.id;
              break;
            }
          } catch (const SizeLimitError&) {
          }
        }
        if (!found.empty()) break;
      }
      if (!found.empty()) break;
    }
    add({"submodule_to_overmodule_search", "construction", "per-module",
         CheckStatus::Partial,
         found.empty() ? "no Goldie Rickart submodule of a non-Goldie-Rickart "
                         "module found in catalog (the known witnesses are "
                         "infinite)"
                       : "witness found: " + found,
         found});
  }

  // --- eR for idempotent e over a right Goldie Rickart ring ---
  {
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0;
    for (auto& fam : ctx.fams) {
      if (fam.fam->ring->is_integers()) continue;
      const RingTable& r = fam.fam->ring->table();
      if (!ring_predicates(r).right_goldie_rickart) continue;
      auto reg = regular_module(fam.fam->ring);
      for (int ee : idempotents(r)) {
        Bits s(r.order);
        for (int b = 0; b < r.order; ++b) s.set(r.times(ee, b));
        ++checked;
        if (!restricted_gr(reg, s)) {
          failed = true;
          fail = {"idempotent_ideal_goldie_rickart", "implication", "per-ring",
                  CheckStatus::Fail,
                  "implementation bug: eR not Goldie Rickart over a right "
                  "Goldie Rickart ring",
                  fam.fam->ring_spec};
        }
      }
    }
    if (failed)
      add(fail);
    else
      add({"idempotent_ideal_goldie_rickart", "implication", "per-ring",
           CheckStatus::Pass,
           "checked " + std::to_string(checked) + " idempotent ideals", ""});
  }

  add(per_module(ctx, "vnr_ring_fg_projective_goldie_rickart", "implication",
                 [](Entry& e) -> Violation {
    if (e.inst.mod->base->is_integers()) return std::nullopt;
    if (!is_von_neumann_regular(e.inst.mod->base->table()))
      return std::nullopt;
    if (e.inst.mod->order > 32) throw SizeLimitError("restricted to order 32");
    if (verdict(e, "projective") && !verdict(e, "goldie_rickart"))
      return "projective module over regular ring not Goldie Rickart";
    return std::nullopt;
  }));

  add(per_module(ctx, "vnr_ring_finitely_presented_goldie_rickart",
                 "implication", [](Entry& e) -> Violation {
    if (e.inst.mod->base->is_integers()) return std::nullopt;
    if (!is_von_neumann_regular(e.inst.mod->base->table()))
      return std::nullopt;
    if (e.inst.mod->order > 32) throw SizeLimitError("restricted to order 32");
    // finitely presented = finitely generated at this scale; the projective
    // path carries the statement
    if (verdict(e, "projective") && !verdict(e, "goldie_rickart"))
      return "finitely presented module over regular ring not Goldie Rickart";
    return std::nullopt;
  }, "finitely presented = finitely generated over a finite ring"));

  // --- abelian free modules over right Goldie Rickart rings ---
  {
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0, applicable = 0;
    for (auto& fam : ctx.fams) {
      if (fam.fam->ring->is_integers()) continue;
      if (!ring_predicates(fam.fam->ring->table()).right_goldie_rickart)
        continue;
      for (const ModulePtr& f :
           free_modules(fam.fam->ring, ctx.cfg->module_order_cap)) {
        try {
          Analysis a(f);
          ++checked;
          if (!is_abelian_module(a)) continue;
          ++applicable;
          if (!is_goldie_rickart(a)) {
            failed = true;
            fail = {"abelian_free_modules_goldie_rickart", "implication",
                    "per-ring", CheckStatus::Fail,
                    "implementation bug: abelian free module not Goldie "
                    "Rickart",
                    fam.fam->ring_spec};
          }
        } catch (const SizeLimitError&) {
        }
      }
    }
    if (failed)
      add(fail);
    else
      add({"abelian_free_modules_goldie_rickart", "implication", "per-ring",
           CheckStatus::Pass,
           "checked " + std::to_string(checked) + " free modules, " +
               std::to_string(applicable) + " abelian",
           ""});
  }

  // --- ring-level implication chain ---
  {
    std::string detail;
    bool failed = false;
    TheoremCheck fail{};
    for (auto& fam : ctx.fams) {
      if (fam.fam->ring->is_integers()) continue;
      bool s_all = true, s_nonsing_rick = true, s_proj = true, s_cyc_proj = true;
      for (auto& e : fam.entries) {
        if (!verdict(*e, "goldie_rickart")) s_all = false;
        if (verdict(*e, "nonsingular") && !verdict(*e, "rickart"))
          s_nonsing_rick = false;
        try {
          if (e->inst.mod->order <= 32 && verdict(*e, "projective") &&
              !verdict(*e, "goldie_rickart"))
            s_proj = false;
        } catch (const SizeLimitError&) {
        }
      }
      for (auto& e : fam.cyclic_entries)
        try {
          if (verdict(*e, "projective") && !verdict(*e, "goldie_rickart"))
            s_cyc_proj = false;
        } catch (const SizeLimitError&) {
        }
      auto reg = regular_module(fam.fam->ring);
      Analysis rega(reg);
      bool z2_summand = rega.is_summand(rega.torsion().z2);
      bool s2 = s_nonsing_rick && z2_summand;
      bool s_free = true;
      for (const ModulePtr& f :
           free_modules(fam.fam->ring, ctx.cfg->module_order_cap))
        try {
          Analysis a(f);
          if (!is_goldie_rickart(a)) s_free = false;
        } catch (const SizeLimitError&) {
        }
      bool s5 = ring_predicates(fam.fam->ring->table()).right_goldie_rickart;
      std::string why;
      if (s_all && !s2) why = "all-GR without condition (2)";
      if (s_proj && !s_free) why = "projective sweep true but a free fails";
      if (s_free && !s5) why = "free rank 1 contradiction";
      if (s5 != s_cyc_proj) why = "ring GR vs cyclic projective disagree";
      if (!why.empty()) {
        failed = true;
        fail = {"goldie_rickart_ring_chain", "implication", "per-ring",
                CheckStatus::Fail, "implementation bug: " + why,
                fam.fam->ring_spec};
      }
      detail += fam.fam->name + "(" + std::to_string(s_all) +
                std::to_string(s2) + std::to_string(s_proj) +
                std::to_string(s_free) + std::to_string(s5) +
                std::to_string(s_cyc_proj) + ") ";
    }
    if (failed)
      add(fail);
    else
      add({"goldie_rickart_ring_chain", "implication", "per-ring",
           CheckStatus::Partial,
           "quantifiers truncated to catalog and free rank <= 3; observed "
           "(all,2,proj,free,ring,cycproj): " + detail,
           ""});
  }

  // ================= relative suite =================
  TupleSuite tuples = make_tuples(ctx);

  // Theorem: M is N-Goldie-Rickart iff every summand of M is K-Goldie-Rickart
  // for every submodule K of N.
  {
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0, skipped = 0;
    for (auto& fam : ctx.fams) {
      for (auto& em : fam.cyclic_entries) {
        if (em->inst.mod->order > ctx.cfg->relative_factor_cap) continue;
        for (auto& en : fam.cyclic_entries) {
          if (en->inst.mod->order > ctx.cfg->relative_factor_cap) continue;
          try {
            Analysis am(em->inst.mod), an(en->inst.mod);
            bool lhs = is_relative_goldie_rickart(am, an);
            bool rhs = true;
            for (const Bits& m1 : am.summands()) {
              auto rm = restrict_to_submodule(em->inst.mod, m1);
              for (const Bits& n1 : an.lattice()) {
                auto rn = restrict_to_submodule(en->inst.mod, n1);
                if (!rel_gr(rm.mod, rn.mod)) {
                  rhs = false;
                  break;
                }
              }
              if (!rhs) break;
            }
            ++checked;
            if (lhs != rhs) {
              failed = true;
              fail = {"relative_restriction", "equivalence", "per-pair",
                      CheckStatus::Fail,
                      "implementation bug: restriction equivalence fails",
                      em->inst.id + " vs " + en->inst.id};
            }
          } catch (const SizeLimitError&) {
            ++skipped;
          }
        }
      }
    }
    if (failed)
      add(fail);
    else
      add({"relative_restriction", "equivalence", "per-pair", CheckStatus::Pass,
           "checked " + std::to_string(checked) + " pairs, " +
               std::to_string(skipped) + " skipped by caps",
           ""});
  }

  add(per_module(ctx, "relative_summand_submodule_corollary", "equivalence",
                 [](Entry& e) -> Violation {
    if (e.inst.mod->order > 8) throw SizeLimitError("factor cap");
    Analysis& a = *e.an;
    bool gr = verdict(e, "goldie_rickart");
    // (2): every summand is K-Goldie-Rickart for every submodule K
    bool two = true;
    for (const Bits& n : a.summands()) {
      auto rn = restrict_to_submodule(e.inst.mod, n);
      for (const Bits& k : a.lattice()) {
        auto rk = restrict_to_submodule(e.inst.mod, k);
        if (!rel_gr(rn.mod, rk.mod)) {
          two = false;
          break;
        }
      }
      if (!two) break;
    }
    if (gr != two) return "condition (2) disagrees";
    // (3): for summands N, K and f : M -> K, the restriction of f to N pulls
    // Z2(K) back to a summand of N
    bool three = true;
    for (const Bits& n : a.summands()) {
      auto rn = restrict_to_submodule(e.inst.mod, n);
      Analysis na(rn.mod);
      for (const Bits& k : a.summands()) {
        auto rk = restrict_to_submodule(e.inst.mod, k);
        Bits z2k = goldie_torsion(rk.mod).z2;
        for (const HomMap& f : hom_set(e.inst.mod, rk.mod)) {
          Bits pre(rn.mod->order);
          for (int i = 0; i < rn.mod->order; ++i)
            if (z2k.test(f.table[rn.to_parent[i]])) pre.set(i);
          if (!na.is_summand(pre)) {
            three = false;
            break;
          }
        }
        if (!three) break;
      }
      if (!three) break;
    }
    if (gr != three) return "condition (3) disagrees";
    return std::nullopt;
  }));

  // Theorem: with pairwise relative C2, the sum is Goldie Rickart iff the
  // factors are pairwise relatively Goldie Rickart.
  {
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0, skipped = 0;
    for (const auto& t : tuples.tuples) {
      try {
        bool pairwise_c2 = true;
        for (auto& fi : t.factors)
          for (auto& fj : t.factors) {
            Analysis ai(fi->inst.mod), aj(fj->inst.mod);
            if (!is_relative_c2(ai, aj)) pairwise_c2 = false;
          }
        if (!pairwise_c2) continue;
        bool pairwise_gr = true;
        for (auto& fi : t.factors)
          for (auto& fj : t.factors)
            if (!rel_gr(fi->inst.mod, fj->inst.mod)) pairwise_gr = false;
        Analysis sa(t.sum);
        ++checked;
        if (is_goldie_rickart(sa) != pairwise_gr) {
          failed = true;
          fail = {"relative_c2_direct_sum", "equivalence", "per-pair",
                  CheckStatus::Fail,
                  "implementation bug: C2 direct-sum equivalence fails",
                  tuple_id(t)};
          break;
        }
      } catch (const SizeLimitError&) {
        ++skipped;
      }
    }
    if (failed)
      add(fail);
    else
      add({"relative_c2_direct_sum", "equivalence", "per-pair",
           CheckStatus::Pass,
           "checked " + std::to_string(checked) + " pairwise-C2 tuples, " +
               std::to_string(skipped) + " skipped by caps",
           ""});
  }

  add(per_module(ctx, "c2_finite_copies", "implication",
                 [&ctx](Entry& e) -> Violation {
    if (e.inst.mod->order > 8) throw SizeLimitError("factor cap");
    if (!(verdict(e, "goldie_rickart") && verdict(e, "c2")))
      return std::nullopt;
    ModulePtr cur = e.inst.mod;
    for (int k = 2; k <= 3; ++k) {
      if ((long long)cur->order * e.inst.mod->order >
          ctx.cfg->module_order_cap)
        break;
      cur = direct_sum(cur, e.inst.mod).sum;
      Analysis a(cur);
      if (!is_goldie_rickart(a))
        return "copy power of C2 Goldie Rickart module fails";
    }
    return std::nullopt;
  }));

  // --- right Goldie Rickart + C2 ring: finitely generated free/projective ---
  {
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0;
    for (auto& fam : ctx.fams) {
      if (fam.fam->ring->is_integers()) continue;
      auto reg = regular_module(fam.fam->ring);
      Analysis rega(reg);
      if (!ring_predicates(fam.fam->ring->table()).right_goldie_rickart)
        continue;
      if (!has_c2(rega)) continue;
      for (const ModulePtr& f :
           free_modules(fam.fam->ring, ctx.cfg->module_order_cap))
        try {
          Analysis a(f);
          ++checked;
          if (!is_goldie_rickart(a)) {
            failed = true;
            fail = {"c2_ring_fg_free_projective", "implication", "per-ring",
                    CheckStatus::Fail,
                    "implementation bug: free module over C2 Goldie Rickart "
                    "ring fails",
                    fam.fam->ring_spec};
          }
        } catch (const SizeLimitError&) {
        }
      for (auto& e : fam.entries) {
        if (e->inst.mod->order > 32) continue;
        try {
          if (verdict(*e, "projective")) {
            ++checked;
            if (!verdict(*e, "goldie_rickart")) {
              failed = true;
              fail = {"c2_ring_fg_free_projective", "implication", "per-ring",
                      CheckStatus::Fail,
                      "implementation bug: projective module over C2 Goldie "
                      "Rickart ring fails",
                      e->inst.id};
            }
          }
        } catch (const SizeLimitError&) {
        }
      }
    }
    if (failed)
      add(fail);
    else
      add({"c2_ring_fg_free_projective", "implication", "per-ring",
           CheckStatus::Pass, "checked " + std::to_string(checked) + " modules",
           ""});
  }

  // Proposition: N with (strong) SIP over Z2: N is sum-Goldie-Rickart iff
  // N is Mi-Goldie-Rickart for each factor; products realized as finite sums.
  {
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0, skipped = 0;
    for (auto& fam : ctx.fams) {
      std::vector<std::shared_ptr<Entry>> factors;
      for (auto& e : fam.cyclic_entries)
        if (e->inst.mod->order <= ctx.cfg->relative_factor_cap)
          factors.push_back(e);
      for (const auto& t : tuples.tuples) {
        if (t.factors.empty() ||
            !same_base(*t.factors[0]->inst.mod, *(fam.entries.empty()
                                                      ? t.factors[0]->inst.mod
                                                      : fam.entries[0]->inst.mod)))
          continue;
        for (auto& en : factors) {
          try {
            Analysis na(en->inst.mod);
            if (!has_sip_over_z2(na)) continue;
            if (!same_base(*en->inst.mod, *t.sum)) continue;
            bool lhs = rel_gr(en->inst.mod, t.sum);
            bool rhs = true;
            for (auto& fi : t.factors)
              if (!rel_gr(en->inst.mod, fi->inst.mod)) rhs = false;
            ++checked;
            if (lhs != rhs) {
              failed = true;
              fail = {"relative_sip_direct_sum", "equivalence", "per-pair",
                      CheckStatus::Fail,
                      "implementation bug: SIP relative equivalence fails",
                      en->inst.id + " vs " + tuple_id(t)};
            }
          } catch (const SizeLimitError&) {
            ++skipped;
          }
        }
        if (failed) break;
      }
      if (failed) break;
    }
    if (failed)
      add(fail);
    else
      add({"relative_sip_direct_sum", "equivalence", "per-pair",
           CheckStatus::Pass,
           "checked " + std::to_string(checked) + " (N, sum) pairs, " +
               std::to_string(skipped) +
               " skipped by caps; strong-SIP and product variants coincide "
               "with the finite direct-sum case at this scale",
           ""});
  }

  // Corollary: Mj is sum-Goldie-Rickart iff Mj is Mi-Goldie-Rickart for all i.
  {
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0, skipped = 0;
    for (const auto& t : tuples.tuples) {
      for (auto& ej : t.factors) {
        try {
          bool lhs = rel_gr(ej->inst.mod, t.sum);
          bool rhs = true;
          for (auto& fi : t.factors)
            if (!rel_gr(ej->inst.mod, fi->inst.mod)) rhs = false;
          ++checked;
          if (lhs != rhs) {
            failed = true;
            fail = {"relative_sum_target_corollary", "equivalence", "per-pair",
                    CheckStatus::Fail,
                    "implementation bug: factor-vs-sum equivalence fails",
                    ej->inst.id + " vs " + tuple_id(t)};
          }
        } catch (const SizeLimitError&) {
          ++skipped;
        }
      }
      if (failed) break;
    }
    if (failed)
      add(fail);
    else
      add({"relative_sum_target_corollary", "equivalence", "per-pair",
           CheckStatus::Pass,
           "checked " + std::to_string(checked) + " factor/sum pairs, " +
               std::to_string(skipped) + " skipped by caps",
           ""});
  }

  // Theorem: with Mi Mj-injective for i<j, the sum is N-Goldie-Rickart iff
  // each factor is.
  {
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0, skipped = 0;
    for (auto& fam : ctx.fams) {
      std::vector<std::shared_ptr<Entry>> targets;
      for (auto& e : fam.cyclic_entries)
        if (e->inst.mod->order <= ctx.cfg->relative_factor_cap)
          targets.push_back(e);
      for (const auto& t : tuples.tuples) {
        if (targets.empty() || !same_base(*t.sum, *targets[0]->inst.mod))
          continue;
        try {
          bool inj_chain = true;
          for (size_t i = 0; i < t.factors.size() && inj_chain; ++i)
            for (size_t j = i + 1; j < t.factors.size() && inj_chain; ++j)
              inj_chain = is_relatively_injective(t.factors[i]->inst.mod,
                                                  t.factors[j]->inst.mod);
          if (!inj_chain) continue;
          for (auto& en : targets) {
            bool lhs = rel_gr(t.sum, en->inst.mod);
            bool rhs = true;
            for (auto& fi : t.factors)
              if (!rel_gr(fi->inst.mod, en->inst.mod)) rhs = false;
            ++checked;
            if (lhs != rhs) {
              failed = true;
              fail = {"relative_injective_direct_sum", "equivalence",
                      "per-pair", CheckStatus::Fail,
                      "implementation bug: relative-injective sum equivalence "
                      "fails",
                      tuple_id(t) + " vs " + en->inst.id};
              break;
            }
          }
          if (failed) break;
        } catch (const SizeLimitError&) {
          ++skipped;
        }
      }
      if (failed) break;
    }
    if (failed)
      add(fail);
    else
      add({"relative_injective_direct_sum", "equivalence", "per-pair",
           CheckStatus::Pass,
           "checked " + std::to_string(checked) + " (sum, target) pairs, " +
               std::to_string(skipped) + " skipped by caps",
           ""});
  }

  // Corollary: with Mi Mj-injective for i<j, the sum is Goldie Rickart iff
  // the factors are pairwise relatively Goldie Rickart.
  {
    bool failed = false;
    TheoremCheck fail{};
    int checked = 0, skipped = 0;
    for (const auto& t : tuples.tuples) {
      try {
        bool inj_chain = true;
        for (size_t i = 0; i < t.factors.size() && inj_chain; ++i)
          for (size_t j = i + 1; j < t.factors.size() && inj_chain; ++j)
            inj_chain = is_relatively_injective(t.factors[i]->inst.mod,
                                                t.factors[j]->inst.mod);
        if (!inj_chain) continue;
        bool pairwise = true;
        for (auto& fi : t.factors)
          for (auto& fj : t.factors)
            if (!rel_gr(fi->inst.mod, fj->inst.mod)) pairwise = false;
        Analysis sa(t.sum);
        ++checked;
        if (is_goldie_rickart(sa) != pairwise) {
          failed = true;
          fail = {"relative_injective_corollary", "equivalence", "per-pair",
                  CheckStatus::Fail,
                  "implementation bug: relative-injective corollary fails",
                  tuple_id(t)};
          break;
        }
      } catch (const SizeLimitError&) {
        ++skipped;
      }
    }
    if (failed)
      add(fail);
    else
      add({"relative_injective_corollary", "equivalence", "per-pair",
           CheckStatus::Pass,
           "checked " + std::to_string(checked) + " tuples, " +
               std::to_string(skipped) + " skipped by caps",
           ""});
  }

  return out;
}

}  // namespace finmod::internal

namespace finmod {

std::vector<std::string> registry_ids() {
  return {"t_operator_identities",
          "singular_essential_in_goldie_torsion",
          "trivially_goldie_rickart_classes",
          "nonsingular_rickart_iff_goldie_rickart",
          "indecomposable_goldie_rickart_rickart_or_z2_torsion",
          "indecomposable_extending_nonsingular_or_goldie_rickart",
          "t_baer_implies_goldie_rickart",
          "goldie_rickart_ssip_implies_t_baer",
          "t_extending_implies_goldie_rickart",
          "sigma_t_extending_ring_equivalences",
          "triangular_ring_catalog_observation",
          "goldie_rickart_decomposition",
          "z2_semiperfect_all_modules_goldie_rickart",
          "qf_ring_modules_goldie_rickart",
          "infinite_product_counterexample",
          "z4_goldie_rickart_not_rickart",
          "rickart_vs_goldie_rickart",
          "rickart_z_summand_implies_goldie_rickart",
          "nonsingular_ring_goldie_rickart_z_summand",
          "split_sequence_characterization",
          "semisimple_ring_characterization",
          "fully_invariant_extendable_inherits",
          "injective_hull_transfer",
          "quasi_injective_duo_inherits",
          "direct_summand_closure",
          "direct_sum_counterexample_search",
          "hom_zero_direct_sums",
          "abelian_direct_sums",
          "vnr_end_finite_copies",
          "sip_over_z2_lemma",
          "goldie_rickart_implies_sip_over_z2",
          "finite_subset_t_operator",
          "z2_plus_summand_projective_injective",
          "quotient_singular_inclusions",
          "quasi_projective_quotient_inclusion",
          "quasi_projective_quotient_goldie_rickart",
          "left_right_asymmetry_search",
          "rickart_ring_iff_goldie_rickart_nonsingular",
          "submodule_to_overmodule_search",
          "idempotent_ideal_goldie_rickart",
          "vnr_ring_fg_projective_goldie_rickart",
          "vnr_ring_finitely_presented_goldie_rickart",
          "abelian_free_modules_goldie_rickart",
          "goldie_rickart_ring_chain",
          "relative_restriction",
          "relative_summand_submodule_corollary",
          "relative_c2_direct_sum",
          "c2_finite_copies",
          "c2_ring_fg_free_projective",
          "relative_sip_direct_sum",
          "relative_sum_target_corollary",
          "relative_injective_direct_sum",
          "relative_injective_corollary"};
}

}  // namespace finmod
