#include "ptdescent/corpus.hpp"

#include <algorithm>
#include <map>

#include "ptdescent/catalog.hpp"
#include "ptdescent/congruence.hpp"

namespace ptdescent {

std::vector<AlgebraRef> small_groups(std::size_t max_order) {
  auto all = groups_up_to_12();
  std::erase_if(all, [&](const AlgebraRef& g) { return g->size() > max_order; });
  return all;
}

std::vector<CospanRef> extremal_subgroup_cospans(const AlgebraRef& base) {
  const auto subs = subalgebras(*base);
  std::vector<Homomorphism> inclusions;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    inclusions.push_back(
        reify_subset(base, subs[i], base->name() + "_H" + std::to_string(i)).inclusion);
  }
  std::vector<CospanRef> out;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i; j < subs.size(); ++j) {
      auto seed = subs[i];
      seed.insert(seed.end(), subs[j].begin(), subs[j].end());
      if (generated_subalgebra(*base, seed).size() == base->size()) {
        out.push_back(make_cospan(inclusions[i], inclusions[j]));
      }
    }
  return out;
}

UASweep ua_sweep(std::size_t max_base, std::size_t max_acted, ExtendMethod method,
                 const SearchBounds& bounds) {
  UASweep sweep;
  const auto acted_groups = small_groups(max_acted);
  for (const auto& B : small_groups(max_base)) {
    const auto cospans = extremal_subgroup_cospans(B);
    sweep.cospans += cospans.size();
    for (const auto& X : acted_groups) {
      const auto all = enumerate_actions(B, X, Signature::groups(), bounds);
      if (!all.conclusive) {
        ++sweep.inconclusive;
        sweep.details.push_back(B->name() + " on " + X->name() + ": " + all.bound_note);
        continue;
      }
      for (const auto& cs : cospans) {
        std::map<std::pair<ActionDatum, ActionDatum>, std::size_t> groups;
        for (const auto& xi : all.actions) {
          ++groups[{restrict_action(cs->f(), xi), restrict_action(cs->g(), xi)}];
        }
        for (const auto& [pair, count] : groups) {
          ++sweep.instances;
          const auto result = extend_action(*cs, pair.first, pair.second, method, bounds);
          const std::string where = B->name() + " via " + cs->left()->name() + "," +
                                    cs->right()->name() + " on " + X->name();
          if (!result.conclusive) {
            ++sweep.inconclusive;
            sweep.details.push_back(where + ": " + result.bound_note);
            continue;
          }
          if (result.actions.size() > 1) {
            ++sweep.violations;
            sweep.details.push_back(where + ": " + std::to_string(result.actions.size()) +
                                    " extensions");
          }
          if (result.actions.size() != count) {
            ++sweep.disagreements;
            sweep.details.push_back(where + ": " + std::to_string(result.actions.size()) +
                                    " extensions found, " + std::to_string(count) +
                                    " enumerated");
          }
        }
      }
    }
  }
  return sweep;
}

SHSweep sh_sweep(std::size_t max_order) {
  SHSweep sweep;
  for (const auto& A : small_groups(max_order)) {
    ++sweep.groups;
    std::vector<Congruence> congruences;
    for (const auto& n : normal_subalgebras(*A)) congruences.push_back(congruence_from_normal(A, n));
    for (const auto& r : congruences)
      for (const auto& s : congruences) {
        ++sweep.pairs;
        const auto v = check_sh_instance(r, s);
        sweep.cooperating += v.cooperates;
        if (!v.sh_respected) {
          ++sweep.violations;
          sweep.details.push_back(A->name() + ": normal subgroups of orders " +
                                  std::to_string(class_of_zero(r).size()) + " and " +
                                  std::to_string(class_of_zero(s).size()));
        }
      }
  }
  return sweep;
}

std::vector<DescentInstance> descent_corpus() {
  std::vector<DescentInstance> out;
  const std::vector<AlgebraRef> acted{cyclic_group(2), cyclic_group(3),
                                      product_group(cyclic_group(2), cyclic_group(2))};
  for (const auto& B : small_groups(6)) {
    if (B->size() < 2) continue;
    // Prefer cospans of two proper subgroups; keep two per base.
    auto cospans = extremal_subgroup_cospans(B);
    std::stable_partition(cospans.begin(), cospans.end(), [&](const CospanRef& c) {
      return c->left()->size() < B->size() && c->right()->size() < B->size();
    });
    if (cospans.size() > 2) cospans.erase(cospans.begin() + 2, cospans.end());

    // Up to three actions: the trivial one on each X, then nontrivial ones.
    std::vector<ActionDatum> actions;
    std::vector<ActionDatum> nontrivial;
    for (const auto& X : acted) {
      auto all = enumerate_actions(B, X, Signature::groups()).actions;
      for (auto& xi : all) {
        if (xi == ActionDatum::trivial(B, X)) {
          actions.push_back(xi);
        } else {
          nontrivial.push_back(xi);
        }
      }
    }
    if (!nontrivial.empty()) {
      if (actions.size() > 2) actions.erase(actions.begin() + 2, actions.end());
      actions.push_back(nontrivial.front());
    }
    if (actions.size() > 3) actions.erase(actions.begin() + 3, actions.end());

    for (std::size_t c = 0; c < cospans.size(); ++c)
      for (std::size_t i = 0; i < actions.size(); ++i)
        for (std::size_t j = 0; j < actions.size(); ++j) {
          const auto& xi = actions[i];
          const auto& zeta = actions[j];
          out.push_back({B->name() + "/" + std::to_string(c) + "/" + xi.acted()->name() + "->" +
                             zeta.acted()->name() + "/" + std::to_string(i) + std::to_string(j),
                         cospans[c], xi, zeta, semidirect_product(xi).point,
                         semidirect_product(zeta).point});
        }
  }
  return out;
}

}  // namespace ptdescent
