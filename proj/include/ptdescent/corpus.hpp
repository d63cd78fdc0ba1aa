#pragma once

// Instance generators and sweeps over the small-group catalog.

#include <string>
#include <vector>

#include "ptdescent/actions.hpp"
#include "ptdescent/descent.hpp"

namespace ptdescent {

/// Groups from groups_up_to_12 with order ≤ max_order.
std::vector<AlgebraRef> small_groups(std::size_t max_order);

/// Cospans of subgroup inclusions H, K ↪ B with H ∪ K generating B, for
/// unordered pairs of subgroups (H listed no later than K).
std::vector<CospanRef> extremal_subgroup_cospans(const AlgebraRef& base);

struct UASweep {
  std::size_t cospans = 0;
  std::size_t instances = 0;   // distinct (cospan, X, restriction pair)
  std::size_t violations = 0;  // more than one extension
  std::size_t disagreements = 0;  // extension count differs from the enumerated one
  std::size_t inconclusive = 0;
  std::vector<std::string> details;  // one line per violation or disagreement
};

/// For every B of order ≤ max_base, every extremal subgroup cospan, and
/// every X of order ≤ max_acted: groups the valid B-actions on X by their
/// two restrictions and runs extend_action on each restriction pair.
UASweep ua_sweep(std::size_t max_base, std::size_t max_acted,
                 ExtendMethod method = ExtendMethod::propagate, const SearchBounds& bounds = {});

struct SHSweep {
  std::size_t groups = 0;
  std::size_t pairs = 0;
  std::size_t cooperating = 0;
  std::size_t violations = 0;
  std::vector<std::string> details;
};

/// Every ordered pair of normal subgroups of every group of order ≤ max_order.
SHSweep sh_sweep(std::size_t max_order);

struct DescentInstance {
  std::string name;
  CospanRef cospan;
  ActionDatum xi;    // P = X ⋊_xi B
  ActionDatum zeta;  // Q = Y ⋊_zeta B
  Point P;
  Point Q;
};

/// A fixed list of group-signature instances over bases of order ≤ 6 with
/// kernels of order ≤ 4.
std::vector<DescentInstance> descent_corpus();

}  // namespace ptdescent
