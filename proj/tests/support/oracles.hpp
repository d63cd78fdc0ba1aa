#pragma once

// Brute-force reference computations for tests. Nothing here calls the
// search or validation code under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "ptdescent/actions.hpp"
#include "ptdescent/algebra.hpp"

namespace oracle {

using ptdescent::Element;
using ptdescent::FiniteAlgebra;

/// Every map n → m as a table, lexicographic order.
inline std::vector<std::vector<Element>> all_maps(std::size_t n, std::size_t m) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++f[pos] < m) break;
      f[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

/// Preserves add and every op table, checked pointwise.
inline bool is_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<Element>& f) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (f[a.add(x, y)] != b.add(f[x], f[y])) return false;
      for (std::size_t k = 0; k < a.op_tables().size(); ++k)
        if (f[a.op(k, x, y)] != b.op(k, f[x], f[y])) return false;
    }
  return true;
}

inline std::vector<std::vector<Element>> homs(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<std::vector<Element>> out;
  for (auto& f : all_maps(a.size(), b.size()))
    if (is_hom(a, b, f)) out.push_back(f);
  return out;
}

inline std::size_t order_of(const FiniteAlgebra& g, Element x) {
  std::size_t n = 1;
  for (Element y = x; y != 0; y = g.add(y, x)) ++n;
  return n;
}

/// Sorted element orders plus the number of commuting pairs.
inline std::pair<std::vector<std::size_t>, std::size_t> invariants(const FiniteAlgebra& g) {
  std::vector<std::size_t> orders;
  std::size_t commuting = 0;
  for (Element x = 0; x < g.size(); ++x) {
    orders.push_back(order_of(g, x));
    for (Element y = 0; y < g.size(); ++y) commuting += g.add(x, y) == g.add(y, x);
  }
  std::sort(orders.begin(), orders.end());
  return {orders, commuting};
}

/// Isomorphism by trying every bijection that preserves element orders.
inline bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size() || invariants(a) != invariants(b)) return false;
  std::vector<Element> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[0] != 0) continue;
    bool ok = true;
    for (Element x = 0; ok && x < a.size(); ++x) ok = order_of(a, x) == order_of(b, perm[x]);
    if (ok && is_hom(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool associative(const FiniteAlgebra& g) {
  for (Element x = 0; x < g.size(); ++x)
    for (Element y = 0; y < g.size(); ++y)
      for (Element z = 0; z < g.size(); ++z)
        if (g.add(g.add(x, y), z) != g.add(x, g.add(y, z))) return false;
  return true;
}

/// Group-signature action laws read straight off the dot table:
/// 0·x = x, (b+b')·x = b·(b'·x), b·(x+y) = b·x + b·y.
inline bool is_group_action(const ptdescent::ActionDatum& xi) {
  const auto& B = *xi.actor();
  const auto& X = *xi.acted();
  for (Element x = 0; x < X.size(); ++x)
    if (xi.dot(0, x) != x) return false;
  for (Element b = 0; b < B.size(); ++b)
    for (Element c = 0; c < B.size(); ++c)
      for (Element x = 0; x < X.size(); ++x)
        if (xi.dot(B.add(b, c), x) != xi.dot(b, xi.dot(c, x))) return false;
  for (Element b = 0; b < B.size(); ++b)
    for (Element x = 0; x < X.size(); ++x)
      for (Element y = 0; y < X.size(); ++y)
        if (xi.dot(b, X.add(x, y)) != X.add(xi.dot(b, x), xi.dot(b, y))) return false;
  return true;
}

/// Every group-signature action of B on X as a dot table, by filtering all
/// tables whose rows are automorphisms of X.
inline std::vector<std::vector<Element>> group_actions(const ptdescent::AlgebraRef& B,
                                                       const ptdescent::AlgebraRef& X) {
  std::vector<std::vector<Element>> autos;
  for (auto& f : homs(*X, *X)) {
    auto sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) autos.push_back(f);
  }
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> pick(B->size(), 0);
  while (true) {
    std::vector<Element> dot;
    for (auto p : pick) dot.insert(dot.end(), autos[p].begin(), autos[p].end());
    const ptdescent::ActionDatum xi(B, X, dot, {}, {});
    if (is_group_action(xi)) out.push_back(dot);
    std::size_t pos = pick.size();
    while (pos > 0) {
      --pos;
      if (++pick[pos] < autos.size()) break;
      pick[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace oracle
