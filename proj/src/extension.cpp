// Extension of actions along a cospan, and the bounded search for points
// realising a descent datum.

#include <algorithm>
#include <numeric>

#include "ptdescent/descent.hpp"

namespace ptdescent {

namespace {

/// Flat table layout shared by the oracle seed and the propagator:
/// dot, then star_left per operation, then star_right per operation.
class Cells {
 public:
  Cells(std::size_t nb, std::size_t nx, std::size_t ops)
      : nb_(nb), nx_(nx), ops_(ops), values_((1 + 2 * ops) * nb * nx, kUnassigned) {}

  std::size_t dot(Element b, Element x) const { return b * nx_ + x; }
  std::size_t left(std::size_t k, Element b, Element x) const {
    return (1 + k) * nb_ * nx_ + b * nx_ + x;
  }
  std::size_t right(std::size_t k, Element x, Element b) const {
    return (1 + ops_ + k) * nb_ * nx_ + x * nb_ + b;
  }

  Element& operator[](std::size_t i) { return values_[i]; }
  Element operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  ActionDatum to_datum(const AlgebraRef& actor, const AlgebraRef& acted) const {
    const std::size_t block = nb_ * nx_;
    std::vector<Element> dot(values_.begin(), values_.begin() + block);
    std::vector<std::vector<Element>> left, right;
    for (std::size_t k = 0; k < ops_; ++k) {
      auto from = values_.begin() + (1 + k) * block;
      left.emplace_back(from, from + block);
      auto rfrom = values_.begin() + (1 + ops_ + k) * block;
      right.emplace_back(rfrom, rfrom + block);
    }
    return ActionDatum(actor, acted, std::move(dot), std::move(left), std::move(right));
  }

 private:
  std::size_t nb_, nx_, ops_;
  std::vector<Element> values_;
};

/// Tables forced by the two restrictions. Returns false on a conflict
/// (two preimages of one b carrying different values).
bool seed_from_restrictions(Cells& cells, const Homomorphism& f, const ActionDatum& xi,
                            std::size_t ops) {
  const std::size_t nx = xi.acted()->size();
  auto put = [&](std::size_t i, Element v) {
    if (cells[i] == kUnassigned) {
      cells[i] = v;
      return true;
    }
    return cells[i] == v;
  };
  for (Element a = 0; a < f.source()->size(); ++a) {
    const Element b = f(a);
    for (Element x = 0; x < nx; ++x) {
      if (!put(cells.dot(b, x), xi.dot(a, x))) return false;
      for (std::size_t k = 0; k < ops; ++k) {
        if (!put(cells.left(k, b, x), xi.left(k, a, x))) return false;
        if (!put(cells.right(k, x, b), xi.right(k, x, a))) return false;
      }
    }
  }
  return true;
}

void check_extension_inputs(const Cospan& cospan, const ActionDatum& xi_a,
                            const ActionDatum& xi_c, const Signature& laws) {
  if (xi_a.actor()->size() != cospan.left()->size() ||
      xi_c.actor()->size() != cospan.right()->size()) {
    throw StructureError("extend_action: actions are not over the feet of the cospan");
  }
  if (!(*xi_a.acted() == *xi_c.acted())) {
    throw StructureError("extend_action: actions act on different objects");
  }
  if (!laws.same_shape(cospan.base()->signature())) {
    throw StructureError("extend_action: laws do not match the cospan signature");
  }
}

bool restricts_to(const ActionDatum& xi, const Cospan& cospan, const ActionDatum& xi_a,
                  const ActionDatum& xi_c) {
  return restrict_action(cospan.f(), xi) == xi_a && restrict_action(cospan.g(), xi) == xi_c;
}

// ---------------------------------------------------------------------------
// Oracle: bounded enumeration, then filter.

/// Maps X → X as value tables: additive endomorphisms of the group part, or
/// every function when `additive` is false.
std::vector<std::vector<Element>> row_space(const AlgebraRef& acted_group, bool additive,
                                            std::size_t cap, bool& overflow) {
  std::vector<std::vector<Element>> rows;
  const std::size_t nx = acted_group->size();
  if (additive) {
    for (const auto& h : hom_enumerate(acted_group, acted_group)) rows.push_back(h.map());
    return rows;
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < nx; ++i) {
    count *= nx;
    if (count > cap) {
      overflow = true;
      return {};
    }
  }
  std::vector<Element> row(nx, 0);
  for (std::size_t n = 0; n < count; ++n) {
    rows.push_back(row);
    for (std::size_t i = 0; i < nx; ++i) {
      if (++row[i] < nx) break;
      row[i] = 0;
    }
  }
  return rows;
}

ExtensionResult oracle_actions(const AlgebraRef& actor, const AlgebraRef& acted,
                               const Signature& laws, const SearchBounds& bounds,
                               const Cells* seed) {
  ExtensionResult out;
  const std::size_t nb = actor->size();
  const std::size_t nx = acted->size();
  const std::size_t ops = laws.operation_count();
  auto agrees = [&](std::size_t cell, Element value) {
    return seed == nullptr || (*seed)[cell] == kUnassigned || (*seed)[cell] == value;
  };

  if (ops == 0) {
    if (nb > bounds.group_actor_max || nx > bounds.group_acted_max) {
      out.conclusive = false;
      out.bound_note = "oracle bound |B| <= " + std::to_string(bounds.group_actor_max) +
                       ", |X| <= " + std::to_string(bounds.group_acted_max) + " exceeded (|B| = " +
                       std::to_string(nb) + ", |X| = " + std::to_string(nx) + ")";
      return out;
    }
  } else if (nb * nx > bounds.table_budget) {
    out.conclusive = false;
    out.bound_note = "oracle table budget |B|*|X| <= " + std::to_string(bounds.table_budget) +
                     " exceeded (" + std::to_string(nb * nx) + ")";
    return out;
  }

  // Group part: homomorphisms B → Aut(X) on the group reducts.
  auto acted_group = share(acted->group_reduct());
  auto actor_group = share(actor->group_reduct());
  const auto auts = automorphism_group(acted_group);
  const auto aut_alg = automorphism_group_algebra(auts);
  std::vector<std::vector<Element>> dots;
  for (const auto& phi : hom_enumerate(actor_group, aut_alg)) {
    std::vector<Element> dot(nb * nx);
    bool ok = true;
    for (Element b = 0; ok && b < nb; ++b)
      for (Element x = 0; ok && x < nx; ++x) {
        dot[b * nx + x] = auts[phi(b)](x);
        ok = agrees(b * nx + x, dot[b * nx + x]);
      }
    if (ok) dots.push_back(std::move(dot));
  }

  // Star parts: one choice of row per actor element and table.
  Cells layout(nb, nx, ops);
  std::vector<std::vector<std::vector<Element>>> choices;  // [table*nb + b] -> rows
  std::size_t total = dots.size();
  bool overflow = false;
  for (std::size_t side = 0; side < 2 && !overflow; ++side) {
    for (std::size_t k = 0; k < ops && !overflow; ++k) {
      const auto& laws_k = laws.operations()[k].laws;
      const bool additive = side == 0 ? laws_k.left_distributive : laws_k.right_distributive;
      const auto rows = row_space(acted_group, additive, bounds.candidate_max, overflow);
      for (Element b = 0; b < nb && !overflow; ++b) {
        std::vector<std::vector<Element>> fits;
        for (const auto& row : rows) {
          bool ok = true;
          for (Element x = 0; ok && x < nx; ++x) {
            ok = agrees(side == 0 ? layout.left(k, b, x) : layout.right(k, x, b), row[x]);
          }
          if (ok) fits.push_back(row);
        }
        if (!fits.empty() && total > bounds.candidate_max / fits.size()) overflow = true;
        total *= fits.size();
        choices.push_back(std::move(fits));
      }
    }
  }
  if (overflow || total > bounds.candidate_max) {
    out.conclusive = false;
    out.bound_note =
        "oracle candidate budget " + std::to_string(bounds.candidate_max) + " exceeded";
    return out;
  }
  if (total == 0) return out;

  std::vector<std::size_t> digit(choices.size(), 0);
  for (const auto& dot : dots) {
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      Cells cells(nb, nx, ops);
      for (std::size_t i = 0; i < dot.size(); ++i) cells[i] = dot[i];
      std::size_t slot = 0;
      for (std::size_t side = 0; side < 2; ++side)
        for (std::size_t k = 0; k < ops; ++k)
          for (Element b = 0; b < nb; ++b, ++slot) {
            const auto& row = choices[slot][digit[slot]];
            for (Element x = 0; x < nx; ++x) {
              cells[side == 0 ? cells.left(k, b, x) : cells.right(k, x, b)] = row[x];
            }
          }
      ActionDatum xi = cells.to_datum(actor, acted);
      if (validate_action(xi, laws)) out.actions.push_back(std::move(xi));
      std::size_t pos = 0;
      while (pos < digit.size() && ++digit[pos] == choices[pos].size()) digit[pos++] = 0;
      if (pos == digit.size()) break;
    }
  }
  std::sort(out.actions.begin(), out.actions.end());
  return out;
}

// ---------------------------------------------------------------------------
// Propagation: seed, close under the identities every valid action
// satisfies, branch on the first undetermined cell.

class Propagator {
 public:
  Propagator(const AlgebraRef& actor, const AlgebraRef& acted, const Signature& laws,
             const SearchBounds& bounds)
      : actor_(actor), acted_(acted), B_(*actor), X_(*acted), laws_(laws), bounds_(bounds) {}

  /// Seeds the identity laws that hold for every valid action.
  bool seed_units(Cells& cells) const {
    const std::size_t ops = laws_.operation_count();
    auto put = [&](std::size_t i, Element v) {
      if (cells[i] == kUnassigned) cells[i] = v;
      return cells[i] == v;
    };
    for (Element x = 0; x < X_.size(); ++x)
      if (!put(cells.dot(0, x), x)) return false;
    for (Element b = 0; b < B_.size(); ++b)
      if (!put(cells.dot(b, 0), 0)) return false;
    for (std::size_t k = 0; k < ops; ++k) {
      const auto& l = laws_.operations()[k].laws;
      if (l.right_distributive) {
        for (Element x = 0; x < X_.size(); ++x)
          if (!put(cells.left(k, 0, x), 0)) return false;
        for (Element b = 0; b < B_.size(); ++b)
          if (!put(cells.right(k, 0, b), 0)) return false;
      }
      if (l.left_distributive) {
        for (Element b = 0; b < B_.size(); ++b)
          if (!put(cells.left(k, b, 0), 0)) return false;
        for (Element x = 0; x < X_.size(); ++x)
          if (!put(cells.right(k, x, 0), 0)) return false;
      }
    }
    return true;
  }

  ExtensionResult run(Cells cells, const Cospan* cospan, const ActionDatum* xi_a,
                      const ActionDatum* xi_c) {
    cospan_ = cospan;
    xi_a_ = xi_a;
    xi_c_ = xi_c;
    if (seed_units(cells)) search(std::move(cells));
    ExtensionResult out;
    out.nodes = nodes_;
    if (exhausted_) {
      out.conclusive = false;
      out.bound_note = "propagation node budget " + std::to_string(bounds_.node_max) + " exceeded";
      return out;
    }
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    out.actions = std::move(found_);
    return out;
  }

 private:
  bool close(Cells& c) const {
    const auto nb = static_cast<Element>(B_.size());
    const auto nx = static_cast<Element>(X_.size());
    const std::size_t ops = laws_.operation_count();
    bool changed = true;
    auto put = [&](std::size_t i, Element v) {
      if (c[i] == kUnassigned) {
        c[i] = v;
        changed = true;
        return true;
      }
      return c[i] == v;
    };
    while (changed) {
      changed = false;
      // (b + b')·x = b·(b'·x)
      for (Element b = 0; b < nb; ++b)
        for (Element b2 = 0; b2 < nb; ++b2)
          for (Element x = 0; x < nx; ++x) {
            const Element inner = c[c.dot(b2, x)];
            if (inner == kUnassigned) continue;
            const Element outer = c[c.dot(b, inner)];
            if (outer != kUnassigned && !put(c.dot(B_.add(b, b2), x), outer)) return false;
          }
      // b·(x + x') = b·x + b·x'
      for (Element b = 0; b < nb; ++b)
        for (Element x = 0; x < nx; ++x) {
          const Element u = c[c.dot(b, x)];
          if (u == kUnassigned) continue;
          for (Element x2 = 0; x2 < nx; ++x2) {
            const Element v = c[c.dot(b, x2)];
            if (v != kUnassigned && !put(c.dot(b, X_.add(x, x2)), X_.add(u, v))) return false;
          }
        }
      for (std::size_t k = 0; k < ops; ++k) {
        const auto& l = laws_.operations()[k].laws;
        if (l.right_distributive) {
          // (b + b')*x = b*x + b'*x and (x + x')*b = x*b + x'*b
          for (Element b = 0; b < nb; ++b)
            for (Element b2 = 0; b2 < nb; ++b2)
              for (Element x = 0; x < nx; ++x) {
                const Element u = c[c.left(k, b, x)], v = c[c.left(k, b2, x)];
                if (u != kUnassigned && v != kUnassigned &&
                    !put(c.left(k, B_.add(b, b2), x), X_.add(u, v)))
                  return false;
              }
          for (Element x = 0; x < nx; ++x)
            for (Element x2 = 0; x2 < nx; ++x2)
              for (Element b = 0; b < nb; ++b) {
                const Element u = c[c.right(k, x, b)], v = c[c.right(k, x2, b)];
                if (u != kUnassigned && v != kUnassigned &&
                    !put(c.right(k, X_.add(x, x2), b), X_.add(u, v)))
                  return false;
              }
        }
        if (l.left_distributive) {
          // b*(x + x') = b*x + b*x' and x*(b + b') = x*b + x*b'
          for (Element b = 0; b < nb; ++b)
            for (Element x = 0; x < nx; ++x)
              for (Element x2 = 0; x2 < nx; ++x2) {
                const Element u = c[c.left(k, b, x)], v = c[c.left(k, b, x2)];
                if (u != kUnassigned && v != kUnassigned &&
                    !put(c.left(k, b, X_.add(x, x2)), X_.add(u, v)))
                  return false;
              }
          for (Element x = 0; x < nx; ++x)
            for (Element b = 0; b < nb; ++b)
              for (Element b2 = 0; b2 < nb; ++b2) {
                const Element u = c[c.right(k, x, b)], v = c[c.right(k, x, b2)];
                if (u != kUnassigned && v != kUnassigned &&
                    !put(c.right(k, x, B_.add(b, b2)), X_.add(u, v)))
                  return false;
              }
        }
        if (l.associative) {
          // (b*b')*x = b*(b'*x) and x*(b*b') = (x*b)*b'
          for (Element b = 0; b < nb; ++b)
            for (Element b2 = 0; b2 < nb; ++b2)
              for (Element x = 0; x < nx; ++x) {
                const Element inner = c[c.left(k, b2, x)];
                if (inner == kUnassigned) continue;
                const Element outer = c[c.left(k, b, inner)];
                if (outer != kUnassigned && !put(c.left(k, B_.op(k, b, b2), x), outer))
                  return false;
              }
          for (Element x = 0; x < nx; ++x)
            for (Element b = 0; b < nb; ++b) {
              const Element inner = c[c.right(k, x, b)];
              if (inner == kUnassigned) continue;
              for (Element b2 = 0; b2 < nb; ++b2) {
                const Element outer = c[c.right(k, inner, b2)];
                if (outer != kUnassigned && !put(c.right(k, x, B_.op(k, b, b2)), outer))
                  return false;
              }
            }
        }
        if (l.commutative) {
          for (Element b = 0; b < nb; ++b)
            for (Element x = 0; x < nx; ++x) {
              const Element u = c[c.left(k, b, x)], v = c[c.right(k, x, b)];
              if (u != kUnassigned && !put(c.right(k, x, b), u)) return false;
              if (v != kUnassigned && !put(c.left(k, b, x), v)) return false;
            }
        }
      }
    }
    return true;
  }

  void search(Cells cells) {
    if (exhausted_) return;
    if (++nodes_ > bounds_.node_max) {
      exhausted_ = true;
      return;
    }
    if (!close(cells)) return;
    std::size_t open = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i] == kUnassigned) {
        open = i;
        break;
      }
    }
    if (open == cells.size()) {
      ActionDatum xi = cells.to_datum(actor_, acted_);
      if (!validate_action(xi, laws_)) return;
      if (cospan_ && !restricts_to(xi, *cospan_, *xi_a_, *xi_c_)) return;
      found_.push_back(std::move(xi));
      return;
    }
    for (Element v = 0; v < X_.size(); ++v) {
      Cells next = cells;
      next[open] = v;
      search(std::move(next));
      if (exhausted_) return;
    }
  }

  AlgebraRef actor_, acted_;
  const FiniteAlgebra& B_;
  const FiniteAlgebra& X_;
  const Signature& laws_;
  const SearchBounds& bounds_;
  const Cospan* cospan_ = nullptr;
  const ActionDatum* xi_a_ = nullptr;
  const ActionDatum* xi_c_ = nullptr;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<ActionDatum> found_;
};

}  // namespace

ExtensionResult extend_action(const Cospan& cospan, const ActionDatum& xi_a,
                              const ActionDatum& xi_c, ExtendMethod method,
                              const SearchBounds& bounds) {
  return extend_action(cospan, xi_a, xi_c, method, xi_a.acted()->signature(), bounds);
}

ExtensionResult extend_action(const Cospan& cospan, const ActionDatum& xi_a,
                              const ActionDatum& xi_c, ExtendMethod method,
                              const Signature& laws, const SearchBounds& bounds) {
  check_extension_inputs(cospan, xi_a, xi_c, laws);
  const auto& actor = cospan.base();
  const auto& acted = xi_a.acted();
  const std::size_t ops = laws.operation_count();
  Cells seed(actor->size(), acted->size(), ops);
  const bool consistent = seed_from_restrictions(seed, cospan.f(), xi_a, ops) &&
                          seed_from_restrictions(seed, cospan.g(), xi_c, ops);

  ExtensionResult out;
  if (!consistent) {
    // Two preimages of one element of B act differently: nothing restricts
    // to both. The oracle reaches the same verdict by filtering.
    if (method == ExtendMethod::oracle) {
      out = oracle_actions(actor, acted, laws, bounds, nullptr);
      if (out.conclusive) {
        std::erase_if(out.actions, [&](const ActionDatum& xi) {
          return !restricts_to(xi, cospan, xi_a, xi_c);
        });
      }
    }
  } else if (method == ExtendMethod::oracle) {
    out = oracle_actions(actor, acted, laws, bounds, &seed);
    if (out.conclusive) {
      std::erase_if(out.actions, [&](const ActionDatum& xi) {
        return !restricts_to(xi, cospan, xi_a, xi_c);
      });
    }
  } else {
    Propagator prop(actor, acted, laws, bounds);
    out = prop.run(std::move(seed), &cospan, &xi_a, &xi_c);
  }
  if (!out.conclusive) out.actions.clear();
  out.extremal_epi = is_extremal_epi(cospan);
  return out;
}

ExtensionResult enumerate_actions(const AlgebraRef& actor, const AlgebraRef& acted,
                                  const Signature& laws, const SearchBounds& bounds) {
  if (!laws.same_shape(actor->signature()) || !laws.same_shape(acted->signature())) {
    throw StructureError("enumerate_actions: laws do not match the algebras");
  }
  return oracle_actions(actor, acted, laws, bounds, nullptr);
}

UAVerdict check_ua_instance(const Cospan& cospan, const ActionDatum& xi_a,
                            const ActionDatum& xi_c, ExtendMethod method,
                            const SearchBounds& bounds) {
  const auto result = extend_action(cospan, xi_a, xi_c, method, bounds);
  UAVerdict out;
  out.conclusive = result.conclusive;
  out.bound_note = result.bound_note;
  out.extensions = result.actions.size();
  out.holds = result.actions.size() <= 1;
  return out;
}

SurjectivityResult essential_surjectivity_witness(const CospanRef& cospan,
                                                  const DescentDatum& datum,
                                                  const SearchBounds& bounds) {
  SurjectivityResult out;
  const auto kernel = kernel_of_point(datum.D).kernel;
  const auto kernel_f = kernel_of_point(datum.F).kernel;
  if (kernel->size() != kernel_f->size()) return out;  // Φ(P) has equal kernels on both sides
  const auto candidates =
      enumerate_actions(cospan->base(), kernel, kernel->signature(), bounds);
  if (!candidates.conclusive) {
    out.conclusive = false;
    out.bound_note = candidates.bound_note;
    return out;
  }
  for (const auto& xi : candidates.actions) {
    ++out.candidates;
    Point P = semidirect_product(xi).point;
    if (descent_isomorphic(phi(cospan, P), datum)) {
      out.point = std::move(P);
      return out;
    }
  }
  return out;
}

}  // namespace ptdescent
