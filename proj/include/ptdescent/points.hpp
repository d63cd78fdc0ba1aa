#pragma once

// Points (split epimorphisms with a chosen section), their morphisms,
// kernels and change of base along homomorphisms.

#include <optional>
#include <stdexcept>
#include <vector>

#include "ptdescent/algebra.hpp"

namespace ptdescent {

/// p: total → base with section s, p∘s = 1. The constructor enforces the
/// section identity; homomorphy of p and s is checked by validate_point.
class Point {
 public:
  Point(Homomorphism p, Homomorphism s);

  const AlgebraRef& total() const { return p_.source(); }
  const AlgebraRef& base() const { return p_.target(); }
  const Homomorphism& p() const { return p_; }
  const Homomorphism& s() const { return s_; }

 private:
  Homomorphism p_;
  Homomorphism s_;
};

Verdict validate_point(const Point& point);

/// h: E → E' with p'∘h = p and h∘s = s'.
struct PointMorphism {
  Point source;
  Point target;
  Homomorphism h;
};

Verdict check_point_morphism(const PointMorphism& m);

PointMorphism identity_morphism(const Point& point);

/// outer ∘ inner
PointMorphism compose(const PointMorphism& outer, const PointMorphism& inner);

struct KernelEmbedding {
  AlgebraRef kernel;
  Homomorphism embed;
};

/// Reifies {e | p(e) = 0} in increasing index order.
KernelEmbedding kernel_of_point(const Point& point);

/// f*P together with its cartesian lift f*P.total → P.total.
///
/// The total carrier is {(a, e) | f(a) = p(e)} ordered lexicographically,
/// projecting to a with section a ↦ (a, s(f(a))).
struct PulledBackPoint {
  Point point;
  Homomorphism along;  // f
  Homomorphism lift;   // (a, e) ↦ e
  std::size_t original_size = 0;
  std::vector<Element> index;

  std::optional<Element> locate(Element a, Element e) const;
};

PulledBackPoint pullback_point(const Homomorphism& f, const Point& point);

/// u*m : u*P → u*Q for a point morphism m: P → Q, given u*P and u*Q.
PointMorphism pullback_morphism(const PointMorphism& m, const PulledBackPoint& source,
                                const PulledBackPoint& target);

/// Canonical comparison u*(v*Q) → u'*(v'*Q) induced by v∘u = v'∘u': the
/// element (x, (u(x), q)) goes to (x, (u'(x), q)). The inner points must be
/// pullbacks of the same point Q.
PointMorphism canonical_comparison(const PulledBackPoint& source_outer,
                                   const PulledBackPoint& source_inner,
                                   const PulledBackPoint& target_outer,
                                   const PulledBackPoint& target_inner);

/// Canonical comparison u*(v*Q) → Q when v∘u is the identity.
PointMorphism canonical_unit(const PulledBackPoint& outer, const PulledBackPoint& inner,
                             const Point& original);

/// Exhaustive hom-set of Pt_B. Throws StructureError on a base mismatch.
std::vector<PointMorphism> point_morphisms(const Point& source, const Point& target);

/// True iff h is bijective.
bool is_point_isomorphism(const PointMorphism& m);

/// Inverse of a point isomorphism. Throws StructureError if h is not bijective.
PointMorphism inverse(const PointMorphism& m);

}  // namespace ptdescent
