#pragma once

// Internal actions of B on X as operation tables.
//
// A datum carries the group part b·x and, for every extra operation *, the
// two star parts b*x and x*b. Validity is decided by building the split
// extension X ⋊ B and checking it is an object of the variety whose laws are
// given, that its projection, section and kernel inclusion are homomorphisms,
// and that the action it induces on its kernel is the datum itself.

#include <string>
#include <vector>

#include "ptdescent/algebra.hpp"
#include "ptdescent/points.hpp"

namespace ptdescent {

class ActionDatum {
 public:
  /// dot is |B|×|X| row-major; star_left[k] is |B|×|X|; star_right[k] is
  /// |X|×|B|. Throws StructureError on shape or range errors.
  ActionDatum(AlgebraRef actor, AlgebraRef acted, std::vector<Element> dot,
              std::vector<std::vector<Element>> star_left,
              std::vector<std::vector<Element>> star_right);

  static ActionDatum trivial(AlgebraRef actor, AlgebraRef acted);

  const AlgebraRef& actor() const { return actor_; }
  const AlgebraRef& acted() const { return acted_; }

  Element dot(Element b, Element x) const { return dot_[b * acted_->size() + x]; }
  Element left(std::size_t k, Element b, Element x) const {
    return star_left_[k][b * acted_->size() + x];
  }
  Element right(std::size_t k, Element x, Element b) const {
    return star_right_[k][x * actor_->size() + b];
  }

  const std::vector<Element>& dot_table() const { return dot_; }
  const std::vector<std::vector<Element>>& left_tables() const { return star_left_; }
  const std::vector<std::vector<Element>>& right_tables() const { return star_right_; }

  /// Tables only; actor and acted are compared by size.
  bool operator==(const ActionDatum& other) const;
  /// Lexicographic on (dot, star_left..., star_right...).
  bool operator<(const ActionDatum& other) const;

 private:
  AlgebraRef actor_;
  AlgebraRef acted_;
  std::vector<Element> dot_;
  std::vector<std::vector<Element>> star_left_;
  std::vector<std::vector<Element>> star_right_;
};

/// X ⋊ B on carrier X × B, element (x, b) at index x·|B| + b:
///   (x,b) + (x',b') = (x + b·x', b + b')
///   (x,b) * (x',b') = (x*x' + b*x' + x*b', b*b')
struct SemidirectProduct {
  Point point;             // p(x,b) = b, s(b) = (0,b)
  KernelEmbedding kernel;  // x ↦ (x,0)

  Element element(Element x, Element b) const {
    return x * static_cast<Element>(point.base()->size()) + b;
  }
};

/// Builds the split extension under `laws` (defaults to the acted signature).
/// The result is not validated.
SemidirectProduct semidirect_product(const ActionDatum& xi);
SemidirectProduct semidirect_product(const ActionDatum& xi, const Signature& laws);

/// A semidirect element (x, b) named back in actor/acted terms.
struct SplitElement {
  Element acted;
  Element actor;
};

struct ActionVerdict {
  bool holds = true;
  std::string failure;
  std::vector<SplitElement> witness;
  std::vector<std::string> labels;

  explicit operator bool() const { return holds; }
};

/// Throws StructureError when actor, acted and laws disagree in shape.
ActionVerdict validate_action(const ActionDatum& xi, const Signature& laws);
ActionVerdict validate_action(const ActionDatum& xi);

/// Precompose every table with f in the actor argument.
ActionDatum restrict_action(const Homomorphism& f, const ActionDatum& xi);

/// u(b·x) = b·u(x), u(b*x) = b*u(x), u(x*b) = u(x)*b. Witness is (b, x).
Verdict check_equivariance(const Homomorphism& u, const ActionDatum& on_source,
                           const ActionDatum& on_target);

class InvalidPointError : public StructureError {
 public:
  using StructureError::StructureError;
};

/// The action a point induces on a chosen kernel:
///   b·x = k⁻¹(s(b) + k(x) − s(b)),  b*x = k⁻¹(s(b) * k(x)),  x*b = k⁻¹(k(x) * s(b)).
/// Throws InvalidPointError when a value falls outside the kernel.
ActionDatum action_from_point(const Point& point, const KernelEmbedding& kernel);

/// Uses kernel_of_point for the kernel.
ActionDatum action_from_point(const Point& point);

/// The datum given by a homomorphism B → Aut(X) in the group signature.
ActionDatum action_from_automorphisms(const AlgebraRef& actor, const AlgebraRef& acted,
                                      const std::vector<Homomorphism>& automorphisms,
                                      const Homomorphism& into_aut);

}  // namespace ptdescent
