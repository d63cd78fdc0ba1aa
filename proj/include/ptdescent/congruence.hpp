#pragma once

// Congruences on finite groups with operations, cooperators of two maps
// into one algebra, connectors between two congruences, and the
// instance-level check that cooperating normal subalgebras give
// centralizing congruences.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ptdescent/algebra.hpp"

namespace ptdescent {

using ElementPair = std::pair<Element, Element>;

class Congruence {
 public:
  /// Throws CongruenceError unless `pairs` is an equivalence relation
  /// closed under all operations. Pairs are stored sorted and deduplicated.
  Congruence(AlgebraRef base, std::vector<ElementPair> pairs);

  const AlgebraRef& base() const { return base_; }
  const std::vector<ElementPair>& pairs() const { return pairs_; }
  bool related(Element a, Element b) const { return related_[a * base_->size() + b]; }

  /// R as a subalgebra of A × A, with elements in pair order.
  AlgebraRef as_algebra() const;

  bool operator==(const Congruence& other) const { return pairs_ == other.pairs_; }

 private:
  AlgebraRef base_;
  std::vector<ElementPair> pairs_;
  std::vector<bool> related_;
};

/// Rejection of a relation or subset, with the failed condition and witness.
class CongruenceError : public StructureError {
 public:
  CongruenceError(Verdict verdict)
      : StructureError(verdict.failure), verdict_(std::move(verdict)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// Failures: `reflexive`, `symmetric`, `transitive`, `closed.add`,
/// `closed.neg`, `closed.<op>`. Witnesses are the offending elements.
Verdict validate_congruence(const FiniteAlgebra& alg, const std::vector<ElementPair>& pairs);

/// Failures: `contains-zero`, `closed.add`, `closed.neg`, `normal`
/// (witness a, n with a + n − a ∉ N), `ideal.<op>` (witness a, n with a*n
/// or n*a ∉ N).
Verdict check_normal(const FiniteAlgebra& alg, const std::vector<Element>& subset);

/// {(a, a′) | a − a′ ∈ N}. Throws CongruenceError when N is not normal.
Congruence congruence_from_normal(const AlgebraRef& alg, const std::vector<Element>& subset);

/// The class of 0, in increasing order.
std::vector<Element> class_of_zero(const Congruence& r);

/// The candidate φ(x, y) = h(x) + k(y) on X × Y when it is a homomorphism.
/// Throws StructureError when h and k have different codomains.
std::optional<Homomorphism> cooperator(const Homomorphism& h, const Homomorphism& k);

/// p on the triples (x, y, z) with x R y and y S z.
struct Connector {
  AlgebraRef domain;                         // R ×_A S
  std::vector<std::array<Element, 3>> triples;  // element i of domain
  Homomorphism p;

  Element operator()(Element x, Element y, Element z) const;
};

/// A homomorphism R ×_A S → A with p(x,y,y) = x and p(y,y,z) = z, or none.
/// The search is complete. Throws StructureError when R and S have
/// different bases.
std::optional<Connector> connector(const Congruence& r, const Congruence& s);

/// Unit identities and homomorphy, checked directly on the triples.
Verdict validate_connector(const Connector& c, const Congruence& r, const Congruence& s);

struct SHVerdict {
  bool cooperates = false;
  bool connects = false;
  bool sh_respected = true;
  std::optional<Homomorphism> cooperator;
  std::optional<Connector> connector;
};

SHVerdict check_sh_instance(const Congruence& r, const Congruence& s);

}  // namespace ptdescent
