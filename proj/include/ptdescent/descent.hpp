#pragma once

// Cospans f: A → B ← C: g, descent data for the fibration of points over the
// concrete pullback cleavage, the comparison functor Φ, and instance-level
// decision procedures for descent, UA and essential surjectivity.

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ptdescent/actions.hpp"
#include "ptdescent/algebra.hpp"
#include "ptdescent/points.hpp"

namespace ptdescent {

/// T = X ×_B Y ×_B Z with the three pair projections.
struct TriplePullback {
  AlgebraRef object;
  Homomorphism p12;
  Homomorphism p13;
  Homomorphism p23;
};

class Cospan {
 public:
  /// Throws StructureError if f and g have different codomains.
  Cospan(Homomorphism f, Homomorphism g);

  const Homomorphism& f() const { return f_; }
  const Homomorphism& g() const { return g_; }
  const AlgebraRef& left() const { return f_.source(); }
  const AlgebraRef& base() const { return f_.target(); }
  const AlgebraRef& right() const { return g_.source(); }

  const Pullback& aa() const { return aa_; }
  const Pullback& ac() const { return ac_; }
  const Pullback& cc() const { return cc_; }
  const TriplePullback& aaa() const { return aaa_; }
  const TriplePullback& aac() const { return aac_; }
  const TriplePullback& acc() const { return acc_; }
  const TriplePullback& ccc() const { return ccc_; }
  const Homomorphism& diagonal_a() const { return delta_a_; }
  const Homomorphism& diagonal_c() const { return delta_c_; }

 private:
  Homomorphism f_, g_;
  Pullback aa_, ac_, cc_;
  TriplePullback aaa_, aac_, acc_, ccc_;
  Homomorphism delta_a_, delta_c_;
};

using CospanRef = std::shared_ptr<const Cospan>;

inline CospanRef make_cospan(Homomorphism f, Homomorphism g) {
  return std::make_shared<const Cospan>(std::move(f), std::move(g));
}

/// (D, F, a, b, c): D over A, F over C, and
///   a: π₁*D → π₂*D over A×_B A,  b: π₁*D → π₂*F over A×_B C,
///   c: π₁*F → π₂*F over C×_B C.
/// The pulled-back points are the concrete pullbacks of `pullback_point`.
struct DescentDatum {
  CospanRef cospan;
  Point D;
  Point F;
  PulledBackPoint d1;   // π₁*D over A×_B A
  PulledBackPoint d2;   // π₂*D over A×_B A
  PulledBackPoint dc;   // π₁*D over A×_B C
  PulledBackPoint fc;   // π₂*F over A×_B C
  PulledBackPoint f1;   // π₁*F over C×_B C
  PulledBackPoint f2;   // π₂*F over C×_B C
  PointMorphism a;
  PointMorphism b;
  PointMorphism c;
};

/// Builds the pulled-back points and wraps the three maps. Throws
/// StructureError if a map has the wrong length.
DescentDatum make_descent_datum(CospanRef cospan, Point D, Point F, std::vector<Element> a,
                                std::vector<Element> b, std::vector<Element> c);

struct DescentMorphism {
  PointMorphism h;  // D → D'
  PointMorphism k;  // F → F'
};

/// Joint generation of B by the images of f and g.
bool is_extremal_epi(const Cospan& cospan);

/// Φ(P) = (f*P, g*P, α, β, γ) with the canonical comparisons as a, b, c.
DescentDatum phi(const CospanRef& cospan, const Point& point);

/// Φ(j) = (f*j, g*j) between Φ(source) and Φ(target).
DescentMorphism phi(const CospanRef& cospan, const PointMorphism& j);

/// Checks, in order: a, b, c are point isomorphisms (`iso-a`, `iso-b`,
/// `iso-c`), then `unit-A`, `unit-C`, `cocycle-AAA`, `cocycle-AAC`,
/// `cocycle-ACC`, `cocycle-CCC`. The witness is an element of the source of
/// the failed diagram.
Verdict validate_descent_datum(const DescentDatum& datum);

/// Complete list, ordered by (h, k) map tables. Throws StructureError when
/// the data live over different cospans.
std::vector<DescentMorphism> descent_morphisms(const DescentDatum& source,
                                               const DescentDatum& target);

bool descent_isomorphic(const DescentDatum& x, const DescentDatum& y);

struct FullyFaithfulReport {
  bool faithful = true;
  bool full = true;
  std::size_t point_morphisms = 0;
  std::size_t descent_morphisms = 0;
  /// Descent morphisms with no preimage under Φ (indices into the
  /// descent_morphisms list, in canonical order).
  std::vector<std::size_t> unmatched;
  /// Pairs of point morphisms with the same image.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
  /// The descent morphisms themselves, for witnesses.
  std::vector<DescentMorphism> targets;

  bool bijective() const { return faithful && full; }
};

FullyFaithfulReport check_fully_faithful(const CospanRef& cospan, const Point& P,
                                         const Point& Q);

// ---------------------------------------------------------------------------
// Action extension

enum class ExtendMethod { oracle, propagate };

struct SearchBounds {
  /// Oracle in the group signature: |B| and |X| limits.
  std::size_t group_actor_max = 24;
  std::size_t group_acted_max = 8;
  /// Oracle with extra operations: |B|·|X| limit.
  std::size_t table_budget = 64;
  /// Oracle with extra operations: limit on enumerated table candidates.
  std::size_t candidate_max = std::size_t{1} << 16;
  /// Propagation: limit on search nodes.
  std::size_t node_max = 1'000'000;
};

struct ExtensionResult {
  bool conclusive = true;
  std::string bound_note;  // which bound was hit, when inconclusive
  bool extremal_epi = false;
  std::vector<ActionDatum> actions;
  std::size_t nodes = 0;
};

/// Every valid B-action on X (under `laws`) restricting to xi_a along f and
/// xi_c along g, canonically ordered. Both methods return the same set
/// whenever both are conclusive.
ExtensionResult extend_action(const Cospan& cospan, const ActionDatum& xi_a,
                              const ActionDatum& xi_c, ExtendMethod method,
                              const SearchBounds& bounds = {});
ExtensionResult extend_action(const Cospan& cospan, const ActionDatum& xi_a,
                              const ActionDatum& xi_c, ExtendMethod method,
                              const Signature& laws, const SearchBounds& bounds = {});

/// All valid B-actions on X under `laws` by bounded enumeration: the group
/// part ranges over homomorphisms B → Aut(X), and each star row over the
/// additive endomorphisms of X when the matching distributive law is
/// declared (all maps X → X otherwise).
ExtensionResult enumerate_actions(const AlgebraRef& actor, const AlgebraRef& acted,
                                  const Signature& laws, const SearchBounds& bounds = {});

struct UAVerdict {
  bool conclusive = true;
  bool holds = true;  // at most one extension
  std::size_t extensions = 0;
  std::string bound_note;
};

UAVerdict check_ua_instance(const Cospan& cospan, const ActionDatum& xi_a,
                            const ActionDatum& xi_c,
                            ExtendMethod method = ExtendMethod::propagate,
                            const SearchBounds& bounds = {});

/// The datum (X⋊A, X⋊C, a, b, c) of two actions on the same X, with a, b, c
/// the identity on the X coordinate. Throws StructureError if the actions
/// act on different objects.
DescentDatum datum_from_actions(const CospanRef& cospan, const ActionDatum& xi_a,
                                const ActionDatum& xi_c);

struct SurjectivityResult {
  bool conclusive = true;
  std::string bound_note;
  std::optional<Point> point;  // with Φ(point) ≅ datum
  std::size_t candidates = 0;
};

/// Searches points X⋊B over the valid B-actions on the kernel X of D.
SurjectivityResult essential_surjectivity_witness(const CospanRef& cospan,
                                                  const DescentDatum& datum,
                                                  const SearchBounds& bounds = {});

// ---------------------------------------------------------------------------
// Cross identities between two actions on one object

enum class Sort { actor_a, actor_c, acted };

std::string to_string(Sort sort);

/// Prefix terms over the three sorts. Symbols: `add`, `neg`, an operation
/// name (in the argument sort), `dotA`, `dotC`, `leftA:<op>`, `rightA:<op>`,
/// `leftC:<op>`, `rightC:<op>`.
struct Term {
  enum class Kind { variable, add, neg, op, dot, left, right };
  Kind kind = Kind::variable;
  std::size_t variable = 0;
  std::size_t op = 0;       // operation index for op/left/right
  Sort actor = Sort::actor_a;  // for dot/left/right: which action
  std::vector<Term> args;
};

struct Variable {
  std::string name;
  Sort sort;
};

struct Identity {
  std::string name;
  std::vector<Variable> variables;
  Term lhs;
  Term rhs;
};

struct IdentityViolation {
  std::string identity;
  std::vector<Element> assignment;  // one value per variable
  Sort sort;                        // sort of both sides
  Element lhs;
  Element rhs;
};

/// Infers the sort of a term; throws StructureError when ill-sorted.
Sort sort_of(const Term& term, const std::vector<Variable>& variables);

/// Evaluates every identity over every assignment. Up to `limit` violations
/// per identity are returned, in lexicographic assignment order.
std::vector<IdentityViolation> cross_identity_check(
    const ActionDatum& xi_a, const ActionDatum& xi_c, const std::vector<Identity>& identities,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

}  // namespace ptdescent
