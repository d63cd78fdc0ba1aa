#pragma once

// Finite groups with operations: carriers, homomorphisms, closure, pullbacks.
//
// Elements are positional indices 0..n-1 with 0 the group identity. The
// group operation is written additively and is not assumed commutative.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptdescent {

using Element = std::uint32_t;
inline constexpr Element kUnassigned = std::numeric_limits<Element>::max();

/// Thrown for malformed inputs: bad table shapes, out-of-range entries,
/// mismatched signatures. Law violations are reported through Verdict instead.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Outcome of a decidable check. `failure` names the violated condition and
/// `witness` holds the offending element tuple (indices in the algebra the
/// failure names).
struct Verdict {
  bool holds = true;
  std::string failure;
  std::vector<Element> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string what, std::vector<Element> witness = {}) {
    return {false, std::move(what), std::move(witness)};
  }
  explicit operator bool() const { return holds; }
};

struct OperationLaws {
  bool left_distributive = false;   // w*(u+v) = w*u + w*v
  bool right_distributive = false;  // (u+v)*w = u*w + v*w
  bool associative = false;
  bool commutative = false;

  bool operator==(const OperationLaws&) const = default;
};

struct Operation {
  std::string name;
  OperationLaws laws;

  bool operator==(const Operation&) const = default;
};

/// Extra binary operations beyond the group operation, with declared laws.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<Operation> operations, bool group_commutative);

  static Signature groups();
  static Signature abelian_groups();
  /// Abelian group with one bi-distributive operation `name`.
  static Signature nonassociative_rings(const std::string& name = "mul");
  /// As nonassociative_rings, plus associativity.
  static Signature rings(const std::string& name = "mul");

  const std::vector<Operation>& operations() const { return operations_; }
  std::size_t operation_count() const { return operations_.size(); }
  bool group_commutative() const { return group_commutative_; }
  std::optional<std::size_t> find(const std::string& name) const;

  /// Same operation names in the same order; law flags may differ.
  bool same_shape(const Signature& other) const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Operation> operations_;
  bool group_commutative_ = false;
};

/// A finite group with operations given by explicit tables. Immutable.
class FiniteAlgebra {
 public:
  /// Throws StructureError if any table has the wrong shape or an entry
  /// outside 0..size-1, or if `labels` is non-empty with the wrong length.
  FiniteAlgebra(std::string name, std::size_t size, std::vector<Element> add,
                std::vector<Element> neg,
                std::vector<std::vector<Element>> op_tables, Signature signature,
                std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }
  const Signature& signature() const { return signature_; }

  Element add(Element a, Element b) const { return add_[a * size_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element op(std::size_t k, Element a, Element b) const {
    return op_tables_[k][a * size_ + b];
  }

  const std::vector<Element>& add_table() const { return add_; }
  const std::vector<Element>& neg_table() const { return neg_; }
  const std::vector<std::vector<Element>>& op_tables() const { return op_tables_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element e) const;

  /// Same tables under different law flags (operation names must match).
  FiniteAlgebra with_signature(Signature signature) const;
  FiniteAlgebra renamed(std::string name) const;
  /// Forget the extra operations.
  FiniteAlgebra group_reduct() const;

  bool operator==(const FiniteAlgebra& other) const;

 private:
  std::string name_;
  std::size_t size_;
  std::vector<Element> add_;
  std::vector<Element> neg_;
  std::vector<std::vector<Element>> op_tables_;
  Signature signature_;
  std::vector<std::string> labels_;
};

using AlgebraRef = std::shared_ptr<const FiniteAlgebra>;

inline AlgebraRef share(FiniteAlgebra alg) {
  return std::make_shared<const FiniteAlgebra>(std::move(alg));
}

class Homomorphism {
 public:
  /// Throws StructureError if map has the wrong length or an out-of-range entry.
  Homomorphism(AlgebraRef source, AlgebraRef target, std::vector<Element> map);

  static Homomorphism identity(AlgebraRef alg);
  static Homomorphism zero(AlgebraRef source, AlgebraRef target);

  const AlgebraRef& source() const { return source_; }
  const AlgebraRef& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element e) const { return map_[e]; }

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }
  std::vector<Element> image() const;

  bool operator==(const Homomorphism& other) const;
  bool operator<(const Homomorphism& other) const { return map_ < other.map_; }

 private:
  AlgebraRef source_;
  AlgebraRef target_;
  std::vector<Element> map_;
};

/// outer ∘ inner
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

// ---------------------------------------------------------------------------
// Validation

/// Group axioms, then each declared law in signature order. Fails on the
/// first violated law (`group.identity`, `group.inverse`, `group.associative`,
/// `group.commutative`, `<op>.left-distributive`, ...). Witness tuples are
/// the first counterexample in lexicographic order.
Verdict validate_algebra(const FiniteAlgebra& alg);

/// Preservation of 0, add, neg and every extra operation. Throws
/// StructureError when source and target signatures differ in shape.
Verdict check_homomorphism(const Homomorphism& h);

// ---------------------------------------------------------------------------
// Subalgebras

/// Smallest subset containing seed and 0 closed under all operations,
/// returned in increasing index order.
std::vector<Element> generated_subalgebra(const FiniteAlgebra& alg,
                                          std::span<const Element> seed);

struct Subalgebra {
  AlgebraRef algebra;
  Homomorphism inclusion;
};

/// Reify a closed subset as an algebra, renumbered in increasing index order.
/// Throws StructureError if the subset is not closed or lacks 0.
Subalgebra reify_subset(const AlgebraRef& alg, std::span<const Element> subset,
                        std::string name = {});

// ---------------------------------------------------------------------------
// Homomorphism search

struct HomSearchOptions {
  /// Per-source fixed images (kUnassigned = free). Empty means no fixing.
  std::vector<Element> fixed;
  /// Per-source candidate image lists. Empty means every target element.
  std::vector<std::vector<Element>> candidates;
  /// Stop after this many results.
  std::size_t limit = std::numeric_limits<std::size_t>::max();
};

/// Every homomorphism source→target satisfying the options, sorted
/// lexicographically by map table.
std::vector<Homomorphism> enumerate_homomorphisms(const AlgebraRef& source,
                                                  const AlgebraRef& target,
                                                  const HomSearchOptions& options = {});

inline std::vector<Homomorphism> hom_enumerate(const AlgebraRef& source,
                                               const AlgebraRef& target) {
  return enumerate_homomorphisms(source, target);
}

/// All bijective endomorphisms, lexicographic order (identity first).
std::vector<Homomorphism> automorphism_group(const AlgebraRef& alg);

/// The automorphisms as a group under composition: element i is
/// automorphisms[i], and (i + j) acts as automorphisms[i] ∘ automorphisms[j].
AlgebraRef automorphism_group_algebra(const std::vector<Homomorphism>& automorphisms,
                                      std::string name = "Aut");

// ---------------------------------------------------------------------------
// Limits

struct Pullback {
  AlgebraRef object;
  Homomorphism proj1;
  Homomorphism proj2;
  std::size_t right_size = 0;
  std::vector<Element> index;  // (a, c) -> element, kUnassigned when absent

  std::optional<Element> locate(Element a, Element c) const;
};

/// Carrier {(a, c) | f(a) = g(c)} ordered lexicographically, with
/// componentwise operations.
Pullback pullback(const Homomorphism& f, const Homomorphism& g);

/// One-element algebra of the given signature.
AlgebraRef trivial_algebra(const Signature& signature, std::string name = "1");

/// A × C as the pullback over the trivial algebra.
Pullback direct_product(const AlgebraRef& left, const AlgebraRef& right);

}  // namespace ptdescent
