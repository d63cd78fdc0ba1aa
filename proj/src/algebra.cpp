#include "ptdescent/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace ptdescent {

namespace {

void check_table(const std::vector<Element>& table, std::size_t expected,
                 std::size_t bound, const std::string& what) {
  if (table.size() != expected) {
    throw StructureError(what + ": expected " + std::to_string(expected) +
                         " entries, got " + std::to_string(table.size()));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= bound) {
      throw StructureError(what + ": entry " + std::to_string(i) + " = " +
                           std::to_string(table[i]) + " out of range");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<Operation> operations, bool group_commutative)
    : operations_(std::move(operations)), group_commutative_(group_commutative) {
  std::set<std::string> seen;
  for (const auto& op : operations_) {
    if (op.name.empty()) throw StructureError("operation name must be nonempty");
    if (!seen.insert(op.name).second) {
      throw StructureError("duplicate operation name '" + op.name + "'");
    }
  }
}

Signature Signature::groups() { return Signature({}, false); }

Signature Signature::abelian_groups() { return Signature({}, true); }

Signature Signature::nonassociative_rings(const std::string& name) {
  OperationLaws laws;
  laws.left_distributive = true;
  laws.right_distributive = true;
  return Signature({{name, laws}}, true);
}

Signature Signature::rings(const std::string& name) {
  OperationLaws laws;
  laws.left_distributive = true;
  laws.right_distributive = true;
  laws.associative = true;
  return Signature({{name, laws}}, true);
}

std::optional<std::size_t> Signature::find(const std::string& name) const {
  for (std::size_t k = 0; k < operations_.size(); ++k) {
    if (operations_[k].name == name) return k;
  }
  return std::nullopt;
}

bool Signature::same_shape(const Signature& other) const {
  if (operations_.size() != other.operations_.size()) return false;
  for (std::size_t k = 0; k < operations_.size(); ++k) {
    if (operations_[k].name != other.operations_[k].name) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(std::string name, std::size_t size,
                             std::vector<Element> add, std::vector<Element> neg,
                             std::vector<std::vector<Element>> op_tables,
                             Signature signature, std::vector<std::string> labels)
    : name_(std::move(name)),
      size_(size),
      add_(std::move(add)),
      neg_(std::move(neg)),
      op_tables_(std::move(op_tables)),
      signature_(std::move(signature)),
      labels_(std::move(labels)) {
  if (size_ == 0) throw StructureError(name_ + ": size must be positive");
  check_table(add_, size_ * size_, size_, name_ + " add table");
  check_table(neg_, size_, size_, name_ + " neg table");
  if (op_tables_.size() != signature_.operation_count()) {
    throw StructureError(name_ + ": " + std::to_string(op_tables_.size()) +
                         " operation tables for " +
                         std::to_string(signature_.operation_count()) +
                         " declared operations");
  }
  for (std::size_t k = 0; k < op_tables_.size(); ++k) {
    check_table(op_tables_[k], size_ * size_, size_,
                name_ + " op " + signature_.operations()[k].name + " table");
  }
  if (!labels_.empty() && labels_.size() != size_) {
    throw StructureError(name_ + ": " + std::to_string(labels_.size()) +
                         " labels for " + std::to_string(size_) + " elements");
  }
}

std::string FiniteAlgebra::label(Element e) const {
  if (!labels_.empty() && e < labels_.size()) return labels_[e];
  return std::to_string(e);
}

FiniteAlgebra FiniteAlgebra::with_signature(Signature signature) const {
  if (!signature.same_shape(signature_)) {
    throw StructureError(name_ + ": replacement signature has different operations");
  }
  return FiniteAlgebra(name_, size_, add_, neg_, op_tables_, std::move(signature),
                       labels_);
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  return FiniteAlgebra(std::move(name), size_, add_, neg_, op_tables_, signature_,
                       labels_);
}

FiniteAlgebra FiniteAlgebra::group_reduct() const {
  return FiniteAlgebra(name_, size_, add_, neg_, {},
                       Signature({}, signature_.group_commutative()), labels_);
}

bool FiniteAlgebra::operator==(const FiniteAlgebra& other) const {
  return size_ == other.size_ && add_ == other.add_ && neg_ == other.neg_ &&
         op_tables_ == other.op_tables_ && signature_ == other.signature_;
}

// ---------------------------------------------------------------------------
// Homomorphism

Homomorphism::Homomorphism(AlgebraRef source, AlgebraRef target,
                           std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!source_ || !target_) throw StructureError("homomorphism needs source and target");
  check_table(map_, source_->size(), target_->size(),
              "map " + source_->name() + " -> " + target_->name());
}

Homomorphism Homomorphism::identity(AlgebraRef alg) {
  std::vector<Element> map(alg->size());
  std::iota(map.begin(), map.end(), Element{0});
  return Homomorphism(alg, alg, std::move(map));
}

Homomorphism Homomorphism::zero(AlgebraRef source, AlgebraRef target) {
  std::vector<Element> map(source->size(), 0);
  return Homomorphism(std::move(source), std::move(target), std::move(map));
}

bool Homomorphism::injective() const {
  std::vector<char> hit(target_->size(), 0);
  for (Element e : map_) {
    if (hit[e]) return false;
    hit[e] = 1;
  }
  return true;
}

bool Homomorphism::surjective() const {
  std::vector<char> hit(target_->size(), 0);
  std::size_t count = 0;
  for (Element e : map_) {
    if (!hit[e]) {
      hit[e] = 1;
      ++count;
    }
  }
  return count == target_->size();
}

std::vector<Element> Homomorphism::image() const {
  std::vector<Element> out(map_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Homomorphism::operator==(const Homomorphism& other) const {
  return map_ == other.map_ && source_->size() == other.source_->size() &&
         target_->size() == other.target_->size();
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (inner.target()->size() != outer.source()->size()) {
    throw StructureError("compose: " + inner.target()->name() + " does not match " +
                         outer.source()->name());
  }
  std::vector<Element> map(inner.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = outer(inner(i));
  return Homomorphism(inner.source(), outer.target(), std::move(map));
}

// ---------------------------------------------------------------------------
// Validation

namespace {

/// Greedy S with every element a sum of elements of S, bracketed any way.
/// Used to decide laws on generators before scanning for witnesses.
std::vector<Element> additive_generators(const FiniteAlgebra& alg) {
  const auto n = static_cast<Element>(alg.size());
  std::vector<bool> in(n, false);
  std::vector<Element> members, gens, work;
  auto absorb = [&](Element e) {
    work.push_back(e);
    while (!work.empty()) {
      const Element m = work.back();
      work.pop_back();
      if (in[m]) continue;
      in[m] = true;
      members.push_back(m);
      for (Element t : members) {
        if (!in[alg.add(m, t)]) work.push_back(alg.add(m, t));
        if (!in[alg.add(t, m)]) work.push_back(alg.add(t, m));
      }
    }
  };
  for (Element e = 0; e < n; ++e) {
    if (in[e]) continue;
    gens.push_back(e);
    absorb(e);
  }
  return gens;
}

/// First (x, y, z) in lexicographic order with !holds(x, y, z).
template <class Pred>
std::optional<std::vector<Element>> first_failure(Element n, Pred holds) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (!holds(x, y, z)) return std::vector<Element>{x, y, z};
  return std::nullopt;
}

/// Decides a ternary law with the argument at `slot` restricted to
/// generators (or all three when `slot` is 3), then falls back to the full
/// scan for the lexicographically first witness.
template <class Pred>
std::optional<std::vector<Element>> check_law(Element n, const std::vector<Element>& gens,
                                              int slot, Pred holds) {
  std::vector<Element> all(n);
  for (Element i = 0; i < n; ++i) all[i] = i;
  const auto& xs = slot == 0 || slot == 3 ? gens : all;
  const auto& ys = slot == 1 || slot == 3 ? gens : all;
  const auto& zs = slot == 2 || slot == 3 ? gens : all;
  for (Element x : xs)
    for (Element y : ys)
      for (Element z : zs)
        if (!holds(x, y, z)) return first_failure(n, holds);
  return std::nullopt;
}

}  // namespace

Verdict validate_algebra(const FiniteAlgebra& alg) {
  const auto n = static_cast<Element>(alg.size());
  for (Element x = 0; x < n; ++x) {
    if (alg.add(0, x) != x || alg.add(x, 0) != x) {
      return Verdict::fail("group.identity", {x});
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (alg.add(x, alg.neg(x)) != 0 || alg.add(alg.neg(x), x) != 0) {
      return Verdict::fail("group.inverse", {x});
    }
  }
  // Associativity with the middle argument in a generating set suffices
  // (Light's test): the middle elements that associate are closed under +.
  const auto gens = additive_generators(alg);
  if (auto w = check_law(n, gens, 1, [&](Element x, Element y, Element z) {
        return alg.add(alg.add(x, y), z) == alg.add(x, alg.add(y, z));
      })) {
    return Verdict::fail("group.associative", *w);
  }
  if (alg.signature().group_commutative()) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (alg.add(x, y) != alg.add(y, x)) return Verdict::fail("group.commutative", {x, y});
      }
    }
  }
  const auto& ops = alg.signature().operations();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const auto& laws = ops[k].laws;
    const std::string& name = ops[k].name;
    // w*(-) and (-)*w are additive once additive on generators.
    if (laws.left_distributive) {
      if (auto w = check_law(n, gens, 1, [&](Element w, Element u, Element v) {
            return alg.op(k, w, alg.add(u, v)) == alg.add(alg.op(k, w, u), alg.op(k, w, v));
          })) {
        return Verdict::fail(name + ".left-distributive", *w);
      }
    }
    if (laws.right_distributive) {
      if (auto w = check_law(n, gens, 0, [&](Element u, Element v, Element w) {
            return alg.op(k, alg.add(u, v), w) == alg.add(alg.op(k, u, w), alg.op(k, v, w));
          })) {
        return Verdict::fail(name + ".right-distributive", *w);
      }
    }
    // Both sides of these laws are additive in every argument when * is.
    const bool multilinear = laws.left_distributive && laws.right_distributive;
    if (laws.associative) {
      if (auto w = check_law(n, gens, multilinear ? 3 : -1, [&](Element x, Element y, Element z) {
            return alg.op(k, alg.op(k, x, y), z) == alg.op(k, x, alg.op(k, y, z));
          })) {
        return Verdict::fail(name + ".associative", *w);
      }
    }
    if (laws.commutative) {
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (alg.op(k, x, y) != alg.op(k, y, x))
            return Verdict::fail(name + ".commutative", {x, y});
    }
  }
  return Verdict::pass();
}

Verdict check_homomorphism(const Homomorphism& h) {
  const auto& src = *h.source();
  const auto& tgt = *h.target();
  if (!src.signature().same_shape(tgt.signature())) {
    throw StructureError("check_homomorphism: " + src.name() + " and " + tgt.name() +
                         " have different signatures");
  }
  const auto n = static_cast<Element>(src.size());
  if (h(0) != 0) return Verdict::fail("zero", {0});
  for (Element x = 0; x < n; ++x) {
    if (h(src.neg(x)) != tgt.neg(h(x))) return Verdict::fail("neg", {x});
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (h(src.add(x, y)) != tgt.add(h(x), h(y))) return Verdict::fail("add", {x, y});
  const auto& ops = src.signature().operations();
  for (std::size_t k = 0; k < ops.size(); ++k)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (h(src.op(k, x, y)) != tgt.op(k, h(x), h(y)))
          return Verdict::fail(ops[k].name, {x, y});
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Subalgebras

std::vector<Element> generated_subalgebra(const FiniteAlgebra& alg,
                                          std::span<const Element> seed) {
  const std::size_t n = alg.size();
  std::vector<char> in(n, 0);
  std::vector<Element> members;
  std::vector<Element> work;
  auto admit = [&](Element e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
      work.push_back(e);
    }
  };
  admit(0);
  for (Element e : seed) {
    if (e >= n) throw StructureError("generated_subalgebra: seed element out of range");
    admit(e);
  }
  const std::size_t ops = alg.signature().operation_count();
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    admit(alg.neg(x));
    // members grows while we scan; index loop picks up new entries.
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Element y = members[i];
      admit(alg.add(x, y));
      admit(alg.add(y, x));
      for (std::size_t k = 0; k < ops; ++k) {
        admit(alg.op(k, x, y));
        admit(alg.op(k, y, x));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subalgebra reify_subset(const AlgebraRef& alg, std::span<const Element> subset,
                        std::string name) {
  std::vector<Element> elems(subset.begin(), subset.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems.front() != 0) {
    throw StructureError("reify_subset: subset must contain 0");
  }
  std::vector<Element> position(alg->size(), kUnassigned);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] >= alg->size()) throw StructureError("reify_subset: element out of range");
    position[elems[i]] = static_cast<Element>(i);
  }
  const std::size_t m = elems.size();
  auto lookup = [&](Element e) {
    if (position[e] == kUnassigned) {
      throw StructureError("reify_subset: subset of " + alg->name() + " is not closed");
    }
    return position[e];
  };
  std::vector<Element> add(m * m), neg(m);
  std::vector<std::vector<Element>> ops(alg->signature().operation_count(),
                                        std::vector<Element>(m * m));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    neg[i] = lookup(alg->neg(elems[i]));
    if (!alg->labels().empty()) labels.push_back(alg->labels()[elems[i]]);
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = lookup(alg->add(elems[i], elems[j]));
      for (std::size_t k = 0; k < ops.size(); ++k) {
        ops[k][i * m + j] = lookup(alg->op(k, elems[i], elems[j]));
      }
    }
  }
  if (name.empty()) name = alg->name() + "_sub";
  auto sub = share(FiniteAlgebra(std::move(name), m, std::move(add), std::move(neg),
                                 std::move(ops), alg->signature(), std::move(labels)));
  return {sub, Homomorphism(sub, alg, std::move(elems))};
}

// ---------------------------------------------------------------------------
// Homomorphism search
//
// Depth-first over images of a generating set. Every assignment is closed
// under the operations; each newly known element is combined with every
// known element, so by the time all elements are known every preservation
// equation has been checked exactly once.

namespace {

class HomSearch {
 public:
  HomSearch(const FiniteAlgebra& source, const FiniteAlgebra& target,
            const HomSearchOptions& options)
      : src_(source), tgt_(target), options_(options) {
    const std::size_t n = src_.size();
    if (!options_.fixed.empty() && options_.fixed.size() != n) {
      throw StructureError("hom search: fixed table has wrong length");
    }
    if (!options_.candidates.empty() && options_.candidates.size() != n) {
      throw StructureError("hom search: candidate table has wrong length");
    }
    if (!options_.candidates.empty()) {
      allowed_.assign(n * tgt_.size(), 0);
      for (std::size_t a = 0; a < n; ++a)
        for (Element b : options_.candidates[a]) {
          if (b >= tgt_.size()) throw StructureError("hom search: candidate out of range");
          allowed_[a * tgt_.size() + b] = 1;
        }
    }
    choose_generators();
  }

  std::vector<std::vector<Element>> run() {
    State init;
    init.map.assign(src_.size(), kUnassigned);
    if (!assign(init, 0, 0)) return {};
    if (!options_.fixed.empty()) {
      for (Element a = 0; a < src_.size(); ++a) {
        if (options_.fixed[a] != kUnassigned && !assign(init, a, options_.fixed[a])) return {};
      }
    }
    if (!propagate(init)) return {};
    descend(init, 0);
    return std::move(results_);
  }

 private:
  struct State {
    std::vector<Element> map;
    std::vector<Element> known;
    std::size_t processed = 0;
  };

  bool permitted(Element a, Element b) const {
    if (!options_.fixed.empty() && options_.fixed[a] != kUnassigned &&
        options_.fixed[a] != b) {
      return false;
    }
    return allowed_.empty() || allowed_[a * tgt_.size() + b];
  }

  std::vector<Element> candidate_list(Element a) const {
    if (!options_.fixed.empty() && options_.fixed[a] != kUnassigned) {
      return {options_.fixed[a]};
    }
    if (!options_.candidates.empty()) return options_.candidates[a];
    std::vector<Element> all(tgt_.size());
    std::iota(all.begin(), all.end(), Element{0});
    return all;
  }

  void choose_generators() {
    const std::size_t n = src_.size();
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::vector<std::size_t> weight(n);
    for (Element a = 0; a < n; ++a) weight[a] = candidate_list(a).size();
    std::stable_sort(order.begin(), order.end(),
                     [&](Element x, Element y) { return weight[x] < weight[y]; });
    std::vector<Element> gens;
    std::vector<Element> closure{0};
    std::vector<char> in(n, 0);
    in[0] = 1;
    for (Element a : order) {
      if (in[a]) continue;
      gens.push_back(a);
      closure = generated_subalgebra(src_, gens);
      std::fill(in.begin(), in.end(), 0);
      for (Element e : closure) in[e] = 1;
      if (closure.size() == n) break;
    }
    generators_ = std::move(gens);
  }

  bool assign(State& st, Element a, Element b) {
    if (st.map[a] != kUnassigned) return st.map[a] == b;
    if (!permitted(a, b)) return false;
    st.map[a] = b;
    st.known.push_back(a);
    return true;
  }

  bool propagate(State& st) {
    const std::size_t ops = src_.signature().operation_count();
    while (st.processed < st.known.size()) {
      const Element x = st.known[st.processed++];
      const Element hx = st.map[x];
      if (!assign(st, src_.neg(x), tgt_.neg(hx))) return false;
      for (std::size_t i = 0; i < st.processed; ++i) {
        const Element y = st.known[i];
        const Element hy = st.map[y];
        if (!assign(st, src_.add(x, y), tgt_.add(hx, hy))) return false;
        if (!assign(st, src_.add(y, x), tgt_.add(hy, hx))) return false;
        for (std::size_t k = 0; k < ops; ++k) {
          if (!assign(st, src_.op(k, x, y), tgt_.op(k, hx, hy))) return false;
          if (!assign(st, src_.op(k, y, x), tgt_.op(k, hy, hx))) return false;
        }
      }
    }
    return true;
  }

  void descend(const State& st, std::size_t depth) {
    if (results_.size() >= options_.limit) return;
    while (depth < generators_.size() && st.map[generators_[depth]] != kUnassigned) ++depth;
    if (depth == generators_.size()) {
      results_.push_back(st.map);
      return;
    }
    const Element g = generators_[depth];
    for (Element b : candidate_list(g)) {
      State next = st;
      if (assign(next, g, b) && propagate(next)) descend(next, depth + 1);
      if (results_.size() >= options_.limit) return;
    }
  }

  const FiniteAlgebra& src_;
  const FiniteAlgebra& tgt_;
  const HomSearchOptions& options_;
  std::vector<char> allowed_;
  std::vector<Element> generators_;
  std::vector<std::vector<Element>> results_;
};

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(const AlgebraRef& source,
                                                  const AlgebraRef& target,
                                                  const HomSearchOptions& options) {
  if (!source->signature().same_shape(target->signature())) {
    throw StructureError("hom_enumerate: " + source->name() + " and " + target->name() +
                         " have different signatures");
  }
  auto maps = HomSearch(*source, *target, options).run();
  std::sort(maps.begin(), maps.end());
  std::vector<Homomorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.emplace_back(source, target, std::move(m));
  return out;
}

std::vector<Homomorphism> automorphism_group(const AlgebraRef& alg) {
  std::vector<Homomorphism> out;
  for (auto& h : enumerate_homomorphisms(alg, alg)) {
    if (h.injective()) out.push_back(std::move(h));
  }
  return out;
}

AlgebraRef automorphism_group_algebra(const std::vector<Homomorphism>& automorphisms,
                                      std::string name) {
  const std::size_t m = automorphisms.size();
  if (m == 0) throw StructureError("automorphism list is empty");
  std::vector<std::vector<Element>> maps;
  for (const auto& h : automorphisms) maps.push_back(h.map());
  auto position = [&](const std::vector<Element>& map) {
    auto it = std::lower_bound(maps.begin(), maps.end(), map);
    if (it == maps.end() || *it != map) {
      throw StructureError("automorphism list is not closed under composition");
    }
    return static_cast<Element>(it - maps.begin());
  };
  if (!std::is_sorted(maps.begin(), maps.end())) {
    throw StructureError("automorphism list must be in canonical order");
  }
  std::vector<Element> add(m * m), neg(m);
  std::vector<Element> buf(maps.front().size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t x = 0; x < buf.size(); ++x) buf[x] = maps[i][maps[j][x]];
      add[i * m + j] = position(buf);
    }
    for (std::size_t x = 0; x < buf.size(); ++x) buf[maps[i][x]] = static_cast<Element>(x);
    neg[i] = position(buf);
  }
  if (position(maps.front()) != 0) throw StructureError("identity must come first");
  return share(FiniteAlgebra(std::move(name), m, std::move(add), std::move(neg), {},
                             Signature::groups()));
}

// ---------------------------------------------------------------------------
// Limits

std::optional<Element> Pullback::locate(Element a, Element c) const {
  const Element e = index[a * right_size + c];
  if (e == kUnassigned) return std::nullopt;
  return e;
}

Pullback pullback(const Homomorphism& f, const Homomorphism& g) {
  if (f.target()->size() != g.target()->size()) {
    throw StructureError("pullback: maps have different codomains");
  }
  const auto& A = *f.source();
  const auto& C = *g.source();
  if (!A.signature().same_shape(C.signature())) {
    throw StructureError("pullback: " + A.name() + " and " + C.name() +
                         " have different signatures");
  }
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<Element> index(A.size() * C.size(), kUnassigned);
  for (Element a = 0; a < A.size(); ++a)
    for (Element c = 0; c < C.size(); ++c)
      if (f(a) == g(c)) {
        index[a * C.size() + c] = static_cast<Element>(pairs.size());
        pairs.emplace_back(a, c);
      }
  const std::size_t m = pairs.size();
  auto at = [&](Element a, Element c) { return index[a * C.size() + c]; };
  std::vector<Element> add(m * m), neg(m), p1(m), p2(m);
  std::vector<std::vector<Element>> ops(A.signature().operation_count(),
                                        std::vector<Element>(m * m));
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [a, c] = pairs[i];
    p1[i] = a;
    p2[i] = c;
    neg[i] = at(A.neg(a), C.neg(c));
    labels[i] = "(" + A.label(a) + "," + C.label(c) + ")";
    for (std::size_t j = 0; j < m; ++j) {
      const auto [a2, c2] = pairs[j];
      add[i * m + j] = at(A.add(a, a2), C.add(c, c2));
      for (std::size_t k = 0; k < ops.size(); ++k) {
        ops[k][i * m + j] = at(A.op(k, a, a2), C.op(k, c, c2));
      }
    }
  }
  // Tables of homomorphic f, g stay inside the carrier; anything else is a
  // caller error surfaced by the constructor's range check.
  auto object = share(FiniteAlgebra(A.name() + "x" + C.name(), m, std::move(add),
                                    std::move(neg), std::move(ops), A.signature(),
                                    std::move(labels)));
  Pullback out{object, Homomorphism(object, f.source(), std::move(p1)),
               Homomorphism(object, g.source(), std::move(p2)), C.size(),
               std::move(index)};
  return out;
}

AlgebraRef trivial_algebra(const Signature& signature, std::string name) {
  std::vector<std::vector<Element>> ops(signature.operation_count(), std::vector<Element>{0});
  return share(FiniteAlgebra(std::move(name), 1, {0}, {0}, std::move(ops), signature, {"0"}));
}

Pullback direct_product(const AlgebraRef& left, const AlgebraRef& right) {
  auto one = trivial_algebra(left->signature());
  return pullback(Homomorphism::zero(left, one), Homomorphism::zero(right, one));
}

}  // namespace ptdescent
