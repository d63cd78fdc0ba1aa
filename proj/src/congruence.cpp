#include "ptdescent/congruence.hpp"

#include <algorithm>

namespace ptdescent {

namespace {

std::vector<bool> relation_matrix(std::size_t n, const std::vector<ElementPair>& pairs) {
  std::vector<bool> m(n * n, false);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw StructureError("congruence: pair entry out of range");
    m[a * n + b] = true;
  }
  return m;
}

std::vector<bool> membership(std::size_t n, const std::vector<Element>& subset) {
  std::vector<bool> in(n, false);
  for (Element e : subset) {
    if (e >= n) throw StructureError("subset entry out of range");
    in[e] = true;
  }
  return in;
}

}  // namespace

Verdict validate_congruence(const FiniteAlgebra& alg, const std::vector<ElementPair>& pairs) {
  const std::size_t n = alg.size();
  const auto rel = relation_matrix(n, pairs);
  auto R = [&](Element a, Element b) { return rel[a * n + b]; };
  for (Element a = 0; a < n; ++a)
    if (!R(a, a)) return Verdict::fail("reflexive", {a});
  for (const auto& [a, b] : pairs)
    if (!R(b, a)) return Verdict::fail("symmetric", {a, b});
  for (const auto& [a, b] : pairs)
    for (Element c = 0; c < n; ++c)
      if (R(b, c) && !R(a, c)) return Verdict::fail("transitive", {a, b, c});
  for (const auto& [a, b] : pairs) {
    if (!R(alg.neg(a), alg.neg(b))) return Verdict::fail("closed.neg", {a, b});
    for (const auto& [c, d] : pairs) {
      if (!R(alg.add(a, c), alg.add(b, d))) return Verdict::fail("closed.add", {a, b, c, d});
      for (std::size_t k = 0; k < alg.signature().operation_count(); ++k) {
        if (!R(alg.op(k, a, c), alg.op(k, b, d))) {
          return Verdict::fail("closed." + alg.signature().operations()[k].name, {a, b, c, d});
        }
      }
    }
  }
  return Verdict::pass();
}

Congruence::Congruence(AlgebraRef base, std::vector<ElementPair> pairs) : base_(std::move(base)) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (auto v = validate_congruence(*base_, pairs); !v) throw CongruenceError(std::move(v));
  related_ = relation_matrix(base_->size(), pairs);
  pairs_ = std::move(pairs);
}

AlgebraRef Congruence::as_algebra() const {
  const auto square = direct_product(base_, base_);
  std::vector<Element> subset;
  for (const auto& [a, b] : pairs_) subset.push_back(*square.locate(a, b));
  return reify_subset(square.object, subset, base_->name() + "_R").algebra;
}

Verdict check_normal(const FiniteAlgebra& alg, const std::vector<Element>& subset) {
  const std::size_t n = alg.size();
  const auto in = membership(n, subset);
  if (!in[0]) return Verdict::fail("contains-zero");
  for (Element u : subset) {
    if (!in[alg.neg(u)]) return Verdict::fail("closed.neg", {u});
    for (Element v : subset)
      if (!in[alg.add(u, v)]) return Verdict::fail("closed.add", {u, v});
  }
  for (Element a = 0; a < n; ++a)
    for (Element u : subset)
      if (!in[alg.sub(alg.add(a, u), a)]) return Verdict::fail("normal", {a, u});
  for (std::size_t k = 0; k < alg.signature().operation_count(); ++k)
    for (Element a = 0; a < n; ++a)
      for (Element u : subset)
        if (!in[alg.op(k, a, u)] || !in[alg.op(k, u, a)]) {
          return Verdict::fail("ideal." + alg.signature().operations()[k].name, {a, u});
        }
  return Verdict::pass();
}

Congruence congruence_from_normal(const AlgebraRef& alg, const std::vector<Element>& subset) {
  if (auto v = check_normal(*alg, subset); !v) throw CongruenceError(std::move(v));
  const auto in = membership(alg->size(), subset);
  std::vector<ElementPair> pairs;
  for (Element a = 0; a < alg->size(); ++a)
    for (Element b = 0; b < alg->size(); ++b)
      if (in[alg->sub(a, b)]) pairs.emplace_back(a, b);
  return Congruence(alg, std::move(pairs));
}

std::vector<Element> class_of_zero(const Congruence& r) {
  std::vector<Element> out;
  for (const auto& [a, b] : r.pairs())
    if (b == 0) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Homomorphism> cooperator(const Homomorphism& h, const Homomorphism& k) {
  if (!(*h.target() == *k.target())) {
    throw StructureError("cooperator: maps have different codomains");
  }
  const auto product = direct_product(h.source(), k.source());
  const auto& A = *h.target();
  std::vector<Element> map(product.object->size());
  for (Element i = 0; i < map.size(); ++i) map[i] = A.add(h(product.proj1(i)), k(product.proj2(i)));
  Homomorphism phi(product.object, h.target(), std::move(map));
  if (!check_homomorphism(phi)) return std::nullopt;
  return phi;
}

Element Connector::operator()(Element x, Element y, Element z) const {
  const std::array<Element, 3> t{x, y, z};
  const auto it = std::lower_bound(triples.begin(), triples.end(), t);
  if (it == triples.end() || *it != t) throw StructureError("connector: triple outside the domain");
  return p(static_cast<Element>(it - triples.begin()));
}

std::optional<Connector> connector(const Congruence& r, const Congruence& s) {
  if (!(*r.base() == *s.base())) throw StructureError("connector: congruences on different bases");
  const auto& A = r.base();
  const auto R = r.as_algebra();
  const auto S = s.as_algebra();
  std::vector<Element> r2, s1;
  for (const auto& [x, y] : r.pairs()) r2.push_back(y);
  for (const auto& [y, z] : s.pairs()) s1.push_back(y);
  const auto domain = pullback(Homomorphism(R, A, r2), Homomorphism(S, A, s1));

  // Pair order on R and S makes the triples come out lexicographically.
  std::vector<std::array<Element, 3>> triples;
  HomSearchOptions options;
  options.limit = 1;
  options.fixed.assign(domain.object->size(), kUnassigned);
  for (Element i = 0; i < domain.object->size(); ++i) {
    const auto [x, y] = r.pairs()[domain.proj1(i)];
    const Element z = s.pairs()[domain.proj2(i)].second;
    triples.push_back({x, y, z});
    if (y == z) options.fixed[i] = x;
    if (x == y) options.fixed[i] = z;
  }
  auto found = enumerate_homomorphisms(domain.object, A, options);
  if (found.empty()) return std::nullopt;
  return Connector{domain.object, std::move(triples), std::move(found.front())};
}

Verdict validate_connector(const Connector& c, const Congruence& r, const Congruence& s) {
  for (Element i = 0; i < c.triples.size(); ++i) {
    const auto [x, y, z] = c.triples[i];
    if (!r.related(x, y) || !s.related(y, z)) return Verdict::fail("domain", {x, y, z});
    if (y == z && c.p(i) != x) return Verdict::fail("unit.right", {x, y, z});
    if (x == y && c.p(i) != z) return Verdict::fail("unit.left", {x, y, z});
  }
  if (auto v = check_homomorphism(c.p); !v) return Verdict::fail("homomorphism." + v.failure, v.witness);
  return Verdict::pass();
}

SHVerdict check_sh_instance(const Congruence& r, const Congruence& s) {
  if (!(*r.base() == *s.base())) {
    throw StructureError("check_sh_instance: congruences on different bases");
  }
  const auto& A = r.base();
  const auto normal_r = reify_subset(A, class_of_zero(r), A->name() + "_N_R");
  const auto normal_s = reify_subset(A, class_of_zero(s), A->name() + "_N_S");
  SHVerdict out;
  out.cooperator = cooperator(normal_r.inclusion, normal_s.inclusion);
  out.connector = connector(r, s);
  out.cooperates = out.cooperator.has_value();
  out.connects = out.connector.has_value();
  out.sh_respected = !out.cooperates || out.connects;
  return out;
}

}  // namespace ptdescent
