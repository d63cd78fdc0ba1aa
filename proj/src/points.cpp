#include "ptdescent/points.hpp"

#include <algorithm>

namespace ptdescent {

namespace {

bool same_base(const Point& a, const Point& b) {
  return a.base() == b.base() || *a.base() == *b.base();
}

}  // namespace

Point::Point(Homomorphism p, Homomorphism s) : p_(std::move(p)), s_(std::move(s)) {
  if (s_.source()->size() != p_.target()->size() ||
      s_.target()->size() != p_.source()->size()) {
    throw StructureError("point: p and s do not form a pair");
  }
  for (Element b = 0; b < base()->size(); ++b) {
    if (p_(s_(b)) != b) {
      throw StructureError("point: p∘s is not the identity at " + base()->label(b));
    }
  }
}

Verdict validate_point(const Point& point) {
  if (auto v = check_homomorphism(point.p()); !v) {
    return Verdict::fail("p." + v.failure, v.witness);
  }
  if (auto v = check_homomorphism(point.s()); !v) {
    return Verdict::fail("s." + v.failure, v.witness);
  }
  return Verdict::pass();
}

Verdict check_point_morphism(const PointMorphism& m) {
  if (!same_base(m.source, m.target)) {
    throw StructureError("point morphism between points over different bases");
  }
  if (auto v = check_homomorphism(m.h); !v) return Verdict::fail("h." + v.failure, v.witness);
  for (Element e = 0; e < m.source.total()->size(); ++e) {
    if (m.target.p()(m.h(e)) != m.source.p()(e)) return Verdict::fail("projection", {e});
  }
  for (Element b = 0; b < m.source.base()->size(); ++b) {
    if (m.h(m.source.s()(b)) != m.target.s()(b)) return Verdict::fail("section", {b});
  }
  return Verdict::pass();
}

PointMorphism identity_morphism(const Point& point) {
  return {point, point, Homomorphism::identity(point.total())};
}

PointMorphism compose(const PointMorphism& outer, const PointMorphism& inner) {
  return {inner.source, outer.target, compose(outer.h, inner.h)};
}

KernelEmbedding kernel_of_point(const Point& point) {
  std::vector<Element> members;
  for (Element e = 0; e < point.total()->size(); ++e) {
    if (point.p()(e) == 0) members.push_back(e);
  }
  auto sub = reify_subset(point.total(), members, point.total()->name() + "_ker");
  return {sub.algebra, sub.inclusion};
}

std::optional<Element> PulledBackPoint::locate(Element a, Element e) const {
  const Element i = index[a * original_size + e];
  if (i == kUnassigned) return std::nullopt;
  return i;
}

PulledBackPoint pullback_point(const Homomorphism& f, const Point& point) {
  if (f.target()->size() != point.base()->size()) {
    throw StructureError("pullback_point: " + f.target()->name() +
                         " is not the base of the point");
  }
  Pullback pb = pullback(f, point.p());
  std::vector<Element> section(f.source()->size());
  for (Element a = 0; a < section.size(); ++a) {
    section[a] = *pb.locate(a, point.s()(f(a)));
  }
  Point pulled(pb.proj1, Homomorphism(f.source(), pb.object, std::move(section)));
  return {std::move(pulled), f, pb.proj2, pb.right_size, std::move(pb.index)};
}

PointMorphism pullback_morphism(const PointMorphism& m, const PulledBackPoint& source,
                                const PulledBackPoint& target) {
  const auto& src_total = *source.point.total();
  std::vector<Element> map(src_total.size());
  for (Element i = 0; i < map.size(); ++i) {
    const Element x = source.point.p()(i);
    const auto j = target.locate(x, m.h(source.lift(i)));
    if (!j) throw StructureError("pullback_morphism: image leaves the pulled-back point");
    map[i] = *j;
  }
  return {source.point, target.point,
          Homomorphism(source.point.total(), target.point.total(), std::move(map))};
}

PointMorphism canonical_comparison(const PulledBackPoint& source_outer,
                                   const PulledBackPoint& source_inner,
                                   const PulledBackPoint& target_outer,
                                   const PulledBackPoint& target_inner) {
  std::vector<Element> map(source_outer.point.total()->size());
  for (Element i = 0; i < map.size(); ++i) {
    const Element x = source_outer.point.p()(i);
    const Element q = source_inner.lift(source_outer.lift(i));
    const auto j = target_inner.locate(target_outer.along(x), q);
    const auto k = j ? target_outer.locate(x, *j) : std::nullopt;
    if (!k) throw StructureError("canonical_comparison: composites do not agree");
    map[i] = *k;
  }
  return {source_outer.point, target_outer.point,
          Homomorphism(source_outer.point.total(), target_outer.point.total(),
                       std::move(map))};
}

PointMorphism canonical_unit(const PulledBackPoint& outer, const PulledBackPoint& inner,
                             const Point& original) {
  std::vector<Element> map(outer.point.total()->size());
  for (Element i = 0; i < map.size(); ++i) {
    const Element q = inner.lift(outer.lift(i));
    if (original.p()(q) != outer.point.p()(i)) {
      throw StructureError("canonical_unit: composite is not the identity");
    }
    map[i] = q;
  }
  return {outer.point, original,
          Homomorphism(outer.point.total(), original.total(), std::move(map))};
}

std::vector<PointMorphism> point_morphisms(const Point& source, const Point& target) {
  if (!same_base(source, target)) {
    throw StructureError("point_morphisms: points over different bases");
  }
  const auto& E = *source.total();
  const auto& E2 = *target.total();
  HomSearchOptions options;
  options.fixed.assign(E.size(), kUnassigned);
  for (Element b = 0; b < source.base()->size(); ++b) {
    const Element e = source.s()(b);
    options.fixed[e] = target.s()(b);
  }
  std::vector<std::vector<Element>> fibres(source.base()->size());
  for (Element e2 = 0; e2 < E2.size(); ++e2) fibres[target.p()(e2)].push_back(e2);
  options.candidates.resize(E.size());
  for (Element e = 0; e < E.size(); ++e) options.candidates[e] = fibres[source.p()(e)];

  std::vector<PointMorphism> out;
  for (auto& h : enumerate_homomorphisms(source.total(), target.total(), options)) {
    out.push_back({source, target, std::move(h)});
  }
  return out;
}

bool is_point_isomorphism(const PointMorphism& m) { return m.h.bijective(); }

PointMorphism inverse(const PointMorphism& m) {
  if (!m.h.bijective()) throw StructureError("inverse: morphism is not bijective");
  std::vector<Element> map(m.h.map().size());
  for (Element e = 0; e < map.size(); ++e) map[m.h(e)] = e;
  return {m.target, m.source, Homomorphism(m.h.target(), m.h.source(), std::move(map))};
}

}  // namespace ptdescent
