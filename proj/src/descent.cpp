#include "ptdescent/descent.hpp"

#include <map>
#include <stdexcept>

namespace ptdescent {

namespace {

TriplePullback triple(const Pullback& xy, const Pullback& yz, const Pullback& xz) {
  Pullback t = pullback(xy.proj2, yz.proj1);
  std::vector<Element> p13(t.object->size());
  for (Element e = 0; e < p13.size(); ++e) {
    const Element x = xy.proj1(t.proj1(e));
    const Element z = yz.proj2(t.proj2(e));
    p13[e] = *xz.locate(x, z);
  }
  Homomorphism h13(t.object, xz.object, std::move(p13));
  return {t.object, t.proj1, std::move(h13), t.proj2};
}

Homomorphism diagonal(const Pullback& pb, const AlgebraRef& foot) {
  std::vector<Element> map(foot->size());
  for (Element a = 0; a < map.size(); ++a) map[a] = *pb.locate(a, a);
  return Homomorphism(foot, pb.object, std::move(map));
}

Pullback checked_pullback(const Homomorphism& f, const Homomorphism& g) {
  if (!(*f.target() == *g.target())) {
    throw StructureError("cospan: " + f.source()->name() + " and " + g.source()->name() +
                         " map into different algebras");
  }
  return pullback(f, g);
}

bool same_cospan(const CospanRef& x, const CospanRef& y) {
  if (x == y) return true;
  return x->f() == y->f() && x->g() == y->g() && *x->base() == *y->base();
}

/// The upper path π₂₃*m₂₃ ∘ ≅ ∘ π₁₂*m₁₂ against the lower path
/// ≅ ∘ π₁₃*m₁₃ ∘ ≅ over a triple pullback.
Verdict hexagon(const std::string& name, const TriplePullback& t,
                const PointMorphism& m12, const PulledBackPoint& s12,
                const PulledBackPoint& t12, const PointMorphism& m23,
                const PulledBackPoint& s23, const PulledBackPoint& t23,
                const PointMorphism& m13, const PulledBackPoint& s13,
                const PulledBackPoint& t13) {
  const auto l1 = pullback_point(t.p12, s12.point);
  const auto l2 = pullback_point(t.p12, t12.point);
  const auto r1 = pullback_point(t.p23, s23.point);
  const auto r2 = pullback_point(t.p23, t23.point);
  const auto n1 = pullback_point(t.p13, s13.point);
  const auto n2 = pullback_point(t.p13, t13.point);

  const auto up1 = pullback_morphism(m12, l1, l2);
  const auto up2 = canonical_comparison(l2, t12, r1, s23);
  const auto up3 = pullback_morphism(m23, r1, r2);
  const auto lo1 = canonical_comparison(l1, s12, n1, s13);
  const auto lo2 = pullback_morphism(m13, n1, n2);
  const auto lo3 = canonical_comparison(n2, t13, r2, t23);

  for (Element i = 0; i < l1.point.total()->size(); ++i) {
    const Element upper = up3.h(up2.h(up1.h(i)));
    const Element lower = lo3.h(lo2.h(lo1.h(i)));
    if (upper != lower) return Verdict::fail(name, {i});
  }
  return Verdict::pass();
}

Verdict unit_triangle(const std::string& name, const Homomorphism& delta,
                      const PointMorphism& m, const PulledBackPoint& source,
                      const PulledBackPoint& target, const Point& original) {
  const auto u1 = pullback_point(delta, source.point);
  const auto u2 = pullback_point(delta, target.point);
  const auto pulled = pullback_morphism(m, u1, u2);
  const auto via_source = canonical_unit(u1, source, original);
  const auto via_target = canonical_unit(u2, target, original);
  for (Element i = 0; i < u1.point.total()->size(); ++i) {
    if (via_target.h(pulled.h(i)) != via_source.h(i)) return Verdict::fail(name, {i});
  }
  return Verdict::pass();
}

}  // namespace

// ---------------------------------------------------------------------------
// Cospan

Cospan::Cospan(Homomorphism f, Homomorphism g)
    : f_(std::move(f)),
      g_(std::move(g)),
      aa_(checked_pullback(f_, f_)),
      ac_(checked_pullback(f_, g_)),
      cc_(checked_pullback(g_, g_)),
      aaa_(triple(aa_, aa_, aa_)),
      aac_(triple(aa_, ac_, ac_)),
      acc_(triple(ac_, cc_, ac_)),
      ccc_(triple(cc_, cc_, cc_)),
      delta_a_(diagonal(aa_, f_.source())),
      delta_c_(diagonal(cc_, g_.source())) {}

bool is_extremal_epi(const Cospan& cospan) {
  std::vector<Element> seed = cospan.f().image();
  const auto right = cospan.g().image();
  seed.insert(seed.end(), right.begin(), right.end());
  return generated_subalgebra(*cospan.base(), seed).size() == cospan.base()->size();
}

// ---------------------------------------------------------------------------
// Descent data

namespace {

struct Pulled {
  PulledBackPoint d1, d2, dc, fc, f1, f2;
};

Pulled pull_feet(const Cospan& cospan, const Point& D, const Point& F) {
  if (D.base()->size() != cospan.left()->size() ||
      F.base()->size() != cospan.right()->size()) {
    throw StructureError("descent datum: points are not over the feet of the cospan");
  }
  return {pullback_point(cospan.aa().proj1, D), pullback_point(cospan.aa().proj2, D),
          pullback_point(cospan.ac().proj1, D), pullback_point(cospan.ac().proj2, F),
          pullback_point(cospan.cc().proj1, F), pullback_point(cospan.cc().proj2, F)};
}

DescentDatum assemble(CospanRef cospan, Point D, Point F, Pulled p, PointMorphism a,
                      PointMorphism b, PointMorphism c) {
  return {std::move(cospan), std::move(D),    std::move(F),    std::move(p.d1),
          std::move(p.d2),   std::move(p.dc), std::move(p.fc), std::move(p.f1),
          std::move(p.f2),   std::move(a),    std::move(b),    std::move(c)};
}

PointMorphism wrap(const PulledBackPoint& from, const PulledBackPoint& to,
                   std::vector<Element> map) {
  return {from.point, to.point,
          Homomorphism(from.point.total(), to.point.total(), std::move(map))};
}

}  // namespace

DescentDatum make_descent_datum(CospanRef cospan, Point D, Point F, std::vector<Element> a,
                                std::vector<Element> b, std::vector<Element> c) {
  Pulled p = pull_feet(*cospan, D, F);
  auto ma = wrap(p.d1, p.d2, std::move(a));
  auto mb = wrap(p.dc, p.fc, std::move(b));
  auto mc = wrap(p.f1, p.f2, std::move(c));
  return assemble(std::move(cospan), std::move(D), std::move(F), std::move(p), std::move(ma),
                  std::move(mb), std::move(mc));
}

DescentDatum phi(const CospanRef& cospan, const Point& point) {
  const auto over_a = pullback_point(cospan->f(), point);
  const auto over_c = pullback_point(cospan->g(), point);
  Pulled p = pull_feet(*cospan, over_a.point, over_c.point);
  auto a = canonical_comparison(p.d1, over_a, p.d2, over_a);
  auto b = canonical_comparison(p.dc, over_a, p.fc, over_c);
  auto c = canonical_comparison(p.f1, over_c, p.f2, over_c);
  return assemble(cospan, over_a.point, over_c.point, std::move(p), std::move(a),
                  std::move(b), std::move(c));
}

DescentMorphism phi(const CospanRef& cospan, const PointMorphism& j) {
  const auto src_a = pullback_point(cospan->f(), j.source);
  const auto tgt_a = pullback_point(cospan->f(), j.target);
  const auto src_c = pullback_point(cospan->g(), j.source);
  const auto tgt_c = pullback_point(cospan->g(), j.target);
  return {pullback_morphism(j, src_a, tgt_a), pullback_morphism(j, src_c, tgt_c)};
}

Verdict validate_descent_datum(const DescentDatum& d) {
  const std::pair<const char*, const PointMorphism*> parts[] = {
      {"a", &d.a}, {"b", &d.b}, {"c", &d.c}};
  for (const auto& [name, m] : parts) {
    if (auto v = check_point_morphism(*m); !v) {
      return Verdict::fail(std::string("morphism-") + name + "." + v.failure, v.witness);
    }
    if (!is_point_isomorphism(*m)) return Verdict::fail(std::string("iso-") + name);
  }
  const Cospan& cs = *d.cospan;
  if (auto v = unit_triangle("unit-A", cs.diagonal_a(), d.a, d.d1, d.d2, d.D); !v) return v;
  if (auto v = unit_triangle("unit-C", cs.diagonal_c(), d.c, d.f1, d.f2, d.F); !v) return v;
  if (auto v = hexagon("cocycle-AAA", cs.aaa(), d.a, d.d1, d.d2, d.a, d.d1, d.d2, d.a, d.d1,
                       d.d2);
      !v) {
    return v;
  }
  if (auto v = hexagon("cocycle-AAC", cs.aac(), d.a, d.d1, d.d2, d.b, d.dc, d.fc, d.b, d.dc,
                       d.fc);
      !v) {
    return v;
  }
  if (auto v = hexagon("cocycle-ACC", cs.acc(), d.b, d.dc, d.fc, d.c, d.f1, d.f2, d.b, d.dc,
                       d.fc);
      !v) {
    return v;
  }
  return hexagon("cocycle-CCC", cs.ccc(), d.c, d.f1, d.f2, d.c, d.f1, d.f2, d.c, d.f1, d.f2);
}

std::vector<DescentMorphism> descent_morphisms(const DescentDatum& x, const DescentDatum& y) {
  if (!same_cospan(x.cospan, y.cospan)) {
    throw StructureError("descent_morphisms: data over different cospans");
  }
  struct HSide {
    PointMorphism h;
    PointMorphism over_ac;
  };
  std::vector<HSide> hs;
  for (auto& h : point_morphisms(x.D, y.D)) {
    const auto first = pullback_morphism(h, x.d1, y.d1);
    const auto second = pullback_morphism(h, x.d2, y.d2);
    bool ok = true;
    for (Element i = 0; ok && i < x.d1.point.total()->size(); ++i) {
      ok = y.a.h(first.h(i)) == second.h(x.a.h(i));
    }
    if (ok) {
      auto over_ac = pullback_morphism(h, x.dc, y.dc);
      hs.push_back({std::move(h), std::move(over_ac)});
    }
  }
  struct KSide {
    PointMorphism k;
    PointMorphism over_ac;
  };
  std::vector<KSide> ks;
  for (auto& k : point_morphisms(x.F, y.F)) {
    const auto first = pullback_morphism(k, x.f1, y.f1);
    const auto second = pullback_morphism(k, x.f2, y.f2);
    bool ok = true;
    for (Element i = 0; ok && i < x.f1.point.total()->size(); ++i) {
      ok = y.c.h(first.h(i)) == second.h(x.c.h(i));
    }
    if (ok) {
      auto over_ac = pullback_morphism(k, x.fc, y.fc);
      ks.push_back({std::move(k), std::move(over_ac)});
    }
  }
  std::vector<DescentMorphism> out;
  for (const auto& h : hs) {
    for (const auto& k : ks) {
      bool ok = true;
      for (Element i = 0; ok && i < x.dc.point.total()->size(); ++i) {
        ok = y.b.h(h.over_ac.h(i)) == k.over_ac.h(x.b.h(i));
      }
      if (ok) out.push_back({h.h, k.k});
    }
  }
  return out;
}

bool descent_isomorphic(const DescentDatum& x, const DescentDatum& y) {
  if (x.D.total()->size() != y.D.total()->size() ||
      x.F.total()->size() != y.F.total()->size()) {
    return false;
  }
  for (const auto& m : descent_morphisms(x, y)) {
    if (is_point_isomorphism(m.h) && is_point_isomorphism(m.k)) return true;
  }
  return false;
}

FullyFaithfulReport check_fully_faithful(const CospanRef& cospan, const Point& P,
                                         const Point& Q) {
  const auto dp = phi(cospan, P);
  const auto dq = phi(cospan, Q);
  const auto morphisms = point_morphisms(P, Q);
  FullyFaithfulReport report;
  report.targets = descent_morphisms(dp, dq);
  report.point_morphisms = morphisms.size();
  report.descent_morphisms = report.targets.size();

  std::map<std::pair<std::vector<Element>, std::vector<Element>>, std::size_t> position;
  for (std::size_t i = 0; i < report.targets.size(); ++i) {
    position[{report.targets[i].h.h.map(), report.targets[i].k.h.map()}] = i;
  }
  std::vector<std::size_t> preimage(report.targets.size(), morphisms.size());
  for (std::size_t j = 0; j < morphisms.size(); ++j) {
    const auto image = phi(cospan, morphisms[j]);
    const auto it = position.find({image.h.h.map(), image.k.h.map()});
    if (it == position.end()) {
      throw std::logic_error("check_fully_faithful: Φ(j) is not a descent morphism");
    }
    if (preimage[it->second] != morphisms.size()) {
      report.faithful = false;
      report.collisions.emplace_back(preimage[it->second], j);
    } else {
      preimage[it->second] = j;
    }
  }
  for (std::size_t i = 0; i < preimage.size(); ++i) {
    if (preimage[i] == morphisms.size()) {
      report.full = false;
      report.unmatched.push_back(i);
    }
  }
  return report;
}

DescentDatum datum_from_actions(const CospanRef& cospan, const ActionDatum& xi_a,
                                const ActionDatum& xi_c) {
  if (!(*xi_a.acted() == *xi_c.acted())) {
    throw StructureError("datum_from_actions: actions on different objects");
  }
  if (xi_a.actor()->size() != cospan->left()->size() ||
      xi_c.actor()->size() != cospan->right()->size()) {
    throw StructureError("datum_from_actions: actors are not the feet of the cospan");
  }
  auto D = semidirect_product(xi_a).point;
  auto F = semidirect_product(xi_c).point;
  const auto na = static_cast<Element>(cospan->left()->size());
  const auto nc = static_cast<Element>(cospan->right()->size());
  Pulled p = pull_feet(*cospan, D, F);
  // a, b, c keep the X coordinate and move the base coordinate across.
  auto relabel = [](const PulledBackPoint& from, const PulledBackPoint& to,
                    const Homomorphism& foot, Element from_width, Element to_width) {
    std::vector<Element> map(from.point.total()->size());
    for (Element i = 0; i < map.size(); ++i) {
      const Element t = from.point.p()(i);
      const Element x = from.lift(i) / from_width;
      const auto j = to.locate(t, x * to_width + foot(t));
      if (!j) throw StructureError("datum_from_actions: relabelling left the pullback");
      map[i] = *j;
    }
    return wrap(from, to, std::move(map));
  };
  auto a = relabel(p.d1, p.d2, cospan->aa().proj2, na, na);
  auto b = relabel(p.dc, p.fc, cospan->ac().proj2, na, nc);
  auto c = relabel(p.f1, p.f2, cospan->cc().proj2, nc, nc);
  return assemble(cospan, std::move(D), std::move(F), std::move(p), std::move(a),
                  std::move(b), std::move(c));
}

}  // namespace ptdescent
