#include "doctest.h"
#include "oracles.hpp"
#include "ptdescent/catalog.hpp"
#include "ptdescent/descent.hpp"
#include "ptdescent/fixtures.hpp"

using namespace ptdescent;

namespace {

CospanRef s3_cospan() { return fixture_s3(2).cospan; }

/// Equivariant homomorphisms X → Y by filtering every homomorphism.
std::size_t equivariant_count(const ActionDatum& xi, const ActionDatum& zeta) {
  std::size_t n = 0;
  const auto& B = *xi.actor();
  for (const auto& u : oracle::homs(*xi.acted(), *zeta.acted())) {
    bool ok = true;
    for (Element b = 0; ok && b < B.size(); ++b)
      for (Element x = 0; ok && x < xi.acted()->size(); ++x) ok = u[xi.dot(b, x)] == zeta.dot(b, u[x]);
    n += ok;
  }
  return n;
}

}  // namespace

TEST_CASE("extremal epimorphic cospans") {
  const auto cs = s3_cospan();
  CHECK(is_extremal_epi(*cs));
  const auto s3 = cs->base();
  const auto c3 = cs->left();
  const Homomorphism f(c3, s3, {0, 1, 2});
  CHECK_FALSE(is_extremal_epi(Cospan(f, f)));
  CHECK_THROWS_AS(Cospan(f, Homomorphism::identity(c3)), StructureError);
}

TEST_CASE("phi of a point is a valid descent datum") {
  const auto cs = s3_cospan();
  for (const auto& X : {cyclic_group(2), cyclic_group(3)})
    for (const auto& xi : enumerate_actions(cs->base(), X, Signature::groups()).actions) {
      const auto datum = phi(cs, semidirect_product(xi).point);
      CHECK(validate_descent_datum(datum));
    }
}

TEST_CASE("a twisted datum fails the unit condition on A") {
  const auto cs = s3_cospan();
  const auto X = cyclic_group(3);
  const auto xi = ActionDatum::trivial(cs->base(), X);
  const auto sd = semidirect_product(xi);
  const auto datum = phi(cs, sd.point);

  // θ(a, (x, b)) = (a, (-x, b)) is an automorphism of D = f*P over A.
  const auto& D = datum.D;
  const auto lifted = pullback_point(cs->f(), sd.point);
  std::vector<Element> theta(D.total()->size());
  for (Element e = 0; e < D.total()->size(); ++e) {
    const Element a = lifted.point.p()(e);
    const Element pe = lifted.lift(e);
    const Element x = pe / 6, b = pe % 6;
    theta[e] = *lifted.locate(a, sd.element(X->neg(x), b));
  }
  const PointMorphism t{D, D, Homomorphism(D.total(), D.total(), theta)};
  REQUIRE(check_point_morphism(t));
  const auto twisted_a = compose(datum.a, pullback_morphism(t, datum.d1, datum.d1));
  const auto twisted = make_descent_datum(cs, datum.D, datum.F, twisted_a.h.map(),
                                          datum.b.h.map(), datum.c.h.map());
  const auto v = validate_descent_datum(twisted);
  CHECK_FALSE(v.holds);
  CHECK(v.failure == "unit-A");
}

TEST_CASE("point morphisms between semidirect products are the equivariant maps") {
  const auto cs = s3_cospan();
  const auto B = cs->base();
  const auto c2 = cyclic_group(2);
  const auto c3 = cyclic_group(3);
  std::vector<ActionDatum> actions;
  for (const auto& X : {c2, c3}) {
    for (auto& xi : enumerate_actions(B, X, Signature::groups()).actions) actions.push_back(xi);
  }
  REQUIRE(actions.size() == 3);  // trivial on C2, trivial and sign on C3
  for (const auto& xi : actions)
    for (const auto& zeta : actions) {
      const auto P = semidirect_product(xi).point;
      const auto Q = semidirect_product(zeta).point;
      const auto rep = check_fully_faithful(cs, P, Q);
      CHECK(rep.point_morphisms == equivariant_count(xi, zeta));
      CHECK(rep.bijective());
    }
}

TEST_CASE("the non-associative cospan is not full") {
  const auto fx = fixture_nonassoc(2);
  const auto P = semidirect_product(fx.xi).point;
  const auto Q = semidirect_product(fx.tau).point;
  const auto rep = check_fully_faithful(fx.cospan, P, Q);
  CHECK(rep.faithful);
  CHECK_FALSE(rep.full);
  CHECK_FALSE(rep.unmatched.empty());
}

TEST_CASE("descent data from two actions") {
  const auto fx = fixture_s3(2);
  const auto datum = datum_from_actions(fx.cospan, fx.rho, fx.trivial);
  CHECK(validate_descent_datum(datum));
  // No S3-action restricts to ρ and the trivial action, so no point
  // realizes the datum.
  const auto found = essential_surjectivity_witness(fx.cospan, datum);
  CHECK(found.conclusive);
  CHECK_FALSE(found.point.has_value());

  const auto P = semidirect_product(ActionDatum::trivial(fx.s3, fx.acted)).point;
  const auto effective = essential_surjectivity_witness(fx.cospan, phi(fx.cospan, P));
  CHECK(effective.point.has_value());
  CHECK(descent_isomorphic(phi(fx.cospan, *effective.point), phi(fx.cospan, P)));
}

TEST_CASE("phi on morphisms preserves identities") {
  const auto cs = s3_cospan();
  const auto P = semidirect_product(ActionDatum::trivial(cs->base(), cyclic_group(3))).point;
  const auto image = phi(cs, identity_morphism(P));
  const auto datum = phi(cs, P);
  CHECK(image.h.h == identity_morphism(datum.D).h);
  CHECK(image.k.h == identity_morphism(datum.F).h);
  CHECK(descent_morphisms(datum, datum).size() == point_morphisms(P, P).size());
}
