#include "doctest.h"
#include "oracles.hpp"
#include "ptdescent/actions.hpp"
#include "ptdescent/catalog.hpp"
#include "ptdescent/descent.hpp"
#include "ptdescent/fixtures.hpp"

using namespace ptdescent;

namespace {

/// C2 acting on C3 by inversion.
ActionDatum inversion() {
  const auto c2 = cyclic_group(2);
  const auto c3 = cyclic_group(3);
  return ActionDatum(c2, c3, {0, 1, 2, 0, 2, 1}, {}, {});
}

}  // namespace

TEST_CASE("semidirect product follows the multiplication formula") {
  const auto xi = inversion();
  const auto sd = semidirect_product(xi);
  const auto& E = *sd.point.total();
  REQUIRE(E.size() == 6);
  for (Element x = 0; x < 3; ++x)
    for (Element b = 0; b < 2; ++b)
      for (Element y = 0; y < 3; ++y)
        for (Element c = 0; c < 2; ++c) {
          const Element want = sd.element((x + xi.dot(b, y)) % 3, (b + c) % 2);
          CHECK(E.add(sd.element(x, b), sd.element(y, c)) == want);
        }
  CHECK(validate_action(xi));
  CHECK(oracle::isomorphic(E, *dihedral_group(3)));
}

TEST_CASE("invalid dot tables are rejected") {
  const auto c2 = cyclic_group(2);
  const auto c3 = cyclic_group(3);
  // The generator sends 1 to 1 and 2 to 1: not additive.
  const ActionDatum bad(c2, c3, {0, 1, 2, 0, 1, 1}, {}, {});
  CHECK_FALSE(validate_action(bad));
  CHECK_THROWS_AS(ActionDatum(c2, c3, {0, 1, 2}, {}, {}), StructureError);
}

TEST_CASE("enumerated group actions match brute force") {
  const auto groups = groups_up_to_12();
  for (const auto& B : groups) {
    if (B->size() > 6) continue;
    for (const auto& X : groups) {
      if (X->size() > 4) continue;
      const auto found = enumerate_actions(B, X, Signature::groups());
      REQUIRE(found.conclusive);
      std::vector<std::vector<Element>> tables;
      for (const auto& xi : found.actions) tables.push_back(xi.dot_table());
      std::sort(tables.begin(), tables.end());
      auto want = oracle::group_actions(B, X);
      std::sort(want.begin(), want.end());
      CHECK_MESSAGE(tables == want, B->name() << " on " << X->name());
    }
  }
}

TEST_CASE("action from point inverts the semidirect product") {
  for (const auto& B : {cyclic_group(2), cyclic_group(4), dihedral_group(3)})
    for (const auto& X : {cyclic_group(3), product_group(cyclic_group(2), cyclic_group(2))}) {
      for (const auto& xi : enumerate_actions(B, X, Signature::groups()).actions) {
        const auto sd = semidirect_product(xi);
        CHECK(action_from_point(sd.point, sd.kernel) == xi);
        CHECK(validate_point(sd.point));
      }
    }
}

TEST_CASE("restriction is functorial") {
  const auto c2 = cyclic_group(2);
  const auto c4 = cyclic_group(4);
  const auto d4 = dihedral_group(4);
  const Homomorphism f(c2, c4, {0, 2});
  const Homomorphism g(c4, d4, {0, 1, 2, 3});
  const auto X = product_group(cyclic_group(2), cyclic_group(2));
  for (const auto& xi : enumerate_actions(d4, X, Signature::groups()).actions) {
    CHECK(restrict_action(compose(g, f), xi) == restrict_action(f, restrict_action(g, xi)));
    CHECK(restrict_action(Homomorphism::identity(d4), xi) == xi);
    // Restricting the point and reading off its action agrees.
    const auto pb = pullback_point(g, semidirect_product(xi).point);
    CHECK(action_from_point(pb.point) == restrict_action(g, xi));
  }
}

TEST_CASE("equivariance of homomorphisms between actions") {
  const auto xi = inversion();
  const auto triv = ActionDatum::trivial(xi.actor(), xi.acted());
  const auto c3 = xi.acted();
  CHECK(check_equivariance(Homomorphism::identity(c3), xi, xi));
  CHECK(check_equivariance(Homomorphism::zero(c3, c3), xi, triv));
  CHECK_FALSE(check_equivariance(Homomorphism::identity(c3), xi, triv));
}

TEST_CASE("star parts: the non-associative ring action") {
  for (std::size_t n : {2, 3}) {
    const auto fx = fixture_nonassoc(n);
    CHECK(validate_action(fx.xi));
    CHECK(validate_action(fx.tau));
    const auto v = validate_action(fx.xi, Signature::rings());
    CHECK_FALSE(v.holds);
    CHECK(v.failure == "semidirect.mul.associative");
    const Element z = span_element(fx, 0, 0, 1);
    REQUIRE(v.witness.size() == 3);
    CHECK(v.witness[0].actor == z);
    CHECK(v.witness[1].actor == z);
    CHECK(v.witness[2].acted == 1);
    // (z·z)*1 = 0 and z*(z*1) = 1 in the acted ring.
    const auto& A = *fx.algebra;
    CHECK(fx.xi.left(0, A.op(0, z, z), 1) == 0);
    CHECK(fx.xi.left(0, z, fx.xi.left(0, z, 1)) != 0);
  }
}
