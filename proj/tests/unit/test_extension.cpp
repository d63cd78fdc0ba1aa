#include "doctest.h"
#include "oracles.hpp"
#include "ptdescent/catalog.hpp"
#include "ptdescent/corpus.hpp"
#include "ptdescent/descent.hpp"
#include "ptdescent/fixtures.hpp"

using namespace ptdescent;

TEST_CASE("no S3 action extends the rotation and the trivial action") {
  const auto fx = fixture_s3(2);
  for (auto m : {ExtendMethod::oracle, ExtendMethod::propagate}) {
    const auto r = extend_action(*fx.cospan, fx.rho, fx.trivial, m);
    CHECK(r.conclusive);
    CHECK(r.extremal_epi);
    CHECK(r.actions.empty());
  }
  const auto fx3 = fixture_s3(3);
  const auto r3 = extend_action(*fx3.cospan, fx3.rho, fx3.trivial, ExtendMethod::propagate);
  CHECK(r3.conclusive);
  CHECK(r3.actions.empty());
  // 27 elements exceed the group oracle's default bound.
  const auto o3 = extend_action(*fx3.cospan, fx3.rho, fx3.trivial, ExtendMethod::oracle);
  CHECK_FALSE(o3.conclusive);
  CHECK_FALSE(o3.bound_note.empty());
}

TEST_CASE("restrictions of an action extend back to it") {
  const auto d4 = dihedral_group(4);
  const auto X = product_group(cyclic_group(2), cyclic_group(2));
  const auto cospans = extremal_subgroup_cospans(d4);
  REQUIRE_FALSE(cospans.empty());
  for (const auto& xi : enumerate_actions(d4, X, Signature::groups()).actions) {
    for (const auto& cs : cospans) {
      const auto a = restrict_action(cs->f(), xi);
      const auto c = restrict_action(cs->g(), xi);
      const auto p = extend_action(*cs, a, c, ExtendMethod::propagate);
      const auto o = extend_action(*cs, a, c, ExtendMethod::oracle);
      REQUIRE(p.conclusive);
      REQUIRE(o.conclusive);
      CHECK(p.actions == o.actions);
      REQUIRE(p.actions.size() == 1);
      CHECK(p.actions.front() == xi);
      CHECK(check_ua_instance(*cs, a, c).holds);
    }
  }
}

TEST_CASE("inconsistent restrictions give no extension") {
  // C2 ↪ C2 twice: the two restrictions must agree.
  const auto c2 = cyclic_group(2);
  const auto c3 = cyclic_group(3);
  const auto id = Homomorphism::identity(c2);
  const Cospan cs(id, id);
  const ActionDatum inv(c2, c3, {0, 1, 2, 0, 2, 1}, {}, {});
  const auto triv = ActionDatum::trivial(c2, c3);
  for (auto m : {ExtendMethod::oracle, ExtendMethod::propagate}) {
    CHECK(extend_action(cs, inv, triv, m).actions.empty());
    CHECK(extend_action(cs, inv, inv, m).actions.size() == 1);
  }
}

TEST_CASE("the non-associative ring cospan has several extensions") {
  const auto fx = fixture_nonassoc(2);
  const auto a = restrict_action(fx.cospan->f(), fx.xi);
  const auto c = restrict_action(fx.cospan->g(), fx.xi);
  const auto p = extend_action(*fx.cospan, a, c, ExtendMethod::propagate);
  const auto o = extend_action(*fx.cospan, a, c, ExtendMethod::oracle);
  REQUIRE(p.conclusive);
  REQUIRE(o.conclusive);
  CHECK(p.actions == o.actions);
  CHECK(p.actions.size() == 4);
  CHECK(std::find(p.actions.begin(), p.actions.end(), fx.xi) != p.actions.end());
  CHECK(std::find(p.actions.begin(), p.actions.end(), fx.tau) != p.actions.end());
  for (const auto& xi : p.actions) CHECK(validate_action(xi));
  const auto ua = check_ua_instance(*fx.cospan, a, c);
  CHECK_FALSE(ua.holds);
  CHECK(ua.extensions == 4);
}

TEST_CASE("search bounds make results inconclusive") {
  const auto fx = fixture_nonassoc(2);
  SearchBounds tight;
  tight.node_max = 1;
  tight.candidate_max = 1;
  const auto a = restrict_action(fx.cospan->f(), fx.xi);
  const auto c = restrict_action(fx.cospan->g(), fx.xi);
  const auto p = extend_action(*fx.cospan, a, c, ExtendMethod::propagate, tight);
  CHECK_FALSE(p.conclusive);
  CHECK_FALSE(p.bound_note.empty());
  const auto o = extend_action(*fx.cospan, a, c, ExtendMethod::oracle, tight);
  CHECK_FALSE(o.conclusive);
}

TEST_CASE("methods agree over small groups") {
  std::size_t compared = 0;
  for (const auto& B : small_groups(8)) {
    for (const auto& cs : extremal_subgroup_cospans(B)) {
      for (const auto& X : small_groups(4)) {
        for (const auto& xi : enumerate_actions(B, X, Signature::groups()).actions) {
          const auto a = restrict_action(cs->f(), xi);
          const auto c = restrict_action(cs->g(), xi);
          const auto p = extend_action(*cs, a, c, ExtendMethod::propagate);
          const auto o = extend_action(*cs, a, c, ExtendMethod::oracle);
          if (!o.conclusive) continue;
          CHECK(p.actions == o.actions);
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 100);
}
