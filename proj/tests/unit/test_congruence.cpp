#include "doctest.h"
#include "ptdescent/catalog.hpp"
#include "ptdescent/congruence.hpp"

using namespace ptdescent;

namespace {

std::vector<Element> all_of(const FiniteAlgebra& a) {
  std::vector<Element> out(a.size());
  for (Element e = 0; e < a.size(); ++e) out[e] = e;
  return out;
}

}  // namespace

TEST_CASE("congruences from normal subgroups") {
  const auto s3 = dihedral_group(3);
  const std::vector<Element> a3{0, 1, 2};
  const auto r = congruence_from_normal(s3, a3);
  CHECK(r.pairs().size() == 18);
  CHECK(class_of_zero(r) == a3);
  CHECK(r.related(3, 5));
  CHECK_FALSE(r.related(1, 3));

  CHECK(congruence_from_normal(s3, {0}).pairs().size() == 6);
  CHECK(congruence_from_normal(s3, all_of(*s3)).pairs().size() == 36);
  CHECK(validate_congruence(*s3, r.pairs()));

  // class_of_zero inverts congruence_from_normal on every normal subgroup.
  for (const auto& G : groups_up_to_12())
    for (const auto& n : normal_subalgebras(*G)) CHECK(class_of_zero(congruence_from_normal(G, n)) == n);
}

TEST_CASE("non-normal subsets are rejected with a witness") {
  const auto s3 = dihedral_group(3);
  const std::vector<Element> s{0, 3};
  const auto v = check_normal(*s3, s);
  CHECK(v.failure == "normal");
  REQUIRE(v.witness.size() == 2);
  const Element a = v.witness[0], n = v.witness[1];
  CHECK(std::find(s.begin(), s.end(), s3->add(s3->add(a, n), s3->neg(a))) == s.end());
  try {
    congruence_from_normal(s3, s);
    FAIL("expected rejection");
  } catch (const CongruenceError& e) {
    CHECK(e.verdict().failure == "normal");
  }
  CHECK(check_normal(*s3, {1, 2}).failure == "contains-zero");
}

TEST_CASE("relation checks") {
  const auto c3 = cyclic_group(3);
  CHECK(validate_congruence(*c3, {{0, 0}, {1, 1}}).failure == "reflexive");
  CHECK(validate_congruence(*c3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}}).failure == "symmetric");
  // {0,1} as a class is not closed under addition
  CHECK_FALSE(validate_congruence(*c3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}}).holds);
  CHECK_THROWS_AS(Congruence(c3, {{0, 0}}), CongruenceError);
}

TEST_CASE("ideals in rings") {
  const auto z6 = integers_mod(6, Signature::rings());
  CHECK(check_normal(*z6, {0, 2, 4}));
  CHECK(check_normal(*z6, {0, 3}));
  CHECK(normal_subalgebras(*z6).size() == 4);
}

TEST_CASE("cooperators") {
  const auto s3 = dihedral_group(3);
  const auto c3 = cyclic_group(3);
  const auto c2 = cyclic_group(2);
  const Homomorphism r(c3, s3, {0, 1, 2});
  const Homomorphism s(c2, s3, {0, 3});
  CHECK_FALSE(cooperator(r, s).has_value());
  CHECK(cooperator(r, r).has_value());

  const auto v4 = product_group(c2, c2);
  const Homomorphism x(c2, v4, {0, 1});
  const Homomorphism y(c2, v4, {0, 2});
  const auto phi = cooperator(x, y);
  REQUIRE(phi.has_value());
  CHECK(check_homomorphism(*phi));
  CHECK(phi->bijective());

  const auto one = trivial_algebra(Signature::groups());
  const auto z = cooperator(Homomorphism::zero(one, s3), s);
  REQUIRE(z.has_value());
  CHECK(z->image() == std::vector<Element>{0, 3});
}

TEST_CASE("connectors") {
  const auto c6 = cyclic_group(6);
  const auto total = congruence_from_normal(c6, all_of(*c6));
  const auto p = connector(total, total);
  REQUIRE(p.has_value());
  CHECK(validate_connector(*p, total, total));
  // On an abelian group the connector is x − y + z.
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      for (Element z = 0; z < 6; ++z) CHECK((*p)(x, y, z) == c6->add(c6->sub(x, y), z));

  const auto s3 = dihedral_group(3);
  const auto diag = congruence_from_normal(s3, {0});
  const auto full = congruence_from_normal(s3, all_of(*s3));
  const auto d = connector(diag, full);
  REQUIRE(d.has_value());
  CHECK(validate_connector(*d, diag, full));
  CHECK((*d)(4, 4, 2) == 2);

  const auto a3 = congruence_from_normal(s3, {0, 1, 2});
  const auto q = connector(a3, a3);
  REQUIRE(q.has_value());
  CHECK(validate_connector(*q, a3, a3));
  CHECK_FALSE(connector(a3, full).has_value());
  CHECK_FALSE(connector(full, full).has_value());
}

TEST_CASE("SH instances") {
  const auto s3 = dihedral_group(3);
  const auto a3 = congruence_from_normal(s3, {0, 1, 2});
  const auto full = congruence_from_normal(s3, all_of(*s3));
  const auto same = check_sh_instance(a3, a3);
  CHECK(same.cooperates);
  CHECK(same.connects);
  CHECK(same.sh_respected);
  const auto mixed = check_sh_instance(a3, full);
  CHECK_FALSE(mixed.cooperates);
  CHECK(mixed.sh_respected);

  const auto v4 = product_group(cyclic_group(2), cyclic_group(2));
  const auto h = congruence_from_normal(v4, {0, 1});
  const auto k = congruence_from_normal(v4, {0, 2});
  const auto hk = check_sh_instance(h, k);
  CHECK(hk.cooperates);
  CHECK(hk.connects);
  REQUIRE(hk.connector.has_value());
  CHECK(validate_connector(*hk.connector, h, k));
}
