#include "doctest.h"
#include "oracles.hpp"
#include "ptdescent/algebra.hpp"
#include "ptdescent/catalog.hpp"

using namespace ptdescent;

namespace {

AlgebraRef z_mod(std::size_t n, const Signature& sig) { return integers_mod(n, sig); }

}  // namespace

TEST_CASE("table shape errors are structural") {
  CHECK_THROWS_AS(FiniteAlgebra("bad", 2, {0, 1, 1}, {0, 1}, {}, Signature::groups()), StructureError);
  CHECK_THROWS_AS(FiniteAlgebra("bad", 2, {0, 1, 1, 2}, {0, 1}, {}, Signature::groups()),
                  StructureError);
  CHECK_THROWS_AS(FiniteAlgebra("bad", 2, {0, 1, 1, 0}, {0, 1}, {}, Signature::groups(), {"a"}),
                  StructureError);
  const auto c2 = cyclic_group(2);
  CHECK_THROWS_AS(Homomorphism(c2, c2, {0}), StructureError);
  CHECK_THROWS_AS(Homomorphism(c2, c2, {0, 2}), StructureError);
}

TEST_CASE("group laws are checked in order with the first witness") {
  // x + y = x: right identity only
  const FiniteAlgebra left_zero("L", 2, {0, 0, 1, 1}, {0, 1}, {}, Signature::groups());
  const auto v = validate_algebra(left_zero);
  CHECK_FALSE(v.holds);
  CHECK(v.failure == "group.identity");

  // C3 declared abelian passes; S3 declared abelian fails commutativity at (r, s)
  CHECK(validate_algebra(cyclic_group(3)->with_signature(Signature::abelian_groups())));
  const auto s3 = dihedral_group(3);
  const auto s3ab = s3->with_signature(Signature::abelian_groups());
  const auto w = validate_algebra(s3ab);
  CHECK(w.failure == "group.commutative");
  CHECK(w.witness == std::vector<Element>{1, 3});
}

TEST_CASE("non-associative tables are rejected") {
  // 0 1 2 / 1 0 ? : a Latin square with identity 0 that is not associative
  const std::vector<Element> add{0, 1, 2, 3, 4,  //
                                 1, 0, 3, 4, 2,  //
                                 2, 4, 0, 1, 3,  //
                                 3, 2, 4, 0, 1,  //
                                 4, 3, 1, 2, 0};
  const FiniteAlgebra loop("L5", 5, add, {0, 1, 2, 3, 4}, {}, Signature::groups());
  REQUIRE_FALSE(oracle::associative(loop));
  const auto v = validate_algebra(loop);
  CHECK(v.failure == "group.associative");
  REQUIRE(v.witness.size() == 3);
  const auto [x, y, z] = std::tuple{v.witness[0], v.witness[1], v.witness[2]};
  CHECK(loop.add(loop.add(x, y), z) != loop.add(x, loop.add(y, z)));
}

TEST_CASE("ring laws on Z/n") {
  for (std::size_t n : {2, 3, 4, 6}) {
    CHECK(validate_algebra(*z_mod(n, Signature::rings())));
    CHECK(validate_algebra(*z_mod(n, Signature::nonassociative_rings())));
  }
  // Squaring is not additive on Z/3: (1+1)^2 = 1 but 1 + 1 = 2.
  std::vector<Element> sq(9);
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) sq[a * 3 + b] = (a * a + b * b) % 3;
  const auto z3 = z_mod(3, Signature::rings());
  const FiniteAlgebra bad("Z3sq", 3, z3->add_table(), z3->neg_table(), {sq}, Signature::rings());
  CHECK(validate_algebra(bad).failure == "mul.left-distributive");
}

TEST_CASE("hom enumeration matches brute-force filtering") {
  const auto groups = groups_up_to_12();
  std::size_t pairs = 0;
  for (const auto& a : groups) {
    if (a->size() > 6) continue;
    for (const auto& b : groups) {
      if (b->size() > 6) continue;
      std::vector<std::vector<Element>> found;
      for (const auto& h : hom_enumerate(a, b)) found.push_back(h.map());
      CHECK_MESSAGE(found == oracle::homs(*a, *b), a->name() << " -> " << b->name());
      ++pairs;
    }
  }
  CHECK(pairs == 64);  // eight groups of order at most 6
}

TEST_CASE("hom enumeration with extra operations") {
  const auto r4 = z_mod(4, Signature::rings());
  const auto r2 = z_mod(2, Signature::rings());
  std::vector<std::vector<Element>> found;
  for (const auto& h : hom_enumerate(r4, r2)) found.push_back(h.map());
  CHECK(found == oracle::homs(*r4, *r2));
  CHECK(found.size() == 2);  // zero and reduction mod 2
}

TEST_CASE("fixed images and limits") {
  const auto c6 = cyclic_group(6);
  HomSearchOptions o;
  o.fixed.assign(6, kUnassigned);
  o.fixed[1] = 2;
  const auto hs = enumerate_homomorphisms(c6, c6, o);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].map() == std::vector<Element>{0, 2, 4, 0, 2, 4});
  o.fixed.clear();
  o.limit = 3;
  CHECK(enumerate_homomorphisms(c6, c6, o).size() == 3);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(cyclic_group(8)).size() == 4);
  CHECK(automorphism_group(product_group(cyclic_group(2), cyclic_group(2))).size() == 6);
  CHECK(automorphism_group(dihedral_group(3)).size() == 6);
  CHECK(automorphism_group(dihedral_group(4)).size() == 8);
  CHECK(automorphism_group(quaternion_group()).size() == 24);
  CHECK(automorphism_group(alternating_group_4()).size() == 24);
  const auto autos = automorphism_group(product_group(cyclic_group(2), cyclic_group(2)));
  CHECK(autos.front() == Homomorphism::identity(autos.front().source()));
  const auto aut = automorphism_group_algebra(autos);
  CHECK(validate_algebra(*aut));
  CHECK(oracle::isomorphic(*aut, *dihedral_group(3)));
}

TEST_CASE("generated subalgebras and reification") {
  const auto s3 = dihedral_group(3);
  const std::vector<Element> r{1};
  CHECK(generated_subalgebra(*s3, r) == std::vector<Element>{0, 1, 2});
  const std::vector<Element> rs{1, 3};
  CHECK(generated_subalgebra(*s3, rs).size() == 6);
  const std::vector<Element> a3{0, 1, 2};
  const auto sub = reify_subset(s3, a3, "A3");
  CHECK(sub.algebra->size() == 3);
  CHECK(check_homomorphism(sub.inclusion));
  CHECK(sub.algebra->label(1) == "r");
  const std::vector<Element> open{0, 1};
  CHECK_THROWS_AS(reify_subset(s3, open), StructureError);
}

TEST_CASE("pullbacks are the equalizing pairs") {
  const auto c6 = cyclic_group(6);
  const auto c3 = cyclic_group(3);
  const Homomorphism f(c6, c3, {0, 1, 2, 0, 1, 2});
  const auto pb = pullback(f, f);
  std::size_t expected = 0;
  for (Element a = 0; a < 6; ++a)
    for (Element c = 0; c < 6; ++c) expected += f(a) == f(c);
  CHECK(pb.object->size() == expected);
  CHECK(validate_algebra(*pb.object));
  CHECK(check_homomorphism(pb.proj1));
  CHECK(check_homomorphism(pb.proj2));
  for (Element e = 0; e < pb.object->size(); ++e) CHECK(f(pb.proj1(e)) == f(pb.proj2(e)));
  CHECK(pb.locate(1, 4).has_value());
  CHECK_FALSE(pb.locate(1, 2).has_value());

  const auto prod = direct_product(c3, cyclic_group(2));
  CHECK(prod.object->size() == 6);
  CHECK(oracle::isomorphic(*prod.object, *cyclic_group(6)));
}

TEST_CASE("homomorphism checks report the failing law") {
  const auto c4 = cyclic_group(4);
  const auto c2 = cyclic_group(2);
  CHECK(check_homomorphism(Homomorphism(c4, c2, {0, 1, 0, 1})));
  const auto bad = check_homomorphism(Homomorphism(c4, c2, {0, 1, 1, 0}));
  CHECK_FALSE(bad.holds);
  const auto compose_ok = compose(Homomorphism(c4, c2, {0, 1, 0, 1}), Homomorphism(c2, c4, {0, 2}));
  CHECK(compose_ok.map() == std::vector<Element>{0, 0});
}
