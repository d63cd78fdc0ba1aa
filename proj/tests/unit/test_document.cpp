#include <fstream>

#include "doctest.h"
#include "ptdescent/catalog.hpp"
#include "ptdescent/document.hpp"
#include "ptdescent/fixtures.hpp"

using namespace ptdescent;

namespace {

std::vector<Document> sample_documents() {
  const auto fx = fixture_nonassoc(2);
  const auto s3 = dihedral_group(3);
  const auto r = congruence_from_normal(s3, {0, 1, 2});
  const auto ring = fixture_ring(2);
  const auto P = semidirect_product(fx.xi).point;
  return {encode(*fx.algebra),
          encode(*fx.acted),
          encode(*fx.cospan->left()),
          encode(*fx.cospan->right()),
          encode("i", fx.cospan->f()),
          encode("j", fx.cospan->g()),
          encode("K", "i", "j", *fx.cospan),
          encode("xi", fx.xi),
          encode(*P.total()),
          encode("P", P),
          encode(*s3),
          encode("A3", r),
          encode("compat", ring.identities, ring.ring->signature())};
}

}  // namespace

TEST_CASE("parse after emit is the identity on canonical documents") {
  const auto docs = sample_documents();
  const auto text = emit_documents(docs);
  const auto parsed = parse_documents(text);
  REQUIRE(parsed.size() == docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) CHECK(parsed[i] == docs[i]);
  CHECK(emit_documents(parsed) == text);
}

TEST_CASE("workspace decodes what was encoded") {
  const auto fx = fixture_nonassoc(2);
  const auto docs = sample_documents();
  Workspace ws;
  ws.add_all(docs);
  CHECK(*ws.algebra(fx.algebra->name()) == *fx.algebra);
  CHECK(ws.hom("i") == fx.cospan->f());
  CHECK(ws.action("xi") == fx.xi);
  CHECK(ws.congruence("A3").pairs().size() == 18);
  CHECK(ws.names("algebra").size() == 6);
  CHECK(ws.point("P").p() == semidirect_product(fx.xi).point.p());
  REQUIRE(ws.identities("compat").size() == 1);
  const auto ring = fixture_ring(2);
  Workspace rw;
  rw.add(encode(*ring.ring));
  rw.add(encode(*ring.integers));
  rw.add(encode("conjugation", ring.conjugation));
  rw.add(encode("scalar", ring.scalar));
  rw.add(encode("compat", ring.identities, ring.ring->signature()));
  CHECK(cross_identity_check(rw.action("conjugation"), rw.action("scalar"), rw.identities("compat")).size() ==
        cross_identity_check(ring.conjugation, ring.scalar, ring.identities).size());
}

TEST_CASE("terms print and parse") {
  const std::vector<Variable> vars{{"r", Sort::actor_a}, {"x", Sort::acted}, {"c", Sort::actor_c}};
  const auto sig = Signature::rings();
  const std::string text = "(rightC:mul (leftA:mul r (neg x)) c)";
  const auto t = parse_term(text, vars, sig);
  CHECK(emit_term(t, vars, sig) == text);
  CHECK(sort_of(t, vars) == Sort::acted);
  CHECK_THROWS_AS(parse_term("(add r", vars, sig), StructureError);
  CHECK_THROWS_AS(parse_term("(frob r s)", vars, sig), StructureError);
  CHECK_THROWS_AS(parse_term("q", vars, sig), StructureError);
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string text =
      "# two elements\n"
      "algebra C2 2   # header\n"
      "\n"
      "group general\n"
      "add:\n"
      "0 1\n"
      "1 0\n"
      "neg:\n"
      "0 1\n";
  Workspace ws;
  ws.add_all(parse_documents(text));
  CHECK(ws.algebra("C2")->size() == 2);
}

TEST_CASE("parse errors carry line and column") {
  auto error_of = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      Workspace ws;
      ws.add_all(parse_documents(text, "t"));
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_of("algebra C2 2\ngroup general\nadd:\n0 1\n1 x\n") == std::pair<std::size_t, std::size_t>{5, 3});
  CHECK(error_of("0 1\n").first == 1);
  CHECK(error_of("algebra C2 two\n").first == 1);
  // Table with a missing row
  CHECK(error_of("algebra C2 2\ngroup general\nadd:\n0 1\nneg:\n0 1\n").first > 0);
  // Unknown reference
  CHECK(error_of("hom h 2\nsource C2\ntarget C2\nmap:\n0 1\n").first == 1);
  // Out-of-range entry is a structural error reported at the document
  CHECK(error_of("algebra C2 2\ngroup general\nadd:\n0 1\n1 2\nneg:\n0 1\n").first > 0);
}

TEST_CASE("congruence documents are validated on load") {
  const std::string text =
      "algebra C3 3\ngroup general\nadd:\n0 1 2\n1 2 0\n2 0 1\nneg:\n0 2 1\n"
      "congruence R 4\nbase C3\npairs:\n0 0\n1 1\n2 2\n0 1\n";
  Workspace ws;
  CHECK_THROWS_AS(ws.add_all(parse_documents(text)), CongruenceError);
}

TEST_CASE("examples in the test data parse") {
  for (const char* name : {"s3_mod2.txt", "nonassoc2.txt"}) {
    const auto docs = parse_file(std::string(PTDESCENT_EXAMPLES_DIR) + "/" + name);
    Workspace ws;
    ws.add_all(docs);
    CHECK(ws.names("cospan").size() == 1);
  }
  CHECK_THROWS_AS(parse_file("/nonexistent/path"), ParseError);
}
