#include "ptdescent/fixtures.hpp"

#include <cctype>
#include <stdexcept>

#include "ptdescent/catalog.hpp"

namespace ptdescent {

namespace {

void require_modulus(std::size_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
}

Term var(std::size_t i) {
  Term t;
  t.variable = i;
  return t;
}

Term apply(Term::Kind kind, Sort actor, Term a, Term b) {
  Term t;
  t.kind = kind;
  t.actor = actor;
  t.args = {std::move(a), std::move(b)};
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// S3

S3Fixture fixture_s3(std::size_t n) {
  require_modulus(n);
  auto s3 = dihedral_group(3, "S3");
  auto c3 = cyclic_group(3, "r");
  auto c2 = cyclic_group(2, "s");
  auto acted = elementary_power(n, 3);
  auto cospan = make_cospan(Homomorphism(c3, s3, {0, 1, 2}), Homomorphism(c2, s3, {0, 3}));

  // (x,y,z) ↦ (y,z,x) on indices x·n² + y·n + z
  const auto nn = static_cast<Element>(n);
  auto shift = [nn](Element v) {
    const Element x = v / (nn * nn), y = (v / nn) % nn, z = v % nn;
    return y * nn * nn + z * nn + x;
  };
  std::vector<Element> dot(3 * acted->size());
  for (Element v = 0; v < acted->size(); ++v) {
    dot[v] = v;
    dot[acted->size() + v] = shift(v);
    dot[2 * acted->size() + v] = shift(shift(v));
  }
  ActionDatum rho(c3, acted, std::move(dot), {}, {});
  ActionDatum trivial = ActionDatum::trivial(c2, acted);
  return {n, s3, c3, c2, acted, cospan, std::move(rho), std::move(trivial)};
}

WordValue forced_value(const S3Fixture& fx, const std::string& word, Element vector) {
  // Letters with optional exponents, e.g. "sr2".
  std::vector<std::pair<char, unsigned>> letters;
  for (std::size_t i = 0; i < word.size();) {
    const char letter = word[i++];
    if (letter != 'r' && letter != 's') {
      throw std::invalid_argument("forced_value: unknown letter in " + word);
    }
    unsigned power = 0;
    bool digits = false;
    while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) {
      power = power * 10 + static_cast<unsigned>(word[i++] - '0');
      digits = true;
    }
    letters.emplace_back(letter, digits ? power : 1);
  }
  Element v = vector;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    for (unsigned k = 0; k < it->second; ++k) {
      v = it->first == 'r' ? fx.rho.dot(1, v) : fx.trivial.dot(1, v);
    }
  }
  return {word, vector, v, fx.acted->label(v)};
}

S3Contradiction s3_contradiction(const S3Fixture& fx) {
  const auto n = static_cast<Element>(fx.modulus);
  const Element e1 = n * n;  // (1,0,0)
  const auto& S = *fx.s3;
  const Element r = 1, s = 3;
  const Element sr2 = S.add(s, S.add(r, r));
  const Element rs = S.add(r, s);
  return {forced_value(fx, "sr2", e1), forced_value(fx, "rs", e1), sr2 == rs};
}

// ---------------------------------------------------------------------------
// Lower-triangular matrices

namespace {

struct Matrix {
  Element x, y, z;
};

}  // namespace

RingFixture fixture_ring(std::size_t n) {
  require_modulus(n);
  const auto m = static_cast<Element>(n);
  const std::size_t size = n * n * n;
  auto decode = [m](Element e) { return Matrix{e / (m * m), (e / m) % m, e % m}; };
  auto encode = [m](Matrix a) { return (a.x % m) * m * m + (a.y % m) * m + a.z % m; };

  std::vector<Element> add(size * size), neg(size), mul(size * size);
  std::vector<std::string> labels;
  for (Element e = 0; e < size; ++e) {
    const auto a = decode(e);
    labels.push_back("(" + std::to_string(a.x) + ",0;" + std::to_string(a.y) + "," +
                     std::to_string(a.z) + ")");
    neg[e] = encode({(m - a.x) % m, (m - a.y) % m, (m - a.z) % m});
    for (Element f = 0; f < size; ++f) {
      const auto b = decode(f);
      add[e * size + f] = encode({a.x + b.x, a.y + b.y, a.z + b.z});
      // (x,0;y,z)(x',0;y',z') = (xx', 0; yx' + zy', zz')
      mul[e * size + f] = encode({a.x * b.x, a.y * b.x + a.z * b.y, a.z * b.z});
    }
  }
  auto ring = share(FiniteAlgebra("R" + std::to_string(n), size, std::move(add), std::move(neg),
                                  {mul}, Signature::rings(), std::move(labels)));
  auto integers = integers_mod(n, Signature::rings());

  std::vector<Element> identity_dot(size * size);
  for (Element r = 0; r < size; ++r)
    for (Element e = 0; e < size; ++e) identity_dot[r * size + e] = e;
  // b*x = b·x and x*b = x·b, both read from the multiplication table.
  ActionDatum conjugation(ring, ring, identity_dot, {mul}, {mul});

  std::vector<Element> scalar_dot(n * size), scaled(n * size), scaled_right(size * n);
  for (Element k = 0; k < n; ++k)
    for (Element e = 0; e < size; ++e) {
      const auto a = decode(e);
      scalar_dot[k * size + e] = e;
      scaled[k * size + e] = encode({k * a.x, 0, k * a.z});
      scaled_right[e * n + k] = scaled[k * size + e];
    }
  ActionDatum scalar(integers, ring, std::move(scalar_dot), {std::move(scaled)},
                     {std::move(scaled_right)});

  // (r s)·c = r (s·c), with r in R_n, c in Z/n acting on the right.
  Identity compat;
  compat.name = "(rs).c = r(s.c)";
  compat.variables = {{"r", Sort::actor_a}, {"s", Sort::acted}, {"c", Sort::actor_c}};
  compat.lhs = apply(Term::Kind::right, Sort::actor_c,
                     apply(Term::Kind::left, Sort::actor_a, var(0), var(1)), var(2));
  compat.rhs = apply(Term::Kind::left, Sort::actor_a, var(0),
                     apply(Term::Kind::right, Sort::actor_c, var(1), var(2)));

  return {n, ring, integers, std::move(conjugation), std::move(scalar), {std::move(compat)}};
}

Element matrix_element(const RingFixture& fx, Element x, Element y, Element z) {
  const auto m = static_cast<Element>(fx.modulus);
  return (x % m) * m * m + (y % m) * m + z % m;
}

std::vector<Identity> group_part_identities() {
  Identity commute;
  commute.name = "b.(c.x) = c.(b.x)";
  commute.variables = {{"b", Sort::actor_a}, {"c", Sort::actor_c}, {"x", Sort::acted}};
  commute.lhs = apply(Term::Kind::dot, Sort::actor_a, var(0),
                      apply(Term::Kind::dot, Sort::actor_c, var(1), var(2)));
  commute.rhs = apply(Term::Kind::dot, Sort::actor_c, var(1),
                      apply(Term::Kind::dot, Sort::actor_a, var(0), var(2)));

  std::vector<Identity> out{commute};
  for (Sort actor : {Sort::actor_a, Sort::actor_c}) {
    Identity additive;
    additive.name = "dot" + std::string(actor == Sort::actor_a ? "A" : "C") + " additive";
    additive.variables = {{"b", actor}, {"x", Sort::acted}, {"y", Sort::acted}};
    Term sum;
    sum.kind = Term::Kind::add;
    sum.args = {var(1), var(2)};
    additive.lhs = apply(Term::Kind::dot, actor, var(0), sum);
    additive.rhs.kind = Term::Kind::add;
    additive.rhs.args = {apply(Term::Kind::dot, actor, var(0), var(1)),
                         apply(Term::Kind::dot, actor, var(0), var(2))};
    out.push_back(std::move(additive));
  }
  return out;
}

// ---------------------------------------------------------------------------
// span{x, y, z} with x·y = y·x = z

NonassocFixture fixture_nonassoc(std::size_t n) {
  require_modulus(n);
  const auto m = static_cast<Element>(n);
  const std::size_t size = n * n * n;
  auto encode = [m](Element a, Element b, Element c) {
    return (c % m) + m * (b % m) + m * m * (a % m);
  };

  std::vector<Element> add(size * size), neg(size), mul(size * size);
  std::vector<std::string> labels;
  for (Element e = 0; e < size; ++e) {
    const Element a = e / (m * m), b = (e / m) % m, c = e % m;
    std::string label;
    for (auto [coef, gen] : {std::pair{a, "x"}, std::pair{b, "y"}, std::pair{c, "z"}}) {
      if (coef == 0) continue;
      if (!label.empty()) label += "+";
      label += (coef == 1 ? "" : std::to_string(coef)) + gen;
    }
    labels.push_back(label.empty() ? "0" : label);
    neg[e] = encode(m - a, m - b, m - c);
    for (Element f = 0; f < size; ++f) {
      const Element a2 = f / (m * m), b2 = (f / m) % m, c2 = f % m;
      add[e * size + f] = encode(a + a2, b + b2, c + c2);
      mul[e * size + f] = encode(0, 0, a * b2 + b * a2);
    }
  }
  const auto laws = Signature::nonassociative_rings();
  auto algebra = share(FiniteAlgebra("A" + std::to_string(n), size, std::move(add),
                                     std::move(neg), {std::move(mul)}, laws, std::move(labels)));
  auto acted = integers_mod(n, laws);

  auto inclusion = [&](Element generator, const std::string& name) {
    const Element seed[] = {generator};
    return reify_subset(algebra, generated_subalgebra(*algebra, seed), name).inclusion;
  };
  auto cospan = make_cospan(inclusion(encode(1, 0, 0), "X"), inclusion(encode(0, 1, 0), "Y"));

  // e*k = k*e = c(e)·k
  std::vector<Element> dot(size * n), left(size * n), right(n * size);
  for (Element e = 0; e < size; ++e)
    for (Element k = 0; k < n; ++k) {
      dot[e * n + k] = k;
      left[e * n + k] = static_cast<Element>(((e % m) * k) % m);
      right[k * size + e] = left[e * n + k];
    }
  ActionDatum xi(algebra, acted, std::move(dot), {std::move(left)}, {std::move(right)});
  ActionDatum tau = ActionDatum::trivial(algebra, acted);
  return {n, algebra, acted, cospan, std::move(xi), std::move(tau)};
}

Element span_element(const NonassocFixture& fx, Element a, Element b, Element c) {
  const auto m = static_cast<Element>(fx.modulus);
  return (c % m) + m * (b % m) + m * m * (a % m);
}

}  // namespace ptdescent
