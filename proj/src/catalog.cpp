#include "ptdescent/catalog.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "ptdescent/congruence.hpp"

namespace ptdescent {

AlgebraRef make_group(std::string name, std::size_t n,
                      const std::function<Element(Element, Element)>& mul,
                      std::vector<std::string> labels) {
  std::vector<Element> add(n * n), neg(n, kUnassigned);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      add[a * n + b] = mul(a, b);
      if (add[a * n + b] == 0) neg[a] = b;
    }
  if (std::count(neg.begin(), neg.end(), kUnassigned) != 0) {
    throw StructureError("make_group: " + name + " has an element without inverse");
  }
  FiniteAlgebra alg(std::move(name), n, std::move(add), std::move(neg), {}, Signature::groups(),
                    std::move(labels));
  if (auto v = validate_algebra(alg); !v) {
    throw StructureError("make_group: " + alg.name() + " fails " + v.failure);
  }
  return share(std::move(alg));
}

AlgebraRef cyclic_group(std::size_t n, const std::string& generator) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (generator.empty()) {
      labels.push_back(std::to_string(i));
    } else {
      labels.push_back(i == 0 ? "1" : i == 1 ? generator : generator + std::to_string(i));
    }
  }
  return make_group(
      "C" + std::to_string(n), n,
      [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
      std::move(labels));
}

AlgebraRef product_group(const AlgebraRef& left, const AlgebraRef& right) {
  return share(direct_product(left, right).object->renamed(left->name() + "x" + right->name()));
}

AlgebraRef dihedral_group(std::size_t n, std::string name) {
  const auto m = static_cast<Element>(n);
  std::vector<std::string> labels;
  for (Element j = 0; j < 2; ++j)
    for (Element i = 0; i < m; ++i) {
      std::string r = i == 0 ? "" : i == 1 ? "r" : "r" + std::to_string(i);
      std::string s = j == 0 ? "" : "s";
      labels.push_back(r.empty() && s.empty() ? "1" : r + s);
    }
  if (name.empty()) name = "D" + std::to_string(n);
  // r^i s^j · r^k s^l = r^(i + (-1)^j k) s^(j+l)
  return make_group(
      std::move(name), 2 * n,
      [m](Element a, Element b) {
        const Element i = a % m, j = a / m, k = b % m, l = b / m;
        const Element turn = j == 0 ? k : (m - k) % m;
        return static_cast<Element>((i + turn) % m + m * ((j + l) % 2));
      },
      std::move(labels));
}

AlgebraRef quaternion_group() {
  // Index 2u + sign for unit u in {1, i, j, k}.
  static constexpr std::array<std::array<int, 4>, 4> unit{{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<int, 4>, 4> sign{{
      {0, 0, 0, 0},
      {0, 1, 0, 1},
      {0, 1, 1, 0},
      {0, 0, 1, 1},
  }};
  std::vector<std::string> labels;
  for (const char* u : {"1", "i", "j", "k"}) {
    labels.emplace_back(u);
    labels.push_back(std::string("-") + u);
  }
  return make_group(
      "Q8", 8,
      [](Element a, Element b) {
        const int u = a / 2, v = b / 2;
        const int s = (a % 2 + b % 2 + sign[u][v]) % 2;
        return static_cast<Element>(2 * unit[u][v] + s);
      },
      std::move(labels));
}

AlgebraRef alternating_group_4() {
  std::vector<std::array<Element, 4>> perms;
  std::array<Element, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    labels.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]) +
                     std::to_string(q[3]));
  }
  // (a·b)(i) = a(b(i))
  return make_group(
      "A4", perms.size(),
      [perms](Element a, Element b) {
        std::array<Element, 4> c{};
        for (int i = 0; i < 4; ++i) c[i] = perms[a][perms[b][i]];
        return static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      },
      std::move(labels));
}

AlgebraRef dicyclic_group_12() {
  std::vector<std::string> labels;
  for (Element j = 0; j < 2; ++j)
    for (Element i = 0; i < 6; ++i) {
      std::string a = i == 0 ? "" : i == 1 ? "a" : "a" + std::to_string(i);
      std::string x = j == 0 ? "" : "x";
      labels.push_back(a.empty() && x.empty() ? "1" : a + x);
    }
  // a^i x^j · a^k x^l = a^(i + (-1)^j k + 3jl) x^(j+l mod 2)
  return make_group(
      "Dic3", 12,
      [](Element a, Element b) {
        const Element i = a % 6, j = a / 6, k = b % 6, l = b / 6;
        const Element turn = j == 0 ? k : (6 - k) % 6;
        return static_cast<Element>((i + turn + 3 * j * l) % 6 + 6 * ((j + l) % 2));
      },
      std::move(labels));
}

std::vector<AlgebraRef> groups_up_to_12() {
  auto C = [](std::size_t n) { return cyclic_group(n); };
  auto times = [](const AlgebraRef& a, const AlgebraRef& b) { return product_group(a, b); };
  return {
      C(1),
      C(2),
      C(3),
      C(4),
      times(C(2), C(2)),
      C(5),
      C(6),
      dihedral_group(3, "S3"),
      C(7),
      C(8),
      times(C(4), C(2)),
      times(times(C(2), C(2)), C(2)),
      dihedral_group(4),
      quaternion_group(),
      C(9),
      times(C(3), C(3)),
      C(10),
      dihedral_group(5),
      C(11),
      C(12),
      times(C(6), C(2)),
      alternating_group_4(),
      dihedral_group(6),
      dicyclic_group_12(),
  };
}

AlgebraRef elementary_power(std::size_t n, std::size_t k) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) size *= n;
  auto digits = [n, k](Element e) {
    std::vector<Element> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = e % n;
      e /= n;
    }
    return d;
  };
  auto index = [n](const std::vector<Element>& d) {
    Element e = 0;
    for (Element v : d) e = e * n + v;
    return e;
  };
  std::vector<Element> add(size * size), neg(size);
  std::vector<std::string> labels;
  for (Element a = 0; a < size; ++a) {
    auto da = digits(a);
    std::string label = "(";
    std::vector<Element> dn(k);
    for (std::size_t i = 0; i < k; ++i) {
      label += (i ? "," : "") + std::to_string(da[i]);
      dn[i] = (n - da[i]) % n;
    }
    labels.push_back(label + ")");
    neg[a] = index(dn);
    for (Element b = 0; b < size; ++b) {
      auto db = digits(b);
      for (std::size_t i = 0; i < k; ++i) db[i] = (da[i] + db[i]) % n;
      add[a * size + b] = index(db);
    }
  }
  std::string name = "Z" + std::to_string(n) + "^" + std::to_string(k);
  return share(FiniteAlgebra(std::move(name), size, std::move(add), std::move(neg), {},
                             Signature::groups(), std::move(labels)));
}

AlgebraRef integers_mod(std::size_t n, const Signature& signature) {
  if (signature.operation_count() != 1) {
    throw StructureError("integers_mod: signature must have exactly one operation");
  }
  std::vector<Element> add(n * n), mul(n * n), neg(n);
  std::vector<std::string> labels;
  for (Element a = 0; a < n; ++a) {
    neg[a] = static_cast<Element>((n - a) % n);
    labels.push_back(std::to_string(a));
    for (Element b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Element>((a + b) % n);
      mul[a * n + b] = static_cast<Element>((a * b) % n);
    }
  }
  return share(FiniteAlgebra("Z" + std::to_string(n), n, std::move(add), std::move(neg),
                             {std::move(mul)}, signature, std::move(labels)));
}

std::vector<std::vector<Element>> subalgebras(const FiniteAlgebra& alg) {
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> frontier{generated_subalgebra(alg, {})};
  seen.insert(frontier.front());
  // Every subalgebra is reached by adding one generator at a time.
  while (!frontier.empty()) {
    std::vector<std::vector<Element>> next;
    for (const auto& sub : frontier) {
      std::vector<bool> in(alg.size(), false);
      for (Element e : sub) in[e] = true;
      for (Element e = 0; e < alg.size(); ++e) {
        if (in[e]) continue;
        auto seed = sub;
        seed.push_back(e);
        auto bigger = generated_subalgebra(alg, seed);
        if (seen.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Element>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::vector<Element>> normal_subalgebras(const FiniteAlgebra& alg) {
  auto all = subalgebras(alg);
  std::erase_if(all, [&](const auto& sub) { return !check_normal(alg, sub); });
  return all;
}

}  // namespace ptdescent
