#include "ptdescent/actions.hpp"

#include <optional>
#include <tuple>

namespace ptdescent {

namespace {

void check_action_table(const std::vector<Element>& table, std::size_t expected,
                        std::size_t bound, const std::string& what) {
  if (table.size() != expected) {
    throw StructureError("action " + what + " table: expected " +
                         std::to_string(expected) + " entries, got " +
                         std::to_string(table.size()));
  }
  for (Element e : table) {
    if (e >= bound) throw StructureError("action " + what + " table: entry out of range");
  }
}

std::string split_label(const FiniteAlgebra& acted, const FiniteAlgebra& actor,
                        SplitElement e) {
  if (e.actor == 0) return acted.label(e.acted);
  if (e.acted == 0) return actor.label(e.actor);
  return "(" + acted.label(e.acted) + "," + actor.label(e.actor) + ")";
}

}  // namespace

ActionDatum::ActionDatum(AlgebraRef actor, AlgebraRef acted, std::vector<Element> dot,
                         std::vector<std::vector<Element>> star_left,
                         std::vector<std::vector<Element>> star_right)
    : actor_(std::move(actor)),
      acted_(std::move(acted)),
      dot_(std::move(dot)),
      star_left_(std::move(star_left)),
      star_right_(std::move(star_right)) {
  if (!actor_->signature().same_shape(acted_->signature())) {
    throw StructureError("action: " + actor_->name() + " and " + acted_->name() +
                         " have different signatures");
  }
  const std::size_t cells = actor_->size() * acted_->size();
  const std::size_t ops = actor_->signature().operation_count();
  check_action_table(dot_, cells, acted_->size(), "dot");
  if (star_left_.size() != ops || star_right_.size() != ops) {
    throw StructureError("action: expected " + std::to_string(ops) +
                         " star tables on each side");
  }
  for (std::size_t k = 0; k < ops; ++k) {
    const auto& name = actor_->signature().operations()[k].name;
    check_action_table(star_left_[k], cells, acted_->size(), "left " + name);
    check_action_table(star_right_[k], cells, acted_->size(), "right " + name);
  }
}

ActionDatum ActionDatum::trivial(AlgebraRef actor, AlgebraRef acted) {
  const std::size_t nb = actor->size();
  const std::size_t nx = acted->size();
  std::vector<Element> dot(nb * nx);
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t x = 0; x < nx; ++x) dot[b * nx + x] = static_cast<Element>(x);
  const std::size_t ops = actor->signature().operation_count();
  std::vector<std::vector<Element>> zeros(ops, std::vector<Element>(nb * nx, 0));
  return ActionDatum(std::move(actor), std::move(acted), std::move(dot), zeros, zeros);
}

bool ActionDatum::operator==(const ActionDatum& other) const {
  return actor_->size() == other.actor_->size() &&
         acted_->size() == other.acted_->size() && dot_ == other.dot_ &&
         star_left_ == other.star_left_ && star_right_ == other.star_right_;
}

bool ActionDatum::operator<(const ActionDatum& other) const {
  return std::tie(dot_, star_left_, star_right_) <
         std::tie(other.dot_, other.star_left_, other.star_right_);
}

SemidirectProduct semidirect_product(const ActionDatum& xi) {
  return semidirect_product(xi, xi.acted()->signature());
}

SemidirectProduct semidirect_product(const ActionDatum& xi, const Signature& laws) {
  const auto& X = *xi.acted();
  const auto& B = *xi.actor();
  if (!laws.same_shape(X.signature())) {
    throw StructureError("semidirect_product: laws do not match the acted signature");
  }
  const auto nx = static_cast<Element>(X.size());
  const auto nb = static_cast<Element>(B.size());
  const std::size_t n = static_cast<std::size_t>(nx) * nb;
  auto at = [nb](Element x, Element b) { return x * nb + b; };

  std::vector<Element> add(n * n), neg(n);
  std::vector<std::vector<Element>> ops(laws.operation_count(), std::vector<Element>(n * n));
  std::vector<std::string> labels(n);
  for (Element x = 0; x < nx; ++x) {
    for (Element b = 0; b < nb; ++b) {
      const Element i = at(x, b);
      const Element nb_ = B.neg(b);
      neg[i] = at(xi.dot(nb_, X.neg(x)), nb_);
      labels[i] = split_label(X, B, {x, b});
      for (Element x2 = 0; x2 < nx; ++x2) {
        for (Element b2 = 0; b2 < nb; ++b2) {
          const Element j = at(x2, b2);
          add[i * n + j] = at(X.add(x, xi.dot(b, x2)), B.add(b, b2));
          for (std::size_t k = 0; k < ops.size(); ++k) {
            const Element first =
                X.add(X.add(X.op(k, x, x2), xi.left(k, b, x2)), xi.right(k, x, b2));
            ops[k][i * n + j] = at(first, B.op(k, b, b2));
          }
        }
      }
    }
  }
  auto total = share(FiniteAlgebra(X.name() + "_sd_" + B.name(), n, std::move(add),
                                   std::move(neg), std::move(ops), laws, std::move(labels)));
  std::vector<Element> p(n), s(nb), k(nx);
  for (Element x = 0; x < nx; ++x)
    for (Element b = 0; b < nb; ++b) p[at(x, b)] = b;
  for (Element b = 0; b < nb; ++b) s[b] = at(0, b);
  for (Element x = 0; x < nx; ++x) k[x] = at(x, 0);
  Point point(Homomorphism(total, xi.actor(), std::move(p)),
              Homomorphism(xi.actor(), total, std::move(s)));
  return {std::move(point), {xi.acted(), Homomorphism(xi.acted(), total, std::move(k))}};
}

ActionVerdict validate_action(const ActionDatum& xi) {
  return validate_action(xi, xi.acted()->signature());
}

ActionVerdict validate_action(const ActionDatum& xi, const Signature& laws) {
  if (!laws.same_shape(xi.actor()->signature())) {
    throw StructureError("validate_action: laws do not match the actor signature");
  }
  const auto& X = *xi.acted();
  const auto& B = *xi.actor();
  const auto nb = static_cast<Element>(B.size());
  auto translate = [&](std::string what, const std::vector<Element>& elements) {
    ActionVerdict out{false, std::move(what), {}, {}};
    for (Element e : elements) {
      SplitElement se{e / nb, e % nb};
      out.witness.push_back(se);
      out.labels.push_back(split_label(X, B, se));
    }
    return out;
  };

  SemidirectProduct sd = semidirect_product(xi, laws);
  if (auto v = validate_algebra(*sd.point.total()); !v) {
    return translate("semidirect." + v.failure, v.witness);
  }
  if (auto v = check_homomorphism(sd.point.p()); !v) {
    return translate("projection." + v.failure, v.witness);
  }
  if (auto v = check_homomorphism(sd.point.s()); !v) {
    ActionVerdict out{false, "section." + v.failure, {}, {}};
    for (Element b : v.witness) {
      out.witness.push_back({0, b});
      out.labels.push_back(B.label(b));
    }
    return out;
  }
  if (auto v = check_homomorphism(sd.kernel.embed); !v) {
    ActionVerdict out{false, "kernel." + v.failure, {}, {}};
    for (Element x : v.witness) {
      out.witness.push_back({x, 0});
      out.labels.push_back(X.label(x));
    }
    return out;
  }
  // The tables must be the action the extension induces on its kernel;
  // otherwise distinct tables could present the same extension.
  std::optional<ActionDatum> induced;
  try {
    induced = action_from_point(sd.point, sd.kernel);
  } catch (const InvalidPointError& e) {
    return {false, "derived.outside-kernel", {}, {e.what()}};
  }
  const ActionDatum& derived = *induced;
  auto mismatch = [&](const std::string& what, Element b, Element x) {
    ActionVerdict out{false, "derived." + what, {{0, b}, {x, 0}}, {}};
    out.labels = {B.label(b), X.label(x)};
    return out;
  };
  for (Element b = 0; b < nb; ++b) {
    for (Element x = 0; x < X.size(); ++x) {
      if (derived.dot(b, x) != xi.dot(b, x)) return mismatch("dot", b, x);
      for (std::size_t k = 0; k < laws.operation_count(); ++k) {
        const auto& name = laws.operations()[k].name;
        if (derived.left(k, b, x) != xi.left(k, b, x)) return mismatch("left." + name, b, x);
        if (derived.right(k, x, b) != xi.right(k, x, b)) return mismatch("right." + name, b, x);
      }
    }
  }
  return {};
}

ActionDatum restrict_action(const Homomorphism& f, const ActionDatum& xi) {
  if (f.target()->size() != xi.actor()->size()) {
    throw StructureError("restrict_action: " + f.target()->name() +
                         " is not the actor of the action");
  }
  const std::size_t na = f.source()->size();
  const std::size_t nx = xi.acted()->size();
  const std::size_t ops = xi.left_tables().size();
  std::vector<Element> dot(na * nx);
  std::vector<std::vector<Element>> left(ops, std::vector<Element>(na * nx));
  std::vector<std::vector<Element>> right(ops, std::vector<Element>(na * nx));
  for (Element a = 0; a < na; ++a) {
    for (Element x = 0; x < nx; ++x) {
      dot[a * nx + x] = xi.dot(f(a), x);
      for (std::size_t k = 0; k < ops; ++k) {
        left[k][a * nx + x] = xi.left(k, f(a), x);
        right[k][x * na + a] = xi.right(k, x, f(a));
      }
    }
  }
  return ActionDatum(f.source(), xi.acted(), std::move(dot), std::move(left),
                     std::move(right));
}

Verdict check_equivariance(const Homomorphism& u, const ActionDatum& on_source,
                           const ActionDatum& on_target) {
  if (on_source.actor()->size() != on_target.actor()->size()) {
    throw StructureError("check_equivariance: actions have different actors");
  }
  if (u.source()->size() != on_source.acted()->size() ||
      u.target()->size() != on_target.acted()->size()) {
    throw StructureError("check_equivariance: map does not match the acted objects");
  }
  const auto& ops = on_source.actor()->signature().operations();
  for (Element b = 0; b < on_source.actor()->size(); ++b) {
    for (Element x = 0; x < u.source()->size(); ++x) {
      if (u(on_source.dot(b, x)) != on_target.dot(b, u(x))) return Verdict::fail("dot", {b, x});
      for (std::size_t k = 0; k < ops.size(); ++k) {
        if (u(on_source.left(k, b, x)) != on_target.left(k, b, u(x)))
          return Verdict::fail("left." + ops[k].name, {b, x});
        if (u(on_source.right(k, x, b)) != on_target.right(k, u(x), b))
          return Verdict::fail("right." + ops[k].name, {b, x});
      }
    }
  }
  return Verdict::pass();
}

ActionDatum action_from_point(const Point& point, const KernelEmbedding& kernel) {
  const auto& E = *point.total();
  const auto& X = *kernel.kernel;
  const auto& B = *point.base();
  if (kernel.embed.target()->size() != E.size()) {
    throw StructureError("action_from_point: kernel does not embed in the point");
  }
  std::vector<Element> back(E.size(), kUnassigned);
  for (Element x = 0; x < X.size(); ++x) back[kernel.embed(x)] = x;
  auto pull = [&](Element e, const char* what, Element b, Element x) {
    if (back[e] == kUnassigned) {
      throw InvalidPointError(std::string("action_from_point: ") + what + " of " +
                              B.label(b) + " and " + X.label(x) + " leaves the kernel");
    }
    return back[e];
  };
  const std::size_t nb = B.size();
  const std::size_t nx = X.size();
  const std::size_t ops = E.signature().operation_count();
  std::vector<Element> dot(nb * nx);
  std::vector<std::vector<Element>> left(ops, std::vector<Element>(nb * nx));
  std::vector<std::vector<Element>> right(ops, std::vector<Element>(nb * nx));
  for (Element b = 0; b < nb; ++b) {
    const Element sb = point.s()(b);
    for (Element x = 0; x < nx; ++x) {
      const Element kx = kernel.embed(x);
      dot[b * nx + x] = pull(E.sub(E.add(sb, kx), sb), "conjugate", b, x);
      for (std::size_t k = 0; k < ops; ++k) {
        left[k][b * nx + x] = pull(E.op(k, sb, kx), "left product", b, x);
        right[k][x * nb + b] = pull(E.op(k, kx, sb), "right product", b, x);
      }
    }
  }
  return ActionDatum(point.base(), kernel.kernel, std::move(dot), std::move(left),
                     std::move(right));
}

ActionDatum action_from_point(const Point& point) {
  return action_from_point(point, kernel_of_point(point));
}

ActionDatum action_from_automorphisms(const AlgebraRef& actor, const AlgebraRef& acted,
                                      const std::vector<Homomorphism>& automorphisms,
                                      const Homomorphism& into_aut) {
  const std::size_t nb = actor->size();
  const std::size_t nx = acted->size();
  std::vector<Element> dot(nb * nx);
  for (Element b = 0; b < nb; ++b) {
    const auto& phi = automorphisms.at(into_aut(b));
    for (Element x = 0; x < nx; ++x) dot[b * nx + x] = phi(x);
  }
  const std::size_t ops = actor->signature().operation_count();
  std::vector<std::vector<Element>> zeros(ops, std::vector<Element>(nb * nx, 0));
  return ActionDatum(actor, acted, std::move(dot), zeros, zeros);
}

}  // namespace ptdescent
