// Evaluation of identities mixing two actions on one object.

#include <unordered_map>

#include "ptdescent/descent.hpp"

namespace ptdescent {

std::string to_string(Sort sort) {
  switch (sort) {
    case Sort::actor_a:
      return "actorA";
    case Sort::actor_c:
      return "actorC";
    case Sort::acted:
      return "acted";
  }
  return "?";
}

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw StructureError("ill-sorted term: " + what);
}

void expect_arity(const Term& t, std::size_t n, const char* symbol) {
  expect(t.args.size() == n, std::string(symbol) + " takes " + std::to_string(n) + " argument(s)");
}

struct Evaluator {
  const ActionDatum& a;
  const ActionDatum& c;
  const std::vector<Variable>& vars;
  const std::vector<Element>& values;
  std::unordered_map<const Term*, Sort> sorts{};

  void annotate(const Term& t) {
    sorts[&t] = sort_of(t, vars);
    for (const auto& arg : t.args) annotate(arg);
  }

  const FiniteAlgebra& carrier(Sort s) const {
    switch (s) {
      case Sort::actor_a:
        return *a.actor();
      case Sort::actor_c:
        return *c.actor();
      case Sort::acted:
        break;
    }
    return *a.acted();
  }
  const ActionDatum& action(Sort s) const { return s == Sort::actor_c ? c : a; }

  Element eval(const Term& t) const {
    switch (t.kind) {
      case Term::Kind::variable:
        return values[t.variable];
      case Term::Kind::add: {
        return carrier(sorts.at(&t)).add(eval(t.args[0]), eval(t.args[1]));
      }
      case Term::Kind::neg:
        return carrier(sorts.at(&t)).neg(eval(t.args[0]));
      case Term::Kind::op:
        return carrier(sorts.at(&t)).op(t.op, eval(t.args[0]), eval(t.args[1]));
      case Term::Kind::dot:
        return action(t.actor).dot(eval(t.args[0]), eval(t.args[1]));
      case Term::Kind::left:
        return action(t.actor).left(t.op, eval(t.args[0]), eval(t.args[1]));
      case Term::Kind::right:
        return action(t.actor).right(t.op, eval(t.args[0]), eval(t.args[1]));
    }
    return 0;
  }
};

/// Lexicographic successor, last variable fastest. False after the last.
bool advance(std::vector<Element>& values, const std::vector<std::size_t>& extent) {
  for (std::size_t pos = values.size(); pos-- > 0;) {
    if (++values[pos] < extent[pos]) return true;
    values[pos] = 0;
  }
  return false;
}

}  // namespace

Sort sort_of(const Term& term, const std::vector<Variable>& variables) {
  switch (term.kind) {
    case Term::Kind::variable:
      expect(term.variable < variables.size(), "unknown variable");
      return variables[term.variable].sort;
    case Term::Kind::add:
    case Term::Kind::op: {
      expect_arity(term, 2, term.kind == Term::Kind::add ? "add" : "op");
      const Sort s = sort_of(term.args[0], variables);
      expect(s == sort_of(term.args[1], variables), "arguments of different sorts");
      return s;
    }
    case Term::Kind::neg:
      expect_arity(term, 1, "neg");
      return sort_of(term.args[0], variables);
    case Term::Kind::dot:
    case Term::Kind::left:
      expect_arity(term, 2, "action");
      expect(term.actor != Sort::acted, "action symbol without an actor");
      expect(sort_of(term.args[0], variables) == term.actor, "actor argument has wrong sort");
      expect(sort_of(term.args[1], variables) == Sort::acted, "acted argument has wrong sort");
      return Sort::acted;
    case Term::Kind::right:
      expect_arity(term, 2, "action");
      expect(term.actor != Sort::acted, "action symbol without an actor");
      expect(sort_of(term.args[0], variables) == Sort::acted, "acted argument has wrong sort");
      expect(sort_of(term.args[1], variables) == term.actor, "actor argument has wrong sort");
      return Sort::acted;
  }
  return Sort::acted;
}

std::vector<IdentityViolation> cross_identity_check(const ActionDatum& xi_a,
                                                    const ActionDatum& xi_c,
                                                    const std::vector<Identity>& identities,
                                                    std::size_t limit) {
  if (!(*xi_a.acted() == *xi_c.acted())) {
    throw StructureError("cross_identity_check: actions act on different objects");
  }
  std::vector<IdentityViolation> out;
  for (const auto& id : identities) {
    const Sort s = sort_of(id.lhs, id.variables);
    if (s != sort_of(id.rhs, id.variables)) {
      throw StructureError("identity " + id.name + ": sides have different sorts");
    }
    std::vector<Element> values(id.variables.size(), 0);
    Evaluator ev{xi_a, xi_c, id.variables, values};
    ev.annotate(id.lhs);
    ev.annotate(id.rhs);
    std::vector<std::size_t> extent;
    for (const auto& v : id.variables) extent.push_back(ev.carrier(v.sort).size());

    std::size_t found = 0;
    while (found < limit) {
      const Element l = ev.eval(id.lhs);
      const Element r = ev.eval(id.rhs);
      if (l != r) {
        out.push_back({id.name, values, s, l, r});
        ++found;
      }
      if (!advance(values, extent)) break;
    }
  }
  return out;
}

}  // namespace ptdescent
