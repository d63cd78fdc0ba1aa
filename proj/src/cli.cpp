#include "ptdescent/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptdescent/catalog.hpp"
#include "ptdescent/corpus.hpp"
#include "ptdescent/document.hpp"
#include "ptdescent/fixtures.hpp"

namespace ptdescent {

// ---------------------------------------------------------------------------
// Report

bool Report::inconclusive() const {
  for (const auto& v : verdicts)
    if (v.inconclusive) return true;
  return false;
}

int Report::exit_code() const {
  if (input_error) return 3;
  for (const auto& v : verdicts)
    if (!v.pass && !v.inconclusive) return 1;
  if (inconclusive()) return 2;
  return 0;
}

std::string Report::text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  if (input_error) out << "error: " << error << "\n";
  for (const auto& v : verdicts) {
    out << (v.inconclusive ? "INCONCLUSIVE " : v.pass ? "PASS " : "FAIL ") << v.name;
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
  for (const auto& w : witnesses) {
    out << "witness " << w.what << ":";
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
      out << " " << w.indices[i];
      if (i < w.labels.size()) out << "=" << w.labels[i];
    }
    out << "\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  for (const auto& b : bound_notes) out << "bound: " << b << "\n";
  out << "inconclusive: " << (inconclusive() ? "yes" : "no") << "\n";
  out << "elapsed_ms: " << static_cast<long long>(elapsed_ms) << "\n";
  out << "exit: " << exit_code() << "\n";
  return out.str();
}

std::string Report::machine() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    j["verdicts"].push_back(
        {{"name", v.name}, {"pass", v.pass}, {"inconclusive", v.inconclusive}, {"detail", v.detail}});
  }
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : witnesses) {
    j["witnesses"].push_back({{"what", w.what}, {"indices", w.indices}, {"labels", w.labels}});
  }
  j["inconclusive"] = inconclusive();
  j["elapsed_ms"] = static_cast<long long>(elapsed_ms);
  j["notes"] = notes;
  j["bound_notes"] = bound_notes;
  j["exit_code"] = exit_code();
  if (input_error) j["error"] = error;
  return j.dump(2) + "\n";
}

bool meets(Expectation expect, std::size_t count) {
  switch (expect) {
    case Expectation::unspecified:
      return true;
    case Expectation::none:
      return count == 0;
    case Expectation::some:
      return count >= 1;
    case Expectation::unique:
      return count == 1;
    case Expectation::multiple:
      return count >= 2;
  }
  return false;
}

std::string to_string(Expectation expect) {
  switch (expect) {
    case Expectation::unspecified:
      return "unspecified";
    case Expectation::none:
      return "none";
    case Expectation::some:
      return "at least one";
    case Expectation::unique:
      return "exactly one";
    case Expectation::multiple:
      return "at least two";
  }
  return "?";
}

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string method_name(ExtendMethod m) { return m == ExtendMethod::oracle ? "oracle" : "propagate"; }

SearchBounds bounds_from(const CliOptions& o) {
  SearchBounds b;
  if (o.bound) {
    b.node_max = *o.bound;
    b.candidate_max = *o.bound;
  }
  return b;
}

std::vector<std::string> labels_of(const FiniteAlgebra& alg, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(alg.label(x));
  return out;
}

/// A count verdict under an expectation; with none given, `fallback` applies.
ReportVerdict count_verdict(const std::string& name, std::size_t count, Expectation expect,
                            Expectation fallback, const std::string& noun) {
  const Expectation e = expect == Expectation::unspecified ? fallback : expect;
  std::string detail = std::to_string(count) + " " + noun;
  if (e != Expectation::unspecified) detail += " (expected " + to_string(e) + ")";
  return {name, meets(e, count), false, detail};
}

void add_extension_verdict(Report& r, const std::string& name, const ExtensionResult& result,
                           Expectation expect, Expectation fallback) {
  if (!result.conclusive) {
    r.verdicts.push_back({name, false, true, "search bound reached"});
    r.bound_notes.push_back(name + ": " + result.bound_note);
    return;
  }
  r.verdicts.push_back(count_verdict(name, result.actions.size(), expect, fallback, "extension(s)"));
}

void add_action_witnesses(Report& r, const std::string& prefix,
                          const std::vector<ActionDatum>& actions) {
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const auto& xi = actions[i];
    std::vector<Element> cells = xi.dot_table();
    for (const auto& t : xi.left_tables()) cells.insert(cells.end(), t.begin(), t.end());
    for (const auto& t : xi.right_tables()) cells.insert(cells.end(), t.begin(), t.end());
    r.witnesses.push_back({prefix + " " + std::to_string(i) + " tables (dot, left, right)", cells,
                           labels_of(*xi.acted(), cells)});
  }
}

ReportWitness split_witness(const std::string& what, const ActionDatum& xi, const ActionVerdict& v) {
  ReportWitness w{what + " (acted, actor) pairs", {}, {}};
  for (const auto& e : v.witness) {
    w.indices.push_back(e.acted);
    w.indices.push_back(e.actor);
    w.labels.push_back(xi.acted()->label(e.acted));
    w.labels.push_back(xi.actor()->label(e.actor));
  }
  return w;
}

void add_action_verdict(Report& r, const std::string& name, const ActionDatum& xi,
                        const ActionVerdict& v) {
  r.verdicts.push_back({name, v.holds, false, v.holds ? "" : v.failure});
  if (!v.holds && !v.witness.empty()) r.witnesses.push_back(split_witness(name + " " + v.failure, xi, v));
}

void add_verdict(Report& r, const std::string& name, const Verdict& v, const FiniteAlgebra* alg) {
  r.verdicts.push_back({name, v.holds, false, v.holds ? "" : v.failure});
  if (!v.holds && !v.witness.empty()) {
    r.witnesses.push_back({name + " " + v.failure, v.witness,
                           alg ? labels_of(*alg, v.witness) : std::vector<std::string>{}});
  }
}

// ---------------------------------------------------------------------------
// Inputs

Workspace load(const std::vector<std::string>& files) {
  if (files.empty()) throw InputError("no input files");
  Workspace ws;
  for (const auto& f : files) ws.add_all(parse_file(f));
  return ws;
}

struct CospanActions {
  std::string cospan_name;
  CospanRef cospan;
  std::string a_name, c_name;
  std::optional<ActionDatum> a, c;
};

/// The first cospan with one action over each foot. An action over the base
/// stands in for both, restricted along the legs.
CospanActions cospan_and_actions(const Workspace& ws) {
  const auto cospans = ws.names("cospan");
  if (cospans.empty()) throw InputError("no cospan document");
  CospanActions out;
  out.cospan_name = cospans.front();
  out.cospan = ws.cospan(out.cospan_name);
  const auto& cs = *out.cospan;
  for (const auto& name : ws.names("action")) {
    const auto& xi = ws.action(name);
    if (!out.a && *xi.actor() == *cs.left()) {
      out.a = xi;
      out.a_name = name;
    } else if (!out.c && *xi.actor() == *cs.right()) {
      out.c = xi;
      out.c_name = name;
    }
  }
  if (!out.a && !out.c) {
    for (const auto& name : ws.names("action")) {
      const auto& xi = ws.action(name);
      if (*xi.actor() != *cs.base()) continue;
      out.a = restrict_action(cs.f(), xi);
      out.c = restrict_action(cs.g(), xi);
      out.a_name = out.c_name = name + " restricted";
      break;
    }
  }
  if (!out.a || !out.c) {
    throw InputError("need one action over each foot of cospan " + out.cospan_name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands

void cmd_validate(Report& r, const std::vector<std::string>& files) {
  if (files.empty()) throw InputError("no input files");
  for (const auto& f : files) {
    Workspace ws;
    for (const auto& doc : parse_file(f)) {
      const std::string name = doc.kind + " " + doc.name;
      try {
        ws.add(doc);
      } catch (const CongruenceError& e) {
        add_verdict(r, name, e.verdict(), nullptr);
        continue;
      }
      if (doc.kind == "algebra") {
        const auto alg = ws.algebra(doc.name);
        add_verdict(r, name, validate_algebra(*alg), alg.get());
      } else if (doc.kind == "hom") {
        const auto& h = ws.hom(doc.name);
        add_verdict(r, name, check_homomorphism(h), h.source().get());
      } else if (doc.kind == "action") {
        add_action_verdict(r, name, ws.action(doc.name), validate_action(ws.action(doc.name)));
      } else if (doc.kind == "point") {
        const auto& p = ws.point(doc.name);
        add_verdict(r, name, validate_point(p), nullptr);
      } else if (doc.kind == "cospan") {
        const auto& cs = ws.cospan(doc.name);
        const bool legs = check_homomorphism(cs->f()).holds && check_homomorphism(cs->g()).holds;
        r.verdicts.push_back({name, legs, false, legs ? "" : "a leg is not a homomorphism"});
        r.notes.push_back(name + (is_extremal_epi(*cs) ? " is" : " is not") +
                          " extremal epimorphic");
      } else {
        r.verdicts.push_back({name, true, false, ""});
      }
    }
  }
}

void cmd_ua_check(Report& r, const std::vector<std::string>& files, const CliOptions& o) {
  const ExtendMethod method = o.method.value_or(ExtendMethod::propagate);
  if (o.corpus == "groups") {
    const auto sweep = ua_sweep(12, 6, method, bounds_from(o));
    r.verdicts.push_back({"UA over groups of order <= 12 acting on groups of order <= 6",
                          sweep.violations == 0 && sweep.disagreements == 0,
                          sweep.inconclusive > 0 && sweep.violations == 0,
                          std::to_string(sweep.cospans) + " cospans, " +
                              std::to_string(sweep.instances) + " restriction pairs, " +
                              std::to_string(sweep.violations) + " violations"});
    for (const auto& d : sweep.details) r.notes.push_back(d);
    return;
  }
  if (!o.corpus.empty()) throw InputError("unknown corpus '" + o.corpus + "'");
  const auto ws = load(files);
  const auto in = cospan_and_actions(ws);
  const auto result = extend_action(*in.cospan, *in.a, *in.c, method, bounds_from(o));
  const std::string name = "UA on " + in.cospan_name + " (" + in.a_name + ", " + in.c_name + ")";
  if (!result.conclusive) {
    r.verdicts.push_back({name, false, true, "search bound reached"});
    r.bound_notes.push_back(result.bound_note);
    return;
  }
  r.verdicts.push_back({name, result.actions.size() <= 1, false,
                        std::to_string(result.actions.size()) + " extension(s) via " +
                            method_name(method)});
  if (o.expect != Expectation::unspecified) {
    r.verdicts.push_back(
        count_verdict("extension count", result.actions.size(), o.expect, o.expect, "extension(s)"));
  }
  if (!result.extremal_epi) r.notes.push_back(in.cospan_name + " is not extremal epimorphic");
}

void cmd_extend(Report& r, const std::vector<std::string>& files, const CliOptions& o) {
  const auto ws = load(files);
  const auto in = cospan_and_actions(ws);
  std::vector<ExtendMethod> methods;
  if (o.method) {
    methods.push_back(*o.method);
  } else {
    methods = {ExtendMethod::oracle, ExtendMethod::propagate};
  }
  std::optional<std::vector<ActionDatum>> first;
  for (auto m : methods) {
    const auto result = extend_action(*in.cospan, *in.a, *in.c, m, bounds_from(o));
    add_extension_verdict(r, "extensions via " + method_name(m), result, o.expect,
                          Expectation::unspecified);
    if (!result.conclusive) continue;
    if (first) {
      r.verdicts.push_back({"methods agree", *first == result.actions, false, ""});
    } else {
      first = result.actions;
      add_action_witnesses(r, "extension", result.actions);
    }
  }
}

void cmd_descent_check(Report& r, const std::vector<std::string>& files) {
  const auto ws = load(files);
  const auto cospans = ws.names("cospan");
  if (cospans.empty()) throw InputError("no cospan document");
  const auto& cs = ws.cospan(cospans.front());
  std::vector<std::string> points;
  for (const auto& name : ws.names("point")) {
    if (ws.point(name).base() == cs->base()) points.push_back(name);
  }
  if (points.empty()) throw InputError("no point over the base of " + cospans.front());
  for (const auto& name : points) {
    const auto& P = ws.point(name);
    if (auto v = validate_point(P); !v) throw InputError("point " + name + " is invalid: " + v.failure);
    const auto v = validate_descent_datum(phi(cs, P));
    r.verdicts.push_back({"descent datum of " + name, v.holds, false, v.holds ? "" : v.failure});
  }
  for (const auto& p : points)
    for (const auto& q : points) {
      const auto rep = check_fully_faithful(cs, ws.point(p), ws.point(q));
      r.verdicts.push_back({"fully faithful " + p + " -> " + q, rep.bijective(), false,
                            std::to_string(rep.point_morphisms) + " point morphisms, " +
                                std::to_string(rep.descent_morphisms) + " descent morphisms"});
    }
}

void cmd_surj_check(Report& r, const std::vector<std::string>& files, const CliOptions& o) {
  const auto ws = load(files);
  const auto in = cospan_and_actions(ws);
  const auto datum = datum_from_actions(in.cospan, *in.a, *in.c);
  const auto v = validate_descent_datum(datum);
  r.verdicts.push_back({"descent datum valid", v.holds, false, v.holds ? "" : v.failure});
  if (!v.holds) return;
  const auto found = essential_surjectivity_witness(in.cospan, datum, bounds_from(o));
  if (!found.conclusive) {
    r.verdicts.push_back({"datum is effective", false, true, "search bound reached"});
    r.bound_notes.push_back(found.bound_note);
    return;
  }
  r.verdicts.push_back({"datum is effective", found.point.has_value(), false,
                        std::to_string(found.candidates) + " candidate action(s) tried"});
}

void cmd_sh_check(Report& r, const std::vector<std::string>& files, const CliOptions& o) {
  if (o.corpus == "groups") {
    const auto sweep = sh_sweep(12);
    r.verdicts.push_back({"SH over groups of order <= 12", sweep.violations == 0, false,
                          std::to_string(sweep.pairs) + " pairs of normal subgroups, " +
                              std::to_string(sweep.cooperating) + " cooperating, " +
                              std::to_string(sweep.violations) + " violations"});
    for (const auto& d : sweep.details) r.notes.push_back(d);
    return;
  }
  if (!o.corpus.empty()) throw InputError("unknown corpus '" + o.corpus + "'");
  const auto ws = load(files);
  const auto names = ws.names("congruence");
  if (names.empty()) throw InputError("no congruence document");
  const auto& R = ws.congruence(names.front());
  const auto& S = ws.congruence(names.size() > 1 ? names[1] : names.front());
  const auto v = check_sh_instance(R, S);
  r.notes.push_back(std::string("normal subalgebras ") + (v.cooperates ? "cooperate" : "do not cooperate"));
  r.notes.push_back(std::string("connector ") + (v.connects ? "found" : "does not exist"));
  r.verdicts.push_back({"SH respected", v.sh_respected, false, ""});
}

void cmd_identities(Report& r, const std::vector<std::string>& files, const CliOptions& o) {
  const auto ws = load(files);
  const auto actions = ws.names("action");
  const auto sets = ws.names("identities");
  if (actions.size() < 2) throw InputError("need two action documents");
  if (sets.empty()) throw InputError("no identities document");
  const auto& a = ws.action(actions[0]);
  const auto& c = ws.action(actions[1]);
  std::vector<Identity> ids;
  for (const auto& s : sets) {
    const auto& more = ws.identities(s);
    ids.insert(ids.end(), more.begin(), more.end());
  }
  const auto violations = cross_identity_check(a, c, ids);
  r.verdicts.push_back(count_verdict("identities", violations.size(), o.expect, Expectation::none,
                                     "violation(s)"));
  for (const auto& v : violations) {
    std::vector<Element> idx = v.assignment;
    idx.push_back(v.lhs);
    idx.push_back(v.rhs);
    std::vector<std::string> labels;
    for (const auto& id : ids) {
      if (id.name != v.identity) continue;
      for (std::size_t i = 0; i < id.variables.size(); ++i) {
        const auto s = id.variables[i].sort;
        const auto& alg = s == Sort::actor_a ? *a.actor() : s == Sort::actor_c ? *c.actor() : *a.acted();
        labels.push_back(alg.label(v.assignment[i]));
      }
      break;
    }
    labels.push_back(a.acted()->label(v.lhs));
    labels.push_back(a.acted()->label(v.rhs));
    r.witnesses.push_back({v.identity + " (variables, lhs, rhs)", idx, labels});
  }
}

// ---------------------------------------------------------------------------
// Counterexamples

std::string dump_s3(const S3Fixture& fx) {
  return emit_documents({encode(*fx.s3), encode(*fx.c3), encode(*fx.c2), encode(*fx.acted),
                         encode("f", fx.cospan->f()), encode("g", fx.cospan->g()),
                         encode("K", "f", "g", *fx.cospan), encode("rho", fx.rho),
                         encode("trivial", fx.trivial)});
}

std::string dump_ring(const RingFixture& fx) {
  return emit_documents({encode(*fx.ring), encode(*fx.integers),
                         encode("conjugation", fx.conjugation), encode("scalar", fx.scalar),
                         encode("compat", fx.identities, fx.ring->signature())});
}

std::string dump_nonassoc(const NonassocFixture& fx) {
  return emit_documents({encode(*fx.algebra), encode(*fx.acted), encode(*fx.cospan->left()),
                         encode(*fx.cospan->right()), encode("i", fx.cospan->f()),
                         encode("j", fx.cospan->g()), encode("K", "i", "j", *fx.cospan),
                         encode("xi", fx.xi), encode("tau", fx.tau)});
}

void counterexample_s3(Report& r, const CliOptions& o) {
  const auto fx = fixture_s3(o.modulus);
  if (o.dump) {
    r.dump = dump_s3(fx);
    return;
  }
  add_action_verdict(r, "fixture rho is an action", fx.rho, validate_action(fx.rho));
  add_action_verdict(r, "fixture trivial is an action", fx.trivial, validate_action(fx.trivial));
  r.verdicts.push_back({"fixture cospan is extremal epimorphic", is_extremal_epi(*fx.cospan), false, ""});

  const auto c = s3_contradiction(fx);
  r.verdicts.push_back({"sr2 = rs in S3", c.same_element, false, ""});
  for (const auto* w : {&c.via_sr2, &c.via_rs}) {
    r.witnesses.push_back({"phi(" + w->word + ")(1,0,0)", {w->value}, {w->label}});
  }
  r.verdicts.push_back({"forced values differ", c.via_sr2.value != c.via_rs.value, false,
                        c.via_sr2.label + " vs " + c.via_rs.label});

  std::vector<ExtendMethod> methods;
  if (o.method) {
    methods.push_back(*o.method);
  } else {
    methods = {ExtendMethod::oracle, ExtendMethod::propagate};
  }
  for (auto m : methods) {
    add_extension_verdict(r, "extensions via " + method_name(m),
                          extend_action(*fx.cospan, fx.rho, fx.trivial, m, bounds_from(o)),
                          o.expect, Expectation::none);
  }
}

void counterexample_ring(Report& r, const CliOptions& o) {
  const auto fx = fixture_ring(o.modulus);
  if (o.dump) {
    r.dump = dump_ring(fx);
    return;
  }
  add_verdict(r, "fixture " + fx.ring->name() + " is a ring", validate_algebra(*fx.ring), fx.ring.get());
  add_verdict(r, "fixture " + fx.integers->name() + " is a ring", validate_algebra(*fx.integers),
              fx.integers.get());
  if (fx.ring->size() <= 27) {
    add_action_verdict(r, "fixture conjugation is an action", fx.conjugation, validate_action(fx.conjugation));
  } else {
    r.notes.push_back("conjugation action not revalidated at this modulus (semidirect product of order " +
                      std::to_string(fx.ring->size() * fx.ring->size()) + ")");
  }
  const auto scalar = validate_action(fx.scalar);
  r.notes.push_back("the Z/n action fails action validity under the ring laws (" +
                    (scalar.holds ? std::string("unexpectedly passes") : scalar.failure) +
                    "); extend_action is not run, the cross identity is checked instead");

  const auto violations = cross_identity_check(fx.conjugation, fx.scalar, fx.identities);
  const Element m = matrix_element(fx, 1, 1, 1);
  const Element lhs = matrix_element(fx, 1, 0, 1);
  const Element rhs = matrix_element(fx, 1, 1, 1);
  bool found = false;
  for (const auto& v : violations) {
    if (v.assignment == std::vector<Element>{m, m, 1}) {
      found = v.lhs == lhs && v.rhs == rhs;
      r.witnesses.push_back({"(rs).c vs r(s.c) at r = s = (1,0;1,1), c = 1",
                             {v.assignment[0], v.assignment[1], v.assignment[2], v.lhs, v.rhs},
                             {fx.ring->label(m), fx.ring->label(m), "1", fx.ring->label(v.lhs),
                              fx.ring->label(v.rhs)}});
    }
  }
  r.verdicts.push_back({"violation at r = s = (1,0;1,1), c = 1", found, false,
                        found ? fx.ring->label(lhs) + " vs " + fx.ring->label(rhs) : "not found"});
  r.verdicts.push_back(count_verdict("violations of (rs).c = r(s.c)", violations.size(), o.expect,
                                     Expectation::some, "violation(s)"));
  const auto group_part = cross_identity_check(fx.conjugation, fx.scalar, group_part_identities());
  r.verdicts.push_back({"group-part identities hold", group_part.empty(), false,
                        std::to_string(group_part.size()) + " violation(s)"});
}

void counterexample_nonassoc(Report& r, const CliOptions& o) {
  const auto fx = fixture_nonassoc(o.modulus);
  if (o.dump) {
    r.dump = dump_nonassoc(fx);
    return;
  }
  const auto& A = *fx.algebra;
  add_verdict(r, "fixture " + A.name() + " is a non-associative ring", validate_algebra(A), &A);
  add_action_verdict(r, "fixture xi is an action", fx.xi, validate_action(fx.xi));
  add_action_verdict(r, "fixture tau is an action", fx.tau, validate_action(fx.tau));
  r.verdicts.push_back({"fixture cospan is extremal epimorphic", is_extremal_epi(*fx.cospan), false, ""});
  const auto xa = restrict_action(fx.cospan->f(), fx.xi);
  const auto xc = restrict_action(fx.cospan->g(), fx.xi);
  r.verdicts.push_back({"xi and tau restrict alike",
                        xa == restrict_action(fx.cospan->f(), fx.tau) &&
                            xc == restrict_action(fx.cospan->g(), fx.tau),
                        false, ""});

  const ExtendMethod method = o.method.value_or(ExtendMethod::propagate);
  const auto result = extend_action(*fx.cospan, xa, xc, method, bounds_from(o));
  add_extension_verdict(r, "extensions via " + method_name(method), result, o.expect,
                        Expectation::multiple);
  if (result.conclusive) {
    const auto has = [&](const ActionDatum& d) {
      return std::find(result.actions.begin(), result.actions.end(), d) != result.actions.end();
    };
    r.verdicts.push_back({"xi and tau are both extensions", has(fx.xi) && has(fx.tau), false, ""});
    r.notes.push_back(std::string("UA ") + (result.actions.size() <= 1 ? "holds" : "fails") +
                      " on this cospan");
  }

  const auto assoc = validate_action(fx.xi, Signature::rings());
  const Element z = span_element(fx, 0, 0, 1);
  bool witness = false;
  if (!assoc.holds && assoc.witness.size() == 3) {
    const auto& w = assoc.witness;
    witness = w[0].acted == 0 && w[0].actor == z && w[1].acted == 0 && w[1].actor == z &&
              w[2].acted == 1 && w[2].actor == 0;
  }
  r.verdicts.push_back({"xi fails under associative laws at (z, z, 1)",
                        !assoc.holds && assoc.failure == "semidirect.mul.associative" && witness,
                        false, assoc.holds ? "passes" : assoc.failure});
  if (!assoc.holds) r.witnesses.push_back(split_witness("associativity", fx.xi, assoc));
}

void cmd_counterexample(Report& r, const std::vector<std::string>& args, const CliOptions& o) {
  if (args.size() != 1) throw InputError("counterexample takes one of: s3, ring, nonassoc");
  if (o.modulus < 2) throw InputError("--modulus must be at least 2");
  if (args[0] == "s3") {
    counterexample_s3(r, o);
  } else if (args[0] == "ring") {
    counterexample_ring(r, o);
  } else if (args[0] == "nonassoc") {
    counterexample_nonassoc(r, o);
  } else {
    throw InputError("unknown counterexample '" + args[0] + "'");
  }
}

std::string echo(const std::string& sub, const std::vector<std::string>& args, const CliOptions& o) {
  std::string out = sub;
  for (const auto& a : args) out += " " + a;
  if (sub == "counterexample") out += " --modulus " + std::to_string(o.modulus);
  if (o.method) out += " --method " + method_name(*o.method);
  if (o.bound) out += " --bound " + std::to_string(*o.bound);
  switch (o.expect) {
    case Expectation::none:
      out += " --expect-none";
      break;
    case Expectation::some:
      out += " --expect-extension";
      break;
    case Expectation::unique:
      out += " --expect-unique";
      break;
    case Expectation::multiple:
      out += " --expect-multiple";
      break;
    case Expectation::unspecified:
      break;
  }
  if (!o.corpus.empty()) out += " --corpus " + o.corpus;
  return out;
}

}  // namespace

Report run(const std::string& subcommand, const std::vector<std::string>& args,
           const CliOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = echo(subcommand, args, options);
  try {
    if (subcommand == "validate") {
      cmd_validate(r, args);
    } else if (subcommand == "ua-check") {
      cmd_ua_check(r, args, options);
    } else if (subcommand == "descent-check") {
      cmd_descent_check(r, args);
    } else if (subcommand == "extend") {
      cmd_extend(r, args, options);
    } else if (subcommand == "surj-check") {
      cmd_surj_check(r, args, options);
    } else if (subcommand == "sh-check") {
      cmd_sh_check(r, args, options);
    } else if (subcommand == "counterexample") {
      cmd_counterexample(r, args, options);
    } else if (subcommand == "identities") {
      cmd_identities(r, args, options);
    } else {
      throw InputError("unknown subcommand '" + subcommand + "'");
    }
  } catch (const InputError& e) {
    r.input_error = true;
    r.error = e.what();
  } catch (const ParseError& e) {
    r.input_error = true;
    r.error = e.what();
  } catch (const std::invalid_argument& e) {
    r.input_error = true;
    r.error = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Descent, action extension and centralization checks on finite algebras"};
  std::string subcommand;
  std::vector<std::string> args;
  CliOptions o;
  std::string method;
  std::string format = "text";
  bool expect_none = false, expect_some = false, expect_unique = false, expect_multiple = false;
  app.add_option("command", subcommand,
                 "validate | ua-check | descent-check | extend | surj-check | sh-check | "
                 "counterexample | identities")
      ->required();
  app.add_option("args", args, "input files, or s3 | ring | nonassoc for counterexample");
  app.add_option("--modulus", o.modulus, "modulus for the counterexample fixtures");
  app.add_option("--method", method, "oracle | propagate")->check(CLI::IsMember({"oracle", "propagate"}));
  app.add_option("--bound", o.bound, "search budget: propagation nodes and oracle candidates");
  app.add_flag("--expect-none", expect_none, "expect no results");
  app.add_flag("--expect-extension", expect_some, "expect at least one result");
  app.add_flag("--expect-unique", expect_unique, "expect exactly one result");
  app.add_flag("--expect-multiple", expect_multiple, "expect at least two results");
  app.add_option("--format", format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--dump", o.dump, "print the counterexample fixture as documents");
  app.add_option("--corpus", o.corpus, "built-in corpus for ua-check and sh-check: groups");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 3;
  }
  if (expect_none + expect_some + expect_unique + expect_multiple > 1) {
    err << "at most one --expect flag may be given\n";
    return 3;
  }
  if (expect_none) o.expect = Expectation::none;
  if (expect_some) o.expect = Expectation::some;
  if (expect_unique) o.expect = Expectation::unique;
  if (expect_multiple) o.expect = Expectation::multiple;
  if (!method.empty()) o.method = method == "oracle" ? ExtendMethod::oracle : ExtendMethod::propagate;
  o.machine = format == "machine";

  const Report r = run(subcommand, args, o);
  if (!r.dump.empty() && !r.input_error) {
    out << r.dump;
    return 0;
  }
  out << (o.machine ? r.machine() : r.text());
  return r.exit_code();
}

}  // namespace ptdescent
