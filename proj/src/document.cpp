#include "ptdescent/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ptdescent {

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

const std::vector<std::string>& document_kinds() {
  static const std::vector<std::string> kinds{"algebra", "hom",        "action",    "point",
                                              "cospan",  "congruence", "identities"};
  return kinds;
}

namespace {

bool is_kind(const std::string& word) {
  const auto& kinds = document_kinds();
  return std::find(kinds.begin(), kinds.end(), word) != kinds.end();
}

bool is_number(const std::string& word) {
  return !word.empty() && std::all_of(word.begin(), word.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

const Block* Document::find(const std::string& key) const {
  for (const auto& b : blocks)
    if (b.key == key) return &b;
  return nullptr;
}

const Block& Document::require(const std::string& key) const {
  if (const Block* b = find(key)) return *b;
  throw ParseError(source, line, 1, kind + " " + name + ": missing '" + key + "'");
}

std::vector<const Block*> Document::all(const std::string& key) const {
  std::vector<const Block*> out;
  for (const auto& b : blocks)
    if (b.key == key) out.push_back(&b);
  return out;
}

bool Document::operator==(const Document& other) const {
  if (kind != other.kind || name != other.name || size != other.size ||
      blocks.size() != other.blocks.size())
    return false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& a = blocks[i];
    const auto& b = other.blocks[i];
    if (a.key != b.key || a.args != b.args || a.table != b.table || a.rows != b.rows) return false;
  }
  return true;
}

std::vector<Document> parse_documents(const std::string& text, const std::string& source) {
  std::vector<Document> docs;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto tokens = split(line);
    if (tokens.empty()) continue;
    auto fail = [&](std::size_t column, const std::string& what) -> ParseError {
      return ParseError(source, number, column, what);
    };
    if (is_kind(tokens[0].text)) {
      if (tokens.size() != 3) throw fail(tokens[0].column, "header must be: kind name size");
      if (!is_number(tokens[2].text)) throw fail(tokens[2].column, "size must be a number");
      Document doc;
      doc.kind = tokens[0].text;
      doc.name = tokens[1].text;
      doc.size = std::stoul(tokens[2].text);
      doc.line = number;
      doc.source = source;
      docs.push_back(std::move(doc));
      continue;
    }
    if (docs.empty()) throw fail(tokens[0].column, "expected a document header");
    auto& doc = docs.back();
    if (is_number(tokens[0].text)) {
      if (doc.blocks.empty() || !doc.blocks.back().table) {
        throw fail(tokens[0].column, "row outside a table block");
      }
      std::vector<std::string> row;
      for (const auto& t : tokens) {
        if (!is_number(t.text)) throw fail(t.column, "expected a number, got '" + t.text + "'");
        row.push_back(t.text);
      }
      doc.blocks.back().rows.push_back(std::move(row));
      continue;
    }
    Block block;
    block.line = number;
    for (const auto& t : tokens) block.args.push_back(t.text);
    if (block.args.back().ends_with(':')) {
      block.table = true;
      block.args.back().pop_back();
      if (block.args.back().empty()) block.args.pop_back();
    }
    if (block.args.empty()) throw fail(tokens[0].column, "empty block key");
    block.key = block.args.front();
    block.args.erase(block.args.begin());
    doc.blocks.push_back(std::move(block));
  }
  return docs;
}

std::vector<Document> parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_documents(buffer.str(), path);
}

std::string emit_document(const Document& doc) {
  std::string out = doc.kind + " " + doc.name + " " + std::to_string(doc.size) + "\n";
  for (const auto& b : doc.blocks) {
    out += b.key;
    for (const auto& a : b.args) out += " " + a;
    if (b.table) out += ":";
    out += "\n";
    for (const auto& row : b.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? " " : "") + row[i];
      out += "\n";
    }
  }
  return out;
}

std::string emit_documents(const std::vector<Document>& docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) out += (i ? "\n" : "") + emit_document(docs[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Encoding

namespace {

Block attribute(std::string key, std::vector<std::string> args) {
  Block b;
  b.key = std::move(key);
  b.args = std::move(args);
  return b;
}

Block table(std::string key, std::vector<std::string> args, const std::vector<Element>& cells,
            std::size_t width) {
  Block b;
  b.key = std::move(key);
  b.args = std::move(args);
  b.table = true;
  for (std::size_t i = 0; i < cells.size(); i += width) {
    std::vector<std::string> row;
    for (std::size_t j = i; j < i + width && j < cells.size(); ++j) row.push_back(std::to_string(cells[j]));
    b.rows.push_back(std::move(row));
  }
  return b;
}

Document header(std::string kind, std::string name, std::size_t size) {
  Document d;
  d.kind = std::move(kind);
  d.name = std::move(name);
  d.size = size;
  return d;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? " " : "") + words[i];
  return out;
}

}  // namespace

Document encode(const FiniteAlgebra& alg) {
  auto d = header("algebra", alg.name(), alg.size());
  const auto& sig = alg.signature();
  d.blocks.push_back(attribute("group", {sig.group_commutative() ? "abelian" : "general"}));
  for (const auto& op : sig.operations()) {
    std::vector<std::string> args{op.name};
    if (op.laws.left_distributive) args.emplace_back("left-distributive");
    if (op.laws.right_distributive) args.emplace_back("right-distributive");
    if (op.laws.associative) args.emplace_back("associative");
    if (op.laws.commutative) args.emplace_back("commutative");
    d.blocks.push_back(attribute("operation", std::move(args)));
  }
  if (!alg.labels().empty()) d.blocks.push_back(attribute("labels", alg.labels()));
  d.blocks.push_back(table("add", {}, alg.add_table(), alg.size()));
  d.blocks.push_back(table("neg", {}, alg.neg_table(), alg.size()));
  for (std::size_t k = 0; k < sig.operation_count(); ++k) {
    d.blocks.push_back(table("op", {sig.operations()[k].name}, alg.op_tables()[k], alg.size()));
  }
  return d;
}

Document encode(const std::string& name, const Homomorphism& h) {
  auto d = header("hom", name, h.source()->size());
  d.blocks.push_back(attribute("source", {h.source()->name()}));
  d.blocks.push_back(attribute("target", {h.target()->name()}));
  d.blocks.push_back(table("map", {}, h.map(), std::max<std::size_t>(h.map().size(), 1)));
  return d;
}

Document encode(const std::string& name, const ActionDatum& xi) {
  const std::size_t nb = xi.actor()->size();
  const std::size_t nx = xi.acted()->size();
  auto d = header("action", name, nb);
  d.blocks.push_back(attribute("actor", {xi.actor()->name()}));
  d.blocks.push_back(attribute("acted", {xi.acted()->name()}));
  d.blocks.push_back(table("dot", {}, xi.dot_table(), nx));
  const auto& ops = xi.acted()->signature().operations();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    d.blocks.push_back(table("left", {ops[k].name}, xi.left_tables()[k], nx));
    d.blocks.push_back(table("right", {ops[k].name}, xi.right_tables()[k], nb));
  }
  return d;
}

Document encode(const std::string& name, const Point& point) {
  auto d = header("point", name, point.total()->size());
  d.blocks.push_back(attribute("total", {point.total()->name()}));
  d.blocks.push_back(attribute("base", {point.base()->name()}));
  d.blocks.push_back(table("p", {}, point.p().map(), point.p().map().size()));
  d.blocks.push_back(table("s", {}, point.s().map(), point.s().map().size()));
  return d;
}

Document encode(const std::string& name, const std::string& left_hom, const std::string& right_hom,
                const Cospan& cospan) {
  auto d = header("cospan", name, cospan.base()->size());
  d.blocks.push_back(attribute("left", {left_hom}));
  d.blocks.push_back(attribute("right", {right_hom}));
  return d;
}

Document encode(const std::string& name, const Congruence& r) {
  auto d = header("congruence", name, r.pairs().size());
  d.blocks.push_back(attribute("base", {r.base()->name()}));
  std::vector<Element> cells;
  for (const auto& [a, b] : r.pairs()) {
    cells.push_back(a);
    cells.push_back(b);
  }
  d.blocks.push_back(table("pairs", {}, cells, 2));
  return d;
}

// ---------------------------------------------------------------------------
// Terms

namespace {

std::vector<std::string> term_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      if (c == '(' || c == ')') out.emplace_back(1, c);
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct TermParser {
  const std::vector<std::string>& tokens;
  const std::vector<Variable>& variables;
  const Signature& signature;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw StructureError("term: " + what);
  }

  std::size_t op_index(const std::string& name) const {
    if (auto k = signature.find(name)) return *k;
    fail("unknown operation '" + name + "'");
  }

  Term parse() {
    if (pos >= tokens.size()) fail("unexpected end");
    const std::string tok = tokens[pos++];
    if (tok == ")") fail("unexpected ')'");
    if (tok != "(") {
      for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i].name == tok) {
          Term t;
          t.variable = i;
          return t;
        }
      }
      fail("unknown variable '" + tok + "'");
    }
    if (pos >= tokens.size()) fail("unexpected end");
    const std::string symbol = tokens[pos++];
    Term t;
    if (symbol == "add") {
      t.kind = Term::Kind::add;
    } else if (symbol == "neg") {
      t.kind = Term::Kind::neg;
    } else if (symbol == "dotA" || symbol == "dotC") {
      t.kind = Term::Kind::dot;
      t.actor = symbol.back() == 'A' ? Sort::actor_a : Sort::actor_c;
    } else if (auto colon = symbol.find(':'); colon != std::string::npos) {
      const std::string head = symbol.substr(0, colon);
      if (head == "leftA" || head == "leftC") {
        t.kind = Term::Kind::left;
      } else if (head == "rightA" || head == "rightC") {
        t.kind = Term::Kind::right;
      } else {
        fail("unknown symbol '" + symbol + "'");
      }
      t.actor = head.back() == 'A' ? Sort::actor_a : Sort::actor_c;
      t.op = op_index(symbol.substr(colon + 1));
    } else {
      t.kind = Term::Kind::op;
      t.op = op_index(symbol);
    }
    while (pos < tokens.size() && tokens[pos] != ")") t.args.push_back(parse());
    if (pos >= tokens.size()) fail("missing ')'");
    ++pos;
    return t;
  }
};

}  // namespace

Term parse_term(const std::string& text, const std::vector<Variable>& variables,
                const Signature& signature) {
  const auto tokens = term_tokens(text);
  TermParser p{tokens, variables, signature};
  Term t = p.parse();
  if (p.pos != tokens.size()) throw StructureError("term: trailing input in '" + text + "'");
  sort_of(t, variables);
  return t;
}

std::string emit_term(const Term& term, const std::vector<Variable>& variables,
                      const Signature& signature) {
  if (term.kind == Term::Kind::variable) return variables.at(term.variable).name;
  const std::string side = term.actor == Sort::actor_c ? "C" : "A";
  std::string symbol;
  switch (term.kind) {
    case Term::Kind::add:
      symbol = "add";
      break;
    case Term::Kind::neg:
      symbol = "neg";
      break;
    case Term::Kind::op:
      symbol = signature.operations().at(term.op).name;
      break;
    case Term::Kind::dot:
      symbol = "dot" + side;
      break;
    case Term::Kind::left:
      symbol = "left" + side + ":" + signature.operations().at(term.op).name;
      break;
    case Term::Kind::right:
      symbol = "right" + side + ":" + signature.operations().at(term.op).name;
      break;
    case Term::Kind::variable:
      break;
  }
  std::string out = "(" + symbol;
  for (const auto& a : term.args) out += " " + emit_term(a, variables, signature);
  return out + ")";
}

namespace {

std::optional<Sort> sort_named(const std::string& s) {
  if (s == "actorA") return Sort::actor_a;
  if (s == "actorC") return Sort::actor_c;
  if (s == "acted") return Sort::acted;
  return std::nullopt;
}

}  // namespace

Document encode(const std::string& name, const std::vector<Identity>& identities,
                const Signature& signature) {
  auto d = header("identities", name, identities.size());
  std::vector<std::string> ops;
  for (const auto& op : signature.operations()) ops.push_back(op.name);
  if (!ops.empty()) d.blocks.push_back(attribute("operations", ops));
  for (const auto& id : identities) {
    d.blocks.push_back(attribute("identity", split_words(id.name)));
    std::vector<std::string> vars;
    for (const auto& v : id.variables) vars.push_back(v.name + ":" + to_string(v.sort));
    d.blocks.push_back(attribute("vars", vars));
    d.blocks.push_back(attribute("lhs", split_words(emit_term(id.lhs, id.variables, signature))));
    d.blocks.push_back(attribute("rhs", split_words(emit_term(id.rhs, id.variables, signature))));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Decoding

namespace {

ParseError error_at(const Document& doc, const Block* b, const std::string& what) {
  return ParseError(doc.source, b ? b->line : doc.line, 1, doc.kind + " " + doc.name + ": " + what);
}

std::vector<Element> cells(const Document& doc, const Block& b, std::size_t rows,
                           std::size_t width) {
  if (b.rows.size() != rows) {
    throw error_at(doc, &b, "'" + b.key + "' needs " + std::to_string(rows) + " row(s), got " +
                                std::to_string(b.rows.size()));
  }
  std::vector<Element> out;
  for (const auto& row : b.rows) {
    if (row.size() != width) {
      throw error_at(doc, &b, "'" + b.key + "' rows need " + std::to_string(width) +
                                  " entries, got " + std::to_string(row.size()));
    }
    for (const auto& cell : row) {
      Element v = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw error_at(doc, &b, "bad number '" + cell + "'");
      }
      out.push_back(v);
    }
  }
  return out;
}

const std::string& single(const Document& doc, const std::string& key) {
  const Block& b = doc.require(key);
  if (b.args.size() != 1) throw error_at(doc, &b, "'" + key + "' takes one value");
  return b.args[0];
}

template <class Map>
const auto& lookup(const Map& map, const std::string& name, const char* what) {
  const auto it = map.find(name);
  if (it == map.end()) throw StructureError(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

}  // namespace

void Workspace::add(const Document& doc) {
  auto guard = [&](auto&& body) {
    try {
      body();
    } catch (const ParseError&) {
      throw;
    } catch (const CongruenceError&) {
      throw;
    } catch (const StructureError& e) {
      throw error_at(doc, nullptr, e.what());
    }
  };
  guard([&] {
    const std::size_t n = doc.size;
    if (doc.kind == "algebra") {
      const std::string group = single(doc, "group");
      if (group != "abelian" && group != "general") {
        throw error_at(doc, doc.find("group"), "group must be abelian or general");
      }
      std::vector<Operation> ops;
      for (const Block* b : doc.all("operation")) {
        if (b->args.empty()) throw error_at(doc, b, "operation needs a name");
        Operation op{b->args[0], {}};
        for (std::size_t i = 1; i < b->args.size(); ++i) {
          const auto& law = b->args[i];
          if (law == "left-distributive") op.laws.left_distributive = true;
          else if (law == "right-distributive") op.laws.right_distributive = true;
          else if (law == "associative") op.laws.associative = true;
          else if (law == "commutative") op.laws.commutative = true;
          else throw error_at(doc, b, "unknown law '" + law + "'");
        }
        ops.push_back(std::move(op));
      }
      Signature sig(ops, group == "abelian");
      std::vector<std::vector<Element>> tables;
      const auto op_blocks = doc.all("op");
      if (op_blocks.size() != ops.size()) {
        throw error_at(doc, nullptr, "one 'op' table per declared operation expected");
      }
      for (std::size_t k = 0; k < ops.size(); ++k) {
        if (op_blocks[k]->args != std::vector<std::string>{ops[k].name}) {
          throw error_at(doc, op_blocks[k], "expected table 'op " + ops[k].name + "'");
        }
        tables.push_back(cells(doc, *op_blocks[k], n, n));
      }
      std::vector<std::string> labels;
      if (const Block* b = doc.find("labels")) labels = b->args;
      algebras_[doc.name] = share(FiniteAlgebra(doc.name, n, cells(doc, doc.require("add"), n, n),
                                                cells(doc, doc.require("neg"), 1, n),
                                                std::move(tables), std::move(sig),
                                                std::move(labels)));
    } else if (doc.kind == "hom") {
      auto src = algebra(single(doc, "source"));
      auto tgt = algebra(single(doc, "target"));
      if (src->size() != n) throw error_at(doc, nullptr, "size differs from the source size");
      homs_.insert_or_assign(doc.name,
                             Homomorphism(src, tgt, cells(doc, doc.require("map"), 1, n)));
    } else if (doc.kind == "action") {
      auto actor = algebra(single(doc, "actor"));
      auto acted = algebra(single(doc, "acted"));
      const std::size_t nx = acted->size();
      if (actor->size() != n) throw error_at(doc, nullptr, "size differs from the actor size");
      std::vector<std::vector<Element>> left, right;
      for (const auto& op : acted->signature().operations()) {
        const Block* l = nullptr;
        const Block* r = nullptr;
        for (const Block* b : doc.all("left"))
          if (b->args == std::vector<std::string>{op.name}) l = b;
        for (const Block* b : doc.all("right"))
          if (b->args == std::vector<std::string>{op.name}) r = b;
        if (!l || !r) throw error_at(doc, nullptr, "missing star tables for '" + op.name + "'");
        left.push_back(cells(doc, *l, n, nx));
        right.push_back(cells(doc, *r, nx, n));
      }
      actions_.insert_or_assign(doc.name, ActionDatum(actor, acted, cells(doc, doc.require("dot"), n, nx),
                                                      std::move(left), std::move(right)));
    } else if (doc.kind == "point") {
      auto total = algebra(single(doc, "total"));
      auto base = algebra(single(doc, "base"));
      if (total->size() != n) throw error_at(doc, nullptr, "size differs from the total size");
      Homomorphism p(total, base, cells(doc, doc.require("p"), 1, n));
      Homomorphism s(base, total, cells(doc, doc.require("s"), 1, base->size()));
      points_.insert_or_assign(doc.name, Point(std::move(p), std::move(s)));
    } else if (doc.kind == "cospan") {
      const auto& f = hom(single(doc, "left"));
      const auto& g = hom(single(doc, "right"));
      if (f.target()->size() != n) throw error_at(doc, nullptr, "size differs from the base size");
      cospans_[doc.name] = make_cospan(f, g);
    } else if (doc.kind == "congruence") {
      auto base = algebra(single(doc, "base"));
      const auto flat = cells(doc, doc.require("pairs"), n, 2);
      std::vector<ElementPair> pairs;
      for (std::size_t i = 0; i < flat.size(); i += 2) {
        if (flat[i] >= base->size() || flat[i + 1] >= base->size()) {
          throw error_at(doc, doc.find("pairs"), "pair entry out of range");
        }
        pairs.emplace_back(flat[i], flat[i + 1]);
      }
      congruences_.insert_or_assign(doc.name, Congruence(base, std::move(pairs)));
    } else if (doc.kind == "identities") {
      std::vector<Operation> ops;
      if (const Block* b = doc.find("operations"))
        for (const auto& name : b->args) ops.push_back({name, {}});
      const Signature sig(ops, false);
      std::vector<Identity> ids;
      for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
        const Block& b = doc.blocks[i];
        if (b.key != "identity") continue;
        if (i + 3 >= doc.blocks.size()) {
          throw error_at(doc, &b, "identity needs 'vars', 'lhs' and 'rhs' lines");
        }
        const Block& vars = doc.blocks[i + 1];
        const Block& lhs = doc.blocks[i + 2];
        const Block& rhs = doc.blocks[i + 3];
        if (vars.key != "vars" || lhs.key != "lhs" || rhs.key != "rhs") {
          throw error_at(doc, &b, "identity needs 'vars', 'lhs' and 'rhs' lines");
        }
        Identity id;
        id.name = join(b.args);
        for (const auto& v : vars.args) {
          const auto colon = v.find(':');
          const auto sort = colon == std::string::npos ? std::nullopt : sort_named(v.substr(colon + 1));
          if (!sort) throw error_at(doc, &vars, "variable '" + v + "' needs name:sort");
          id.variables.push_back({v.substr(0, colon), *sort});
        }
        id.lhs = parse_term(join(lhs.args), id.variables, sig);
        id.rhs = parse_term(join(rhs.args), id.variables, sig);
        ids.push_back(std::move(id));
      }
      if (ids.size() != n) throw error_at(doc, nullptr, "size differs from the identity count");
      identities_[doc.name] = std::move(ids);
    } else {
      throw error_at(doc, nullptr, "unknown kind");
    }
  });
  documents_.push_back(doc);
  order_[doc.kind].push_back(doc.name);
}

void Workspace::add_all(const std::vector<Document>& docs) {
  for (const auto& d : docs) add(d);
}

AlgebraRef Workspace::algebra(const std::string& name) const {
  return lookup(algebras_, name, "algebra");
}
const Homomorphism& Workspace::hom(const std::string& name) const {
  return lookup(homs_, name, "hom");
}
const ActionDatum& Workspace::action(const std::string& name) const {
  return lookup(actions_, name, "action");
}
const Point& Workspace::point(const std::string& name) const {
  return lookup(points_, name, "point");
}
const CospanRef& Workspace::cospan(const std::string& name) const {
  return lookup(cospans_, name, "cospan");
}
const Congruence& Workspace::congruence(const std::string& name) const {
  return lookup(congruences_, name, "congruence");
}
const std::vector<Identity>& Workspace::identities(const std::string& name) const {
  return lookup(identities_, name, "identities");
}

std::vector<std::string> Workspace::names(const std::string& kind) const {
  const auto it = order_.find(kind);
  return it == order_.end() ? std::vector<std::string>{} : it->second;
}

}  // namespace ptdescent
