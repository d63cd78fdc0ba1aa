#pragma once

// Line-oriented structure documents.
//
//   algebra S3 6                 header: kind name size
//   group general                attribute lines: key values...
//   labels 1 r r2 s rs r2s
//   add:                         table blocks: key args... ':' then rows
//   0 1 2 3 4 5
//   ...
//
// `#` starts a comment. A file holds any number of documents; each header
// line starts a new one. Documents refer to each other by name.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptdescent/actions.hpp"
#include "ptdescent/congruence.hpp"
#include "ptdescent/descent.hpp"
#include "ptdescent/points.hpp"

namespace ptdescent {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Block {
  std::string key;
  std::vector<std::string> args;
  bool table = false;  // written with a trailing ':' and followed by rows
  std::vector<std::vector<std::string>> rows;
  std::size_t line = 0;
};

struct Document {
  std::string kind;
  std::string name;
  std::size_t size = 0;
  std::vector<Block> blocks;
  std::size_t line = 0;
  std::string source;

  const Block* find(const std::string& key) const;
  const Block& require(const std::string& key) const;
  /// Blocks with `key`, in order.
  std::vector<const Block*> all(const std::string& key) const;

  bool operator==(const Document& other) const;
};

/// Recognized header keywords.
const std::vector<std::string>& document_kinds();

std::vector<Document> parse_documents(const std::string& text, const std::string& source = "<input>");
std::vector<Document> parse_file(const std::string& path);
std::string emit_document(const Document& doc);
std::string emit_documents(const std::vector<Document>& docs);

// ---------------------------------------------------------------------------
// Typed encoding. Emitters produce canonical documents.

Document encode(const FiniteAlgebra& alg);
/// Hom documents name their source and target algebras.
Document encode(const std::string& name, const Homomorphism& h);
Document encode(const std::string& name, const ActionDatum& xi);
Document encode(const std::string& name, const Point& point);
/// Cospan documents name the two hom documents.
Document encode(const std::string& name, const std::string& left_hom, const std::string& right_hom,
                const Cospan& cospan);
Document encode(const std::string& name, const Congruence& r);
/// Operation names in terms resolve against `signature`.
Document encode(const std::string& name, const std::vector<Identity>& identities,
                const Signature& signature);

/// Decodes documents in order, resolving references to earlier ones.
class Workspace {
 public:
  void add(const Document& doc);
  void add_all(const std::vector<Document>& docs);

  AlgebraRef algebra(const std::string& name) const;
  const Homomorphism& hom(const std::string& name) const;
  const ActionDatum& action(const std::string& name) const;
  const Point& point(const std::string& name) const;
  const CospanRef& cospan(const std::string& name) const;
  const Congruence& congruence(const std::string& name) const;
  const std::vector<Identity>& identities(const std::string& name) const;

  /// Names of decoded documents of one kind, in input order.
  std::vector<std::string> names(const std::string& kind) const;
  const std::vector<Document>& documents() const { return documents_; }

 private:
  std::vector<Document> documents_;
  std::map<std::string, AlgebraRef> algebras_;
  std::map<std::string, Homomorphism> homs_;
  std::map<std::string, ActionDatum> actions_;
  std::map<std::string, Point> points_;
  std::map<std::string, CospanRef> cospans_;
  std::map<std::string, Congruence> congruences_;
  std::map<std::string, std::vector<Identity>> identities_;
  std::map<std::string, std::vector<std::string>> order_;
};

/// Prefix terms: a variable name, or `(symbol term...)`. Throws
/// StructureError on malformed or ill-sorted terms.
Term parse_term(const std::string& text, const std::vector<Variable>& variables,
                const Signature& signature);
std::string emit_term(const Term& term, const std::vector<Variable>& variables,
                      const Signature& signature);

}  // namespace ptdescent
