#pragma once

// Command dispatch and reports for the ptdescent tool.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptdescent/algebra.hpp"
#include "ptdescent/descent.hpp"

namespace ptdescent {

enum class Expectation { unspecified, none, some, unique, multiple };

struct CliOptions {
  std::size_t modulus = 2;
  std::optional<ExtendMethod> method;  // unset: both where both apply
  std::optional<std::size_t> bound;    // search budget (nodes and candidates)
  Expectation expect = Expectation::unspecified;
  bool machine = false;
  bool dump = false;
  std::string corpus;
};

struct ReportVerdict {
  std::string name;
  bool pass = true;
  bool inconclusive = false;
  std::string detail;
};

struct ReportWitness {
  std::string what;
  std::vector<Element> indices;
  std::vector<std::string> labels;
};

struct Report {
  std::string command;
  std::vector<ReportVerdict> verdicts;
  std::vector<ReportWitness> witnesses;
  std::vector<std::string> notes;
  std::vector<std::string> bound_notes;
  bool input_error = false;
  std::string error;
  std::string dump;  // documents, when --dump was given
  double elapsed_ms = 0;

  bool inconclusive() const;
  /// 0 pass, 1 a verdict failed, 2 inconclusive, 3 input error.
  int exit_code() const;
  std::string text() const;
  /// One JSON object: command, verdicts, witnesses, inconclusive, elapsed_ms
  /// (plus notes, bound_notes, exit_code, and error when present).
  std::string machine() const;
};

bool meets(Expectation expect, std::size_t count);
std::string to_string(Expectation expect);

/// Subcommands: validate, ua-check, descent-check, extend, surj-check,
/// sh-check, counterexample, identities. `args` are files, or the fixture
/// name for counterexample.
Report run(const std::string& subcommand, const std::vector<std::string>& args,
           const CliOptions& options);

/// Parses argv, runs, prints the report (or the dump) and returns the exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptdescent
