#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pdelp/core.hpp"

namespace pdelp {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in codepoints
  int length = 1;
};

struct ParseError {
  SourceSpan span;
  std::string message;
};

struct ParseResult {
  std::vector<WeightedClause> pi;     // weight 1, source order, 1-based ids
  std::vector<WeightedClause> delta;  // weight < 1
  std::vector<ParseError> errors;
  bool ok() const { return errors.empty(); }
};

// Grammar:
//   program := { clause }
//   clause  := "(" literal [ "<-" body ] "," weight ")" "."
//   body    := literal { ("&" | ",") literal }
//   literal := [ "~" ] atom
//   weight  := decimal in (0, 1]
// "%" starts a comment running to end of line. The unicode glyphs for the
// tilde, arrow and conjunction are accepted as well. After a syntax error,
// parsing resumes at the next clause terminator so that several errors can be
// reported in one pass.
ParseResult parse_program(std::string_view text);

std::variant<Literal, ParseError> parse_query(std::string_view text);

struct SerializeOptions {
  bool unicode = false;  // emit the unicode glyphs instead of "~", "<-", "&"
};

// Canonical form, one clause per line, clauses in source order (falling back
// to structural order for clauses without ids). parse_program round-trips it.
std::string serialize_program(const Program& program, SerializeOptions = {});

}  // namespace pdelp
