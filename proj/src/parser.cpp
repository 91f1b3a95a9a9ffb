#include "pdelp/parser.hpp"

#include <algorithm>
#include <cctype>

namespace pdelp {

namespace {

enum class Tok {
  LParen,
  RParen,
  Tilde,
  Arrow,
  Amp,
  Comma,
  Dot,
  Ident,
  Number,
  End,
  Bad,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { next_ = scan(); }

  const Token& peek() const { return next_; }

  Token take() {
    Token t = next_;
    next_ = scan();
    return t;
  }

 private:
  bool starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  // Advances one codepoint; columns count codepoints, not bytes.
  void advance() {
    const unsigned char c = text_[pos_];
    std::size_t len = 1;
    if (c >= 0xF0) len = 4;
    else if (c >= 0xE0) len = 3;
    else if (c >= 0xC0) len = 2;
    pos_ = std::min(pos_ + len, text_.size());
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
  }

  Token scan() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
      if (pos_ < text_.size() && text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      break;
    }
    Token t;
    t.span = SourceSpan{line_, col_, 1};
    if (pos_ >= text_.size()) {
      t.kind = Tok::End;
      return t;
    }
    const char c = text_[pos_];
    auto single = [&](Tok kind) {
      t.kind = kind;
      t.text = std::string(1, c);
      advance();
      return t;
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '~': return single(Tok::Tilde);
      case '&': return single(Tok::Amp);
      case ',': return single(Tok::Comma);
      default: break;
    }
    if (starts_with("<-")) {
      t.kind = Tok::Arrow;
      t.text = "<-";
      advance();
      advance();
      return t;
    }
    if (starts_with("∼")) {  // unicode tilde operator
      t.kind = Tok::Tilde;
      t.text = "∼";
      advance();
      return t;
    }
    if (starts_with("←")) {  // leftwards arrow
      t.kind = Tok::Arrow;
      t.text = "←";
      advance();
      return t;
    }
    if (starts_with("∧")) {  // logical and
      t.kind = Tok::Amp;
      t.text = "∧";
      advance();
      return t;
    }
    if (c == '.') {
      if (pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(
                                         text_[pos_ + 1]))) {
        return scan_number(t);
      }
      return single(Tok::Dot);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return scan_number(t);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        t.text += text_[pos_];
        advance();
      }
      t.span.length = static_cast<int>(t.text.size());
      return t;
    }
    t.kind = Tok::Bad;
    t.text = std::string(1, c);
    advance();
    return t;
  }

  Token scan_number(Token t) {
    t.kind = Tok::Number;
    bool seen_dot = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.text += c;
        advance();
      } else if (c == '.' && !seen_dot && pos_ + 1 < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        seen_dot = true;
        t.text += c;
        advance();
      } else {
        break;
      }
    }
    t.span.length = static_cast<int>(t.text.size());
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token next_;
};

struct SyntaxError {
  ParseError error;
};

[[noreturn]] void fail(const Token& at, std::string message) {
  throw SyntaxError{ParseError{at.span, std::move(message)}};
}

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view text) : lex_(text) {}

  ParseResult run() {
    ParseResult result;
    int next_id = 1;
    while (lex_.peek().kind != Tok::End) {
      try {
        WeightedClause wc = parse_clause(next_id);
        ++next_id;
        if (wc.certain()) {
          result.pi.push_back(std::move(wc));
        } else {
          result.delta.push_back(std::move(wc));
        }
      } catch (const SyntaxError& e) {
        result.errors.push_back(e.error);
        synchronize();
      }
    }
    return result;
  }

  Literal parse_literal() {
    Token t = lex_.take();
    bool negated = false;
    if (t.kind == Tok::Tilde) {
      negated = true;
      t = lex_.take();
    }
    if (t.kind != Tok::Ident) {
      fail(t, "expected an atom");
    }
    if (t.text[0] < 'a' || t.text[0] > 'z') {
      fail(t, "atom must start with a lowercase letter");
    }
    return Literal{Atom(t.text), negated};
  }

 private:
  WeightedClause parse_clause(int id) {
    expect(Tok::LParen, "expected '('");
    Literal head = parse_literal();
    std::vector<Literal> body;
    Weight weight = Weight::one();

    Token sep = lex_.take();
    if (sep.kind == Tok::Comma) {
      weight = parse_weight();
    } else if (sep.kind == Tok::Arrow) {
      for (;;) {
        body.push_back(parse_literal());
        Token next = lex_.take();
        if (next.kind == Tok::Comma && lex_.peek().kind == Tok::Number) {
          weight = parse_weight();
          break;
        }
        if (next.kind == Tok::Amp && lex_.peek().kind == Tok::Number) {
          fail(lex_.peek(), "expected a literal after '&'");
        }
        if (next.kind != Tok::Comma && next.kind != Tok::Amp) {
          fail(next, "expected '&', ',' or the clause weight");
        }
      }
    } else {
      fail(sep, "expected ',' or '<-' after the clause head");
    }
    expect(Tok::RParen, "expected ')'");
    expect(Tok::Dot, "expected '.' after the clause");
    return WeightedClause(Clause(std::move(head), std::move(body)), weight,
                          id);
  }

  Weight parse_weight() {
    Token t = lex_.take();
    if (t.kind != Tok::Number) {
      fail(t, "expected the clause weight");
    }
    auto w = Weight::from_decimal(t.text);
    if (!w) {
      fail(t, "malformed weight '" + t.text + "'");
    }
    if (w->is_zero()) {
      fail(t, "weight 0 carries no information; weights must lie in (0, 1]");
    }
    return *w;
  }

  void expect(Tok kind, std::string message) {
    Token t = lex_.take();
    if (t.kind != kind) fail(t, std::move(message));
  }

  void synchronize() {
    while (lex_.peek().kind != Tok::End) {
      if (lex_.take().kind == Tok::Dot) return;
    }
  }

  Lexer lex_;
};

}  // namespace

ParseResult parse_program(std::string_view text) {
  return ProgramParser(text).run();
}

std::variant<Literal, ParseError> parse_query(std::string_view text) {
  try {
    Lexer lex(text);
    Token t = lex.take();
    bool negated = false;
    if (t.kind == Tok::Tilde) {
      negated = true;
      t = lex.take();
    }
    if (t.kind != Tok::Ident) fail(t, "expected an atom");
    if (t.text[0] < 'a' || t.text[0] > 'z') {
      fail(t, "atom must start with a lowercase letter");
    }
    Token end = lex.take();
    if (end.kind != Tok::End) fail(end, "unexpected input after the literal");
    return Literal{Atom(t.text), negated};
  } catch (const SyntaxError& e) {
    return e.error;
  }
}

std::string serialize_program(const Program& program, SerializeOptions opts) {
  std::vector<const WeightedClause*> clauses;
  for (const auto& c : program.pi()) clauses.push_back(&c);
  for (const auto& c : program.delta()) clauses.push_back(&c);
  std::stable_sort(clauses.begin(), clauses.end(),
                   [](const WeightedClause* a, const WeightedClause* b) {
                     if (a->id() > 0 && b->id() > 0) return a->id() < b->id();
                     if ((a->id() > 0) != (b->id() > 0)) return a->id() > 0;
                     return *a < *b;
                   });

  const std::string arrow = opts.unicode ? "←" : "<-";
  const std::string amp = opts.unicode ? "∧" : "&";
  std::string out;
  for (const WeightedClause* c : clauses) {
    out += "(" + c->clause().head().to_string(opts.unicode);
    if (!c->clause().is_fact()) {
      out += " " + arrow + " ";
      const auto& body = c->clause().body();
      for (std::size_t i = 0; i < body.size(); ++i) {
        if (i > 0) out += " " + amp + " ";
        out += body[i].to_string(opts.unicode);
      }
    }
    out += ", " + c->weight().to_decimal() + ").\n";
  }
  return out;
}

}  // namespace pdelp
