#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pdelp/weight.hpp"

namespace pdelp {

// Ground propositional atom: [a-z][A-Za-z0-9_]*.
class Atom {
 public:
  explicit Atom(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

struct Literal {
  Atom atom;
  bool negated = false;

  Literal complement() const { return Literal{atom, !negated}; }
  std::string to_string(bool unicode = false) const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

Literal complement(const Literal& l);
std::ostream& operator<<(std::ostream& os, const Literal& l);

// head <- body; an empty body makes the clause a fact. Duplicate body
// literals are collapsed at construction.
class Clause {
 public:
  explicit Clause(Literal head, std::vector<Literal> body = {});

  const Literal& head() const { return head_; }
  const std::vector<Literal>& body() const { return body_; }
  bool is_fact() const { return body_.empty(); }

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  Literal head_;
  std::vector<Literal> body_;
};

// Clause tagged with a necessity lower bound in (0, 1]. Weight 0 would carry
// no information and is rejected. `id` is the 1-based source ordinal when the
// clause came from a parsed file (0 for ad hoc clauses); it never takes part
// in equality.
class WeightedClause {
 public:
  WeightedClause(Clause clause, Weight weight, int id = 0);

  const Clause& clause() const { return clause_; }
  const Weight& weight() const { return weight_; }
  int id() const { return id_; }
  bool certain() const { return weight_.is_one(); }
  bool uncertain() const { return !weight_.is_one(); }

  friend bool operator==(const WeightedClause& a, const WeightedClause& b) {
    return a.clause_ == b.clause_ && a.weight_ == b.weight_;
  }
  friend auto operator<=>(const WeightedClause& a, const WeightedClause& b) {
    if (auto c = a.clause_ <=> b.clause_; c != 0) return c;
    return a.weight_ <=> b.weight_;
  }

 private:
  Clause clause_;
  Weight weight_;
  int id_;
};

using ClauseRefs = std::vector<const WeightedClause*>;

ClauseRefs make_refs(const std::vector<WeightedClause>& clauses);

// Partition of a clause set into certain knowledge (weight 1) and uncertain
// knowledge (weight < 1). Construction checks only the partition; use
// validate_program for the full structural checks.
class Program {
 public:
  Program(std::vector<WeightedClause> pi, std::vector<WeightedClause> delta);

  const std::vector<WeightedClause>& pi() const { return pi_; }
  const std::vector<WeightedClause>& delta() const { return delta_; }

  ClauseRefs pi_refs() const { return make_refs(pi_); }
  ClauseRefs refs() const;  // pi then delta

  std::vector<Atom> atoms() const;            // sorted, unique
  std::vector<Literal> literal_universe() const;  // atoms x {positive, negated}

 private:
  std::vector<WeightedClause> pi_;
  std::vector<WeightedClause> delta_;
};

struct ContradictoryCertainKnowledge {
  Atom atom;
  Weight degree_pos;
  Weight degree_neg;
  std::string message() const;
};

struct ForwardConstraintViolation {
  Literal literal;       // body literal with no supporting clause
  WeightedClause clause;  // the rule whose body mentions it
  std::string message() const;
};

using ValidationIssue =
    std::variant<ContradictoryCertainKnowledge, ForwardConstraintViolation>;

std::string issue_message(const ValidationIssue& issue);

struct ValidationResult {
  std::optional<Program> program;
  std::vector<ValidationIssue> issues;
  bool ok() const { return program.has_value(); }
};

// Accepts the clause sets iff (a) pi alone is non-contradictory and (b) every
// literal occurring in a rule body is the head of some clause in pi + delta.
ValidationResult validate_program(std::vector<WeightedClause> pi,
                                  std::vector<WeightedClause> delta);

}  // namespace pdelp
