#include "pdelp/core.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include "pdelp/deduction.hpp"

namespace pdelp {

namespace {

bool valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!valid_atom_name(name_)) {
    throw std::invalid_argument("invalid atom name: '" + name_ + "'");
  }
}

std::string Literal::to_string(bool unicode) const {
  if (!negated) return atom.name();
  return (unicode ? std::string("∼") : std::string("~")) + atom.name();
}

Literal complement(const Literal& l) { return l.complement(); }

std::ostream& operator<<(std::ostream& os, const Literal& l) {
  return os << l.to_string();
}

Clause::Clause(Literal head, std::vector<Literal> body)
    : head_(std::move(head)) {
  for (auto& l : body) {
    if (std::find(body_.begin(), body_.end(), l) == body_.end()) {
      body_.push_back(std::move(l));
    }
  }
}

WeightedClause::WeightedClause(Clause clause, Weight weight, int id)
    : clause_(std::move(clause)), weight_(weight), id_(id) {
  if (weight_.is_zero()) {
    throw std::invalid_argument("clause weight must be positive");
  }
}

ClauseRefs make_refs(const std::vector<WeightedClause>& clauses) {
  ClauseRefs refs;
  refs.reserve(clauses.size());
  for (const auto& c : clauses) refs.push_back(&c);
  return refs;
}

Program::Program(std::vector<WeightedClause> pi,
                 std::vector<WeightedClause> delta)
    : pi_(std::move(pi)), delta_(std::move(delta)) {
  for (const auto& c : pi_) {
    if (!c.certain()) {
      throw std::invalid_argument("pi clause with weight below 1");
    }
  }
  for (const auto& c : delta_) {
    if (c.certain()) {
      throw std::invalid_argument("delta clause with weight 1");
    }
  }
}

ClauseRefs Program::refs() const {
  ClauseRefs refs = make_refs(pi_);
  for (const auto& c : delta_) refs.push_back(&c);
  return refs;
}

std::vector<Atom> Program::atoms() const {
  std::set<Atom> seen;
  auto visit = [&seen](const WeightedClause& wc) {
    seen.insert(wc.clause().head().atom);
    for (const auto& l : wc.clause().body()) seen.insert(l.atom);
  };
  for (const auto& c : pi_) visit(c);
  for (const auto& c : delta_) visit(c);
  return {seen.begin(), seen.end()};
}

std::vector<Literal> Program::literal_universe() const {
  std::vector<Literal> out;
  for (const auto& a : atoms()) {
    out.push_back(Literal{a, false});
    out.push_back(Literal{a, true});
  }
  return out;
}

std::string ContradictoryCertainKnowledge::message() const {
  return "contradictory certain knowledge: atom '" + atom.name() +
         "' (degrees " + degree_pos.to_decimal() + " and " +
         degree_neg.to_decimal() + ")";
}

std::string ForwardConstraintViolation::message() const {
  std::string rule = clause.clause().head().to_string() + " <- ";
  const auto& body = clause.clause().body();
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i > 0) rule += " & ";
    rule += body[i].to_string();
  }
  std::string where = clause.id() > 0
                          ? "clause " + std::to_string(clause.id())
                          : "clause (" + rule + ", " +
                                clause.weight().to_decimal() + ")";
  return "unsupported body literal '" + literal.to_string() + "' in " + where;
}

std::string issue_message(const ValidationIssue& issue) {
  return std::visit([](const auto& i) { return i.message(); }, issue);
}

ValidationResult validate_program(std::vector<WeightedClause> pi,
                                  std::vector<WeightedClause> delta) {
  ValidationResult result;

  if (auto witness = is_contradictory(make_refs(pi))) {
    result.issues.push_back(ContradictoryCertainKnowledge{
        witness->atom, witness->degree_pos, witness->degree_neg});
  }

  // Forward reasoning constraint: every body literal needs a clause with that
  // literal as head somewhere in pi + delta.
  std::set<Literal> heads;
  for (const auto& c : pi) heads.insert(c.clause().head());
  for (const auto& c : delta) heads.insert(c.clause().head());
  auto check_bodies = [&](const std::vector<WeightedClause>& clauses) {
    for (const auto& c : clauses) {
      for (const auto& l : c.clause().body()) {
        if (!heads.contains(l)) {
          result.issues.push_back(ForwardConstraintViolation{l, c});
        }
      }
    }
  };
  check_bodies(pi);
  check_bodies(delta);

  if (result.issues.empty()) {
    result.program.emplace(std::move(pi), std::move(delta));
  }
  return result;
}

}  // namespace pdelp
