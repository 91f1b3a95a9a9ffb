#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pdelp/arguments.hpp"
#include "pdelp/parser.hpp"

namespace pdelp::testing {

// The 16-clause engine-diagnosis program from tests/data/engine.pdelp,
// parsed and validated once. Clause ids follow source order (1..16).
const Program& engine_program();

std::string read_data_file(const std::string& name);

Literal lit(const std::string& atom, bool negated = false);

// Delta indices for the clauses with the given source ids.
SupportSet support_of(const Program& program, std::initializer_list<int> ids);

// Clauses drawn from pi + delta by source id.
std::vector<WeightedClause> clauses_by_ids(const Program& program,
                                           std::initializer_list<int> ids);

// Convenience builders for ad hoc clause sets.
WeightedClause fact(const std::string& head, const std::string& weight,
                    int id = 0);
WeightedClause rule(const std::string& head,
                    const std::vector<std::string>& body,
                    const std::string& weight, int id = 0);

// Literal text may carry a leading '~'.
Literal parse_lit(const std::string& text);

Weight w(const std::string& decimal);

// Finds the argument with the given support among a set; fails the current
// doctest assertion context when absent.
const Argument* find_argument(const std::vector<Argument>& args,
                              const SupportSet& support);

}  // namespace pdelp::testing
