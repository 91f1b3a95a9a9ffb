#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pdelp/deduction.hpp"

namespace pdelp {

// Indices into Program::delta(), sorted ascending.
using SupportSet = std::vector<int>;

bool support_subset(const SupportSet& inner, const SupportSet& outer);

// Minimal non-contradictory uncertain support for a conclusion:
//   (1) pi + support derives (conclusion, degree), degree being the maximum,
//   (2) pi + support is non-contradictory,
//   (3) no proper subset of the support derives the conclusion at `degree`.
struct Argument {
  SupportSet support;
  Literal conclusion;
  Weight degree;
  ProofTree derivation;  // over pi + support

  std::vector<WeightedClause> support_clauses(const Program& program) const;
  std::vector<int> support_ids(const Program& program) const;
};

bool same_argument(const Argument& a, const Argument& b);
bool is_subargument_of(const Argument& inner, const Argument& outer);

// Deterministic display/processing order: stronger degree first, then
// conclusion, then support.
bool argument_order(const Argument& a, const Argument& b);

struct ArgumentOptions {
  // Upper bound on support size during enumeration; -1 means |delta|.
  int max_support_size = -1;
};

// Per-program enumeration engine. Candidate supports are the uncertain
// clause sets of derivation trees for each literal, computed bottom-up as a
// fixpoint; an argument is an inclusion-minimal candidate whose union with pi
// stays non-contradictory. Memoizes per-literal results; intended to be used
// by a single query evaluation at a time.
class ArgumentIndex {
 public:
  explicit ArgumentIndex(const Program& program, ArgumentOptions opts = {});

  const Program& program() const { return program_; }

  const std::vector<Argument>& arguments_for(const Literal& goal);

  // All arguments whose support is contained in the given argument's support
  // (includes the argument itself and every empty-support argument).
  std::vector<Argument> subarguments_of(const Argument& argument);

  // max_degree / contradiction over pi + the given delta subset.
  Weight support_degree(const SupportSet& support, const Literal& goal) const;
  bool support_consistent(const SupportSet& support) const;
  ClauseRefs support_refs(const SupportSet& support) const;

 private:
  void ensure_supports(const Literal& goal);

  const Program& program_;
  ArgumentOptions opts_;
  std::size_t cap_;
  std::map<Literal, std::vector<SupportSet>> candidates_;  // finalized
  std::map<Literal, std::vector<Argument>> arguments_;
};

// Checks the three argument conditions for an explicit support; returns the
// degree when they hold. Implemented directly (max degree, contradiction,
// leave-one-out minimality) rather than through the enumeration engine.
std::optional<Weight> is_argument(const Program& program,
                                  const std::vector<WeightedClause>& support,
                                  const Literal& goal);
std::optional<Weight> is_argument(const Program& program,
                                  const SupportSet& support,
                                  const Literal& goal);

std::vector<Argument> build_arguments(const Program& program,
                                      const Literal& goal,
                                      ArgumentOptions opts = {});

std::vector<Argument> subarguments(const Argument& argument,
                                   const Program& program);

}  // namespace pdelp
