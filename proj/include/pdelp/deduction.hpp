#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pdelp/core.hpp"

namespace pdelp {

// One clause application: the conclusion follows from the rule's head with
// degree min(rule weight, premise degrees). Facts are the zero-premise case.
struct ProofTree {
  Literal conclusion;
  Weight degree;
  WeightedClause rule;
  std::vector<ProofTree> premises;  // one per body literal, in order

  std::size_t size() const;  // clause applications in the whole tree
};

struct ContradictionWitness {
  Atom atom;
  Weight degree_pos;
  Weight degree_neg;
};

// Least fixpoint of deg(L) = max over clauses (L <- B1..Bk, w) of
// min(w, deg(B1), ..., deg(Bk)). Literals without support are absent
// (degree 0). Terminates because degrees are drawn from the finite set of
// input weights and the iteration is monotone.
std::map<Literal, Weight> compute_degrees(const ClauseRefs& clauses);

Weight max_degree(const ClauseRefs& clauses, const Literal& goal);
Weight max_degree(const std::vector<WeightedClause>& clauses,
                  const Literal& goal);

// Absent iff max_degree is 0. Among proofs reaching the maximum degree,
// prefers fewer clause applications, then smaller clause ids at each node.
std::optional<ProofTree> best_proof(const ClauseRefs& clauses,
                                    const Literal& goal);
std::optional<ProofTree> best_proof(const std::vector<WeightedClause>& clauses,
                                    const Literal& goal);

// A witness atom derivable with positive degree under both signs, if any.
// Atoms are scanned in name order, so the reported witness is deterministic.
std::optional<ContradictionWitness> is_contradictory(const ClauseRefs& clauses);
std::optional<ContradictionWitness> is_contradictory(
    const std::vector<WeightedClause>& clauses);

// True iff a chain of clauses leads from a body occurrence of `on` to a
// clause whose head is `goal`, linking each head into the next body.
bool depends_on(const Literal& goal, const Literal& on,
                const std::vector<WeightedClause>& clauses);

}  // namespace pdelp
