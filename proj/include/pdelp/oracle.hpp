#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "pdelp/arguments.hpp"

namespace pdelp::oracle {

// Brute-force reference implementations used by the test suite. They share
// only the domain types with the engine: degrees come from enumerating
// derivation steps round by round, and arguments from sweeping the power set
// of the uncertain clauses.

// Every (literal, degree) pair reachable by chaining clause applications,
// closed under at most |clauses| * |atoms| rounds.
std::map<Literal, std::set<Weight>> derivable_degrees(const ClauseRefs& clauses);

// Maximum derivable degree for the goal; 0 when unsupported.
// Rejects instances with more than 20 clauses.
Weight oracle_max_degree(const std::vector<WeightedClause>& clauses,
                         const Literal& goal);
Weight oracle_max_degree(const ClauseRefs& clauses, const Literal& goal);

// Sweeps every subset of delta and keeps those meeting the three argument
// conditions, paired with their degree. Rejects |delta| > 12.
std::vector<std::pair<SupportSet, Weight>> oracle_arguments(
    const Program& program, const Literal& goal);

}  // namespace pdelp::oracle
