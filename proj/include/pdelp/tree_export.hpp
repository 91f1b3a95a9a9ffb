#pragma once

#include <string>
#include <vector>

#include "pdelp/dialectics.hpp"

namespace pdelp {

// Hierarchical record per node: conclusion, degree (exact decimal string),
// support clause ids, defeat kind of the incoming edge, U/D mark, children.
// The document carries the schema version "pdelp-tree/1".
std::string trees_to_json(const Literal& goal,
                          const std::vector<DialecticalTree>& trees,
                          const Program& program);

// Graphviz rendering: nodes labelled "conclusion [degree] U|D", edges
// labelled with the defeat kind.
std::string trees_to_dot(const Literal& goal,
                         const std::vector<DialecticalTree>& trees,
                         const Program& program);

std::string answer_to_json(const Answer& answer, const Program& program);

}  // namespace pdelp
