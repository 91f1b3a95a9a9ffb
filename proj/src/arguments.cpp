#include "pdelp/arguments.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdelp {

bool support_subset(const SupportSet& inner, const SupportSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::vector<WeightedClause> Argument::support_clauses(
    const Program& program) const {
  std::vector<WeightedClause> out;
  out.reserve(support.size());
  for (int i : support) out.push_back(program.delta()[i]);
  return out;
}

std::vector<int> Argument::support_ids(const Program& program) const {
  std::vector<int> out;
  out.reserve(support.size());
  for (int i : support) out.push_back(program.delta()[i].id());
  return out;
}

bool same_argument(const Argument& a, const Argument& b) {
  return a.conclusion == b.conclusion && a.support == b.support;
}

bool is_subargument_of(const Argument& inner, const Argument& outer) {
  return support_subset(inner.support, outer.support);
}

bool argument_order(const Argument& a, const Argument& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  if (a.conclusion != b.conclusion) return a.conclusion < b.conclusion;
  return a.support < b.support;
}

ArgumentIndex::ArgumentIndex(const Program& program, ArgumentOptions opts)
    : program_(program), opts_(opts) {
  cap_ = opts_.max_support_size < 0 ? program_.delta().size()
                                    : static_cast<std::size_t>(
                                          opts_.max_support_size);
}

ClauseRefs ArgumentIndex::support_refs(const SupportSet& support) const {
  ClauseRefs refs = program_.pi_refs();
  for (int i : support) refs.push_back(&program_.delta()[i]);
  return refs;
}

Weight ArgumentIndex::support_degree(const SupportSet& support,
                                     const Literal& goal) const {
  return max_degree(support_refs(support), goal);
}

bool ArgumentIndex::support_consistent(const SupportSet& support) const {
  return !is_contradictory(support_refs(support)).has_value();
}

namespace {

SupportSet merged(const SupportSet& a, const SupportSet& b) {
  SupportSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace

void ArgumentIndex::ensure_supports(const Literal& goal) {
  if (candidates_.contains(goal)) return;

  // Literals reachable from the goal through clause bodies; already finalized
  // literals stay usable as inputs and are not recomputed.
  std::set<Literal> scope;
  std::vector<Literal> stack{goal};
  while (!stack.empty()) {
    Literal l = stack.back();
    stack.pop_back();
    if (scope.contains(l) || candidates_.contains(l)) continue;
    scope.insert(l);
    auto visit = [&](const std::vector<WeightedClause>& clauses) {
      for (const auto& c : clauses) {
        if (c.clause().head() != l) continue;
        for (const auto& b : c.clause().body()) stack.push_back(b);
      }
    };
    visit(program_.pi());
    visit(program_.delta());
  }

  std::map<Literal, std::set<SupportSet>> work;
  for (const auto& l : scope) work[l];

  // Finalized literals feed the fixpoint but are not recomputed.
  std::map<Literal, std::set<SupportSet>> finalized_view;
  static const std::set<SupportSet> kEmpty;
  auto supports_of = [&](const Literal& l) -> const std::set<SupportSet>* {
    if (auto it = work.find(l); it != work.end()) return &it->second;
    if (auto it = finalized_view.find(l); it != finalized_view.end()) {
      return &it->second;
    }
    if (auto it = candidates_.find(l); it != candidates_.end()) {
      auto [vit, _] = finalized_view.emplace(
          l, std::set<SupportSet>(it->second.begin(), it->second.end()));
      return &vit->second;
    }
    return &kEmpty;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    auto apply = [&](const WeightedClause& c, int delta_index) {
      const Literal& head = c.clause().head();
      auto wit = work.find(head);
      if (wit == work.end()) return;

      SupportSet base;
      if (delta_index >= 0) base.push_back(delta_index);

      // Cartesian product over the body literals' support sets.
      std::vector<SupportSet> acc{base};
      for (const auto& b : c.clause().body()) {
        const std::set<SupportSet>* options = supports_of(b);
        if (options->empty()) {
          acc.clear();
          break;
        }
        std::vector<SupportSet> next;
        for (const auto& partial : acc) {
          for (const auto& option : *options) {
            SupportSet u = merged(partial, option);
            if (u.size() <= cap_) next.push_back(std::move(u));
          }
        }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      for (auto& s : acc) {
        if (wit->second.insert(std::move(s)).second) changed = true;
      }
    };
    for (const auto& c : program_.pi()) apply(c, -1);
    for (std::size_t i = 0; i < program_.delta().size(); ++i) {
      apply(program_.delta()[i], static_cast<int>(i));
    }
  }

  for (const auto& l : scope) {
    candidates_.emplace(l, std::vector<SupportSet>(work[l].begin(),
                                                   work[l].end()));
  }
}

const std::vector<Argument>& ArgumentIndex::arguments_for(const Literal& goal) {
  if (auto it = arguments_.find(goal); it != arguments_.end()) {
    return it->second;
  }
  ensure_supports(goal);
  const auto& candidates = candidates_.at(goal);

  std::vector<Argument> args;
  for (const auto& s : candidates) {
    bool minimal = true;
    for (const auto& other : candidates) {
      if (other.size() < s.size() && support_subset(other, s)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (!support_consistent(s)) continue;
    ClauseRefs refs = support_refs(s);
    auto proof = best_proof(refs, goal);
    // A candidate support always derives its literal.
    Argument arg{s, goal, max_degree(refs, goal), std::move(*proof)};
    args.push_back(std::move(arg));
  }
  std::sort(args.begin(), args.end(), argument_order);
  return arguments_.emplace(goal, std::move(args)).first->second;
}

std::vector<Argument> ArgumentIndex::subarguments_of(const Argument& argument) {
  std::vector<Argument> out;
  for (const auto& l : program_.literal_universe()) {
    for (const auto& a : arguments_for(l)) {
      if (support_subset(a.support, argument.support)) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end(), argument_order);
  return out;
}

std::optional<Weight> is_argument(const Program& program,
                                  const SupportSet& support,
                                  const Literal& goal) {
  ArgumentIndex index(program);
  ClauseRefs refs = index.support_refs(support);
  const Weight degree = max_degree(refs, goal);
  if (degree.is_zero()) return std::nullopt;
  if (is_contradictory(refs)) return std::nullopt;
  // Minimality: dropping any single clause must lose the degree (monotony
  // makes single-clause removals sufficient).
  for (std::size_t k = 0; k < support.size(); ++k) {
    SupportSet smaller;
    smaller.reserve(support.size() - 1);
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (j != k) smaller.push_back(support[j]);
    }
    if (index.support_degree(smaller, goal) == degree) return std::nullopt;
  }
  return degree;
}

std::optional<Weight> is_argument(const Program& program,
                                  const std::vector<WeightedClause>& support,
                                  const Literal& goal) {
  SupportSet indices;
  std::vector<bool> used(program.delta().size(), false);
  for (const auto& wc : support) {
    bool found = false;
    for (std::size_t i = 0; i < program.delta().size(); ++i) {
      if (!used[i] && program.delta()[i] == wc) {
        used[i] = true;
        indices.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("support clause is not part of delta");
    }
  }
  std::sort(indices.begin(), indices.end());
  return is_argument(program, indices, goal);
}

std::vector<Argument> build_arguments(const Program& program,
                                      const Literal& goal,
                                      ArgumentOptions opts) {
  ArgumentIndex index(program, opts);
  return index.arguments_for(goal);
}

std::vector<Argument> subarguments(const Argument& argument,
                                   const Program& program) {
  ArgumentIndex index(program);
  return index.subarguments_of(argument);
}

}  // namespace pdelp
