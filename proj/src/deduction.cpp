#include "pdelp/deduction.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace pdelp {

std::size_t ProofTree::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

std::map<Literal, Weight> compute_degrees(const ClauseRefs& clauses) {
  std::map<Literal, Weight> deg;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const WeightedClause* c : clauses) {
      Weight d = c->weight();
      bool derivable = true;
      for (const auto& b : c->clause().body()) {
        auto it = deg.find(b);
        if (it == deg.end()) {
          derivable = false;
          break;
        }
        d = std::min(d, it->second);
      }
      if (!derivable) continue;
      auto [it, inserted] = deg.emplace(c->clause().head(), d);
      if (!inserted && it->second < d) {
        it->second = d;
        changed = true;
      } else if (inserted) {
        changed = true;
      }
    }
  }
  return deg;
}

Weight max_degree(const ClauseRefs& clauses, const Literal& goal) {
  auto deg = compute_degrees(clauses);
  auto it = deg.find(goal);
  return it == deg.end() ? Weight::zero() : it->second;
}

Weight max_degree(const std::vector<WeightedClause>& clauses,
                  const Literal& goal) {
  return max_degree(make_refs(clauses), goal);
}

namespace {

constexpr std::size_t kInfSize = std::numeric_limits<std::size_t>::max();

// Minimal clause-application count among proofs that reach the literal's
// maximum degree.
std::map<Literal, std::size_t> optimal_sizes(
    const ClauseRefs& clauses, const std::map<Literal, Weight>& deg) {
  std::map<Literal, std::size_t> size;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const WeightedClause* c : clauses) {
      auto dit = deg.find(c->clause().head());
      if (dit == deg.end()) continue;
      Weight d = c->weight();
      std::size_t total = 1;
      bool usable = true;
      for (const auto& b : c->clause().body()) {
        auto bd = deg.find(b);
        auto bs = size.find(b);
        if (bd == deg.end() || bs == size.end()) {
          usable = false;
          break;
        }
        d = std::min(d, bd->second);
        total += bs->second;
      }
      if (!usable || d != dit->second) continue;
      auto [it, inserted] = size.emplace(c->clause().head(), total);
      if (!inserted && total < it->second) {
        it->second = total;
        changed = true;
      } else if (inserted) {
        changed = true;
      }
    }
  }
  return size;
}

ProofTree extract_proof(const ClauseRefs& clauses, const Literal& goal,
                        const std::map<Literal, Weight>& deg,
                        const std::map<Literal, std::size_t>& size) {
  const Weight target = deg.at(goal);
  const WeightedClause* best = nullptr;
  std::size_t best_size = kInfSize;
  for (const WeightedClause* c : clauses) {
    if (c->clause().head() != goal) continue;
    Weight d = c->weight();
    std::size_t total = 1;
    bool usable = true;
    for (const auto& b : c->clause().body()) {
      auto bd = deg.find(b);
      auto bs = size.find(b);
      if (bd == deg.end() || bs == size.end()) {
        usable = false;
        break;
      }
      d = std::min(d, bd->second);
      total += bs->second;
    }
    if (!usable || d != target) continue;
    if (total < best_size ||
        (total == best_size && best && c->id() < best->id())) {
      best = c;
      best_size = total;
    }
  }
  ProofTree node{goal, target, *best, {}};
  for (const auto& b : best->clause().body()) {
    node.premises.push_back(extract_proof(clauses, b, deg, size));
  }
  return node;
}

}  // namespace

std::optional<ProofTree> best_proof(const ClauseRefs& clauses,
                                    const Literal& goal) {
  auto deg = compute_degrees(clauses);
  if (!deg.contains(goal)) return std::nullopt;
  auto size = optimal_sizes(clauses, deg);
  return extract_proof(clauses, goal, deg, size);
}

std::optional<ProofTree> best_proof(const std::vector<WeightedClause>& clauses,
                                    const Literal& goal) {
  return best_proof(make_refs(clauses), goal);
}

std::optional<ContradictionWitness> is_contradictory(
    const ClauseRefs& clauses) {
  auto deg = compute_degrees(clauses);
  std::set<Atom> atoms;
  for (const WeightedClause* c : clauses) {
    atoms.insert(c->clause().head().atom);
    for (const auto& b : c->clause().body()) atoms.insert(b.atom);
  }
  for (const auto& a : atoms) {
    auto pos = deg.find(Literal{a, false});
    auto neg = deg.find(Literal{a, true});
    if (pos != deg.end() && neg != deg.end()) {
      return ContradictionWitness{a, pos->second, neg->second};
    }
  }
  return std::nullopt;
}

std::optional<ContradictionWitness> is_contradictory(
    const std::vector<WeightedClause>& clauses) {
  return is_contradictory(make_refs(clauses));
}

bool depends_on(const Literal& goal, const Literal& on,
                const std::vector<WeightedClause>& clauses) {
  std::vector<bool> reached(clauses.size(), false);
  std::queue<std::size_t> frontier;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& body = clauses[i].clause().body();
    if (std::find(body.begin(), body.end(), on) != body.end()) {
      reached[i] = true;
      frontier.push(i);
    }
  }
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop();
    if (clauses[i].clause().head() == goal) return true;
    for (std::size_t j = 0; j < clauses.size(); ++j) {
      if (reached[j]) continue;
      const auto& body = clauses[j].clause().body();
      if (std::find(body.begin(), body.end(), clauses[i].clause().head()) !=
          body.end()) {
        reached[j] = true;
        frontier.push(j);
      }
    }
  }
  return false;
}

}  // namespace pdelp
