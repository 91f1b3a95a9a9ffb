#include "pdelp/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdelp::oracle {

namespace {

constexpr std::size_t kMaxClauses = 20;
constexpr std::size_t kMaxDelta = 12;

std::set<Atom> atoms_of(const ClauseRefs& clauses) {
  std::set<Atom> atoms;
  for (const WeightedClause* c : clauses) {
    atoms.insert(c->clause().head().atom);
    for (const auto& b : c->clause().body()) atoms.insert(b.atom);
  }
  return atoms;
}

bool closure_contradictory(const std::map<Literal, std::set<Weight>>& degrees) {
  for (const auto& [lit, ds] : degrees) {
    if (lit.negated || ds.empty()) continue;
    auto neg = degrees.find(lit.complement());
    if (neg != degrees.end() && !neg->second.empty()) return true;
  }
  return false;
}

}  // namespace

std::map<Literal, std::set<Weight>> derivable_degrees(
    const ClauseRefs& clauses) {
  std::map<Literal, std::set<Weight>> derived;
  const std::size_t rounds =
      std::max<std::size_t>(1, clauses.size() * atoms_of(clauses).size());

  for (std::size_t round = 0; round < rounds; ++round) {
    bool changed = false;
    for (const WeightedClause* c : clauses) {
      // Collect every min-combination of one derived degree per body literal.
      std::vector<Weight> partials{c->weight()};
      bool applicable = true;
      for (const auto& b : c->clause().body()) {
        auto it = derived.find(b);
        if (it == derived.end() || it->second.empty()) {
          applicable = false;
          break;
        }
        std::vector<Weight> next;
        for (const Weight& acc : partials) {
          for (const Weight& d : it->second) {
            next.push_back(std::min(acc, d));
          }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        partials = std::move(next);
      }
      if (!applicable) continue;
      auto& bucket = derived[c->clause().head()];
      for (const Weight& d : partials) {
        if (bucket.insert(d).second) changed = true;
      }
    }
    if (!changed) break;
  }
  return derived;
}

Weight oracle_max_degree(const ClauseRefs& clauses, const Literal& goal) {
  if (clauses.size() > kMaxClauses) {
    throw std::invalid_argument("oracle_max_degree: instance too large");
  }
  auto derived = derivable_degrees(clauses);
  auto it = derived.find(goal);
  if (it == derived.end() || it->second.empty()) return Weight::zero();
  return *it->second.rbegin();
}

Weight oracle_max_degree(const std::vector<WeightedClause>& clauses,
                         const Literal& goal) {
  return oracle_max_degree(make_refs(clauses), goal);
}

std::vector<std::pair<SupportSet, Weight>> oracle_arguments(
    const Program& program, const Literal& goal) {
  const std::size_t n = program.delta().size();
  if (n > kMaxDelta) {
    throw std::invalid_argument("oracle_arguments: instance too large");
  }

  struct Entry {
    std::map<Literal, std::set<Weight>> degrees;
    bool contradictory = false;
  };
  std::vector<Entry> table(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    ClauseRefs refs = program.pi_refs();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) refs.push_back(&program.delta()[i]);
    }
    table[mask].degrees = derivable_degrees(refs);
    table[mask].contradictory = closure_contradictory(table[mask].degrees);
  }

  auto derives_at = [&](std::size_t mask, const Weight& degree) {
    auto it = table[mask].degrees.find(goal);
    return it != table[mask].degrees.end() && it->second.contains(degree);
  };

  std::vector<std::pair<SupportSet, Weight>> out;
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    const auto it = table[mask].degrees.find(goal);
    if (it == table[mask].degrees.end() || it->second.empty()) continue;
    const Weight degree = *it->second.rbegin();
    if (table[mask].contradictory) continue;

    bool minimal = true;
    if (mask != 0) {
      // All proper submasks, the empty one included.
      std::size_t sub = (mask - 1) & mask;
      for (;; sub = (sub - 1) & mask) {
        if (!table[sub].contradictory && derives_at(sub, degree)) {
          minimal = false;
          break;
        }
        if (sub == 0) break;
      }
    }
    if (!minimal) continue;

    SupportSet support;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) support.push_back(static_cast<int>(i));
    }
    out.emplace_back(std::move(support), degree);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pdelp::oracle
