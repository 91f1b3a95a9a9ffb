#include "pdelp/dialectics.hpp"

#include <algorithm>

namespace pdelp {

std::string constraint_name(LineConstraint c) {
  switch (c) {
    case LineConstraint::NonContradiction: return "non-contradiction";
    case LineConstraint::Circularity: return "circularity";
    case LineConstraint::Progressiveness: return "progressiveness";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

std::size_t DialecticalTree::line_count() const {
  std::size_t leaves = 0;
  for (const auto& n : nodes) {
    if (n.children.empty()) ++leaves;
  }
  return leaves;
}

DialecticalEngine::DialecticalEngine(const Program& program, QueryOptions opts)
    : program_(program), opts_(opts), index_(program, opts.arguments) {}

bool DialecticalEngine::facts_clash(const Literal& c1, const Weight& d1,
                                    const Literal& c2, const Weight& d2) const {
  std::vector<WeightedClause> facts;
  facts.emplace_back(Clause(c1), d1);
  facts.emplace_back(Clause(c2), d2);
  ClauseRefs refs = program_.pi_refs();
  refs.push_back(&facts[0]);
  refs.push_back(&facts[1]);
  return is_contradictory(refs).has_value();
}

const std::vector<Argument>& DialecticalEngine::subargs_of(
    const Argument& argument) {
  ArgKey key{argument.conclusion, argument.support};
  if (auto it = subarg_memo_.find(key); it != subarg_memo_.end()) {
    return it->second;
  }
  auto subs = index_.subarguments_of(argument);
  return subarg_memo_.emplace(std::move(key), std::move(subs)).first->second;
}

std::vector<Argument> DialecticalEngine::counterargues(const Argument& a1,
                                                       const Argument& a2) {
  std::vector<Argument> out;
  for (const auto& s : subargs_of(a2)) {
    if (facts_clash(a1.conclusion, a1.degree, s.conclusion, s.degree)) {
      out.push_back(s);
    }
  }
  return out;
}

std::optional<DefeatRelation> DialecticalEngine::defeat(const Argument& a1,
                                                        const Argument& a2) {
  // The weakest qualifying disagreement subargument decides the label; any
  // strictly weaker one makes the defeat proper.
  std::optional<Argument> chosen;
  for (const auto& s : subargs_of(a2)) {
    if (a1.degree < s.degree) continue;
    if (!facts_clash(a1.conclusion, a1.degree, s.conclusion, s.degree)) {
      continue;
    }
    if (!chosen || s.degree < chosen->degree ||
        (s.degree == chosen->degree && argument_order(s, *chosen))) {
      chosen = s;
    }
  }
  if (!chosen) return std::nullopt;
  const DefeatKind kind = a1.degree > chosen->degree ? DefeatKind::Proper
                                                     : DefeatKind::Blocking;
  return DefeatRelation{a1, a2, *chosen, kind};
}

const std::vector<DefeatRelation>& DialecticalEngine::defeaters_of(
    const Argument& target) {
  ArgKey key{target.conclusion, target.support};
  if (auto it = defeater_memo_.find(key); it != defeater_memo_.end()) {
    return it->second;
  }
  std::vector<DefeatRelation> rels;
  for (const auto& l : program_.literal_universe()) {
    for (const auto& candidate : index_.arguments_for(l)) {
      if (same_argument(candidate, target)) continue;
      if (auto rel = defeat(candidate, target)) {
        rels.push_back(std::move(*rel));
      }
    }
  }
  // Child order: proper before blocking, stronger attackers first, then a
  // stable identity order.
  std::sort(rels.begin(), rels.end(),
            [](const DefeatRelation& a, const DefeatRelation& b) {
              if (a.kind != b.kind) return a.kind == DefeatKind::Proper;
              return argument_order(a.attacker, b.attacker);
            });
  return defeater_memo_.emplace(std::move(key), std::move(rels)).first->second;
}

namespace {

// pi + supports + conclusions (as weighted facts) of the given entries.
bool side_contradictory(const Program& program,
                        const std::vector<const Argument*>& side) {
  std::vector<WeightedClause> facts;
  facts.reserve(side.size());
  for (const Argument* a : side) {
    facts.emplace_back(Clause(a->conclusion), a->degree);
  }
  ClauseRefs refs = program.pi_refs();
  for (const Argument* a : side) {
    for (int i : a->support) refs.push_back(&program.delta()[i]);
  }
  for (const auto& f : facts) refs.push_back(&f);
  return is_contradictory(refs).has_value();
}

}  // namespace

std::optional<LineViolation> DialecticalEngine::check_line(
    const std::vector<Argument>& line) {
  if (line.empty()) {
    throw std::invalid_argument("argumentation line must be non-empty");
  }
  std::vector<std::optional<DefeatKind>> kinds(line.size());
  for (std::size_t j = 1; j < line.size(); ++j) {
    auto rel = defeat(line[j], line[j - 1]);
    if (!rel) {
      throw std::invalid_argument(
          "argumentation line entries are not linked by defeat");
    }
    kinds[j] = rel->kind;
  }
  for (std::size_t j = 0; j < line.size(); ++j) {
    std::vector<const Argument*> side;
    for (std::size_t i = j % 2; i <= j; i += 2) side.push_back(&line[i]);
    if (side_contradictory(program_, side)) {
      return LineViolation{LineConstraint::NonContradiction, j};
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (support_subset(line[j].support, line[i].support)) {
        return LineViolation{LineConstraint::Circularity, j};
      }
    }
    if (j >= 2 && kinds[j - 1] == DefeatKind::Blocking &&
        kinds[j] != DefeatKind::Proper) {
      return LineViolation{LineConstraint::Progressiveness, j};
    }
  }
  return std::nullopt;
}

DialecticalTree DialecticalEngine::build_tree(const Argument& root,
                                              bool prune) {
  DialecticalTree tree;
  tree.nodes.push_back(TreeNode{root, std::nullopt, -1, 0, {}, std::nullopt});

  std::vector<int> path;  // node indices from the root to the current node

  auto expand = [&](auto&& self, int node_index) -> void {
    path.push_back(node_index);
    const int depth = tree.nodes[node_index].depth;
    bool has_u_child = false;

    const std::vector<DefeatRelation> rels =
        defeaters_of(tree.nodes[node_index].argument);
    for (const auto& rel : rels) {
      if (prune && has_u_child) break;

      // A blocking defeater may only be answered by a proper defeater.
      if (tree.nodes[node_index].incoming == DefeatKind::Blocking &&
          rel.kind != DefeatKind::Proper) {
        continue;
      }
      // No entry may be a subargument of an earlier entry in its line.
      bool circular = false;
      for (int idx : path) {
        if (support_subset(rel.attacker.support,
                           tree.nodes[idx].argument.support)) {
          circular = true;
          break;
        }
      }
      if (circular) continue;
      // The attacker's side of the line must stay non-contradictory.
      std::vector<const Argument*> side{&rel.attacker};
      for (int idx : path) {
        if ((depth + 1 - tree.nodes[idx].depth) % 2 == 0) {
          side.push_back(&tree.nodes[idx].argument);
        }
      }
      if (side_contradictory(program_, side)) continue;

      if (tree.nodes.size() >= opts_.node_cap) {
        throw ResourceCapExceeded(opts_.node_cap);
      }
      const int child = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(
          TreeNode{rel.attacker, rel.kind, node_index, depth + 1, {}, {}});
      tree.nodes[node_index].children.push_back(child);
      self(self, child);
      if (prune && tree.nodes[child].mark == Mark::U) has_u_child = true;
    }
    if (prune) {
      tree.nodes[node_index].mark = has_u_child ? Mark::D : Mark::U;
    }
    path.pop_back();
  };

  expand(expand, 0);
  return tree;
}

void mark_tree(DialecticalTree& tree) {
  // nodes are stored preorder, so children always follow their parent.
  for (auto it = tree.nodes.rbegin(); it != tree.nodes.rend(); ++it) {
    bool has_u_child = false;
    for (int c : it->children) {
      if (tree.nodes[c].mark == Mark::U) has_u_child = true;
    }
    it->mark = has_u_child ? Mark::D : Mark::U;
  }
}

bool DialecticalEngine::is_warranted(const Argument& argument) {
  DialecticalTree tree = build_tree(argument, opts_.prune);
  if (!opts_.prune) mark_tree(tree);
  return tree.root().mark == Mark::U;
}

Answer DialecticalEngine::answer(const Literal& goal) {
  auto best_warranted = [&](const Literal& l) -> std::optional<Argument> {
    std::optional<Argument> best;
    for (const auto& a : index_.arguments_for(l)) {
      if (!is_warranted(a)) continue;
      if (!best || a.degree > best->degree) best = a;
    }
    return best;
  };
  if (auto w = best_warranted(goal)) {
    return Answer{Verdict::Yes, w->degree, std::move(w)};
  }
  if (auto w = best_warranted(goal.complement())) {
    return Answer{Verdict::No, w->degree, std::move(w)};
  }
  return Answer{Verdict::Undecided, std::nullopt, std::nullopt};
}

std::vector<Argument> counterargues(const Argument& a1, const Argument& a2,
                                    const Program& program) {
  DialecticalEngine engine(program);
  return engine.counterargues(a1, a2);
}

std::optional<DefeatRelation> defeat(const Argument& a1, const Argument& a2,
                                     const Program& program) {
  DialecticalEngine engine(program);
  return engine.defeat(a1, a2);
}

std::vector<DefeatRelation> find_defeaters(const Program& program,
                                           const Argument& target) {
  DialecticalEngine engine(program);
  return engine.defeaters_of(target);
}

std::optional<LineViolation> is_acceptable_line(
    const Program& program, const std::vector<Argument>& line) {
  DialecticalEngine engine(program);
  return engine.check_line(line);
}

DialecticalTree build_tree(const Program& program, const Argument& root,
                           bool pruning, QueryOptions opts) {
  opts.prune = pruning;
  DialecticalEngine engine(program, opts);
  return engine.build_tree(root, pruning);
}

bool is_warranted(const Program& program, const Argument& argument,
                  QueryOptions opts) {
  DialecticalEngine engine(program, opts);
  return engine.is_warranted(argument);
}

Answer answer(const Program& program, const Literal& goal, QueryOptions opts) {
  DialecticalEngine engine(program, opts);
  return engine.answer(goal);
}

}  // namespace pdelp
