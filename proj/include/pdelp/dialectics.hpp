#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdelp/arguments.hpp"

namespace pdelp {

enum class DefeatKind { Proper, Blocking };

// attacker defeats target at the disagreement subargument: pi together with
// both conclusions (as weighted facts) is contradictory and the attacker's
// degree is >= the disagreement degree; strictly greater makes it proper.
struct DefeatRelation {
  Argument attacker;
  Argument target;
  Argument disagreement;  // subargument of target
  DefeatKind kind;
};

enum class LineConstraint { NonContradiction, Circularity, Progressiveness };

struct LineViolation {
  LineConstraint constraint;
  std::size_t index;  // 0-based offending position
};

std::string constraint_name(LineConstraint c);

enum class Mark { U, D };

struct TreeNode {
  Argument argument;
  std::optional<DefeatKind> incoming;  // defeat kind against the parent
  int parent = -1;
  int depth = 0;
  std::vector<int> children;
  std::optional<Mark> mark;
};

struct DialecticalTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root, preorder
  const TreeNode& root() const { return nodes.front(); }
  std::size_t size() const { return nodes.size(); }
  std::size_t line_count() const;  // root-to-leaf paths
};

struct ResourceCapExceeded : std::runtime_error {
  explicit ResourceCapExceeded(std::size_t cap)
      : std::runtime_error("dialectical tree exceeded the node cap of " +
                           std::to_string(cap)),
        cap(cap) {}
  std::size_t cap;
};

struct QueryOptions {
  bool prune = true;              // stop expanding once a child marks U
  std::size_t node_cap = 100000;  // per-tree node budget
  ArgumentOptions arguments;
};

enum class Verdict { Yes, No, Undecided };

struct Answer {
  Verdict verdict;
  std::optional<Weight> degree;     // present for YES / NO
  std::optional<Argument> witness;  // warranted argument grounding the answer
};

std::string verdict_name(Verdict v);

// Shares the argument enumeration and the defeater memo across the
// operations of one query evaluation.
class DialecticalEngine {
 public:
  explicit DialecticalEngine(const Program& program, QueryOptions opts = {});

  const Program& program() const { return program_; }
  ArgumentIndex& index() { return index_; }

  std::vector<Argument> counterargues(const Argument& a1, const Argument& a2);
  std::optional<DefeatRelation> defeat(const Argument& a1, const Argument& a2);
  const std::vector<DefeatRelation>& defeaters_of(const Argument& target);

  std::optional<LineViolation> check_line(const std::vector<Argument>& line);

  DialecticalTree build_tree(const Argument& root, bool prune);
  bool is_warranted(const Argument& argument);
  Answer answer(const Literal& goal);

 private:
  using ArgKey = std::pair<Literal, SupportSet>;

  bool facts_clash(const Literal& c1, const Weight& d1, const Literal& c2,
                   const Weight& d2) const;
  const std::vector<Argument>& subargs_of(const Argument& argument);

  const Program& program_;
  QueryOptions opts_;
  ArgumentIndex index_;
  std::map<ArgKey, std::vector<DefeatRelation>> defeater_memo_;
  std::map<ArgKey, std::vector<Argument>> subarg_memo_;
};

// Free-standing forms; each builds a fresh evaluation context.
std::vector<Argument> counterargues(const Argument& a1, const Argument& a2,
                                    const Program& program);
std::optional<DefeatRelation> defeat(const Argument& a1, const Argument& a2,
                                     const Program& program);
std::vector<DefeatRelation> find_defeaters(const Program& program,
                                           const Argument& target);
std::optional<LineViolation> is_acceptable_line(
    const Program& program, const std::vector<Argument>& line);
DialecticalTree build_tree(const Program& program, const Argument& root,
                           bool pruning, QueryOptions opts = {});
void mark_tree(DialecticalTree& tree);
bool is_warranted(const Program& program, const Argument& argument,
                  QueryOptions opts = {});
Answer answer(const Program& program, const Literal& goal,
              QueryOptions opts = {});

}  // namespace pdelp
