#include "pdelp/tree_export.hpp"

#include <json.hpp>

namespace pdelp {

namespace {

using nlohmann::json;

json node_to_json(const DialecticalTree& tree, int index,
                  const Program& program) {
  const TreeNode& node = tree.nodes[index];
  json j;
  j["conclusion"] = node.argument.conclusion.to_string();
  j["degree"] = node.argument.degree.to_decimal();
  j["support"] = node.argument.support_ids(program);
  if (node.incoming) {
    j["defeat"] = *node.incoming == DefeatKind::Proper ? "proper" : "blocking";
  } else {
    j["defeat"] = nullptr;
  }
  if (node.mark) {
    j["mark"] = *node.mark == Mark::U ? "U" : "D";
  } else {
    j["mark"] = nullptr;
  }
  json children = json::array();
  for (int c : node.children) {
    children.push_back(node_to_json(tree, c, program));
  }
  j["children"] = std::move(children);
  return j;
}

}  // namespace

std::string trees_to_json(const Literal& goal,
                          const std::vector<DialecticalTree>& trees,
                          const Program& program) {
  json doc;
  doc["schema"] = "pdelp-tree/1";
  doc["goal"] = goal.to_string();
  json arr = json::array();
  for (const auto& t : trees) {
    arr.push_back(node_to_json(t, 0, program));
  }
  doc["trees"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string trees_to_dot(const Literal& goal,
                         const std::vector<DialecticalTree>& trees,
                         const Program& program) {
  (void)program;
  std::string out = "digraph pdelp {\n";
  out += "  label=\"" + goal.to_string() + "\";\n";
  int next = 0;
  for (const auto& tree : trees) {
    std::vector<int> name(tree.nodes.size());
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const TreeNode& n = tree.nodes[i];
      name[i] = next++;
      std::string label = n.argument.conclusion.to_string() + " [" +
                          n.argument.degree.to_decimal() + "]";
      if (n.mark) label += *n.mark == Mark::U ? " U" : " D";
      out += "  n" + std::to_string(name[i]) + " [label=\"" + label + "\"];\n";
    }
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const TreeNode& n = tree.nodes[i];
      if (n.parent < 0) continue;
      out += "  n" + std::to_string(name[n.parent]) + " -> n" +
             std::to_string(name[i]) + " [label=\"" +
             (n.incoming == DefeatKind::Proper ? "proper" : "blocking") +
             "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string answer_to_json(const Answer& answer, const Program& program) {
  json j;
  j["verdict"] = verdict_name(answer.verdict);
  if (answer.degree) {
    j["degree"] = answer.degree->to_decimal();
  }
  if (answer.witness) {
    json w;
    w["conclusion"] = answer.witness->conclusion.to_string();
    w["degree"] = answer.witness->degree.to_decimal();
    w["support"] = answer.witness->support_ids(program);
    j["witness"] = std::move(w);
  }
  return j.dump(2) + "\n";
}

}  // namespace pdelp
