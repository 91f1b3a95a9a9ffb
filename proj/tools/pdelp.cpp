#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pdelp/dialectics.hpp"
#include "pdelp/parser.hpp"
#include "pdelp/tree_export.hpp"

namespace {

// 0 success/YES, 1 NO, 2 UNDECIDED, 3 validation error, 4 parse/IO error,
// 5 resource cap exceeded.
enum ExitStatus : int {
  kYes = 0,
  kNo = 1,
  kUndecided = 2,
  kInvalid = 3,
  kParseError = 4,
  kResourceCap = 5,
};

int load_program(const std::string& path, std::optional<pdelp::Program>& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": cannot read file\n";
    return kParseError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  pdelp::ParseResult parsed = pdelp::parse_program(text);
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors) {
      std::cerr << path << ":" << e.span.line << ":" << e.span.column << ": "
                << e.message << "\n";
    }
    return kParseError;
  }
  pdelp::ValidationResult validated =
      pdelp::validate_program(std::move(parsed.pi), std::move(parsed.delta));
  if (!validated.ok()) {
    for (const auto& issue : validated.issues) {
      std::cerr << path << ": " << pdelp::issue_message(issue) << "\n";
    }
    return kInvalid;
  }
  out = std::move(validated.program);
  return kYes;
}

pdelp::QueryOptions query_options(bool no_prune) {
  pdelp::QueryOptions opts;
  opts.prune = !no_prune;
  if (const char* cap = std::getenv("PDELP_NODE_CAP")) {
    try {
      opts.node_cap = std::stoull(cap);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed PDELP_NODE_CAP value '" << cap << "'\n";
    }
  }
  return opts;
}

int parse_goal(const std::string& text, std::optional<pdelp::Literal>& out) {
  auto parsed = pdelp::parse_query(text);
  if (auto* err = std::get_if<pdelp::ParseError>(&parsed)) {
    std::cerr << "goal '" << text << "': " << err->message << "\n";
    return kParseError;
  }
  out = std::get<pdelp::Literal>(parsed);
  return kYes;
}

int cmd_check(const std::string& path) {
  std::optional<pdelp::Program> program;
  if (int rc = load_program(path, program); rc != kYes) return rc;
  std::cout << "valid: |Pi|=" << program->pi().size()
            << " |Delta|=" << program->delta().size() << "\n";
  return kYes;
}

int cmd_query(const std::string& path, const std::string& goal_text, bool json,
              bool no_prune) {
  std::optional<pdelp::Program> program;
  if (int rc = load_program(path, program); rc != kYes) return rc;
  std::optional<pdelp::Literal> goal;
  if (int rc = parse_goal(goal_text, goal); rc != kYes) return rc;

  pdelp::Answer ans;
  try {
    ans = pdelp::answer(*program, *goal, query_options(no_prune));
  } catch (const pdelp::ResourceCapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kResourceCap;
  }

  if (json) {
    std::cout << pdelp::answer_to_json(ans, *program);
  } else {
    std::cout << pdelp::verdict_name(ans.verdict);
    if (ans.degree) std::cout << " " << ans.degree->to_decimal();
    std::cout << "\n";
  }
  switch (ans.verdict) {
    case pdelp::Verdict::Yes: return kYes;
    case pdelp::Verdict::No: return kNo;
    case pdelp::Verdict::Undecided: return kUndecided;
  }
  return kUndecided;
}

int cmd_tree(const std::string& path, const std::string& goal_text,
             const std::string& format, bool no_prune) {
  std::optional<pdelp::Program> program;
  if (int rc = load_program(path, program); rc != kYes) return rc;
  std::optional<pdelp::Literal> goal;
  if (int rc = parse_goal(goal_text, goal); rc != kYes) return rc;

  pdelp::DialecticalEngine engine(*program, query_options(no_prune));
  const auto& args = engine.index().arguments_for(*goal);
  if (args.empty()) {
    std::cerr << "no argument for '" << goal->to_string() << "'\n";
    return kUndecided;
  }

  std::vector<pdelp::DialecticalTree> trees;
  try {
    for (const auto& a : args) {
      pdelp::DialecticalTree t = engine.build_tree(a, !no_prune);
      if (no_prune) pdelp::mark_tree(t);
      trees.push_back(std::move(t));
    }
  } catch (const pdelp::ResourceCapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kResourceCap;
  }

  if (format == "json") {
    std::cout << pdelp::trees_to_json(*goal, trees, *program);
  } else {
    std::cout << pdelp::trees_to_dot(*goal, trees, *program);
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"P-DeLP interpreter: certainty-weighted defeasible logic programs"};
  app.require_subcommand(1);

  std::string check_path;
  CLI::App* check = app.add_subcommand(
      "check", "Parse and validate a program file");
  check->add_option("file", check_path, "program file")->required();

  std::string query_path;
  std::string query_goal;
  bool query_json = false;
  bool query_no_prune = false;
  CLI::App* query = app.add_subcommand(
      "query", "Answer a goal through dialectical analysis");
  query->add_option("file", query_path, "program file")->required();
  query->add_option("goal", query_goal, "goal literal, e.g. engine_ok or ~fuel_ok")
      ->required();
  query->add_flag("--json", query_json, "emit a JSON answer record");
  query->add_flag("--no-prune", query_no_prune,
                  "expand dialectical trees exhaustively");

  std::string tree_path;
  std::string tree_goal;
  std::string tree_format = "dot";
  bool tree_no_prune = false;
  CLI::App* tree = app.add_subcommand(
      "tree", "Export the dialectical trees for a goal");
  tree->add_option("file", tree_path, "program file")->required();
  tree->add_option("goal", tree_goal, "goal literal")->required();
  tree->add_option("--format", tree_format, "output format")
      ->check(CLI::IsMember({"dot", "json"}));
  tree->add_flag("--no-prune", tree_no_prune,
                 "expand dialectical trees exhaustively");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return cmd_check(check_path);
  if (query->parsed()) {
    return cmd_query(query_path, query_goal, query_json, query_no_prune);
  }
  if (tree->parsed()) {
    return cmd_tree(tree_path, tree_goal, tree_format, tree_no_prune);
  }
  return kParseError;
}
