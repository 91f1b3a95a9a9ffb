#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "pdelp/dialectics.hpp"
#include "pdelp/parser.hpp"
#include "pdelp/tree_export.hpp"

namespace py = pybind11;

namespace {

std::string format_parse_errors(const std::vector<pdelp::ParseError>& errors) {
  std::string msg;
  for (const auto& e : errors) {
    if (!msg.empty()) msg += "; ";
    msg += std::to_string(e.span.line) + ":" + std::to_string(e.span.column) +
           ": " + e.message;
  }
  return msg;
}

pdelp::Program load(const std::string& text) {
  pdelp::ParseResult parsed = pdelp::parse_program(text);
  if (!parsed.ok()) {
    throw py::value_error("parse error: " + format_parse_errors(parsed.errors));
  }
  pdelp::ValidationResult validated =
      pdelp::validate_program(std::move(parsed.pi), std::move(parsed.delta));
  if (!validated.ok()) {
    std::string msg;
    for (const auto& issue : validated.issues) {
      if (!msg.empty()) msg += "; ";
      msg += pdelp::issue_message(issue);
    }
    throw py::value_error("invalid program: " + msg);
  }
  return std::move(*validated.program);
}

pdelp::Literal goal_literal(const std::string& text) {
  auto parsed = pdelp::parse_query(text);
  if (auto* err = std::get_if<pdelp::ParseError>(&parsed)) {
    throw py::value_error("goal '" + text + "': " + err->message);
  }
  return std::get<pdelp::Literal>(parsed);
}

pdelp::QueryOptions options(bool prune) {
  pdelp::QueryOptions opts;
  opts.prune = prune;
  return opts;
}

py::dict check(const std::string& text) {
  pdelp::ParseResult parsed = pdelp::parse_program(text);
  py::dict out;
  py::list parse_errors;
  for (const auto& e : parsed.errors) {
    py::dict d;
    d["line"] = e.span.line;
    d["column"] = e.span.column;
    d["message"] = e.message;
    parse_errors.append(d);
  }
  out["parse_errors"] = parse_errors;
  if (!parsed.ok()) {
    out["ok"] = false;
    out["issues"] = py::list();
    return out;
  }
  pdelp::ValidationResult validated =
      pdelp::validate_program(std::move(parsed.pi), std::move(parsed.delta));
  py::list issues;
  for (const auto& issue : validated.issues) {
    issues.append(pdelp::issue_message(issue));
  }
  out["issues"] = issues;
  out["ok"] = validated.ok();
  if (validated.ok()) {
    out["pi"] = validated.program->pi().size();
    out["delta"] = validated.program->delta().size();
  }
  return out;
}

py::dict query(const std::string& text, const std::string& goal, bool prune) {
  pdelp::Program program = load(text);
  pdelp::Answer ans = pdelp::answer(program, goal_literal(goal), options(prune));
  py::dict out;
  out["verdict"] = pdelp::verdict_name(ans.verdict);
  out["degree"] =
      ans.degree ? py::object(py::str(ans.degree->to_decimal())) : py::none();
  if (ans.witness) {
    py::dict w;
    w["conclusion"] = ans.witness->conclusion.to_string();
    w["degree"] = ans.witness->degree.to_decimal();
    w["support"] = ans.witness->support_ids(program);
    out["witness"] = w;
  } else {
    out["witness"] = py::none();
  }
  return out;
}

py::list arguments_for(const std::string& text, const std::string& goal) {
  pdelp::Program program = load(text);
  py::list out;
  for (const auto& a : pdelp::build_arguments(program, goal_literal(goal))) {
    py::dict d;
    d["conclusion"] = a.conclusion.to_string();
    d["degree"] = a.degree.to_decimal();
    d["support"] = a.support_ids(program);
    out.append(d);
  }
  return out;
}

std::string render_trees(const std::string& text, const std::string& goal,
                         bool prune, bool json) {
  pdelp::Program program = load(text);
  pdelp::Literal lit = goal_literal(goal);
  pdelp::DialecticalEngine engine(program, options(prune));
  std::vector<pdelp::DialecticalTree> trees;
  for (const auto& a : engine.index().arguments_for(lit)) {
    pdelp::DialecticalTree t = engine.build_tree(a, prune);
    if (!prune) pdelp::mark_tree(t);
    trees.push_back(std::move(t));
  }
  return json ? pdelp::trees_to_json(lit, trees, program)
              : pdelp::trees_to_dot(lit, trees, program);
}

std::string max_degree_of(const std::string& text, const std::string& goal) {
  pdelp::Program program = load(text);
  return pdelp::max_degree(program.refs(), goal_literal(goal)).to_decimal();
}

std::string canonical(const std::string& text) {
  return pdelp::serialize_program(load(text));
}

}  // namespace

PYBIND11_MODULE(_pdelp, m) {
  m.doc() = "Interpreter for certainty-weighted defeasible logic programs";

  m.def("check", &check, py::arg("text"),
        "Parse and validate a program; returns counts, issues and parse "
        "errors.");
  m.def("query", &query, py::arg("text"), py::arg("goal"),
        py::arg("prune") = true,
        "Answer a goal: YES/NO with the warranting degree, or UNDECIDED.");
  m.def("arguments", &arguments_for, py::arg("text"), py::arg("goal"),
        "All arguments supporting a goal, with supports and degrees.");
  m.def(
      "tree_json",
      [](const std::string& text, const std::string& goal, bool prune) {
        return render_trees(text, goal, prune, true);
      },
      py::arg("text"), py::arg("goal"), py::arg("prune") = true,
      "Dialectical trees for a goal as a JSON document (pdelp-tree/1).");
  m.def(
      "tree_dot",
      [](const std::string& text, const std::string& goal, bool prune) {
        return render_trees(text, goal, prune, false);
      },
      py::arg("text"), py::arg("goal"), py::arg("prune") = true,
      "Dialectical trees for a goal in Graphviz format.");
  m.def("max_degree", &max_degree_of, py::arg("text"), py::arg("goal"),
        "Maximum degree of deduction of a goal over the whole clause set, "
        "as an exact decimal string.");
  m.def("canonical", &canonical, py::arg("text"),
        "Canonical serialization of a valid program.");

#ifdef PDELP_VERSION
  m.attr("__version__") = PDELP_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
