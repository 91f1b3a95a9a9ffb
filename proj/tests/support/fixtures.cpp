#include "support/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pdelp::testing {

std::string read_data_file(const std::string& name) {
  const std::string path = std::string(PDELP_TEST_DATA_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const Program& engine_program() {
  static const Program program = [] {
    ParseResult parsed = parse_program(read_data_file("engine.pdelp"));
    if (!parsed.ok()) throw std::runtime_error("engine.pdelp does not parse");
    ValidationResult validated =
        validate_program(std::move(parsed.pi), std::move(parsed.delta));
    if (!validated.ok()) {
      throw std::runtime_error("engine.pdelp does not validate");
    }
    return std::move(*validated.program);
  }();
  return program;
}

Literal lit(const std::string& atom, bool negated) {
  return Literal{Atom(atom), negated};
}

Literal parse_lit(const std::string& text) {
  if (!text.empty() && text[0] == '~') {
    return Literal{Atom(text.substr(1)), true};
  }
  return Literal{Atom(text), false};
}

SupportSet support_of(const Program& program, std::initializer_list<int> ids) {
  SupportSet out;
  for (int id : ids) {
    bool found = false;
    for (std::size_t i = 0; i < program.delta().size(); ++i) {
      if (program.delta()[i].id() == id) {
        out.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::runtime_error("no uncertain clause with id " +
                               std::to_string(id));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightedClause> clauses_by_ids(const Program& program,
                                           std::initializer_list<int> ids) {
  std::vector<WeightedClause> out;
  for (int id : ids) {
    bool found = false;
    for (const auto& c : program.pi()) {
      if (c.id() == id) {
        out.push_back(c);
        found = true;
        break;
      }
    }
    for (const auto& c : program.delta()) {
      if (!found && c.id() == id) {
        out.push_back(c);
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::runtime_error("no clause with id " + std::to_string(id));
    }
  }
  return out;
}

WeightedClause fact(const std::string& head, const std::string& weight,
                    int id) {
  return WeightedClause(Clause(parse_lit(head)), w(weight), id);
}

WeightedClause rule(const std::string& head,
                    const std::vector<std::string>& body,
                    const std::string& weight, int id) {
  std::vector<Literal> literals;
  literals.reserve(body.size());
  for (const auto& b : body) literals.push_back(parse_lit(b));
  return WeightedClause(Clause(parse_lit(head), std::move(literals)),
                        w(weight), id);
}

Weight w(const std::string& decimal) {
  auto parsed = Weight::from_decimal(decimal);
  if (!parsed) throw std::runtime_error("bad weight literal " + decimal);
  return *parsed;
}

const Argument* find_argument(const std::vector<Argument>& args,
                              const SupportSet& support) {
  for (const auto& a : args) {
    if (a.support == support) return &a;
  }
  return nullptr;
}

}  // namespace pdelp::testing
