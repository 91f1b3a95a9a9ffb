// Acceptance suite: one line per criterion, non-zero exit when any fails.
// Degrees are compared with exact rational equality throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pdelp/dialectics.hpp"
#include "pdelp/oracle.hpp"
#include "pdelp/parser.hpp"
#include "support/fixtures.hpp"
#include "support/random_programs.hpp"

using namespace pdelp;
using namespace pdelp::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& label) {
    if (!condition) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += label;
    }
  }
  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

struct Criterion {
  int number;
  std::string name;
  std::function<Outcome()> run;
};

const std::vector<Program>& corpus() {
  static const std::vector<Program> programs = [] {
    CorpusOptions opts;
    opts.count = 500;
    return generate_corpus(opts);
  }();
  return programs;
}

const Argument* engine_argument(const std::vector<Argument>& args,
                                std::initializer_list<int> ids) {
  return find_argument(args, support_of(engine_program(), ids));
}

Outcome fig1_check() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  ParseResult parsed = parse_program(read_data_file("engine.pdelp"));
  o.require(parsed.ok(), "program parses");
  if (!parsed.ok()) return o;
  ValidationResult validated =
      validate_program(std::move(parsed.pi), std::move(parsed.delta));
  o.require(validated.ok(), "program validates");
  if (!validated.ok()) return o;
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  o.require(validated.program->pi().size() == 5, "|Pi| = 5");
  o.require(validated.program->delta().size() == 11, "|Delta| = 11");
  o.require(elapsed < 100, "runtime < 100 ms");
  o.note("|Pi|=5 |Delta|=11 in " + std::to_string(elapsed) + " ms");
  return o;
}

Outcome example12_arguments() {
  Outcome o;
  const Program& eng = engine_program();

  auto fuel = build_arguments(eng, lit("fuel_ok"));
  const Argument* b = engine_argument(fuel, {6, 7});
  o.require(b != nullptr, "fuel_ok argument with support {6,7}");
  if (b) o.require(b->degree == Weight::ratio(3, 10), "fuel_ok degree 0.3");

  auto oil = build_arguments(eng, lit("oil_ok"));
  const Argument* c = engine_argument(oil, {8, 9});
  o.require(oil.size() == 1, "oil_ok has one argument");
  o.require(c != nullptr, "oil_ok argument with support {8,9}");
  if (c) o.require(c->degree == Weight::ratio(8, 10), "oil_ok degree 0.8");

  auto engine = build_arguments(eng, lit("engine_ok"));
  const Argument* a1 = engine_argument(engine, {6, 7, 8, 9, 10});
  o.require(a1 != nullptr, "engine_ok argument with support {6,7,8,9,10}");
  if (a1) {
    o.require(a1->degree == Weight::ratio(3, 10), "engine_ok degree 0.3");
  }
  return o;
}

Outcome example17_defeat() {
  Outcome o;
  const Program& eng = engine_program();
  auto engine = build_arguments(eng, lit("engine_ok"));
  auto clog = build_arguments(eng, lit("fuel_ok", true));
  const Argument* a1 = engine_argument(engine, {6, 7, 8, 9, 10});
  const Argument* a2 = engine_argument(clog, {6, 13, 14});
  o.require(a1 && a2, "arguments exist");
  if (!a1 || !a2) return o;
  auto rel = defeat(*a2, *a1, eng);
  o.require(rel.has_value(), "defeat holds");
  if (!rel) return o;
  o.require(rel->kind == DefeatKind::Proper, "defeat is proper");
  o.require(rel->disagreement.support == support_of(eng, {6, 7}),
            "disagreement support {6,7}");
  o.require(rel->disagreement.conclusion == lit("fuel_ok"),
            "disagreement conclusion fuel_ok");
  o.require(rel->disagreement.degree == Weight::ratio(3, 10),
            "disagreement degree 0.3");
  return o;
}

Outcome example18_blocking() {
  Outcome o;
  const Program& eng = engine_program();
  auto clog = build_arguments(eng, lit("fuel_ok", true));
  auto slow = build_arguments(eng, lit("low_speed", true));
  auto fast = build_arguments(eng, lit("low_speed"));
  auto engine = build_arguments(eng, lit("engine_ok"));
  const Argument* a1 = engine_argument(engine, {6, 7, 8, 9, 10});
  const Argument* a2 = engine_argument(clog, {6, 13, 14});
  const Argument* a3 = engine_argument(slow, {15});
  const Argument* a2p = engine_argument(fast, {14});
  o.require(a1 && a2 && a3 && a2p, "arguments exist");
  if (!a1 || !a2 || !a3 || !a2p) return o;

  auto rel = defeat(*a3, *a2, eng);
  o.require(rel.has_value(), "defeat holds");
  if (rel) {
    o.require(rel->kind == DefeatKind::Blocking, "defeat is blocking");
    o.require(rel->disagreement.support == support_of(eng, {14}),
              "disagreement support {14}");
    o.require(rel->disagreement.degree == Weight::ratio(8, 10),
              "disagreement degree 0.8");
  }
  auto violation = is_acceptable_line(eng, {*a1, *a2, *a3, *a2p});
  o.require(violation.has_value(), "4-element line rejected");
  if (violation) {
    o.require(violation->constraint == LineConstraint::Circularity,
              "rejected for circularity");
    o.require(violation->index == 3, "violation at index 3");
  }
  return o;
}

Outcome example20_tree() {
  Outcome o;
  const Program& eng = engine_program();
  auto engine = build_arguments(eng, lit("engine_ok"));
  const Argument* a1 = engine_argument(engine, {6, 7, 8, 9, 10});
  o.require(a1 != nullptr, "root argument exists");
  if (!a1) return o;

  DialecticalTree tree = build_tree(eng, *a1, /*pruning=*/false);
  mark_tree(tree);

  auto mark_of = [&](std::initializer_list<int> ids,
                     const Literal& conclusion) -> std::optional<Mark> {
    const SupportSet s = support_of(eng, ids);
    for (const auto& n : tree.nodes) {
      if (n.argument.support == s && n.argument.conclusion == conclusion) {
        return n.mark;
      }
    }
    return std::nullopt;
  };

  o.require(mark_of({15}, lit("low_speed", true)) == Mark::U, "A3 marked U");
  o.require(mark_of({16}, lit("fuel_ok")) == Mark::U, "A4 marked U");
  o.require(mark_of({11}, lit("engine_ok", true)) == Mark::U, "A5 marked U");
  o.require(mark_of({6, 13, 14}, lit("fuel_ok", true)) == Mark::D,
            "A2 marked D");
  o.require(tree.root().mark == Mark::D, "root marked D");
  o.require(tree.size() == 5, "exactly 5 nodes (engine computes " +
                                  std::to_string(tree.size()) + ")");
  o.require(tree.line_count() == 3,
            "exactly 3 root-to-leaf lines (engine computes " +
                std::to_string(tree.line_count()) + ")");
  if (!o.pass) {
    o.note(
        "the complete defeat relation adds the proper defeaters "
        "<{12}, ~oil_ok, 0.9> (against <{8,9}, oil_ok, 0.8>) and "
        "<{6,13,14}, pump_clog, 0.6> (against <{6,7}, fuel_ok, 0.3> through "
        "certain rule 1), so the exhaustive tree is larger than the "
        "five-node reference shape");
  }
  return o;
}

Outcome example23_answers() {
  Outcome o;
  const Program& eng = engine_program();

  Answer engine_ok = answer(eng, lit("engine_ok"));
  o.require(engine_ok.verdict == Verdict::No, "engine_ok verdict NO");
  o.require(engine_ok.degree == Weight::ratio(95, 100),
            "engine_ok degree 0.95");

  // fuel_ok: the {16} argument carries weight 0.9, leaving no defeater of
  // equal strength, so the computed answer is YES 0.9. An UNDECIDED verdict
  // would require that argument to carry degree 0.6, contradicting the
  // clause's stated weight.
  Answer fuel = answer(eng, lit("fuel_ok"));
  o.require(fuel.verdict == Verdict::Yes, "fuel_ok verdict YES (computed)");
  o.require(fuel.degree == Weight::ratio(9, 10), "fuel_ok degree 0.9");
  Answer neg_fuel = answer(eng, lit("fuel_ok", true));
  o.require(neg_fuel.verdict == Verdict::No, "~fuel_ok verdict NO");
  o.note("engine_ok -> NO 0.95; fuel_ok -> YES 0.9 by the GMP-consistent "
         "weight of clause 16");
  return o;
}

Outcome example8_contradiction() {
  Outcome o;
  std::vector<WeightedClause> gamma{rule("p", {"q"}, "0.5", 1),
                                    rule("~p", {"q", "r"}, "0.3", 2),
                                    fact("q", "0.2", 3), fact("r", "1", 4)};
  auto witness = is_contradictory(gamma);
  o.require(witness.has_value(), "gamma is contradictory");
  if (witness) {
    o.require(witness->atom == Atom("p"), "witness atom p");
    o.require(witness->degree_pos == Weight::ratio(2, 10), "degree 0.2 for p");
    o.require(witness->degree_neg == Weight::ratio(2, 10), "degree 0.2 for ~p");
  }
  gamma.pop_back();
  o.require(!is_contradictory(gamma).has_value(),
            "gamma without (r,1) is consistent");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (const Program& p : corpus()) {
    ArgumentIndex index(p);
    std::vector<WeightedClause> all;
    all.insert(all.end(), p.pi().begin(), p.pi().end());
    all.insert(all.end(), p.delta().begin(), p.delta().end());
    for (const auto& goal : p.literal_universe()) {
      if (max_degree(all, goal) != oracle::oracle_max_degree(all, goal)) {
        o.require(false, "max_degree mismatch on program " +
                             std::to_string(checked) + " goal " +
                             goal.to_string());
        return o;
      }
      auto expected = oracle::oracle_arguments(p, goal);
      std::vector<std::pair<SupportSet, Weight>> got;
      for (const auto& a : index.arguments_for(goal)) {
        got.emplace_back(a.support, a.degree);
      }
      std::sort(got.begin(), got.end());
      if (got != expected) {
        o.require(false, "argument mismatch on program " +
                             std::to_string(checked) + " goal " +
                             goal.to_string());
        return o;
      }
    }
    ++checked;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  o.require(checked >= 500, "at least 500 programs");
  o.require(elapsed < 60, "runtime < 60 s");
  o.note(std::to_string(checked) + " programs in " + std::to_string(elapsed) +
         " s");
  return o;
}

Outcome pruning_soundness() {
  Outcome o;
  for (const Program& p : corpus()) {
    DialecticalEngine pruned(p, QueryOptions{.prune = true});
    DialecticalEngine full(p, QueryOptions{.prune = false});
    for (const auto& goal : p.literal_universe()) {
      for (const auto& a : pruned.index().arguments_for(goal)) {
        DialecticalTree tp = pruned.build_tree(a, true);
        DialecticalTree tf = full.build_tree(a, false);
        mark_tree(tf);
        if (tp.root().mark != tf.root().mark) {
          o.require(false,
                    "root mark differs for " + goal.to_string());
          return o;
        }
      }
    }
  }
  o.note("pruned and exhaustive root markings agree on the whole corpus");
  return o;
}

Outcome warrant_exclusivity() {
  Outcome o;
  for (const Program& p : corpus()) {
    DialecticalEngine engine(p);
    for (const auto& a : p.atoms()) {
      Answer pos = engine.answer(Literal{a, false});
      Answer neg = engine.answer(Literal{a, true});
      if (pos.verdict == Verdict::Yes && neg.verdict == Verdict::Yes) {
        o.require(false, "atom " + a.name() + " warranted on both sides");
        return o;
      }
    }
  }
  o.note("no atom is warranted together with its complement");
  return o;
}

Outcome monotonicity() {
  Outcome o;
  std::mt19937_64 rng(0xfeedface);
  for (const Program& p : corpus()) {
    std::vector<WeightedClause> base;
    base.insert(base.end(), p.pi().begin(), p.pi().end());
    base.insert(base.end(), p.delta().begin(), p.delta().end());
    std::vector<WeightedClause> extended = base;
    extended.push_back(random_clause(rng, 8, false, 0));
    std::set<Literal> literals;
    for (const auto& c : extended) {
      literals.insert(c.clause().head());
      literals.insert(c.clause().head().complement());
      for (const auto& b : c.clause().body()) literals.insert(b);
    }
    for (const auto& l : literals) {
      if (max_degree(base, l) > max_degree(extended, l)) {
        o.require(false, "degree dropped for " + l.to_string());
        return o;
      }
    }
  }
  o.note("adding a clause never lowered any degree");
  return o;
}

Outcome parser_roundtrip() {
  Outcome o;
  auto same_clauses = [](const std::vector<WeightedClause>& a,
                         const std::vector<WeightedClause>& b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
  };
  auto roundtrip = [&](const Program& p, const std::string& label) {
    const std::string once = serialize_program(p);
    ParseResult reparsed = parse_program(once);
    if (!reparsed.ok()) {
      o.require(false, label + ": serialized form fails to parse");
      return;
    }
    ValidationResult validated =
        validate_program(std::move(reparsed.pi), std::move(reparsed.delta));
    if (!validated.ok()) {
      o.require(false, label + ": serialized form fails to validate");
      return;
    }
    o.require(same_clauses(validated.program->pi(), p.pi()) &&
                  same_clauses(validated.program->delta(), p.delta()),
              label + ": reparse reproduces the program");
    o.require(serialize_program(*validated.program) == once,
              label + ": serialization is a fixpoint");
  };

  ParseResult parsed = parse_program(read_data_file("engine.pdelp"));
  ValidationResult validated =
      validate_program(std::move(parsed.pi), std::move(parsed.delta));
  o.require(validated.ok(), "engine program loads");
  if (validated.ok()) roundtrip(*validated.program, "engine");
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    roundtrip(corpus()[i], "corpus[" + std::to_string(i) + "]");
    if (!o.pass) return o;
  }
  o.note("parse/serialize fixpoint holds on the engine file and the corpus");
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "engine-program-check", fig1_check},
      {2, "argument-construction", example12_arguments},
      {3, "proper-defeat", example17_defeat},
      {4, "blocking-defeat-and-circularity", example18_blocking},
      {5, "reference-tree-shape", example20_tree},
      {6, "query-answers", example23_answers},
      {7, "contradiction-witness", example8_contradiction},
      {8, "oracle-equivalence", oracle_equivalence},
      {9, "pruning-soundness", pruning_soundness},
      {10, "warrant-exclusivity", warrant_exclusivity},
      {11, "degree-monotonicity", monotonicity},
      {12, "parser-roundtrip", parser_roundtrip},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %02d [%s]: %s%s%s\n", c.number, c.name.c_str(),
                outcome.pass ? "PASS" : "FAIL",
                outcome.detail.empty() ? "" : " - ",
                outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  }
  return failures;
}
