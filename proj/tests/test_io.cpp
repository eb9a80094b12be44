#include <gtest/gtest.h>

#include "partycred/io.hpp"
#include "partycred/poly_solvers.hpp"
#include "partycred/search.hpp"

using namespace partycred;

namespace {

const char* kMinimal = R"(candidates: p a
rule: plurality
distinguished: p
party P1 2: p > a
)";

const char* kExample = R"(# three parties
candidates: p a b
rule: plurality
model: unique
dest: one
direction: min
k: 2
distinguished: p
party P1 3: p > a > b   # the big one
party P2 1: a > p > b
party P3 1: b > a > p
)";

int error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(ParseInstance, Minimal) {
  const auto doc = parse_instance(kMinimal);
  EXPECT_EQ(doc.candidate_names, (std::vector<std::string>{"p", "a"}));
  EXPECT_EQ(doc.instance.election.num_parties(), 1);
  EXPECT_EQ(doc.instance.p, 0);
  EXPECT_EQ(doc.instance.k, 0);
  EXPECT_EQ(doc.instance.model, WinnerModel::Unique);
  EXPECT_EQ(doc.instance.mode, DestinationMode::One);
}

TEST(ParseInstance, Copeland) {
  std::string text = kMinimal;
  text.replace(text.find("plurality"), 9, "copeland:1/2");
  const auto doc = parse_instance(text);
  ASSERT_TRUE(std::holds_alternative<CopelandRule>(doc.instance.rule));
  EXPECT_EQ(std::get<CopelandRule>(doc.instance.rule).alpha, Rational(1, 2));
}

TEST(ParseInstance, RejectsDecimalAlpha) {
  std::string text = kMinimal;
  text.replace(text.find("plurality"), 9, "copeland:0.5");
  EXPECT_EQ(error_line(text), 2);
}

TEST(ParseInstance, OmittedCandidateReportsLine) {
  const std::string text = "candidates: p a b\nrule: borda\ndistinguished: p\nparty X 1: p > a\n";
  EXPECT_EQ(error_line(text), 4);
}

TEST(ParseInstance, DuplicateKey) {
  const std::string text = std::string(kMinimal) + "rule: veto\n";
  EXPECT_EQ(error_line(text), 5);
}

TEST(ParseInstance, UnknownCandidate) {
  EXPECT_EQ(error_line("candidates: p a\nrule: plurality\ndistinguished: q\nparty X 1: p > a\n"), 3);
  EXPECT_EQ(error_line("candidates: p a\nrule: plurality\ndistinguished: p\nparty X 1: p > z\n"), 4);
}

TEST(ParseInstance, NonWinnerListsWinners) {
  const std::string text = "candidates: p a\nrule: plurality\ndistinguished: p\nparty X 1: a > p\n";
  try {
    parse_instance(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("{a}"), std::string::npos) << e.what();
  }
}

TEST(ParseInstance, MissingKeysAndBadValues) {
  EXPECT_THROW(parse_instance("rule: plurality\n"), ParseError);
  EXPECT_EQ(error_line(std::string(kMinimal) + "model: both\n"), 5);
  EXPECT_EQ(error_line(std::string(kMinimal) + "k: -1\n"), 5);
  EXPECT_EQ(error_line(std::string(kMinimal) + "party P2 0: p > a\n"), 5);
  EXPECT_EQ(error_line(std::string(kMinimal) + "weird line\n"), 5);
}

TEST(ParseInstance, RoundTrip) {
  const auto doc = parse_instance(kExample);
  const std::string text = serialize_instance(doc);
  const auto again = parse_instance(text);
  EXPECT_EQ(again.instance, doc.instance);
  EXPECT_EQ(again.candidate_names, doc.candidate_names);
  EXPECT_EQ(again.party_names, doc.party_names);
  EXPECT_EQ(serialize_instance(again), text);
}

TEST(ParseRule, Variants) {
  EXPECT_EQ(rule_name(parse_rule("approval:2", 4)), "approval:2");
  EXPECT_EQ(rule_name(parse_rule("scoring:3,1,0", 3)), "scoring:3,1,0");
  EXPECT_THROW(parse_rule("approval:9", 3), ValidationError);
  EXPECT_THROW(parse_rule("borda:1", 3), ValidationError);
  EXPECT_THROW(parse_rule("instant-runoff", 3), ValidationError);
}

TEST(SerializeResult, Infeasible) {
  const auto doc = parse_instance(kMinimal);
  SolveResult r;
  r.status = SolveStatus::Infeasible;
  r.solver = "min_scoring";
  const std::string json = serialize_result(doc, r);
  EXPECT_NE(json.find("\"value\": \"infeasible\""), std::string::npos);
  EXPECT_NE(json.find("\"answer\": false"), std::string::npos);
  EXPECT_EQ(json.find("wall_time_ms"), std::string::npos);
}

TEST(SerializeResult, AnswerComparesWithK) {
  const auto doc = parse_instance(kExample);
  const auto r = min_scoring(doc.instance);
  ASSERT_EQ(r.value, 1);
  const std::string json = serialize_result(doc, r);
  EXPECT_NE(json.find("\"answer\": true"), std::string::npos);
  EXPECT_NE(json.find("\"from\": \"P1\""), std::string::npos);
  EXPECT_EQ(json, serialize_result(doc, r));
  // Key order is fixed.
  EXPECT_LT(json.find("\"direction\""), json.find("\"rule\""));
  EXPECT_LT(json.find("\"value\""), json.find("\"answer\""));
  EXPECT_LT(json.find("\"witness\""), json.find("\"solver\""));
  EXPECT_NE(serialize_result(doc, r, 1.5).find("wall_time_ms"), std::string::npos);
}

TEST(SerializeResult, BudgetExhausted) {
  const auto doc = parse_instance(kExample);
  SolveResult r;
  r.status = SolveStatus::BudgetExhausted;
  EXPECT_NE(serialize_result(doc, r).find("\"budget_exhausted\""), std::string::npos);
}

TEST(ParseGraph, Format) {
  const auto g = parse_graph("# a path\nn 4\nt 2\ne 1 2\ne 2 3\ne 3 4\n");
  EXPECT_EQ(g.num_vertices, 4);
  EXPECT_EQ(g.bound, 2);
  EXPECT_EQ(g.edges.front(), (std::pair<int, int>{0, 1}));
  EXPECT_THROW(parse_graph("n 2\ne 1 3\n"), ParseError);
  EXPECT_THROW(parse_graph("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("n 2\ne 1 1\n"), ParseError);
}

TEST(ParseX3C, Format) {
  const auto x = parse_x3c("m 3\ns 1 2 3\ns 3 2 1\n");
  EXPECT_EQ(x.universe_size, 3);
  EXPECT_EQ(x.sets.size(), 2u);
  EXPECT_EQ(x.sets[1], (std::array<int, 3>{2, 1, 0}));
  EXPECT_THROW(parse_x3c("m 3\ns 1 2\n"), ParseError);
  EXPECT_THROW(parse_x3c("m 3\ns 1 2 4\n"), ParseError);
}

TEST(Generate, Deterministic) {
  GenerateOptions o;
  o.seed = 42;
  o.rule = "borda";
  EXPECT_EQ(serialize_instance(generate_random(o)), serialize_instance(generate_random(o)));
  o.seed = 43;
  GenerateOptions other = o;
  other.seed = 44;
  EXPECT_NE(serialize_instance(generate_random(o)), serialize_instance(generate_random(other)));
}

TEST(Generate, RoundTripsSeedOne) {
  GenerateOptions o;
  o.seed = 1;
  o.candidates = 3;
  o.parties = 3;
  o.min_size = 1;
  o.max_size = 3;
  const auto doc = generate_random(o);
  const std::string text = serialize_instance(doc);
  EXPECT_NE(text.find("seed=1"), std::string::npos);
  const auto parsed = parse_instance(text);
  EXPECT_EQ(parsed.instance, doc.instance);
}

TEST(Generate, CondorcetWinnerIsDistinguished) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenerateOptions o;
    o.seed = seed;
    o.candidates = 4;
    o.parties = 3;
    o.rule = "condorcet";
    const auto doc = generate_random(o);
    EXPECT_EQ(condorcet_winner(materialize(doc.instance.election)), doc.instance.p);
  }
}

TEST(Generate, RetryLimit) {
  GenerateOptions o;
  o.rule = "condorcet";
  o.max_attempts = 0;
  EXPECT_THROW(generate_random(o), std::runtime_error);
}

TEST(Provenance, Sidecar) {
  const GraphInstance path{4, {{0, 1}, {1, 2}, {2, 3}}, 2};
  const auto r = reduce_is_to_maximin_max(path);
  const std::string json = serialize_provenance(r);
  EXPECT_NE(json.find("\"reduction\": \"is-maximin-max\""), std::string::npos);
  EXPECT_NE(json.find("\"destination\": \"P\""), std::string::npos);
  const auto doc = document_from(r);
  EXPECT_EQ(parse_instance(serialize_instance(doc)).instance, r.instance);
}
