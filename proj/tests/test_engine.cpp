#include <doctest.h>

#include "k3v/engine.hpp"
#include "k3v/fact_table.hpp"

#include <set>

using namespace k3v;

namespace {

std::vector<std::string> ids(const ProofTranscript& t) {
  std::vector<std::string> out;
  for (const auto& s : t.steps) out.push_back(s.id);
  return out;
}

const ProofStep& step(const ProofTranscript& t, const std::string& id) {
  for (const auto& s : t.steps)
    if (s.id == id) return s;
  throw std::out_of_range(id);
}

}  // namespace

TEST_CASE("tame runs pass and are deterministic") {
  for (long c : {0L, 5L, 7L, 13L}) {
    CAPTURE(c);
    const auto a = run_tame_case(c);
    const auto b = run_tame_case(c);
    CHECK(a.pass());
    CHECK_FALSE(a.failed_step().has_value());
    CHECK(a.dump() == b.dump());
    CHECK(a.case_tag == "tame");
    CHECK(a.characteristic == std::to_string(c));
  }
  CHECK_THROWS_AS(run_tame_case(11), std::invalid_argument);
  CHECK_THROWS_AS(run_tame_case(3), std::invalid_argument);
  CHECK_THROWS_AS(run_tame_case(9), std::invalid_argument);
}

TEST_CASE("key steps of the tame run") {
  const auto t = run_tame_case(0);
  CHECK(step(t, "p1.enumerate").computed == step(t, "p1.enumerate").expected);
  CHECK(step(t, "p5.omega-weights").computed == "(a, b, c) = (2, 3, 6)");
  CHECK(step(t, "p6.order").computed == "1.66");
  CHECK(step(t, "p1.integrality").verdict == Verdict::Axiom);
  const auto all = ids(t);
  std::set<std::string> unique(all.begin(), all.end());
  CHECK(unique.size() == t.steps.size());
}

TEST_CASE("complex run is the tame run plus one axiom") {
  const auto c = run_complex_case();
  const auto t = run_tame_case(0);
  CHECK(c.pass());
  CHECK(c.case_tag == "complex");
  REQUIRE(c.steps.size() == t.steps.size() + 1);
  CHECK(c.steps[0].verdict == Verdict::Axiom);
  CHECK(c.steps[0].ref == "complex.projective");
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    CHECK(c.steps[i + 1].id == t.steps[i].id);
    CHECK(c.steps[i + 1].computed == t.steps[i].computed);
  }
}

TEST_CASE("wild run") {
  const auto a = run_wild_case();
  CHECK(a.pass());
  CHECK(a.case_tag == "wild-11");
  CHECK(a.characteristic == "11");
  CHECK(a.dump() == run_wild_case().dump());
  CHECK(step(a, "w6.order").computed == "11.6");
  CHECK(step(a, "w4.fix-g").verdict == Verdict::Pass);
}

TEST_CASE("axiom audit") {
  const auto& table = FactTable::standard();
  for (const auto& t : {run_tame_case(0), run_tame_case(7), run_complex_case(), run_wild_case()}) {
    CAPTURE(t.case_tag);
    const auto used = t.axiom_ids();
    CHECK(used == FactTable::declared_for(t.case_tag));
    for (const auto& s : t.steps) {
      if (s.verdict != Verdict::Axiom) continue;
      CHECK_NOTHROW(table.get(s.ref));
    }
  }
  CHECK_THROWS_AS(table.get("no.such-axiom"), std::out_of_range);
}

TEST_CASE("perturbations stop at the predicted step") {
  for (auto p : {Perturbation::BCoefficient, Perturbation::ProfileMultiplicity, Perturbation::OmegaConstant}) {
    CAPTURE(to_string(p));
    EngineOptions o;
    o.perturbation = p;
    const auto tame = run_tame_case(0, o);
    CHECK_FALSE(tame.pass());
    CHECK(tame.failed_step() == predicted_failure("tame", p));
    CHECK(tame.steps.back().id == predicted_failure("tame", p));
    CHECK(tame.steps.back().verdict == Verdict::Fail);
    const auto complex = run_complex_case(o);
    CHECK(complex.failed_step() == predicted_failure("complex", p));
    const auto wild = run_wild_case(o);
    CHECK(wild.failed_step() == predicted_failure("wild-11", p));
    CHECK(parse_perturbation(to_string(p)) == p);
  }
  CHECK_FALSE(parse_perturbation("bogus").has_value());
  CHECK(predicted_failure("tame", Perturbation::None).empty());
}

TEST_CASE("model override") {
  EngineOptions o;
  o.model = load_fixture(std::string(K3V_FIXTURE_DIR) + "/x66_tampered_b.json");
  const auto t = run_tame_case(0, o);
  CHECK(t.failed_step() == "p4.delta-shape");
  o.model = load_fixture(std::string(K3V_FIXTURE_DIR) + "/x66.json");
  CHECK(run_tame_case(0, o).pass());
  CHECK_THROWS_AS(run_tame_case(7, o), std::invalid_argument);
}

TEST_CASE("transcript JSON layout") {
  const auto t = run_tame_case(7);
  const auto j = t.to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"case", "characteristic", "steps", "verdict"});
  std::vector<std::string> step_keys;
  for (const auto& [k, v] : j["steps"][0].items()) step_keys.push_back(k);
  CHECK(step_keys == std::vector<std::string>{"id", "desc", "inputs", "computed", "expected", "verdict", "ref"});
  for (const auto& s : j["steps"]) {
    CHECK(s["id"].is_string());
    CHECK(s["verdict"].is_string());
  }
  CHECK(t.dump().back() == '\n');
  CHECK(nlohmann::ordered_json::parse(t.dump()) == j);
}

TEST_CASE("supersingularity report") {
  const auto r = supersingularity_report(131);
  CHECK(r.m == 66);
  CHECK(r.test.supersingular);
  CHECK_FALSE(r.over_p.has_value());
  const auto w = supersingularity_report(11);
  CHECK(w.m == 12);
  CHECK(w.test.supersingular);
  REQUIRE(w.over_p.has_value());
  REQUIRE(w.over_p2.has_value());
  CHECK(w.over_p->total == 144);
  CHECK(w.over_p2->total == 17304);
  CHECK(w.prediction == 17304);
  CHECK_FALSE(w.to_text().empty());
  CHECK(w.to_json(false).contains("p"));
  CHECK_FALSE(supersingularity_report(5).test.supersingular);
}
