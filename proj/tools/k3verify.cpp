// k3verify: command-line front end for the order-66 verification engine.
//
// Exit codes: 0 success, 2 a verification step failed, 3 bad input.

#include "k3v/eigenprofile.hpp"
#include "k3v/engine.hpp"
#include "k3v/weights.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace k3v;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 2;
constexpr int kExitInput = 3;

struct Common {
  std::string json_path;
  bool verbose = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--json", c.json_path, "Write the JSON result to this path");
  app->add_flag("--verbose", c.verbose, "Print every step");
}

void write_json(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

int report_transcript(const ProofTranscript& t, const Common& c) {
  for (const auto& s : t.steps) {
    if (!c.verbose && s.verdict != Verdict::Fail) continue;
    std::cout << "[" << to_string(s.verdict) << "] " << s.id << ": " << s.desc << "\n";
    if (s.verdict != Verdict::Axiom) std::cout << "    computed: " << s.computed << "\n";
    if (s.verdict == Verdict::Fail) std::cout << "    expected: " << s.expected << "\n";
  }
  const auto failed = t.failed_step();
  std::cout << t.case_tag << " (characteristic " << t.characteristic << "): " << t.steps.size() << " steps, "
            << (failed ? "FAIL at " + *failed : std::string("pass")) << "\n";
  const std::string text = t.dump();
  if (!c.json_path.empty()) write_json(c.json_path, text);
  if (const char* dir = std::getenv("K3V_TRANSCRIPT_DIR"); dir && *dir) {
    std::filesystem::create_directories(dir);
    std::string name = t.case_tag;
    if (t.case_tag == "tame") name += "-" + t.characteristic;
    write_json((std::filesystem::path(dir) / (name + ".json")).string(), text);
  }
  return failed ? kExitFail : 0;
}

void emit(const ordered_json& j, const Common& c) {
  if (!c.json_path.empty()) write_json(c.json_path, j.dump(2) + "\n");
}

ProfileConstraint parse_constraint(const std::string& s) {
  // one | orbit:N | order:N | power:K:<profile>
  if (s == "one") return constraint::RequiresEigenvalueOne{};
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad constraint '" + s + "'");
  const std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
  if (kind == "orbit") return constraint::ContainsFullOrbit{std::stol(rest)};
  if (kind == "order") return constraint::ExactProfileOrder{std::stol(rest)};
  if (kind == "power") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw std::invalid_argument("power constraint needs power:K:<profile>");
    return constraint::PrescribedPowerProfile{std::stol(rest.substr(0, c2)), EigenProfile::parse(rest.substr(c2 + 1))};
  }
  throw std::invalid_argument("unknown constraint kind '" + kind + "'");
}

int cmd_profiles(long order, int dim, const std::vector<std::string>& extra, const Common& c) {
  std::vector<ProfileConstraint> cs = {constraint::ExactProfileOrder{order}};
  for (const auto& s : extra) cs.push_back(parse_constraint(s));
  const auto ps = enumerate_profiles(dim, cs);
  ordered_json j;
  j["order"] = std::to_string(order);
  j["dim"] = std::to_string(dim);
  j["constraints"] = ordered_json::array();
  for (const auto& x : cs) j["constraints"].push_back(describe(x));
  j["profiles"] = ordered_json::array();
  for (const auto& p : ps) {
    std::cout << p.to_string();
    if (c.verbose) std::cout << "  e = " << lefschetz_number(p) << ", invariant dim " << invariant_dimension(p);
    std::cout << "\n";
    j["profiles"].push_back(p.to_string());
  }
  std::cout << ps.size() << " profile(s)\n";
  emit(j, c);
  return 0;
}

int cmd_weights(const Fixture& f, long modulus, const std::vector<std::string>& relations, const Common& c) {
  const auto& w = f.model;
  const bool translation = f.action && f.action->base.kind() == BaseAction::Kind::Translation;
  std::vector<std::vector<long>> monomials;
  if (translation) {
    monomials = {{0, 2}, {3, 0}, {0, 0}};
  } else {
    monomials = {{0, 2, 0}, {3, 0, 0}};
    for (int i : w.a().support()) monomials.push_back({1, 0, i});
    for (int i : w.b().support()) monomials.push_back({0, 0, i});
  }
  if (modulus == 0) {
    if (f.action)
      modulus = translation ? lcm(f.action->x.modulus(), f.action->y.modulus())
                            : lcm(lcm(f.action->x.modulus(), f.action->y.modulus()), f.action->base.factor().modulus());
    else
      modulus = 66;
  }
  CongruenceSystem s = weights_from_invariance(monomials, modulus);
  for (const auto& r : relations) s.add(r);
  const auto sol = solve(s);
  std::cout << "system " << s.to_string() << "\n";
  for (const auto& x : sol) std::cout << x.to_string() << "\n";
  std::cout << sol.size() << " solution(s)\n";
  ordered_json j;
  j["model"] = f.name;
  j["system"] = s.to_string();
  j["solutions"] = ordered_json::array();
  for (const auto& x : sol) j["solutions"].push_back(x.to_string());
  int rc = 0;
  if (f.action) {
    try {
      const RootOfUnity m = verify_equivariance(w, f.action->x, f.action->y, f.action->base);
      const long order = lcm(lcm(f.action->x.primitive_order(), f.action->y.primitive_order()), f.action->base.order());
      const auto d = order_decomposition(order, m);
      std::cout << "fixture action: multiplier " << m.to_string() << ", ord = " << d.to_string() << "\n";
      j["multiplier"] = m.to_string();
      j["order"] = d.to_string();
    } catch (const NonEquivariantError& e) {
      std::cout << "fixture action is not equivariant: " << e.what() << "\n";
      j["equivariance"] = std::string("fails at ") + e.monomial();
      rc = kExitFail;
    }
  }
  emit(j, c);
  return rc;
}

int cmd_fibration(const Fixture& f, const Common& c) {
  const auto& w = f.model;
  const auto ledger = euler_ledger(w);
  ordered_json j;
  j["model"] = f.name;
  j["equation"] = w.to_string();
  j["discriminant"] = discriminant(w).to_string();
  j["places"] = ordered_json::array();
  std::cout << w.to_string() << "\nDelta = " << discriminant(w).to_string() << "\n";
  std::vector<PlacePacket> places;
  for (const auto& e : ledger.entries) {
    std::cout << "  " << e.place.label() << " (degree " << e.place.residue_degree << "): v(A) = "
              << (e.v_a == kInfiniteValuation ? std::string("inf") : std::to_string(e.v_a))
              << ", v(B) = " << (e.v_b == kInfiniteValuation ? std::string("inf") : std::to_string(e.v_b))
              << ", v(Delta) = " << e.v_delta << ", " << e.type.name() << "\n";
    j["places"].push_back({{"place", e.place.label()},
                           {"degree", std::to_string(e.place.residue_degree)},
                           {"type", e.type.name()},
                           {"euler", std::to_string(e.type.euler_number())}});
    places.push_back(e.place);
  }
  std::cout << "Euler total " << ledger.total << (ledger.is_k3() ? " (K3)" : "") << "\n";
  j["euler_total"] = std::to_string(ledger.total);
  int rc = 0;
  if (f.action) {
    const auto& base = f.action->base;
    const auto d = base_orbits(base, places);
    std::cout << "base action " << base.to_string() << "\n";
    for (const auto& p : d.fixed_points)
      std::cout << "  fixed " << p.label << (p.place ? " (singular place)" : " (smooth)") << "\n";
    for (const auto& g : d.orbits) std::cout << "  " << g.count << " orbit(s) of length " << g.length << "\n";
    j["orbits"] = std::to_string(d.orbit_count());
    long cusps = ledger.geometric_count(KodairaType(KodairaType::Kind::II));
    const auto v = force_a_zero(w.a().degree(), static_cast<int>(cusps), base);
    std::cout << "force A = 0: " << (v.forced ? "yes" : "no") << " (" << v.reason << ")\n";
    j["force_a_zero"] = v.forced ? "yes" : "no";
    try {
      const auto m = verify_equivariance(w, f.action->x, f.action->y, base);
      std::cout << "equivariant, 2-form multiplier " << m.to_string() << "\n";
      j["multiplier"] = m.to_string();
    } catch (const NonEquivariantError& e) {
      std::cout << "not equivariant: " << e.what() << "\n";
      j["multiplier"] = "none";
      rc = kExitFail;
    }
  }
  emit(j, c);
  return rc;
}

int cmd_count(const Fixture& f, const std::string& q_arg, long reduce_p, const Common& c) {
  WeierstrassModel w = f.model;
  if (w.characteristic() == 0) {
    if (reduce_p == 0) throw std::invalid_argument("model is over Q: pass --reduce <p>");
    w = w.reduce(static_cast<unsigned long>(reduce_p));
  }
  const long p = static_cast<long>(w.characteristic());
  long q;
  if (q_arg == "p")
    q = p;
  else if (q_arg == "p2")
    q = p * p;
  else
    q = std::stol(q_arg);
  const auto r = count_points(w, q);
  const auto h = hasse_check(r);
  std::cout << "#" << f.name << "(F_" << q << ") = " << r.total << "\n";
  ordered_json j;
  j["model"] = f.name;
  j["q"] = std::to_string(q);
  j["total"] = std::to_string(r.total);
  j["hasse"] = h.pass ? "pass" : "fail";
  if (c.verbose) {
    j["fibres"] = ordered_json::array();
    for (const auto& x : r.fibres) {
      std::cout << "  t = " << x.base_point << ": " << x.count << " (" << x.type.name() << ")\n";
      j["fibres"].push_back({{"t", x.base_point}, {"count", std::to_string(x.count)}, {"type", x.type.name()}});
    }
  }
  std::cout << "Hasse bound on " << h.smooth_fibres << " smooth fibres: " << (h.pass ? "pass" : h.first_failure)
            << "\n";
  emit(j, c);
  return h.pass ? 0 : kExitFail;
}

int cmd_supersingular(long p, long m, const Common& c) {
  if (m != 0) {
    const auto t = supersingular_congruence_test(p, m);
    std::cout << "p = " << p << ", m = " << m << ": " << (t.supersingular ? "yes" : "no");
    if (t.nu) std::cout << " (nu = " << *t.nu << ")";
    std::cout << "\n";
    ordered_json j;
    j["p"] = std::to_string(p);
    j["m"] = std::to_string(m);
    j["supersingular"] = t.supersingular ? "yes" : "no";
    j["nu"] = t.nu ? std::to_string(*t.nu) : "none";
    emit(j, c);
    return 0;
  }
  const auto r = supersingularity_report(p);
  std::cout << r.to_text();
  emit(r.to_json(c.verbose), c);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the order-66 K3 classification steps"};
  app.require_subcommand(1);
  Common common;

  auto* verify = app.add_subcommand("verify", "Run a case analysis and print its transcript");
  verify->require_subcommand(1);
  long characteristic = 0;
  std::string perturb = "none", model_path;
  auto* tame = verify->add_subcommand("tame", "Tame characteristic 0 or p >= 5, p != 11");
  tame->add_option("--char", characteristic, "Characteristic")->required();
  auto* wild = verify->add_subcommand("wild", "Characteristic 11");
  auto* complex = verify->add_subcommand("complex", "Complex numbers");
  for (auto* s : {tame, wild, complex}) {
    add_common(s, common);
    s->add_option("--perturb", perturb, "none, b-coefficient, profile-multiplicity or omega-constant");
    s->add_option("--model", model_path, "Replace the built-in model by a fixture");
  }

  auto* profiles = app.add_subcommand("profiles", "Enumerate eigenvalue profiles");
  long order = 66;
  int dim = 22;
  std::vector<std::string> constraints;
  profiles->add_option("--order", order, "Exact order")->required();
  profiles->add_option("--dim", dim, "Dimension")->capture_default_str();
  profiles->add_option("--constraints", constraints, "one | orbit:N | order:N | power:K:<profile>");
  add_common(profiles, common);

  auto* weights = app.add_subcommand("weights", "Solve the weight congruences of a model");
  std::string model = "X66";
  long modulus = 0;
  std::vector<std::string> relations;
  weights->add_option("--model", model, "X66, Y66 or a fixture path")->required();
  weights->add_option("--modulus", modulus, "Modulus (default: from the fixture action, else 66)");
  weights->add_option("--relation", relations, "Extra relation such as \"11a = 22\"");
  add_common(weights, common);

  auto* fibration = app.add_subcommand("fibration", "Kodaira ledger and base orbits of a model");
  fibration->add_option("--model", model, "X66, Y66 or a fixture path")->required();
  add_common(fibration, common);

  auto* count = app.add_subcommand("count", "Brute-force point count");
  std::string q = "p";
  long reduce_p = 0;
  count->add_option("--model", model, "X66, Y66 or a fixture path")->required();
  count->add_option("--q", q, "p, p2 or the field size")->capture_default_str();
  count->add_option("--reduce", reduce_p, "Reduce a model over Q modulo this prime");
  add_common(count, common);

  auto* ss = app.add_subcommand("supersingular", "Delsarte congruence p^nu = -1 (mod m)");
  long p = 0, m = 0;
  ss->add_option("--p", p, "Prime")->required();
  ss->add_option("--m", m, "Modulus (default 66, or 12 for p = 11 with point counts)");
  add_common(ss, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (verify->parsed()) {
      EngineOptions opts;
      const auto pert = parse_perturbation(perturb);
      if (!pert) throw std::invalid_argument("unknown perturbation '" + perturb + "'");
      opts.perturbation = *pert;
      if (!model_path.empty()) opts.model = load_fixture(model_path);
      if (tame->parsed()) return report_transcript(run_tame_case(characteristic, opts), common);
      if (wild->parsed()) return report_transcript(run_wild_case(opts), common);
      return report_transcript(run_complex_case(opts), common);
    }
    if (profiles->parsed()) return cmd_profiles(order, dim, constraints, common);
    if (weights->parsed()) return cmd_weights(load_fixture(model), modulus, relations, common);
    if (fibration->parsed()) return cmd_fibration(load_fixture(model), common);
    if (count->parsed()) return cmd_count(load_fixture(model), q, reduce_p, common);
    if (ss->parsed()) return cmd_supersingular(p, m, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
