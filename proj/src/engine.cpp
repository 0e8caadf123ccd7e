#include "k3v/engine.hpp"

#include "k3v/eigenprofile.hpp"
#include "k3v/fact_table.hpp"
#include "k3v/fixedlocus.hpp"
#include "k3v/weights.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace k3v {

std::optional<Perturbation> parse_perturbation(const std::string& name) {
  if (name == "none") return Perturbation::None;
  if (name == "b-coefficient") return Perturbation::BCoefficient;
  if (name == "profile-multiplicity") return Perturbation::ProfileMultiplicity;
  if (name == "omega-constant") return Perturbation::OmegaConstant;
  return std::nullopt;
}

std::string to_string(Perturbation p) {
  switch (p) {
    case Perturbation::None: return "none";
    case Perturbation::BCoefficient: return "b-coefficient";
    case Perturbation::ProfileMultiplicity: return "profile-multiplicity";
    case Perturbation::OmegaConstant: return "omega-constant";
  }
  return "?";
}

std::string predicted_failure(const std::string& case_tag, Perturbation p) {
  const bool wild = case_tag == "wild-11";
  switch (p) {
    case Perturbation::None: return "";
    case Perturbation::BCoefficient: return wild ? "w5.delta-shape" : "p4.delta-shape";
    case Perturbation::ProfileMultiplicity: return wild ? "w3.survivor" : "p2.survivor";
    case Perturbation::OmegaConstant: return wild ? "w6.omega-weights" : "p5.omega-weights";
  }
  return "";
}

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

struct Halt {};

class Builder {
 public:
  Builder(std::string tag, std::string characteristic) {
    t_.case_tag = std::move(tag);
    t_.characteristic = std::move(characteristic);
  }

  void axiom(const std::string& id, const std::string& axiom_id, const std::string& conclusion) {
    const Axiom& a = FactTable::standard().get(axiom_id);
    if (std::find(a.conclusions.begin(), a.conclusions.end(), conclusion) == a.conclusions.end())
      throw std::logic_error("axiom " + axiom_id + " does not list conclusion: " + conclusion);
    t_.steps.push_back({id, a.citation, {{"hypothesis", a.hypothesis}}, conclusion, "", Verdict::Axiom, axiom_id});
  }

  // Records a computed step; stops the run on mismatch or on a module error.
  std::string check(const std::string& id, const std::string& desc, Inputs inputs,
                    const std::function<std::string()>& compute, const std::string& expected,
                    const std::string& ref) {
    std::string computed;
    try {
      computed = compute();
    } catch (const std::exception& e) {
      computed = std::string("error: ") + e.what();
    }
    const Verdict v = computed == expected ? Verdict::Pass : Verdict::Fail;
    t_.steps.push_back({id, desc, std::move(inputs), computed, expected, v, ref});
    if (v == Verdict::Fail) throw Halt{};
    return computed;
  }

  ProofTranscript& transcript() { return t_; }

 private:
  ProofTranscript t_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = "; ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string profiles_string(std::vector<EigenProfile> ps) {
  std::sort(ps.begin(), ps.end());
  std::vector<std::string> s;
  for (const auto& p : ps) s.push_back(p.to_string());
  return join(s);
}

std::string char_string(unsigned long p) { return std::to_string(p); }

const EigenProfile kSurvivor({{1, 2}, {66, 1}});
const EigenProfile kMinusProfile({{1, 1}, {2, 1}, {66, 1}});
const EigenProfile kZeta33Profile({{1, 1}, {2, 1}, {33, 1}});

EigenProfile target_profile(const EngineOptions& o) {
  return o.perturbation == Perturbation::ProfileMultiplicity ? kMinusProfile : kSurvivor;
}

WeierstrassModel perturb_model(const WeierstrassModel& w, Perturbation p) {
  if (p != Perturbation::BCoefficient) return w;
  std::vector<Scalar> b = w.b().coefficients();
  for (auto it = b.rbegin(); it != b.rend(); ++it)
    if (!it->is_zero()) {
      *it = *it * Scalar(w.characteristic(), 2L);
      break;
    }
  return WeierstrassModel(w.a(), BinaryForm(w.characteristic(), b));
}

// ---------------------------------------------------------------- phases

// Eliminates [1, -1, z66:20] through the fixed loci of g^33, g^11, g^22.
void eliminate_minus_profile(Builder& b, const std::string& ph, const std::vector<EigenProfile>& candidates,
                             const EigenProfile& target) {
  const EigenProfile& m = kMinusProfile;
  const std::string ms = m.to_string();
  const EigenProfile g33 = power_profile(m, 33), g11 = power_profile(m, 11), g22 = power_profile(m, 22);

  b.check(ph + ".g33", "[g^33*] and e(g^33) for the candidate " + ms, {{"profile", ms}, {"power", "33"}},
          [&] { return g33.to_string() + ", e = " + std::to_string(lefschetz_number(g33)); },
          EigenProfile({{1, 1}, {2, 21}}).to_string() + ", e = -18", "eigenprofile.power_profile, lefschetz_number");
  b.check(ph + ".g33-invariant", "dimension of the g^33-invariant subspace", {{"profile", g33.to_string()}},
          [&] { return std::to_string(invariant_dimension(g33)); }, "1", "eigenprofile.invariant_dimension");
  b.axiom(ph + ".involution", "involution.rank-one",
          "X / h is the projective plane, Fix(h) maps to a smooth sextic");
  b.check(ph + ".c10", "Fix(g^33) is a smooth curve with Euler number e(g^33)",
          {{"profile", g33.to_string()}, {"locus", "C10"}},
          [&] {
            const auto v = check_lefschetz_consistency({0, {{10}}}, g33);
            return std::string(v.pass ? "consistent" : "inconsistent") + ": genus 10";
          },
          "consistent: genus 10", "fixedlocus.check_lefschetz_consistency");
  b.check(ph + ".g11", "Fix(g^11) lies in C10, so it is finite", {{"profile", g11.to_string()}, {"locus", "12 points"}},
          [&] {
            const auto v = check_lefschetz_consistency({12, {}}, g11);
            return "e(g^11) = " + std::to_string(v.lefschetz) + (v.pass ? ", 12 points" : ", mismatch");
          },
          "e(g^11) = 12, 12 points", "fixedlocus.check_lefschetz_consistency");
  b.check(ph + ".g22", "[g^22*], e(g^22) and invariant dimension", {{"profile", ms}, {"power", "22"}},
          [&] {
            return g22.to_string() + ", e = " + std::to_string(lefschetz_number(g22)) +
                   ", dim = " + std::to_string(invariant_dimension(g22));
          },
          EigenProfile({{1, 2}, {3, 10}}).to_string() + ", e = -6, dim = 2", "eigenprofile.power_profile");
  b.axiom(ph + ".chern", "chern.injective", "Fix(g^22) contains no smooth rational curve");
  b.check(ph + ".g22-locus", "C_{k+4} plus 2k points matches e(g^22) for every k",
          {{"profile", g22.to_string()}, {"k", "0..8"}},
          [&] {
            for (long k = 0; k <= 8; ++k)
              if (!check_lefschetz_consistency({2 * k, {{k + 4}}}, g22).pass) return "fails at k = " + std::to_string(k);
            return std::string("consistent for k = 0..8");
          },
          "consistent for k = 0..8", "fixedlocus.check_lefschetz_consistency");
  b.check(ph + ".hodge", "Hodge index bound for C_{k+4} against C10 with at most 12 common points",
          {{"fixed", "C10"}, {"max_intersection", "12"}, {"offset", "4"}},
          [&] {
            const auto h = hodge_index_genus_bound({10}, 12, 4);
            std::vector<std::string> f, e;
            for (long k : h.feasible) f.push_back(std::to_string(k));
            for (long k : h.equality) e.push_back(std::to_string(k));
            return "k in {" + join(f, ", ") + "}, equality at {" + join(e, ", ") + "}";
          },
          "k in {0, 1}, equality at {1}", "fixedlocus.hodge_index_genus_bound");
  b.check(ph + ".k0", "k = 0: C4 and C10 would be independent invariant classes",
          {{"ratio", "C4^2 / C10^2 = 6/18"}, {"profile", ms}},
          [&] {
            const bool sq = is_rational_square(Rational(6, 18));
            return std::string("square: ") + (sq ? "true" : "false") +
                   ", invariant dimension " + std::to_string(invariant_dimension(m)) + " < 2";
          },
          "square: false, invariant dimension 1 < 2", "fixedlocus.is_rational_square");
  b.check(ph + ".k1", "k = 1: equality forces C5.C10 = 12, and g^33 on C5 has 12 fixed points",
          {{"C5^2 * C10^2", "8 * 18"}, {"fixed points", "12"}},
          [&] {
            const long prod = CurveComponent{5}.self_intersection() * CurveComponent{10}.self_intersection();
            return "C5^2 C10^2 = " + std::to_string(prod) + ", genus(C5 / g^33) = " +
                   std::to_string(rh_quotient_genus(2, 5, 12));
          },
          "C5^2 C10^2 = 144, genus(C5 / g^33) = 0", "fixedlocus.rh_quotient_genus");
  b.axiom(ph + ".plane", "plane.order-three", "its fixed locus is a line and a point");
  b.check(ph + ".plane-locus", "Fix of the induced order-3 map would be a conic and a point",
          {{"locus", "conic + point"}},
          [] {
            const std::set<std::string> allowed = {"3 points", "line + point"};
            return std::string(allowed.count("conic + point") ? "allowed" : "not allowed: k = 1 excluded");
          },
          "not allowed: k = 1 excluded", "fact_table.plane.order-three");
  b.check(ph + ".survivor", "remaining eigenvalue profile", {{"candidates", profiles_string(candidates)}},
          [&] {
            std::vector<EigenProfile> left;
            for (const auto& c : candidates)
              if (!(c == m)) left.push_back(c);
            return profiles_string(left);
          },
          target.to_string(), "eigenprofile.enumerate_profiles");
}

struct Configuration {
  int orbits_i1 = 0, orbits_ii = 0, fixed_i1 = 0, fixed_ii = 0;
  std::string to_string() const {
    std::vector<std::string> s;
    if (orbits_ii) s.push_back(std::to_string(orbits_ii) + " orbit(s) of 11 II");
    if (orbits_i1) s.push_back(std::to_string(orbits_i1) + " orbit(s) of 11 I1");
    if (fixed_ii) s.push_back(std::to_string(fixed_ii) + " fixed II");
    if (fixed_i1) s.push_back(std::to_string(fixed_i1) + " fixed I1");
    return join(s, " + ");
  }
};

// Singular fibres: orbits of length 11 and fixed fibres of type I1 or II,
// Euler total 24, and e(g^11) = e(R) + #singular fibres = 14.
std::vector<Configuration> fibre_configurations(int max_fixed, long e_g11) {
  std::vector<Configuration> out;
  for (int o1 = 0; o1 <= 2; ++o1)
    for (int o2 = 0; o1 + o2 <= 2; ++o2)
      for (int f1 = 0; f1 <= max_fixed; ++f1)
        for (int f2 = 0; f1 + f2 <= max_fixed; ++f2) {
          if (o1 + o2 == 0) continue;
          const long euler = 11 * (o1 + 2 * o2) + f1 + 2 * f2;
          const long singular = 11 * (o1 + o2) + f1 + f2;
          if (euler == 24 && 2 + singular == e_g11) out.push_back({o1, o2, f1, f2});
        }
  return out;
}

// Invariant elliptic fibration facts for the surviving profile.
void fibration_phase(Builder& b, const std::string& ph, const EigenProfile& t, unsigned long p, bool wild) {
  const std::string ts = t.to_string();
  const EigenProfile g33 = power_profile(t, 33), g11 = power_profile(t, 11);
  if (!wild)
    b.check(ph + ".e", "e(g) for the surviving profile", {{"profile", ts}},
            [&] { return std::to_string(lefschetz_number(t)); }, "3", "eigenprofile.lefschetz_number");
  b.check(ph + ".g33", "[g^33*] and its invariant dimension", {{"profile", ts}, {"power", "33"}},
          [&] { return g33.to_string() + ", dim = " + std::to_string(invariant_dimension(g33)); },
          EigenProfile({{1, 2}, {2, 20}}).to_string() + ", dim = 2", "eigenprofile.power_profile");
  b.axiom(ph + ".involution", "involution.rank-two",
          "Fix(h) = C9 (genus 9, a 4-section) or R + C10 (a section and a genus 10 3-section)");
  b.check(ph + ".g11", "[g^11*] and e(g^11)", {{"profile", ts}, {"power", "11"}},
          [&] { return g11.to_string() + ", e = " + std::to_string(lefschetz_number(g11)); },
          EigenProfile({{1, 2}, {6, 10}}).to_string() + ", e = 14", "eigenprofile.lefschetz_number");
  b.check(ph + ".rh", "order-3 automorphism of a genus 9 curve against the 14 fixed points of g^11",
          {{"order", "3"}, {"genus", "9"}, {"e(g^11)", "14"}},
          [&] {
            const long r = rh_max_fixed_points(3, 9);
            return std::to_string(r) + (r < lefschetz_number(g11) ? " < " : " >= ") +
                   std::to_string(lefschetz_number(g11)) + ": genus 9 branch excluded";
          },
          "11 < 14: genus 9 branch excluded", "fixedlocus.rh_max_fixed_points");
  b.axiom(ph + ".section-branch", "involution.rank-two",
          "Fix(h) = R + C10, a section and a genus 10 3-section, X / h = F4");
  b.axiom(ph + ".fibration", "fibration.invariant", "g preserves the pulled back ruling");
  b.axiom(ph + ".classes", "fibre.independent-classes",
          "fibre components, the zero section and an ample class span 3 invariant classes");
  b.check(ph + ".reducible-fibres", "I2 and III fibres with orbits of length 1, 3 or 11 need 3 invariant classes",
          {{"profile", ts}, {"powers", "6, 22"}},
          [&] {
            return "dim H^(g^6) = " + std::to_string(invariant_dimension(power_profile(t, 6))) +
                   ", dim H^(g^22) = " + std::to_string(invariant_dimension(power_profile(t, 22)));
          },
          "dim H^(g^6) = 2, dim H^(g^22) = 2", "eigenprofile.invariant_dimension");
  b.axiom(ph + ".curve-bound", "curve.automorphism-bound",
          "its order is at most 6, 12 or 24 in characteristic 0 or >= 5, 3, 2");
  b.check(ph + ".long-orbit", "g^3 fixing all fibres would act with order 22 on a smooth fibre",
          {{"characteristic", char_string(p)}},
          [&] {
            const int bound = ec_automorphism_bound(p);
            return std::to_string(bound) + (bound < 22 ? " < 22: an orbit of length 11 exists" : " >= 22");
          },
          "6 < 22: an orbit of length 11 exists", "elliptic.ec_automorphism_bound");
  if (wild) b.axiom(ph + ".base-fixed-point", "wild.base-fixed-point", "it fixes exactly one point");
  const int max_fixed = wild ? 1 : 2;
  b.check(ph + ".configurations", "singular fibre configurations with Euler total 24 and e(g^11) = 14",
          {{"fixed base points", std::to_string(max_fixed)}, {"e(g^11)", "14"}},
          [&] {
            std::vector<std::string> s;
            for (const auto& c : fibre_configurations(max_fixed, lefschetz_number(g11))) s.push_back(c.to_string());
            return s.empty() ? std::string("none") : join(s);
          },
          "1 orbit(s) of 11 II + 1 fixed II", "engine.fibre_configurations");
  if (wild) {
    b.check(ph + ".fix-g", "Fix(g) lies in the fixed cuspidal fibre and in R + C10",
            {{"R.F", "1"}, {"C10.F", "3 at the cusp"}},
            [] {
              const long r_points = 1, c10_points = 3 / 3;
              return std::to_string(r_points + c10_points) + " points";
            },
            "2 points", "fact_table.involution.rank-two");
  } else {
    b.check(ph + ".fix-g", "Fix(g) = R.F_inf, R.F_0, C10.F_0 against e(g)", {{"locus", "3 points"}, {"profile", ts}},
            [&] {
              const auto v = check_lefschetz_consistency({3, {}}, t);
              return std::string(v.pass ? "consistent" : "inconsistent") + ": 3 points";
            },
            "consistent: 3 points", "fixedlocus.check_lefschetz_consistency");
  }
}

// Delta shape, ledger, base orbits, A = 0 and the normal form of B.
void discriminant_phase(Builder& b, const std::string& ph, const WeierstrassModel& w, const BaseAction& action,
                        bool wild) {
  const unsigned long p = w.characteristic();
  const Scalar one(p, 1L);
  // Orbit form: t1^11 - t0^11 (scaling) or t1^11 - t0^10 t1 (translation).
  std::vector<Scalar> orbit(12, Scalar(p, 0L));
  orbit[11] = one;
  (wild ? orbit[1] : orbit[0]) = -one;
  const BinaryForm orbit_form(p, orbit);
  std::vector<Scalar> fixed_c(2, Scalar(p, 0L));
  (wild ? fixed_c[0] : fixed_c[1]) = one;  // t0 (infinity) or t1 (t = 0)
  const BinaryForm fixed_form(p, fixed_c);
  const BinaryForm shape = fixed_form.pow(2) * orbit_form.pow(2);
  const BinaryForm delta = discriminant(w);

  b.check(ph + ".delta-shape", "Delta is a nonzero multiple of (fixed cusp)^2 (cusp orbit)^2",
          {{"A", w.a().to_string()}, {"B", w.b().to_string()}, {"shape", shape.to_string()}},
          [&] {
            const int top = shape.degree();
            int i = 0;
            while (i <= top && shape.coefficient(i).is_zero()) ++i;
            const Scalar c = delta.coefficient(i) / shape.coefficient(i);
            return std::string(!c.is_zero() && delta == shape * c ? "proportional" : "not proportional");
          },
          "proportional", "elliptic.discriminant");
  const EulerLedger ledger = euler_ledger(w);
  b.check(ph + ".ledger", "Kodaira types and Euler numbers over the places of Delta", {{"model", w.to_string()}},
          [&] {
            return std::to_string(ledger.geometric_count(KodairaType(KodairaType::Kind::II))) +
                   " x II of " + std::to_string(ledger.geometric_singular_fibres()) + " singular, total " +
                   std::to_string(ledger.total);
          },
          "12 x II of 12 singular, total 24", "elliptic.euler_ledger");
  std::vector<PlacePacket> places;
  for (const auto& e : ledger.entries) places.push_back(e.place);
  b.check(ph + ".orbits", "orbits of the base action on the singular places",
          {{"action", action.to_string()}, {"places", std::to_string(places.size()) + " packets"}},
          [&] {
            const auto d = base_orbits(action, places);
            std::vector<std::string> fixed;
            for (const auto& f : d.fixed_points) fixed.push_back(f.label + (f.place ? " (II)" : " (smooth)"));
            std::string orbits;
            for (const auto& g : d.orbits)
              orbits += (orbits.empty() ? "" : ", ") + std::to_string(g.count) + " x " + std::to_string(g.length);
            return "fixed " + join(fixed, ", ") + "; orbits " + orbits;
          },
          wild ? "fixed t = inf (II); orbits 1 x 11" : "fixed t = 0 (II), t = inf (smooth); orbits 1 x 11",
          "elliptic.base_orbits");
  b.check(ph + ".force-a", "12 cusps against an invariant A of degree 8",
          {{"deg A", "8"}, {"cusps", "12"}, {"action", action.to_string()}},
          [&] {
            const auto v = force_a_zero(8, 12, action);
            return std::string(v.forced ? "forced" : "not forced") + "; A " + (w.a().is_zero() ? "= 0" : "!= 0");
          },
          "forced; A = 0", "elliptic.force_a_zero");
  b.check(ph + ".constant", "with A = 0, Delta = -27 B^2 pins the constant", {{"B", w.b().to_string()}},
          [&] {
            const BinaryForm target = shape * Scalar(p, -27L);
            const BinaryForm b2 = w.b().pow(2);
            int i = 0;
            while (b2.coefficient(i).is_zero()) ++i;
            const Scalar a2 = b2.coefficient(i) / shape.coefficient(i);
            return "Delta = -27 (a fixed orbit)^2 with a^2 = " + a2.to_signed_string() +
                   (delta == target * a2 ? "" : " (mismatch)");
          },
          "Delta = -27 (a fixed orbit)^2 with a^2 = 1", "elliptic.discriminant");
  b.check(ph + ".normal-form", "B = a (fixed) (orbit) with a = 1", {{"B", w.b().to_string()}},
          [&] {
            const BinaryForm base = fixed_form * orbit_form;
            int i = 0;
            while (base.coefficient(i).is_zero()) ++i;
            const Scalar a = w.b().coefficient(i) / base.coefficient(i);
            return std::string(w.b() == base * a ? "a = " + a.to_signed_string() : "not of this form");
          },
          "a = 1", "elliptic.discriminant");
}

std::vector<std::vector<long>> model_monomials(const WeierstrassModel& w) {
  std::vector<std::vector<long>> m = {{0, 2, 0}, {3, 0, 0}};
  // Highest powers of t first, as the equation is usually written.
  const auto a = w.a().support(), b = w.b().support();
  for (auto it = a.rbegin(); it != a.rend(); ++it) m.push_back({1, 0, *it});
  for (auto it = b.rbegin(); it != b.rend(); ++it) m.push_back({0, 0, *it});
  return m;
}

std::string solutions_string(const std::vector<WeightSolution>& s) {
  if (s.empty()) return "no solution";
  std::vector<std::string> parts;
  for (const auto& x : s) parts.push_back(x.to_string());
  return join(parts);
}

void tame_weights_phase(Builder& b, const WeierstrassModel& w, const EngineOptions& o) {
  const long omega = o.perturbation == Perturbation::OmegaConstant ? 7 : 5;
  b.axiom("p5.cm", "fibre.cm-action", "x -> zeta_3 x, y -> -y");
  CongruenceSystem s = weights_from_invariance(model_monomials(w), 66);
  CongruenceSystem reference = weights_from_invariance({{0, 2, 0}, {3, 0, 0}, {0, 0, 12}, {0, 0, 1}}, 66);
  b.check("p5.system", "invariance of the equation under (x, y, t) -> (z^a x, z^b y, z^c t)",
          {{"monomials", "y^2, x^3, support of A x and B"}, {"modulus", "66"}},
          [&] { return s.to_string(); }, reference.to_string(), "weights.weights_from_invariance");
  s.add("11a = 22");
  s.add("11b = 33");
  b.check("p5.family", "solutions with the fibre action of g^11", {{"system", s.to_string()}},
          [&] { return solutions_string(solve(s)); },
          [] {
            std::vector<WeightSolution> fam;
            for (long k = 0; k < 11; ++k)
              fam.push_back({{"a", "b", "c"}, {mod(2 + 6 * k, 66), mod(k % 2 == 0 ? 3 + 9 * k : 36 + 9 * k, 66),
                                               mod(6 + 18 * k, 66)}});
            std::sort(fam.begin(), fam.end(), [](const auto& x, const auto& y) { return x.values < y.values; });
            return solutions_string(fam);
          }(),
          "weights.solve");
  s.add("a + c - b = " + std::to_string(omega));
  b.check("p5.omega-weights", "2-form multiplier z^(a + c - b) = z^5", {{"system", s.to_string()}},
          [&] { return solutions_string(solve(s)); }, "(a, b, c) = (2, 3, 6)", "weights.solve");
  b.check("p5.conjugates", "each primitive 66th root u gives the unique solution u (2, 3, 6)",
          {{"units", "20 residues prime to 66"}},
          [&] {
            long n = 0;
            for (long u = 1; u < 66; ++u) {
              if (gcd(u, 66) != 1) continue;
              CongruenceSystem c = weights_from_invariance(model_monomials(w), 66);
              c.add(Relation{{11, 0, 0}, {0, 0, 0}, 22 * u});
              c.add(Relation{{0, 11, 0}, {0, 0, 0}, 33 * u});
              c.add(Relation{{1, -1, 1}, {0, 0, 0}, omega * u});
              const auto sol = solve(c);
              if (sol.size() != 1 || sol[0].values != std::vector<long>{mod(2 * u, 66), mod(3 * u, 66), mod(6 * u, 66)})
                return "u = " + std::to_string(u) + ": " + solutions_string(sol);
              ++n;
            }
            return std::to_string(n) + " conjugate choices, each unique; normalised to u = 1";
          },
          "20 conjugate choices, each unique; normalised to u = 1", "weights.solve");
}

void tame_equivariance_phase(Builder& b, const WeierstrassModel& w) {
  const RootOfUnity x(66, 2), y(66, 3), t(66, 6);
  RootOfUnity omega;
  b.check("p6.equivariance", "g(x, y, t) = (z^2 x, z^3 y, z^6 t) preserves the model",
          {{"model", w.to_string()}, {"weights", "(2, 3, 6) mod 66"}},
          [&] {
            omega = verify_equivariance(w, x, y, BaseAction::scaling(t));
            return "multiplier " + omega.to_string();
          },
          "multiplier z66^5", "elliptic.verify_equivariance");
  b.check("p6.order", "ord(g) from the 2-form multiplier", {{"order", "66"}, {"multiplier", omega.to_string()}},
          [&] { return order_decomposition(66, omega).to_string(); }, "1.66", "weights.order_decomposition");
}

WeierstrassModel tame_model(long p, const EngineOptions& o) {
  if (o.model) {
    if (o.model->model.characteristic() != static_cast<unsigned long>(p))
      throw std::invalid_argument("model characteristic does not match --char");
    return perturb_model(o.model->model, o.perturbation);
  }
  const WeierstrassModel x66 = builtin_fixture("X66").model;
  return perturb_model(p == 0 ? x66 : x66.reduce(static_cast<unsigned long>(p)), o.perturbation);
}

void tame_body(Builder& b, long p, const EngineOptions& o) {
  const WeierstrassModel w = tame_model(p, o);
  const EigenProfile target = target_profile(o);

  b.axiom("p1.order", "tame.purely-non-symplectic", "ord(g) = 1.66");
  b.axiom("p1.integrality", "eigen.integrality", "zeta_n is an eigenvalue of g*");
  b.axiom("p1.ample", "eigen.integrality", "an invariant ample class gives eigenvalue 1");
  const std::vector<ProfileConstraint> cs = {constraint::ExactProfileOrder{66}, constraint::RequiresEigenvalueOne{},
                                             constraint::ContainsFullOrbit{66}};
  std::vector<EigenProfile> candidates;
  b.check("p1.enumerate", "eigenvalue profiles of order 66 on H^2 containing 1 and z66",
          {{"dim", "22"}, {"constraints", [&] {
              std::vector<std::string> d;
              for (const auto& c : cs) d.push_back(describe(c));
              return join(d);
            }()}},
          [&] {
            candidates = enumerate_profiles(22, cs);
            return profiles_string(candidates);
          },
          profiles_string({kSurvivor, kMinusProfile}), "eigenprofile.enumerate_profiles");

  b.axiom("p2.lefschetz", "lefschetz.tame", "e(Fix g) = 2 + Tr(g* | H^2)");
  eliminate_minus_profile(b, "p2", candidates, target);
  fibration_phase(b, "p3", target, static_cast<unsigned long>(p), false);
  discriminant_phase(b, "p4", w, BaseAction::scaling(RootOfUnity(11, 1)), false);
  tame_weights_phase(b, w, o);
  tame_equivariance_phase(b, w);
}

ProofTranscript finish(Builder& b, const std::function<void()>& body) {
  try {
    body();
  } catch (const Halt&) {
  }
  return b.transcript();
}

}  // namespace

ProofTranscript run_tame_case(long characteristic, const EngineOptions& options) {
  if (characteristic == 11)
    throw std::invalid_argument("characteristic 11 is the wild case; run verify wild");
  if (characteristic < 0 || (characteristic != 0 && (!is_prime(characteristic) || characteristic < 5)))
    throw std::invalid_argument("characteristic must be 0 or a prime p >= 5");
  Builder b("tame", std::to_string(characteristic));
  return finish(b, [&] { tame_body(b, characteristic, options); });
}

ProofTranscript run_complex_case(const EngineOptions& options) {
  Builder b("complex", "0");
  return finish(b, [&] {
    b.axiom("complex.projective", "complex.projective", "X is projective");
    tame_body(b, 0, options);
  });
}

ProofTranscript run_wild_case(const EngineOptions& options) {
  Builder b("wild-11", "11");
  return finish(b, [&] {
    WeierstrassModel w = builtin_fixture("Y66").model;
    if (options.model) {
      if (options.model->model.characteristic() != 11)
        throw std::invalid_argument("wild case needs a model over F_11");
      w = options.model->model;
    }
    w = perturb_model(w, options.perturbation);
    const EigenProfile target = target_profile(options);

    // w1: order decomposition
    b.axiom("w1.max-order", "wild.max-symplectic-order", "a finite symplectic automorphism has order at most 11");
    b.check("w1.order", "symplectic part is a multiple of 11 (no 11th roots of unity) and at most 11",
            {{"order", "66"}},
            [] {
              std::vector<std::string> s;
              for (long m : divisors(66))
                if (m % 11 == 0 && m <= 11) s.push_back(std::to_string(m) + "." + std::to_string(66 / m));
              return join(s);
            },
            "11.6", "cyclotomic.divisors");

    // w2: profiles
    b.axiom("w2.mathieu", "wild.mathieu", "[g^6*] = [1.2, (z11:10).2]");
    b.axiom("w2.ample", "eigen.integrality", "an invariant ample class gives eigenvalue 1");
    b.axiom("w2.faithful", "wild.faithful", "g* has order 66");
    const EigenProfile g6({{1, 2}, {11, 2}});
    const std::vector<ProfileConstraint> cs = {constraint::ExactProfileOrder{66}, constraint::RequiresEigenvalueOne{},
                                               constraint::PrescribedPowerProfile{6, g6}};
    std::vector<EigenProfile> candidates;
    b.check("w2.enumerate", "order-66 profiles containing 1 with the prescribed g^6 profile",
            {{"dim", "22"}, {"g^6", g6.to_string()}},
            [&] {
              candidates = enumerate_profiles(22, cs);
              return profiles_string(candidates);
            },
            profiles_string({kSurvivor, kMinusProfile, kZeta33Profile}), "eigenprofile.enumerate_profiles");

    // w3: eliminations
    b.axiom("w3.tame-powers", "wild.tame-powers", "g^33, g^22, g^11 are tame and satisfy the Lefschetz formula");
    b.axiom("w3.integrality", "eigen.integrality", "zeta_n is an eigenvalue of g*");
    std::vector<EigenProfile> left;
    b.check("w3.zeta6", "g^11 is tame non-symplectic of order 6, so z6 is an eigenvalue of g^11*",
            {{"candidates", profiles_string(candidates)}},
            [&] {
              for (const auto& c : candidates)
                if (power_profile(c, 11).multiplicity(6) > 0) left.push_back(c);
              return profiles_string(left);
            },
            profiles_string({kSurvivor, kMinusProfile}), "eigenprofile.power_profile");
    b.axiom("w3.lefschetz", "lefschetz.tame", "e(Fix g) = 2 + Tr(g* | H^2)");
    eliminate_minus_profile(b, "w3", left, target);

    // w4: fibration
    fibration_phase(b, "w4", target, 11, true);

    // w5: discriminant
    discriminant_phase(b, "w5", w, BaseAction::translation(11), true);

    // w6: weights
    b.axiom("w6.cm", "fibre.cm-action", "x -> zeta_3 x, y -> -y");
    b.check("w6.b-invariant", "B(t + 1) = B(t)", {{"B", w.b().to_string()}},
            [&] { return std::string(w.b().translate(Scalar(11, 1L)) == w.b() ? "invariant" : "not invariant"); },
            "invariant", "polynomial.BinaryForm.translate");
    CongruenceSystem s = weights_from_invariance({{0, 2}, {3, 0}, {0, 0}}, 6);
    s.add("11a = 4");
    s.add("11b = 3");
    const long omega = options.perturbation == Perturbation::OmegaConstant ? 7 : 5;
    s.add("a - b = " + std::to_string(omega));
    b.check("w6.omega-weights", "fibre weights mod 6 with 2-form multiplier z6^(a - b) = z6^-1",
            {{"system", s.to_string()}}, [&] { return solutions_string(solve(s)); }, "(a, b) = (2, 3)",
            "weights.solve");
    RootOfUnity mult;
    b.check("w6.equivariance", "h(x, y, t) = (z6^2 x, z6^3 y, t + 1) preserves the model",
            {{"model", w.to_string()}, {"weights", "(2, 3) mod 6"}},
            [&] {
              mult = verify_equivariance(w, RootOfUnity(6, 2), RootOfUnity(6, 3), BaseAction::translation(11));
              return "multiplier " + mult.to_string();
            },
            "multiplier " + RootOfUnity(6, -1).to_string(), "elliptic.verify_equivariance");
    b.check("w6.order", "ord(h) from the 2-form multiplier", {{"order", "66"}, {"multiplier", mult.to_string()}},
            [&] { return order_decomposition(66, mult).to_string(); }, "11.6", "weights.order_decomposition");

    // w7: point counts
    PointCountRecord r11, r121;
    b.check("w7.count-p", "brute-force count over F_11", {{"q", "11"}},
            [&] {
              r11 = count_points(w, 11);
              long cusps = 0;
              for (const auto& f : r11.fibres)
                if (f.type == KodairaType(KodairaType::Kind::II) && f.count == 12) ++cusps;
              return std::to_string(r11.total) + ", " + std::to_string(cusps) + " cuspidal fibres of 12 points";
            },
            "144, 12 cuspidal fibres of 12 points", "pointcount.count_points");
    b.check("w7.count-p2", "brute-force count over F_121 with the Hasse bound on smooth fibres", {{"q", "121"}},
            [&] {
              r121 = count_points(w, 121);
              const auto h = hasse_check(r121);
              return std::string(h.pass ? "Hasse bound holds" : "Hasse bound fails: " + h.first_failure) + " on " +
                     std::to_string(h.smooth_fibres) + " smooth fibres";
            },
            "Hasse bound holds on 110 smooth fibres", "pointcount.hasse_check");
    b.check("w7.extension", "a_{p^2} = a_p^2 - 2p for smooth fibres over F_11-points", {{"p", "11"}},
            [&] {
              const auto e = extension_check(r11, r121);
              return std::to_string(e.rows.size()) + " smooth fibres over F_11" +
                     (e.rows.empty() ? " (vacuous)" : e.pass() ? ", all consistent" : ", inconsistent");
            },
            "0 smooth fibres over F_11 (vacuous)", "pointcount.extension_check");
    b.check("w7.prediction", "F_121 total against 1 + 22 q + q^2 for q = 121", {{"q", "121"}},
            [&] { return std::to_string(r121.total); }, std::to_string(1 + 22 * 121 + 121 * 121),
            "pointcount.count_points");
  });
}

// ------------------------------------------------------- supersingularity

SupersingularityReport supersingularity_report(long p) {
  SupersingularityReport r;
  r.p = p;
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p == 2 || p == 3) throw std::invalid_argument("characteristic 2 and 3 are not covered");
  r.m = p == 11 ? 12 : 66;
  r.test = supersingular_congruence_test(p, r.m);
  r.prediction = 1 + 22 * p * p + p * p * p * p;
  if (p == 11) {
    const WeierstrassModel w = builtin_fixture("Y66").model;
    r.over_p = count_points(w, 11);
    r.over_p2 = count_points(w, 121);
  }
  return r;
}

nlohmann::ordered_json SupersingularityReport::to_json(bool verbose) const {
  nlohmann::ordered_json j;
  j["p"] = std::to_string(p);
  j["m"] = std::to_string(m);
  j["supersingular"] = test.supersingular ? "yes" : "no";
  j["nu"] = test.nu ? std::to_string(*test.nu) : "none";
  j["order"] = std::to_string(test.order);
  if (over_p && over_p2) {
    auto rec = [verbose](const PointCountRecord& r) {
      nlohmann::ordered_json x;
      x["q"] = std::to_string(r.q);
      x["total"] = std::to_string(r.total);
      if (verbose) {
        x["fibres"] = nlohmann::ordered_json::array();
        for (const auto& f : r.fibres)
          x["fibres"].push_back({{"t", f.base_point}, {"count", std::to_string(f.count)}, {"type", f.type.name()}});
      }
      return x;
    };
    j["count_p"] = rec(*over_p);
    j["count_p2"] = rec(*over_p2);
    j["prediction"] = std::to_string(prediction);
    j["match"] = over_p2->total == prediction ? "yes" : "no";
  }
  return j;
}

std::string SupersingularityReport::to_text() const {
  std::ostringstream out;
  out << "p = " << p << ", m = " << m << ": supersingular " << (test.supersingular ? "yes" : "no");
  if (test.nu) out << " (nu = " << *test.nu << ")";
  out << ", order of p mod m = " << test.order << "\n";
  if (over_p && over_p2) {
    out << "  #Y66(F_" << over_p->q << ")  = " << over_p->total << "\n";
    out << "  #Y66(F_" << over_p2->q << ") = " << over_p2->total << ", predicted " << prediction << ": "
        << (over_p2->total == prediction ? "match" : "MISMATCH") << "\n";
  }
  return out.str();
}

}  // namespace k3v
