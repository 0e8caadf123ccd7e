#include "k3v/elliptic.hpp"

#include "k3v/factor.hpp"

#include <algorithm>

namespace k3v {

// ------------------------------------------------------------ PlacePacket

bool PlacePacket::at_infinity() const {
  return factor.degree() == 1 && !factor.coefficient(0).is_zero() &&
         factor.coefficient(1).is_zero();
}

FieldPoly PlacePacket::affine() const {
  if (at_infinity()) throw std::logic_error("PlacePacket: the place at infinity has no affine factor");
  return factor.dehomogenize().monic();
}

std::string PlacePacket::label() const { return at_infinity() ? "t = inf" : affine().to_string("t"); }

std::vector<PlacePacket> factor_places(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_places: zero form");
  std::vector<PlacePacket> out;
  const FieldPoly affine = f.dehomogenize();
  if (affine.degree() >= 1) {
    for (const auto& [g, e] : factor(affine).factors)
      out.push_back({BinaryForm::from_affine(g, static_cast<int>(g.degree())),
                     static_cast<int>(g.degree()), e});
  }
  if (const int v = f.valuation_at_infinity(); v > 0)
    out.push_back({BinaryForm::place_at_infinity(f.characteristic()), 1, v});
  return out;
}

int valuation(const BinaryForm& f, const PlacePacket& place) {
  if (f.is_zero()) return kInfiniteValuation;
  if (place.at_infinity()) return f.valuation_at_infinity();
  FieldPoly rest = f.dehomogenize();
  const FieldPoly g = place.affine();
  int v = 0;
  for (;;) {
    auto [q, r] = rest.divmod(g);
    if (!r.is_zero()) break;
    rest = q;
    ++v;
  }
  return v;
}

// ------------------------------------------------------------ KodairaType

bool KodairaType::is_irreducible() const {
  return (kind_ == Kind::I && n_ <= 1) || kind_ == Kind::II;
}

int KodairaType::euler_number() const {
  switch (kind_) {
    case Kind::I: return n_;
    case Kind::II: return 2;
    case Kind::III: return 3;
    case Kind::IV: return 4;
    case Kind::IStar: return n_ + 6;
    case Kind::IVStar: return 8;
    case Kind::IIIStar: return 9;
    case Kind::IIStar: return 10;
  }
  return 0;
}

std::string KodairaType::name() const {
  switch (kind_) {
    case Kind::I: return "I" + std::to_string(n_);
    case Kind::II: return "II";
    case Kind::III: return "III";
    case Kind::IV: return "IV";
    case Kind::IStar: return "I*" + std::to_string(n_);
    case Kind::IVStar: return "IV*";
    case Kind::IIIStar: return "III*";
    case Kind::IIStar: return "II*";
  }
  return "?";
}

KodairaType kodaira_from_valuations(int v_a, int v_b, int v_delta) {
  using K = KodairaType::Kind;
  if (v_delta == 0) return {K::I, 0};
  if (v_a >= 4 && v_b >= 6)
    throw NonMinimalError("kodaira_type: model is not minimal at this place (v(A) >= 4, v(B) >= 6); "
                          "minimalise it first");
  if (v_a == 0 && v_b == 0) return {K::I, v_delta};
  if (v_a == 0 || v_b == 0)
    throw std::domain_error("kodaira_type: inconsistent valuations");
  switch (v_delta) {
    case 2: return {K::II};
    case 3: return {K::III};
    case 4: return {K::IV};
    case 6: return {K::IStar, 0};
    default: break;
  }
  if (v_delta > 6 && v_a == 2 && v_b == 3) return {K::IStar, v_delta - 6};
  switch (v_delta) {
    case 8: return {K::IVStar};
    case 9: return {K::IIIStar};
    case 10: return {K::IIStar};
    default: break;
  }
  throw std::domain_error("kodaira_type: inconsistent valuations");
}

// ------------------------------------------------------- WeierstrassModel

BinaryForm discriminant(const BinaryForm& a, const BinaryForm& b) {
  const unsigned long p = a.characteristic();
  return a.pow(3) * Scalar(p, -4L) - b.pow(2) * Scalar(p, 27L);
}

WeierstrassModel::WeierstrassModel(BinaryForm a, BinaryForm b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.degree() != 8 || b_.degree() != 12)
    throw std::invalid_argument("WeierstrassModel: A must have degree 8 and B degree 12");
  if (a_.characteristic() != b_.characteristic())
    throw std::invalid_argument("WeierstrassModel: A and B over different fields");
  const unsigned long p = a_.characteristic();
  if (p == 2 || p == 3)
    throw std::invalid_argument("WeierstrassModel: characteristic 2 and 3 are not supported");
  if (p != 0 && !is_prime(static_cast<long>(p)))
    throw std::invalid_argument("WeierstrassModel: characteristic must be 0 or prime");
  if (discriminant(a_, b_).is_zero())
    throw std::invalid_argument("WeierstrassModel: discriminant vanishes identically (non-reduced model)");
}

WeierstrassModel WeierstrassModel::reduce(unsigned long p) const {
  if (characteristic() != 0) throw std::invalid_argument("WeierstrassModel::reduce: model is not over Q");
  auto map = [p](const BinaryForm& f) {
    std::vector<Scalar> v;
    for (const auto& c : f.coefficients()) v.emplace_back(p, c.value());
    return BinaryForm(p, std::move(v));
  };
  return WeierstrassModel(map(a_), map(b_));
}

std::string WeierstrassModel::to_string() const {
  std::string out = "y^2 + x^3";
  if (!a_.is_zero()) out += " + (" + a_.to_string() + ")*x";
  if (!b_.is_zero()) out += " + (" + b_.to_string() + ")";
  out += " = 0";
  if (characteristic() != 0) out += " over F_" + std::to_string(characteristic());
  return out;
}

BinaryForm discriminant(const WeierstrassModel& w) { return discriminant(w.a(), w.b()); }

KodairaType kodaira_type(const WeierstrassModel& w, const PlacePacket& place) {
  return kodaira_from_valuations(valuation(w.a(), place), valuation(w.b(), place),
                                 valuation(discriminant(w), place));
}

long EulerLedger::geometric_count(const KodairaType& type) const {
  long n = 0;
  for (const auto& e : entries)
    if (e.type == type) n += e.place.residue_degree;
  return n;
}

long EulerLedger::geometric_singular_fibres() const {
  long n = 0;
  for (const auto& e : entries)
    if (!e.type.is_smooth()) n += e.place.residue_degree;
  return n;
}

EulerLedger euler_ledger(const WeierstrassModel& w) {
  EulerLedger ledger;
  for (auto& place : factor_places(discriminant(w))) {
    LedgerEntry e;
    e.v_a = valuation(w.a(), place);
    e.v_b = valuation(w.b(), place);
    e.v_delta = place.multiplicity;
    e.type = kodaira_from_valuations(e.v_a, e.v_b, e.v_delta);
    e.place = std::move(place);
    ledger.total += static_cast<long>(e.place.residue_degree) * e.type.euler_number();
    ledger.entries.push_back(std::move(e));
  }
  return ledger;
}

// ------------------------------------------------------------- BaseAction

BaseAction BaseAction::scaling(const RootOfUnity& factor) {
  BaseAction a;
  a.kind_ = Kind::Scaling;
  a.factor_ = factor;
  return a;
}

BaseAction BaseAction::translation(unsigned long characteristic) {
  if (!is_prime(static_cast<long>(characteristic)))
    throw std::invalid_argument("BaseAction: translation needs a prime characteristic");
  BaseAction a;
  a.kind_ = Kind::Translation;
  a.characteristic_ = characteristic;
  return a;
}

long BaseAction::order() const {
  return kind_ == Kind::Scaling ? factor_.primitive_order() : static_cast<long>(characteristic_);
}

std::string BaseAction::to_string() const {
  if (kind_ == Kind::Translation)
    return "t -> t + 1 (characteristic " + std::to_string(characteristic_) + ")";
  if (is_identity()) return "identity";
  return "t -> " + factor_.to_string() + " t";
}

long BaseOrbitDecomposition::orbit_count() const {
  long n = 0;
  for (const auto& g : orbits) n += g.count;
  return n;
}

long BaseOrbitDecomposition::geometric_points() const {
  long n = 0;
  for (const auto& f : fixed_points)
    if (f.place) n += f.place->residue_degree;
  for (const auto& g : orbits) n += g.count * g.length;
  return n;
}

namespace {

// g(h(t)) for polynomials g, h.
FieldPoly compose(const FieldPoly& g, const FieldPoly& h) {
  FieldPoly acc(g.characteristic());
  for (long i = g.degree(); i >= 0; --i) acc = acc * h + FieldPoly::constant(g.coefficient(i));
  return acc;
}

}  // namespace

BaseOrbitDecomposition base_orbits(const BaseAction& action, const std::vector<PlacePacket>& places) {
  BaseOrbitDecomposition out;
  if (action.is_identity()) {
    for (const auto& p : places) out.orbits.push_back({{p}, p.residue_degree, 1});
    return out;
  }
  if (places.empty()) throw std::invalid_argument("base_orbits: no places");
  const unsigned long p = places.front().factor.characteristic();
  const Scalar one(p, 1L);
  const long m = action.order();
  if (action.kind() == BaseAction::Kind::Translation && action.characteristic() != p)
    throw InconsistentActionError("base_orbits: translation t -> t + 1 needs characteristic " +
                                  std::to_string(action.characteristic()));
  if (action.kind() == BaseAction::Kind::Scaling && p != 0 && m % static_cast<long>(p) == 0)
    throw InconsistentActionError("base_orbits: scaling order divisible by the characteristic");

  const FieldPoly t = FieldPoly::monomial(one, 1);
  std::optional<PlacePacket> at_zero, at_infinity;
  std::vector<PlacePacket> moving;
  FieldPoly product = FieldPoly::constant(one);
  for (const auto& place : places) {
    if (place.at_infinity()) {
      at_infinity = place;
    } else if (action.kind() == BaseAction::Kind::Scaling && place.affine() == t) {
      at_zero = place;
    } else {
      moving.push_back(place);
      product = product * place.affine();
    }
  }

  // The orbit polynomial: product(t) = G(u(t)) with u = t^m or t^p - t.
  FieldPoly orbit_poly(p);
  FieldPoly u(p);
  if (action.kind() == BaseAction::Kind::Scaling) {
    out.fixed_points.push_back({"t = 0", at_zero});
    out.fixed_points.push_back({"t = inf", at_infinity});
    std::vector<Scalar> g;
    for (long i = 0; i <= product.degree(); ++i) {
      const Scalar& c = product.coefficient(i);
      if (c.is_zero()) continue;
      if (i % m != 0)
        throw InconsistentActionError("base_orbits: " + action.to_string() +
                                      " does not preserve the places (term t^" + std::to_string(i) + ")");
    }
    for (long i = 0; i <= product.degree(); i += m) g.push_back(product.coefficient(i));
    orbit_poly = FieldPoly(p, std::move(g));
    u = FieldPoly::monomial(one, static_cast<std::size_t>(m));
  } else {
    out.fixed_points.push_back({"t = inf", at_infinity});
    if (product.shift(one) != product)
      throw InconsistentActionError("base_orbits: " + action.to_string() + " does not preserve the places");
    u = FieldPoly::monomial(one, p) - t;
    std::vector<Scalar> h;
    FieldPoly rest = product;
    while (!rest.is_zero()) {
      auto [q, r] = rest.divmod(u);
      if (r.degree() > 0)
        throw InconsistentActionError("base_orbits: places are not a union of translation orbits");
      h.push_back(r.coefficient(0));
      rest = q;
    }
    orbit_poly = FieldPoly(p, std::move(h));
  }

  if (orbit_poly.degree() <= 0) return out;
  for (const auto& [g, e] : factor(orbit_poly).factors) {
    const FieldPoly pulled_back = compose(g, u);
    OrbitGroup group{{}, g.degree(), m};
    for (const auto& place : moving)
      if (place.affine().divides(pulled_back)) group.packets.push_back(place);
    out.orbits.push_back(std::move(group));
  }
  return out;
}

ForceAZeroVerdict force_a_zero(int degree_a, int cusp_places, const BaseAction& action) {
  ForceAZeroVerdict v;
  v.by_count = cusp_places > degree_a;
  const long m = action.order();
  v.by_orbit = !action.is_identity() && cusp_places > action.fixed_point_count() && degree_a < m;
  v.forced = v.by_count || v.by_orbit;
  if (v.by_count)
    v.reason = std::to_string(cusp_places) + " cusps need v(A) >= 1 each but deg A = " +
               std::to_string(degree_a);
  if (v.by_orbit) {
    if (!v.reason.empty()) v.reason += "; ";
    v.reason += "a nonzero invariant A of degree " + std::to_string(degree_a) +
                " cannot vanish on an orbit of length " + std::to_string(m);
  }
  if (!v.forced) v.reason = "no contradiction";
  return v;
}

RootOfUnity verify_equivariance(const WeierstrassModel& w, const RootOfUnity& x_weight,
                                const RootOfUnity& y_weight, const BaseAction& action) {
  const unsigned long p = w.characteristic();
  for (const auto& z : {x_weight, y_weight, action.factor()})
    if (p != 0 && z.primitive_order() % static_cast<long>(p) == 0)
      throw std::invalid_argument("verify_equivariance: no roots of unity of order divisible by p");

  const RootOfUnity reference = y_weight.power(2);
  auto check = [&](const RootOfUnity& weight, const std::string& monomial) {
    if (weight != reference)
      throw NonEquivariantError("verify_equivariance: monomial " + monomial + " has weight " +
                                    weight.to_string() + ", y^2 has " + reference.to_string(),
                                monomial);
  };
  check(x_weight.power(3), "x^3");

  if (action.kind() == BaseAction::Kind::Scaling) {
    const RootOfUnity& tw = action.factor();
    for (int i : w.a().support()) check(x_weight * tw.power(i), "x*t^" + std::to_string(i));
    for (int i : w.b().support()) check(tw.power(i), "t^" + std::to_string(i));
    return x_weight * tw * y_weight.inverse();
  }

  if (action.characteristic() != p)
    throw std::invalid_argument("verify_equivariance: translation needs the model's characteristic");
  const Scalar one(p, 1L);
  auto first_difference = [](const BinaryForm& f, const BinaryForm& g) {
    for (int i = 0; i <= f.degree(); ++i)
      if (f.coefficient(i) != g.coefficient(i)) return i;
    return -1;
  };
  if (!w.a().is_zero()) {
    if (int i = first_difference(w.a().translate(one), w.a()); i >= 0)
      throw NonEquivariantError("verify_equivariance: A(t + 1) != A(t)", "x*t^" + std::to_string(i));
    check(x_weight, "x*A(t)");
  }
  if (!w.b().is_zero()) {
    if (int i = first_difference(w.b().translate(one), w.b()); i >= 0)
      throw NonEquivariantError("verify_equivariance: B(t + 1) != B(t)", "t^" + std::to_string(i));
    check(RootOfUnity::one(), "B(t)");
  }
  // d(t + 1) = dt, so only the fibre weights contribute.
  return x_weight * y_weight.inverse();
}

int ec_automorphism_bound(unsigned long characteristic) {
  if (characteristic == 0) return 6;
  if (!is_prime(static_cast<long>(characteristic)))
    throw std::invalid_argument("ec_automorphism_bound: characteristic must be 0 or prime");
  if (characteristic == 2) return 24;
  if (characteristic == 3) return 12;
  return 6;
}

}  // namespace k3v
