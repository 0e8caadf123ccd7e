#include "k3v/pointcount.hpp"

namespace k3v {

namespace {

FieldElement embed(const FiniteField& f, const Scalar& c) {
  return f.element(static_cast<long>(c.value().get_num().get_si()));
}

FieldElement evaluate(const FiniteField& f, const BinaryForm& g, const FieldElement& t0,
                      const FieldElement& t1) {
  // Homogeneous Horner: sum of c_i t0^(D-i) t1^i.
  FieldElement acc = f.zero();
  FieldElement t0_power = f.one();
  for (int i = g.degree(); i >= 0; --i) {
    acc = acc * t1 + embed(f, g.coefficient(i)) * t0_power;
    t0_power = t0_power * t0;
  }
  return acc;
}

}  // namespace

PointCountRecord count_points(const WeierstrassModel& w, long q) {
  const unsigned long p = w.characteristic();
  if (p < 5) throw std::invalid_argument("count_points: model must be over F_p with p >= 5");
  const FiniteField field = FiniteField::of_size(static_cast<std::uint64_t>(q));
  if (field.characteristic() != p)
    throw std::invalid_argument("count_points: q = " + std::to_string(q) + " is not a power of " +
                                std::to_string(p));

  const EulerLedger ledger = euler_ledger(w);
  for (const auto& e : ledger.entries)
    if (!e.type.is_irreducible())
      throw ReducibleFibreError("count_points: fibre of type " + e.type.name() + " over " +
                                e.place.label() + " is reducible");

  const auto elements = field.elements();
  PointCountRecord rec;
  rec.q = q;
  auto fibre = [&](const FieldElement& t0, const FieldElement& t1, std::string label) {
    const FieldElement a = evaluate(field, w.a(), t0, t1);
    const FieldElement b = evaluate(field, w.b(), t0, t1);
    long n = 1;  // point at infinity of the fibre
    for (const auto& x : elements) n += 1 + quadratic_character(-(x * x * x + a * x + b));
    FibreCount fc{std::move(label), n, KodairaType()};
    const FieldElement four_a3 = field.element(4) * a * a * a, b2 = field.element(27) * b * b;
    if ((four_a3 + b2).is_zero()) {
      for (const auto& e : ledger.entries)
        if (evaluate(field, e.place.factor, t0, t1).is_zero()) fc.type = e.type;
    }
    rec.total += n;
    rec.fibres.push_back(std::move(fc));
  };
  for (const auto& t : elements) fibre(field.one(), t, t.to_string());
  fibre(field.zero(), field.one(), "inf");
  return rec;
}

HasseCheck hasse_check(const PointCountRecord& r) {
  HasseCheck h;
  for (const auto& f : r.fibres) {
    if (f.type.is_smooth()) {
      ++h.smooth_fibres;
      const long a = r.q + 1 - f.count;
      if (a * a > 4 * r.q && h.pass) {
        h.pass = false;
        h.first_failure = "fibre over " + f.base_point + ": a = " + std::to_string(a);
      }
    } else if (f.type == KodairaType(KodairaType::Kind::II)) {
      ++h.cusp_fibres;
      if (f.count != r.q + 1 && h.pass) {
        h.pass = false;
        h.first_failure = "cuspidal fibre over " + f.base_point + " has " + std::to_string(f.count) + " points";
      }
    }
  }
  return h;
}

bool ExtensionCheck::pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

ExtensionCheck extension_check(const PointCountRecord& over_p, const PointCountRecord& over_p2) {
  const long p = over_p.q;
  if (over_p2.q != p * p) throw std::invalid_argument("extension_check: need counts over F_p and F_p^2");
  ExtensionCheck out;
  for (const auto& f : over_p.fibres) {
    if (!f.type.is_smooth()) continue;
    // F_p-points keep their labels in F_{p^2}, whose elements start with F_p.
    const FibreCount* g = nullptr;
    for (const auto& h : over_p2.fibres)
      if (h.base_point == f.base_point) g = &h;
    if (!g) throw std::logic_error("extension_check: base point missing over F_p^2");
    ExtensionCheckRow row{f.base_point, p + 1 - f.count, p * p + 1 - g->count, false};
    row.pass = row.a_p2 == row.a_p * row.a_p - 2 * p;
    out.rows.push_back(row);
  }
  return out;
}

SupersingularTest supersingular_congruence_test(long p, long m) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("supersingular_congruence_test: m must be positive");
  if (m % p == 0) throw std::invalid_argument(std::to_string(p) + " divides " + std::to_string(m));
  SupersingularTest t;
  const long target = mod(-1, m);
  long x = mod(p, m);
  for (long nu = 1;; ++nu) {
    if (!t.nu && x == target) t.nu = nu;
    if (x == 1 % m) {
      t.order = nu;
      break;
    }
    x = x * (p % m) % m;
  }
  t.supersingular = t.nu.has_value();
  return t;
}

}  // namespace k3v
