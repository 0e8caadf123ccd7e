#include "k3v/fixture.hpp"

#include <fstream>

namespace k3v {

using nlohmann::ordered_json;

namespace {

BinaryForm read_form(const ordered_json& doc, const char* key, unsigned long p, int degree) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw FixtureError(std::string("fixture: missing coefficient list ") + key);
  const auto& list = doc[key];
  if (list.size() != static_cast<std::size_t>(degree + 1))
    throw FixtureError(std::string("fixture: ") + key + " needs " + std::to_string(degree + 1) +
                       " coefficients");
  std::vector<Scalar> coeffs;
  for (const auto& c : list) {
    try {
      coeffs.push_back(c.is_string() ? Scalar::parse(p, c.get<std::string>())
                                     : Scalar(p, c.get<long>()));
    } catch (const std::exception& e) {
      throw FixtureError(std::string("fixture: bad coefficient in ") + key + ": " + e.what());
    }
  }
  return BinaryForm(p, std::move(coeffs));
}

ordered_json write_form(const BinaryForm& f) {
  ordered_json list = ordered_json::array();
  for (const auto& c : f.coefficients())
    list.push_back(f.characteristic() == 0 ? c.to_string() : c.to_signed_string());
  return list;
}

long read_long(const ordered_json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw FixtureError(std::string("fixture: action needs integer field ") + key);
  return doc[key].get<long>();
}

}  // namespace

Fixture parse_fixture(const ordered_json& doc) {
  if (!doc.is_object()) throw FixtureError("fixture: expected a JSON object");
  if (!doc.contains("characteristic") || !doc["characteristic"].is_number_integer() ||
      doc["characteristic"].get<long>() < 0)
    throw FixtureError("fixture: missing or negative characteristic");
  const auto p = doc["characteristic"].get<unsigned long>();
  std::string name = doc.value("name", std::string("unnamed"));

  std::optional<WeierstrassModel> model;
  try {
    model.emplace(read_form(doc, "A", p, 8), read_form(doc, "B", p, 12));
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    throw FixtureError(std::string("fixture: ") + e.what());
  }

  std::optional<DiagonalAction> action;
  if (doc.contains("action")) {
    const auto& a = doc["action"];
    const std::string kind = a.value("kind", std::string());
    const long n = read_long(a, "modulus");
    if (n < 1) throw FixtureError("fixture: action modulus must be positive");
    const RootOfUnity x(n, read_long(a, "x")), y(n, read_long(a, "y"));
    if (kind == "scaling") {
      action = DiagonalAction{x, y, BaseAction::scaling(RootOfUnity(n, read_long(a, "t")))};
    } else if (kind == "translation") {
      if (p == 0) throw FixtureError("fixture: translation action needs positive characteristic");
      action = DiagonalAction{x, y, BaseAction::translation(p)};
    } else {
      throw FixtureError("fixture: action kind must be scaling or translation");
    }
  }
  return {std::move(name), std::move(*model), std::move(action)};
}

ordered_json fixture_to_json(const Fixture& f) {
  ordered_json doc;
  doc["name"] = f.name;
  doc["characteristic"] = f.model.characteristic();
  doc["A"] = write_form(f.model.a());
  doc["B"] = write_form(f.model.b());
  if (f.action) {
    const auto& a = *f.action;
    ordered_json act;
    if (a.base.kind() == BaseAction::Kind::Scaling) {
      const long n = lcm(lcm(a.x.modulus(), a.y.modulus()), a.base.factor().modulus());
      act["kind"] = "scaling";
      act["modulus"] = n;
      act["x"] = a.x.over(n).exponent();
      act["y"] = a.y.over(n).exponent();
      act["t"] = a.base.factor().over(n).exponent();
    } else {
      const long n = lcm(a.x.modulus(), a.y.modulus());
      act["kind"] = "translation";
      act["modulus"] = n;
      act["x"] = a.x.over(n).exponent();
      act["y"] = a.y.over(n).exponent();
    }
    doc["action"] = act;
  }
  return doc;
}

Fixture builtin_fixture(const std::string& name) {
  if (name == "X66") {
    std::vector<long> b(13, 0);
    b[12] = 1;
    b[1] = -1;
    WeierstrassModel w(BinaryForm(0, 8), BinaryForm(0, b));
    return {"X66", w,
            DiagonalAction{RootOfUnity(66, 2), RootOfUnity(66, 3),
                           BaseAction::scaling(RootOfUnity(66, 6))}};
  }
  if (name == "Y66") {
    std::vector<long> b(13, 0);
    b[11] = 1;
    b[1] = -1;
    WeierstrassModel w(BinaryForm(11, 8), BinaryForm(11, b));
    return {"Y66", w, DiagonalAction{RootOfUnity(6, 2), RootOfUnity(6, 3), BaseAction::translation(11)}};
  }
  throw FixtureError("unknown built-in fixture '" + name + "' (expected X66 or Y66)");
}

Fixture load_fixture(const std::string& name_or_path) {
  if (name_or_path == "X66" || name_or_path == "Y66") return builtin_fixture(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw FixtureError("cannot open fixture file " + name_or_path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw FixtureError("fixture " + name_or_path + ": " + e.what());
  }
  return parse_fixture(doc);
}

}  // namespace k3v
