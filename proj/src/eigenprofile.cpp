#include "k3v/eigenprofile.hpp"

#include "k3v/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace k3v {

EigenProfile::EigenProfile(std::map<long, int> entries, int dim) : dim_(dim) {
  long total = 0;
  for (auto [d, r] : entries) {
    if (d < 1) throw std::invalid_argument("EigenProfile: orders must be positive");
    if (r < 0) throw std::invalid_argument("EigenProfile: negative multiplicity");
    if (r == 0) continue;
    entries_.emplace(d, r);
    total += euler_phi(d) * r;
  }
  if (total != dim)
    throw std::invalid_argument("EigenProfile: dimension " + std::to_string(total) +
                                " does not match " + std::to_string(dim));
}

EigenProfile EigenProfile::identity(int dim) { return EigenProfile({{1, dim}}, dim); }

int EigenProfile::multiplicity(long d) const {
  auto it = entries_.find(d);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::pair<long, int>> EigenProfile::key() const {
  return {entries_.begin(), entries_.end()};
}

std::string EigenProfile::to_string() const {
  std::string out = "[";
  bool first = true;
  for (auto [d, r] : entries_) {
    if (!first) out += ", ";
    first = false;
    if (d == 1)
      out += "1";
    else if (d == 2)
      out += "-1";
    else
      out += "z" + std::to_string(d) + ":" + std::to_string(euler_phi(d));
    if (r != 1) out += "." + std::to_string(r);
  }
  return out + "]";
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

long parse_number(const std::string& s, const std::string& item) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("EigenProfile::parse: bad item '" + item + "'");
  return std::stol(s);
}

}  // namespace

EigenProfile EigenProfile::parse(const std::string& text, int dim) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw std::invalid_argument("EigenProfile::parse: expected [ ... ]");
  body = body.substr(1, body.size() - 2);

  std::map<long, int> entries;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    const std::string item = trim(body.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) {
      if (comma == body.size()) break;
      throw std::invalid_argument("EigenProfile::parse: empty item");
    }

    std::string head = item;
    long repeat = 1;
    // Repetition suffix ".r" (after an optional closing parenthesis).
    if (auto dot = head.rfind('.'); dot != std::string::npos) {
      repeat = parse_number(head.substr(dot + 1), item);
      head = head.substr(0, dot);
    }
    if (head.size() >= 2 && head.front() == '(' && head.back() == ')')
      head = head.substr(1, head.size() - 2);

    long order = 0;
    if (head == "1" || head == "-1") {
      order = head == "1" ? 1 : 2;
    } else if (head.rfind("1:", 0) == 0 || head.rfind("-1:", 0) == 0) {
      // "-1:20": the value repeated 20 times.
      auto colon = head.find(':');
      order = head[0] == '-' ? 2 : 1;
      repeat *= parse_number(head.substr(colon + 1), item);
    } else if (head.size() > 1 && head[0] == 'z') {
      auto colon = head.find(':');
      order = parse_number(head.substr(1, colon == std::string::npos ? std::string::npos : colon - 1),
                           item);
      if (order < 1) throw std::invalid_argument("EigenProfile::parse: bad order in '" + item + "'");
      if (colon != std::string::npos &&
          parse_number(head.substr(colon + 1), item) != euler_phi(order))
        throw std::invalid_argument("EigenProfile::parse: orbit size mismatch in '" + item + "'");
    } else {
      throw std::invalid_argument("EigenProfile::parse: bad item '" + item + "'");
    }
    entries[order] += static_cast<int>(repeat);
    if (comma == body.size()) break;
  }
  return EigenProfile(std::move(entries), dim);
}

EigenProfile power_profile(const EigenProfile& p, long k) {
  if (k < 0) throw std::invalid_argument("power_profile: exponent must be >= 0");
  std::map<long, int> out;
  for (auto [d, r] : p.entries()) {
    // zeta_d^k has order d / gcd(d, k); an orbit of size phi(d) lands on
    // phi(d) / phi(d') copies of the orbit of order d'.
    const long image = d / gcd(d, k);
    out[image] += static_cast<int>(r * (euler_phi(d) / euler_phi(image)));
  }
  return EigenProfile(std::move(out), p.dimension());
}

long trace(const EigenProfile& p) {
  long t = 0;
  for (auto [d, r] : p.entries()) t += static_cast<long>(r) * primitive_root_sum(d);
  return t;
}

long lefschetz_number(const EigenProfile& p) {
  if (p.dimension() != kK3SecondBetti)
    throw std::invalid_argument("lefschetz_number: profile must be 22-dimensional");
  return 2 + trace(p);
}

int invariant_dimension(const EigenProfile& p) { return p.multiplicity(1); }

long profile_order(const EigenProfile& p) {
  long l = 1;
  for (auto [d, r] : p.entries()) l = lcm(l, d);
  return l;
}

bool satisfies(const EigenProfile& p, const ProfileConstraint& c) {
  using namespace constraint;
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RequiresEigenvalueOne>) {
          return p.multiplicity(1) > 0;
        } else if constexpr (std::is_same_v<T, ContainsFullOrbit>) {
          return p.multiplicity(v.order) > 0;
        } else if constexpr (std::is_same_v<T, ExactProfileOrder>) {
          return profile_order(p) == v.order;
        } else {
          return power_profile(p, v.exponent) == v.profile;
        }
      },
      c);
}

std::string describe(const ProfileConstraint& c) {
  using namespace constraint;
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RequiresEigenvalueOne>) {
          return "contains 1";
        } else if constexpr (std::is_same_v<T, ContainsFullOrbit>) {
          return "contains z" + std::to_string(v.order) + ":" + std::to_string(euler_phi(v.order));
        } else if constexpr (std::is_same_v<T, ExactProfileOrder>) {
          return "order " + std::to_string(v.order);
        } else {
          return "power " + std::to_string(v.exponent) + " is " + v.profile.to_string();
        }
      },
      c);
}

std::vector<EigenProfile> enumerate_profiles(int dim,
                                             const std::vector<ProfileConstraint>& constraints) {
  if (constraints.empty())
    throw std::invalid_argument("enumerate_profiles: constraint list is empty");
  long order = 0;
  for (const auto& c : constraints) {
    if (const auto* o = std::get_if<constraint::ExactProfileOrder>(&c)) {
      if (order != 0 && order != o->order) return {};
      order = o->order;
    }
  }
  if (order < 1)
    throw std::invalid_argument("enumerate_profiles: an exact order constraint is required");

  const std::vector<long> orders = divisors(order);
  std::vector<EigenProfile> out;
  std::map<long, int> current;

  std::function<void(std::size_t, int)> recurse = [&](std::size_t i, int remaining) {
    if (i == orders.size()) {
      if (remaining != 0) return;
      EigenProfile p(current, dim);
      for (const auto& c : constraints)
        if (!satisfies(p, c)) return;
      out.push_back(std::move(p));
      return;
    }
    const long d = orders[i];
    const int phi = static_cast<int>(euler_phi(d));
    for (int r = 0; r * phi <= remaining; ++r) {
      if (r > 0) current[d] = r;
      recurse(i + 1, remaining - r * phi);
    }
    current.erase(d);
  };
  recurse(0, dim);

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace k3v
