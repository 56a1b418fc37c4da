#include "conemod/poly/ring.hpp"

#include <set>
#include <stdexcept>

#include "conemod/poly/rational.hpp"

namespace conemod {

VarTable::VarTable(std::vector<std::string> names, std::vector<std::uint64_t> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size())
    throw std::invalid_argument("VarTable: names and weights differ in length");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw std::invalid_argument("VarTable: duplicate variable " + n);
}

std::optional<std::size_t> VarTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::uint64_t VarTable::weighted_degree(const Monomial& m) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += weights_[i] * m[i];
  return d;
}

VarTable VarTable::extended(const std::vector<std::string>& names,
                            const std::vector<std::uint64_t>& weights) const {
  auto n = names_;
  auto w = weights_;
  n.insert(n.end(), names.begin(), names.end());
  w.insert(w.end(), weights.begin(), weights.end());
  return VarTable(std::move(n), std::move(w));
}

RingPtr make_ring(VarTable vars, MonomialOrder order) {
  return std::make_shared<const Ring>(Ring{std::move(vars), std::move(order)});
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return make_ring(ring->vars, std::move(order));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_int(num, true)) throw std::invalid_argument("bad rational: " + std::string(text));
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(Integer(std::string(num)));
  } else {
    const auto den = text.substr(slash + 1);
    if (!valid_int(den, false)) throw std::invalid_argument("bad rational: " + std::string(text));
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    q = Rational(Integer(std::string(num)), d);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace conemod
