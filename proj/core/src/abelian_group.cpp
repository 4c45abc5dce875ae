#include "metacov/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace metacov {

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> orders) : free_rank_(free_rank) {
  std::vector<Integer> d;
  for (auto& o : orders) {
    Integer a = abs(o);
    if (a == 0)
      ++free_rank_;
    else if (a != 1)
      d.push_back(std::move(a));
  }
  std::sort(d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      if (g == d[i]) continue;
      d[j] = d[i] / g * d[j];
      d[i] = g;
    }
  }
  for (auto& x : d)
    if (x != 1) torsion_.push_back(std::move(x));
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '{' && ch != '}' && ch != '\t') s.push_back(ch);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("abelian group must be bracketed: " + std::string(text));
  s = s.substr(1, s.size() - 2);
  std::size_t free = 0;
  std::vector<Integer> orders;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(pos, comma - pos);
    pos = comma + 1;
    if (tok.empty()) throw std::invalid_argument("empty entry in abelian group string");
    std::size_t caret = tok.find('^');
    Integer base, mult = 1;
    try {
      base = Integer(tok.substr(0, caret));
      if (caret != std::string::npos) mult = Integer(tok.substr(caret + 1));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed abelian group entry: " + tok);
    }
    const unsigned long m = mult.get_ui();
    if (base == 0)
      free += m;
    else
      for (unsigned long k = 0; k < m; ++k) orders.push_back(base);
  }
  return AbelianGroup(free, std::move(orders));
}

Integer AbelianGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

std::vector<std::pair<Integer, std::size_t>> AbelianGroup::elementary_divisors() const {
  std::map<std::pair<Integer, unsigned>, std::size_t> counts;  // (prime, exponent) -> multiplicity
  for (const auto& d : torsion_)
    for (auto& [prime, e] : factor_integer(d)) ++counts[{prime, e}];
  std::vector<std::pair<Integer, std::size_t>> out;
  for (auto& [key, mult] : counts) out.emplace_back(power(key.first, key.second), mult);
  return out;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  auto entry = [](const std::string& base, std::size_t mult) {
    return mult == 1 ? base : base + "^" + std::to_string(mult);
  };
  if (free_rank_) parts.push_back(entry("0", free_rank_));
  for (auto& [q, mult] : elementary_divisors()) parts.push_back(entry(q.get_str(), mult));
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + "]";
}

}  // namespace metacov
