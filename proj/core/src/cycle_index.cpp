#include "modlat/cycle_index.hpp"

#include <charconv>
#include <stdexcept>

namespace modlat {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("expected an integer");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a nonnegative integer: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

CycleType cycle_type(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  CycleType counts(n, 0);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int length = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++length;
    }
    ++counts[length - 1];
  }
  return counts;
}

CycleIndex CycleIndex::of_group(int degree, const std::vector<Permutation>& elements) {
  if (elements.empty()) throw std::invalid_argument("cycle index of an empty group");
  CycleIndex z;
  z.degree_ = degree;
  const Rational weight(1, static_cast<long long>(elements.size()));
  for (const Permutation& g : elements) {
    if (static_cast<int>(g.size()) != degree) {
      throw std::invalid_argument("cycle index: permutation of wrong degree");
    }
    z.terms_[cycle_type(g)] += weight;
  }
  return z;
}

CycleIndex cycle_index(const SiteAction& action) {
  return CycleIndex::of_group(action.degree, action.elements);
}

Rational CycleIndex::evaluate_at_ones() const {
  Rational sum = 0;
  for (const auto& [type, coef] : terms_) sum += coef;
  return sum;
}

std::string CycleIndex::to_string() const {
  if (degree_ == 0) return "1";
  std::string text;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [type, coef] = *it;
    if (!text.empty()) text += '+';
    std::string monomial;
    for (std::size_t i = 0; i < type.size(); ++i) {
      if (type[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += 't' + std::to_string(i + 1);
      if (type[i] > 1) monomial += '^' + std::to_string(type[i]);
    }
    if (coef != 1) {
      text += boost::multiprecision::numerator(coef).str();
      if (boost::multiprecision::denominator(coef) != 1) {
        text += '/' + boost::multiprecision::denominator(coef).str();
      }
      text += '*';
    }
    text += monomial;
  }
  return text;
}

namespace {

int parse_small(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || value <= 0) {
    throw std::invalid_argument("cycle index: bad number '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

CycleIndex CycleIndex::parse(std::string_view text) {
  CycleIndex z;
  if (text == "1") {
    z.terms_[CycleType{}] = 1;
    return z;
  }
  std::vector<std::pair<std::map<int, int>, Rational>> raw;
  int degree = -1;
  while (!text.empty()) {
    const std::size_t plus = text.find('+');
    std::string_view term = text.substr(0, plus);
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
    Rational coef = 1;
    std::map<int, int> powers;
    while (!term.empty()) {
      const std::size_t star = term.find('*');
      std::string_view factor = term.substr(0, star);
      term = star == std::string_view::npos ? std::string_view{} : term.substr(star + 1);
      if (!factor.empty() && factor.front() == 't') {
        const std::size_t caret = factor.find('^');
        const int length = parse_small(factor.substr(1, caret == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : caret - 1));
        const int power =
            caret == std::string_view::npos ? 1 : parse_small(factor.substr(caret + 1));
        powers[length] += power;
      } else {
        const std::size_t slash = factor.find('/');
        const BigInt num = parse_bigint(factor.substr(0, slash));
        const BigInt den = slash == std::string_view::npos ? BigInt(1)
                                                           : parse_bigint(factor.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("cycle index: zero denominator");
        coef *= Rational(num, den);
      }
    }
    int term_degree = 0;
    for (const auto& [length, power] : powers) term_degree += length * power;
    if (degree >= 0 && term_degree != degree) {
      throw std::invalid_argument("cycle index: terms of different degree");
    }
    degree = term_degree;
    raw.emplace_back(std::move(powers), coef);
  }
  if (degree <= 0) throw std::invalid_argument("cycle index: empty or malformed");
  z.degree_ = degree;
  for (auto& [powers, coef] : raw) {
    CycleType type(degree, 0);
    for (const auto& [length, power] : powers) type[length - 1] = power;
    z.terms_[type] += coef;
  }
  return z;
}

}  // namespace modlat
