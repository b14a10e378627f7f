#include "ugdual/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "ugdual/errors.hpp"

namespace ugdual {

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != variables_) throw ValidationError("MultiPoly: exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != variables_) throw ValidationError("MultiPoly: evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= pow(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

std::vector<long> MultiPoly::degree_bounds() const {
  std::vector<long> out(variables_, 0);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = std::max(out[i], e[i]);
  }
  return out;
}

std::string MultiPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const long da = std::accumulate(a.first.begin(), a.first.end(), 0L);
    const long db = std::accumulate(b.first.begin(), b.first.end(), 0L);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (std::size_t t = 0; t < ordered.size(); ++t) {
    const auto& [e, c] = ordered[t];
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var + std::to_string(i + 1);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    const Rational mag = abs(c);
    std::string term;
    if (mono.empty()) {
      term = mag.str();
    } else if (mag == Rational(1)) {
      term = mono;
    } else {
      term = mag.str() + "*" + mono;
    }
    if (t == 0) {
      out = (c.sign() < 0 ? "-" : "") + term;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace ugdual
