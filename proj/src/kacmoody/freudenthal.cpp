#include <algorithm>
#include <functional>
#include <set>

#include "ugdual/kacmoody.hpp"

namespace ugdual::km {

namespace {

// All nonzero β ∈ Q+ with β <= bound componentwise, by increasing height.
std::vector<Depth> below(const Depth& bound) {
  std::vector<Depth> out;
  Depth cur(bound.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == bound.size()) {
      if (level(cur) > 0) out.push_back(cur);
      return;
    }
    for (int x = 0; x <= bound[i]; ++x) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const Depth& a, const Depth& b) { return level(a) < level(b); });
  return out;
}

long form(const Gcm& gcm, const Depth& a, const Depth& b) {
  long s = 0;
  for (std::size_t i = 0; i < gcm.size(); ++i) {
    for (std::size_t j = 0; j < gcm.size(); ++j) s += static_cast<long>(a[i]) * b[j] * gcm.form(i, j);
  }
  return s;
}

// (β|ρ) with ρ(h_i) = 1.
long form_rho(const Gcm& gcm, const Depth& b) {
  long s = 0;
  for (std::size_t i = 0; i < gcm.size(); ++i) s += static_cast<long>(b[i]) * gcm.symmetrizer()[i];
  return s;
}

}  // namespace

std::map<Depth, Rational> root_multiplicities(const Gcm& gcm, int max_height) {
  const std::size_t n = gcm.size();
  std::vector<Depth> all;
  {
    // Every β of height <= max_height.
    std::vector<Depth> frontier{Depth(n, 0)};
    std::set<Depth> seen;
    for (int h = 1; h <= max_height; ++h) {
      std::vector<Depth> next;
      for (const auto& b : frontier) {
        for (std::size_t i = 0; i < n; ++i) {
          Depth c = b;
          ++c[i];
          if (seen.insert(c).second) next.push_back(c);
        }
      }
      std::sort(next.begin(), next.end());
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }
  std::map<Depth, Rational> c;
  std::map<Depth, Rational> mult;
  for (const auto& beta : all) {
    const long coeff = form(gcm, beta, beta) - 2 * form_rho(gcm, beta);
    Rational rhs = 0;
    for (const auto& b1 : below(beta)) {
      if (b1 == beta) continue;
      Depth b2 = beta;
      for (std::size_t i = 0; i < n; ++i) b2[i] -= b1[i];
      auto i1 = c.find(b1);
      auto i2 = c.find(b2);
      if (i1 == c.end() || i2 == c.end()) continue;
      rhs += Rational(form(gcm, b1, b2)) * i1->second * i2->second;
    }
    // Σ_{k>=2, kγ=β} mult(γ)/k.
    Rational from_divisors = 0;
    for (int k = 2; k <= level(beta); ++k) {
      bool divisible = true;
      Depth q(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (beta[i] % k != 0) divisible = false;
        q[i] = beta[i] / k;
      }
      if (divisible) from_divisors += mult.at(q) / Rational(k);
    }
    Rational m;
    if (level(beta) == 1) {
      m = 1;
    } else if (coeff == 0) {
      // (β|β) = 2(ρ|β) holds for no root of height > 1, so the recursion
      // leaves c_β free and mult(β) = 0.
      if (!rhs.is_zero()) throw std::logic_error("Peterson recursion inconsistent");
      m = 0;
    } else {
      m = rhs / Rational(coeff) - from_divisors;
    }
    c[beta] = m + from_divisors;
    mult[beta] = m;
  }
  return mult;
}

std::size_t freudenthal_oracle(const Gcm& gcm, const std::vector<long>& highest, const Depth& k) {
  const std::size_t n = gcm.size();
  if (k.size() != n || highest.size() != n) throw ValidationError("weight data does not match the Cartan matrix size");
  for (const int x : k) {
    if (x < 0) return 0;
  }
  const auto roots = root_multiplicities(gcm, level(k));
  auto lam_form = [&](const Depth& a) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<long>(a[i]) * gcm.symmetrizer()[i] * highest[i];
    return s;
  };

  std::map<Depth, Rational> memo;
  memo[Depth(n, 0)] = 1;
  for (const auto& beta : below(k)) {
    // (Λ+ρ|Λ+ρ) - (λ+ρ|λ+ρ) with λ = Λ - β.
    const long lhs = 2 * (lam_form(beta) + form_rho(gcm, beta)) - form(gcm, beta, beta);
    Rational rhs = 0;
    for (const auto& [alpha, m] : roots) {
      if (m.is_zero()) continue;
      for (int j = 1;; ++j) {
        Depth rest = beta;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          rest[i] -= j * alpha[i];
          if (rest[i] < 0) ok = false;
        }
        if (!ok) break;
        auto it = memo.find(rest);
        if (it == memo.end() || it->second.is_zero()) continue;
        // (λ + jα | α) = (Λ|α) - (β|α) + j(α|α).
        const long w = lam_form(alpha) - form(gcm, beta, alpha) + j * form(gcm, alpha, alpha);
        rhs += Rational(2 * w) * m * it->second;
      }
    }
    Rational val;
    if (lhs == 0) {
      if (!rhs.is_zero()) throw std::logic_error("Freudenthal recursion inconsistent");
      val = 0;
    } else {
      val = rhs / Rational(lhs);
    }
    memo[beta] = val;
  }
  const Rational& out = memo.at(k);
  if (!out.is_integer() || out.sign() < 0) throw std::logic_error("Freudenthal recursion produced a non-natural value");
  return static_cast<std::size_t>(out.to_long());
}

}  // namespace ugdual::km
