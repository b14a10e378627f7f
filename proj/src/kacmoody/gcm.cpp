#include <numeric>
#include <queue>

#include "ugdual/kacmoody.hpp"
#include "ugdual/linalg.hpp"

namespace ugdual::km {

Gcm validate_gcm(const IntMatrix& a, std::vector<std::vector<long>> extra_coweights) {
  if (a.rows() != a.cols() || a.rows() == 0) throw ValidationError("GCM must be a nonempty square matrix");
  const auto n = static_cast<std::size_t>(a.rows());
  auto at = [&](std::size_t i, std::size_t j) { return a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 2) throw ValidationError("GCM: diagonal entry a_" + std::to_string(i + 1) + std::to_string(i + 1) + " is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (at(i, j) > 0) {
        throw ValidationError("GCM: off-diagonal entry a_" + std::to_string(i + 1) + "," + std::to_string(j + 1) + " is positive");
      }
      if ((at(i, j) == 0) != (at(j, i) == 0)) {
        throw ValidationError("GCM: a_" + std::to_string(i + 1) + "," + std::to_string(j + 1) + " and a_" +
                              std::to_string(j + 1) + "," + std::to_string(i + 1) + " differ in being zero");
      }
    }
  }
  for (const auto& h : extra_coweights) {
    if (h.size() != n) throw ValidationError("GCM: extra coweight must list one value per simple root");
  }

  // d_i a_ij = d_j a_ji: propagate along the Dynkin graph, then clear
  // denominators and common factors per component.
  std::vector<std::optional<Rational>> d(n);
  std::vector<long> out(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root]) continue;
    std::vector<std::size_t> component;
    std::queue<std::size_t> q;
    d[root] = Rational(1);
    q.push(root);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      component.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || at(i, j) == 0) continue;
        const Rational dj = *d[i] * Rational(at(i, j)) / Rational(at(j, i));
        if (!d[j]) {
          d[j] = dj;
          q.push(j);
        } else if (*d[j] != dj) {
          throw ValidationError("GCM is not symmetrizable");
        }
      }
    }
    mpz_class lcm_den = 1;
    for (const auto i : component) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d[i]->denominator().get_mpz_t());
    mpz_class g = 0;
    for (const auto i : component) {
      const mpz_class num = d[i]->numerator() * (lcm_den / d[i]->denominator());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    for (const auto i : component) {
      const mpz_class num = d[i]->numerator() * (lcm_den / d[i]->denominator()) / g;
      out[i] = num.get_si();
    }
  }
  Gcm gcm;
  gcm.a_ = a;
  gcm.d_ = std::move(out);
  gcm.extra_ = std::move(extra_coweights);
  return gcm;
}

int level(const Depth& k) { return std::accumulate(k.begin(), k.end(), 0); }

std::vector<long> weight_coords(const Gcm& gcm, const std::vector<long>& highest, const Depth& k) {
  std::vector<long> out = highest;
  for (std::size_t i = 0; i < gcm.size(); ++i) {
    for (std::size_t j = 0; j < gcm.size(); ++j) out[i] -= static_cast<long>(k[j]) * gcm.a(i, j);
  }
  return out;
}

std::optional<Depth> depth_of(const Gcm& gcm, const std::vector<long>& highest, const std::vector<long>& coords) {
  const auto n = static_cast<Eigen::Index>(gcm.size());
  Matrix a(n, n);
  Vector rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    rhs(i) = Rational(highest[static_cast<std::size_t>(i)] - coords[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rational(gcm.matrix()(i, j));
  }
  if (linalg::rank(a) < n) return std::nullopt;
  const auto x = linalg::solve(a, rhs);
  if (!x) return std::nullopt;
  Depth k;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(*x)(i).is_integer() || (*x)(i).sign() < 0) return std::nullopt;
    k.push_back(static_cast<int>((*x)(i).to_long()));
  }
  return k;
}

Vector WeightVector::component(const Depth& k, std::size_t dim) const {
  auto it = parts_.find(k);
  return it == parts_.end() ? Vector::Zero(static_cast<Eigen::Index>(dim)) : it->second;
}

int WeightVector::max_level() const {
  int out = 0;
  for (const auto& [k, v] : parts_) out = std::max(out, level(k));
  return out;
}

void WeightVector::add(const Depth& k, const Vector& v) {
  if (linalg::is_zero(v)) return;
  auto [it, inserted] = parts_.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (linalg::is_zero(it->second)) parts_.erase(it);
  }
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  for (const auto& [k, v] : o.parts_) add(k, v);
  return *this;
}

WeightVector& WeightVector::operator*=(const Rational& s) {
  if (s.is_zero()) {
    parts_.clear();
    return *this;
  }
  for (auto& [k, v] : parts_) v *= s;
  return *this;
}

Rational pair(const WeightVector& covector, const WeightVector& v) {
  Rational s = 0;
  for (const auto& [k, x] : v.components()) {
    auto it = covector.components().find(k);
    if (it == covector.components().end()) continue;
    for (Eigen::Index i = 0; i < x.size(); ++i) s += it->second(i) * x(i);
  }
  return s;
}

}  // namespace ugdual::km
