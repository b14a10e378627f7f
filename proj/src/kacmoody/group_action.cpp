#include "ugdual/kacmoody.hpp"
#include "ugdual/linalg.hpp"

namespace ugdual::km {

RootVector multibracket_rootvector(const Gcm& gcm, const std::vector<std::size_t>& seq) {
  if (seq.empty()) throw ValidationError("multibracket needs at least one index");
  std::vector<Letter> letters;
  for (const auto i : seq) {
    if (i >= gcm.size()) throw ValidationError("multibracket index " + std::to_string(i + 1) + " out of range");
    letters.push_back(Letter{static_cast<std::uint32_t>(i)});
  }
  return RootVector{seq, multibracket<Rational>(letters)};
}

WeightVector act_root_vector(const IrrTrunc& m, const RootVector& x, const WeightVector& v) {
  WeightVector out;
  for (const auto& [w, c] : x.expansion.terms()) {
    WeightVector y = v;
    for (std::size_t p = w.length(); p-- > 0 && !y.is_zero();) y = m.apply(Chevalley::e(w[p].id), y, false);
    out += c * y;
  }
  return out;
}

bool acts_as_zero(const IrrTrunc& m, const RootVector& x) {
  for (const auto& k : m.weights()) {
    for (std::size_t j = 0; j < m.multiplicity(k); ++j) {
      if (!act_root_vector(m, x, m.basis_vector(k, j)).is_zero()) return false;
    }
  }
  return true;
}

long coweight_value(const IrrTrunc& m, const Coweight& h, const Depth& k) {
  const auto& gcm = m.gcm();
  if (h.h_coeffs.size() != gcm.size()) throw ValidationError("coweight must list one coefficient per simple coroot");
  const auto lam = m.coords(k);
  long out = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) out += h.h_coeffs[i] * lam[i];
  if (h.extra) {
    if (*h.extra >= gcm.extra_coweights().size()) throw ValidationError("extra coweight index out of range");
    const auto& x = gcm.extra_coweights()[*h.extra];
    for (std::size_t j = 0; j < k.size(); ++j) out -= static_cast<long>(k[j]) * x[j];
  }
  return out;
}

namespace {

template <typename Step>
WeightVector exp_series(const Rational& t, const WeightVector& v, Step step) {
  if (t.is_zero()) return v;
  WeightVector out = v;
  WeightVector term = v;
  for (long k = 1; !term.is_zero(); ++k) {
    term = (t / Rational(k)) * step(term);
    out += term;
  }
  return out;
}

}  // namespace

WeightVector exp_action(const IrrTrunc& m, const KMFactor& factor, const WeightVector& v) {
  return std::visit(
      [&](const auto& f) -> WeightVector {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, KMFactor::ExpE>) {
          return exp_series(f.t, v, [&](const WeightVector& x) { return m.apply(Chevalley::e(f.index), x, true); });
        } else if constexpr (std::is_same_v<F, KMFactor::ExpF>) {
          return exp_series(f.t, v, [&](const WeightVector& x) { return m.apply(Chevalley::f(f.index), x, true); });
        } else if constexpr (std::is_same_v<F, KMFactor::ExpRoot>) {
          return exp_series(f.t, v, [&](const WeightVector& x) { return act_root_vector(m, f.x, x); });
        } else {
          if (f.s.is_zero()) throw ValidationError("torus parameter must be nonzero");
          WeightVector out;
          for (const auto& [k, x] : v.components()) out.add(k, pow(f.s, coweight_value(m, f.h, k)) * x);
          return out;
        }
      },
      factor.factor);
}

WeightVector act_km_group(const IrrTrunc& m, const KMGroupWord& g, const WeightVector& v) {
  WeightVector out = v;
  for (auto it = g.rbegin(); it != g.rend(); ++it) out = exp_action(m, *it, out);
  return out;
}

Rational theta_eval(const IrrTrunc& m, const KMGroupWord& g) {
  const WeightVector top = act_km_group(m, g, m.highest_weight_vector());
  return pair(m.highest_weight_vector(), top);
}

Rational eval_coefficient(const KMMatrixCoefficient& c, const KMGroupWord& g) {
  return pair(c.phi, act_km_group(c.module, g, c.v));
}

std::size_t peter_weyl_rank(const std::vector<KMMatrixCoefficient>& coefficients, const std::vector<KMGroupWord>& sample) {
  Matrix ev(static_cast<Eigen::Index>(coefficients.size()), static_cast<Eigen::Index>(sample.size()));
  for (std::size_t r = 0; r < coefficients.size(); ++r) {
    for (std::size_t c = 0; c < sample.size(); ++c) {
      ev(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = eval_coefficient(coefficients[r], sample[c]);
    }
  }
  return static_cast<std::size_t>(linalg::rank(ev));
}

}  // namespace ugdual::km
