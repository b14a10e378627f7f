#include "ugdual/kacmoody.hpp"
#include "ugdual/linalg.hpp"

namespace ugdual::km {

namespace {

std::string tag(const Depth& k, std::size_t j) {
  std::string s = "basis vector " + std::to_string(j) + " at depth (";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

void expect(RelationReport& r, bool ok, const std::string& what) {
  ++r.checked;
  if (!ok) {
    r.ok = false;
    r.failures.push_back(what);
  }
}

WeightVector power(const IrrTrunc& m, const Chevalley& g, std::size_t times, WeightVector v) {
  for (std::size_t t = 0; t < times && !v.is_zero(); ++t) v = m.apply(g, v, false);
  return v;
}

}  // namespace

RelationReport check_relations(const IrrTrunc& m) {
  RelationReport r;
  const auto& gcm = m.gcm();
  const std::size_t n = gcm.size();
  const auto depth = static_cast<int>(m.depth());
  for (const auto& k : m.weights()) {
    const int lv = level(k);
    for (std::size_t b = 0; b < m.multiplicity(k); ++b) {
      const WeightVector v = m.basis_vector(k, b);
      for (std::size_t i = 0; i < n; ++i) {
        const auto hi = Chevalley::h(i);
        for (std::size_t j = 0; j < n; ++j) {
          const auto ej = Chevalley::e(j);
          const auto fj = Chevalley::f(j);
          const Rational aij(gcm.a(i, j));
          {
            const WeightVector lhs = m.apply(hi, m.apply(ej, v, false), false) - m.apply(ej, m.apply(hi, v, false), false);
            expect(r, lhs == aij * m.apply(ej, v, false),
                   "[h" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] on " + tag(k, b));
          }
          if (lv + 1 <= depth) {
            const WeightVector fv = m.apply(fj, v, false);
            const WeightVector lhs = m.apply(hi, fv, false) - m.apply(fj, m.apply(hi, v, false), false);
            expect(r, lhs == Rational(-gcm.a(i, j)) * fv,
                   "[h" + std::to_string(i + 1) + ",f" + std::to_string(j + 1) + "] on " + tag(k, b));
            const auto ei = Chevalley::e(i);
            const WeightVector comm = m.apply(ei, fv, false) - m.apply(fj, m.apply(ei, v, false), false);
            const WeightVector want = i == j ? m.apply(hi, v, false) : WeightVector{};
            expect(r, comm == want, "[e" + std::to_string(i + 1) + ",f" + std::to_string(j + 1) + "] on " + tag(k, b));
          } else {
            r.skipped += 2;
          }
          if (i == j) continue;
          // ad(x_i)^{1-a_ij} x_j = Σ_r (-1)^r C(p,r) x_i^{p-r} x_j x_i^r.
          const auto p = static_cast<std::size_t>(1 - gcm.a(i, j));
          for (const bool raising : {true, false}) {
            if (!raising && lv + static_cast<int>(p) + 1 > depth) {
              ++r.skipped;
              continue;
            }
            const auto xi = raising ? Chevalley::e(i) : Chevalley::f(i);
            const auto xj = raising ? Chevalley::e(j) : Chevalley::f(j);
            WeightVector sum;
            for (std::size_t rr = 0; rr <= p; ++rr) {
              WeightVector t = power(m, xi, p - rr, m.apply(xj, power(m, xi, rr, v), false));
              const Rational c = binomial(p, rr) * Rational(rr % 2 ? -1 : 1);
              sum += c * t;
            }
            expect(r, sum.is_zero(),
                   std::string(raising ? "e" : "f") + "-Serre (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       ") on " + tag(k, b));
          }
        }
      }
    }
  }
  return r;
}

RelationReport check_integrability(const IrrTrunc& m) {
  RelationReport r;
  const std::size_t n = m.gcm().size();
  for (const auto& k : m.weights()) {
    const auto lam = m.coords(k);
    for (std::size_t b = 0; b < m.multiplicity(k); ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        const long bound = lam[i] + k[i] + 1;
        if (bound < 0 || static_cast<std::size_t>(level(k) + bound) > m.options().depth_cap) {
          ++r.skipped;
          continue;
        }
        WeightVector v = m.basis_vector(k, b);
        try {
          for (long t = 0; t < bound && !v.is_zero(); ++t) v = m.apply(Chevalley::f(i), v, true);
        } catch (const CapExceeded&) {
          ++r.skipped;
          continue;
        }
        expect(r, v.is_zero(), "f" + std::to_string(i + 1) + " not nilpotent within bound on " + tag(k, b));
      }
    }
  }
  return r;
}

RelationReport check_contravariance(const IrrTrunc& m) {
  RelationReport r;
  for (const auto& k : m.weights()) {
    const Matrix g = m.spanning_gram(k);
    const Matrix gb = m.gram(k);
    expect(r, g == g.transpose(), "spanning Gram not symmetric at " + tag(k, 0));
    const auto d = static_cast<Eigen::Index>(m.multiplicity(k));
    expect(r, linalg::rank(g) == d && gb.rows() == d && linalg::rank(gb) == d,
           "quotient form degenerate or rank mismatch at " + tag(k, 0));
  }
  return r;
}

}  // namespace ugdual::km
