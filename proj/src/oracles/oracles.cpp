#include "ugdual/oracles/oracles.hpp"

#include <bit>
#include <deque>
#include <numeric>

#include "ugdual/linalg.hpp"

namespace ugdual::oracle {

long Rng::range(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(gen_() % span);
}

Rational Rng::rational(long num, long den) { return Rational(range(-num, num)) / Rational(range(1, den)); }

Rational Rng::nonzero_rational(long num, long den) {
  Rational r;
  do r = rational(num, den);
  while (r.is_zero());
  return r;
}

Word Rng::word(std::size_t letters, std::size_t length) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(Letter{static_cast<std::uint32_t>(range(0, static_cast<long>(letters) - 1))});
  return Word(std::move(out));
}

std::map<Word, std::uint64_t> shuffles_by_positions(const Word& w1, const Word& w2) {
  const std::size_t n = w1.length() + w2.length();
  std::map<Word, std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != w1.length()) continue;
    std::vector<Letter> letters;
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t p = 0; p < n; ++p) letters.push_back((mask >> p) & 1U ? w1[a++] : w2[b++]);
    ++out[Word(std::move(letters))];
  }
  return out;
}

Matrix nilpotent_exp(const Matrix& x) {
  const auto n = x.rows();
  Matrix out = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (long k = 1; k <= n; ++k) {
    term = (term * x) / Rational(k);
    out += term;
  }
  if (!linalg::is_zero(term * x)) throw std::logic_error("matrix is not nilpotent");
  return out;
}

Rational eval_group_dense(const RepSpec& r, const GroupWord& g, const Vector& phi, const Vector& v) {
  const auto n = static_cast<Eigen::Index>(r.dim());
  Matrix total = Matrix::Identity(n, n);
  for (const auto& f : g) {
    const Matrix& m = r.matrix(f.letter);
    Matrix step;
    if (f.type == OneParamFactor::Type::Exp) {
      step = nilpotent_exp(f.param * m);
    } else {
      step = Matrix::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i) step(i, i) = pow(f.param, m(i, i).to_long());
    }
    total = total * step;
  }
  return phi.dot(total * v);
}

Rational product_by_subsets(const Functional& h1, const Functional& h2, const Word& w) {
  const std::size_t n = w.length();
  Rational s = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Letter> in;
    std::vector<Letter> out;
    for (std::size_t p = 0; p < n; ++p) ((mask >> p) & 1U ? in : out).push_back(w[p]);
    s += evaluate(h1, Word(in)) * evaluate(h2, Word(out));
  }
  return s;
}

Matrix sl2_e(long m) {
  Matrix x = Matrix::Zero(m + 1, m + 1);
  for (long k = 1; k <= m; ++k) x(k - 1, k) = Rational(m - k + 1);
  return x;
}

Matrix sl2_f(long m) {
  Matrix x = Matrix::Zero(m + 1, m + 1);
  for (long k = 0; k < m; ++k) x(k + 1, k) = Rational(k + 1);
  return x;
}

Matrix sl2_h(long m) {
  Matrix x = Matrix::Zero(m + 1, m + 1);
  for (long k = 0; k <= m; ++k) x(k, k) = Rational(m - 2 * k);
  return x;
}

Rational sl2_theta(long m, const Rational& b, const Rational& a) {
  const Matrix g = nilpotent_exp(b * sl2_e(m)) * nilpotent_exp(a * sl2_f(m));
  return g(0, 0);
}

long weyl_dim_a2(long a, long b) { return (a + 1) * (b + 1) * (a + b + 2) / 2; }

bool sl2_cone_by_casimir(long m, const Vector& v) {
  const auto n = m + 1;
  const Matrix id = Matrix::Identity(n, n);
  auto both = [&](const Matrix& x) -> Matrix { return linalg::kronecker(x, id) + linalg::kronecker(id, x); };
  const Matrix e = both(sl2_e(m));
  const Matrix f = both(sl2_f(m));
  const Matrix h = both(sl2_h(m));
  // ef + fe + h²/2 acts on L(n) by n(n+2)/2.
  const Matrix casimir = e * f + f * e + h * h / Rational(2);
  const Rational top = Rational(2 * m) * Rational(2 * m + 2) / Rational(2);
  const Matrix shifted = casimir - top * Matrix::Identity(n * n, n * n);
  const Vector vv = linalg::kronecker(Matrix(v), Matrix(v));
  return linalg::is_zero(shifted * vv);
}

std::set<long> monoid_closure(const std::set<long>& generators, long lo, long hi) {
  long g = 0;
  for (const long x : generators) g = std::max(g, std::abs(x));
  // Ordering the summands greedily keeps partial sums within g of the target.
  const long blo = std::min(lo, 0L) - g;
  const long bhi = std::max(hi, 0L) + g;
  std::set<long> seen{0};
  std::deque<long> q{0};
  while (!q.empty()) {
    const long x = q.front();
    q.pop_front();
    for (const long d : generators) {
      const long y = x + d;
      if (y < blo || y > bhi || !seen.insert(y).second) continue;
      q.push_back(y);
    }
  }
  std::set<long> out;
  for (const long x : seen) {
    if (x >= lo && x <= hi) out.insert(x);
  }
  return out;
}

}  // namespace ugdual::oracle
