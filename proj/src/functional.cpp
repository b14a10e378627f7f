#include "ugdual/functional.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ugdual/linalg.hpp"

namespace ugdual {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational pair(const Vector& phi, const Vector& v) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!phi(i).is_zero() && !v(i).is_zero()) s += phi(i) * v(i);
  }
  return s;
}

bool is_prefix(const Word& u, const Word& w) {
  if (u.length() > w.length()) return false;
  return std::equal(u.begin(), u.end(), w.begin());
}

bool is_suffix(const Word& u, const Word& w) {
  if (u.length() > w.length()) return false;
  return std::equal(u.letters().rbegin(), u.letters().rend(), w.letters().rbegin());
}

// Eigen-coordinates of u for a diagonal integer matrix, keyed by eigenvalue.
std::map<long, Vector> diagonal_components(const Matrix& m, const Vector& u, const std::string& name) {
  std::map<long, Vector> out;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero()) {
        throw ValidationError("letter '" + name + "' is not diagonal in the module basis");
      }
    }
    if (u(i).is_zero()) continue;
    if (!m(i, i).is_integer()) throw ValidationError("letter '" + name + "' has a non-integer eigenvalue");
    auto [it, inserted] = out.try_emplace(m(i, i).to_long(), Vector::Zero(u.size()));
    it->second(i) = u(i);
  }
  return out;
}

void expand_positions(const MatrixCoefficient& h, const std::vector<Letter>& tuple, std::size_t remaining,
                      const Vector& u, std::vector<long>& index, RhoExpansion& out) {
  if (remaining == 0) {
    const Rational c = pair(h.phi(), u);
    if (!c.is_zero()) out.coeffs[index] += c;
    return;
  }
  const std::size_t pos = remaining - 1;
  const Letter e = tuple[pos];
  const RepSpec& r = h.rep();
  const Matrix& m = r.matrix(e);
  if (r.kind(e) == GeneratorKind::LocallyNilpotent) {
    // u_k = e^k u / k!, finitely many nonzero when e acts nilpotently.
    Vector term = u;
    for (long k = 0; !linalg::is_zero(term); ++k) {
      if (static_cast<std::size_t>(k) > r.dim()) {
        throw NotRegular("expansion along '" + r.alphabet().name(e) + "' does not terminate: letter is not nilpotent");
      }
      index[pos] = k;
      expand_positions(h, tuple, pos, term, index, out);
      term = (m * term).eval() / Rational(k + 1);
    }
    return;
  }
  for (const auto& [eigenvalue, component] : diagonal_components(m, u, r.alphabet().name(e))) {
    index[pos] = eigenvalue;
    expand_positions(h, tuple, pos, component, index, out);
  }
}

// Power word e1^k1 ⋯ ep^kp.
Word power_word(const std::vector<Letter>& tuple, const std::vector<long>& k) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    letters.insert(letters.end(), static_cast<std::size_t>(k[i]), tuple[i]);
  }
  return Word(std::move(letters));
}

void enumerate_exponents(std::size_t p, std::size_t budget, std::vector<long>& k, std::size_t pos,
                         const std::function<void(const std::vector<long>&)>& visit) {
  if (pos == p) {
    visit(k);
    return;
  }
  for (std::size_t a = 0; a <= budget; ++a) {
    k[pos] = static_cast<long>(a);
    enumerate_exponents(p, budget - a, k, pos + 1, visit);
  }
}

RhoExpansion expand_finite(const FiniteFunctional& h, const std::vector<Letter>& tuple, const Alphabet& alphabet) {
  RhoExpansion out{tuple, {}, {}};
  for (const Letter e : tuple) out.kinds.push_back(alphabet.kind(e));
  std::vector<long> k(tuple.size(), 0);
  enumerate_exponents(tuple.size(), h.coeffs.max_length(), k, 0, [&](const std::vector<long>& idx) {
    Rational c = h.coeffs.coeff(power_word(tuple, idx));
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (out.kinds[i] == GeneratorKind::DiagonalizableInteger && idx[i] != 0) {
        throw NotRegular("finitely supported functional is not regular along diagonalizable letter '" +
                         alphabet.name(tuple[i]) + "'");
      }
      c /= factorial(static_cast<unsigned>(idx[i]));
    }
    out.coeffs[idx] += c;
  });
  return out;
}

void for_each_tuple(const std::vector<Letter>& letters, std::size_t length, std::vector<Letter>& current,
                    const std::function<void(const std::vector<Letter>&)>& visit) {
  if (current.size() == length) {
    visit(current);
    return;
  }
  for (const Letter l : letters) {
    current.push_back(l);
    for_each_tuple(letters, length, current, visit);
    current.pop_back();
  }
}

// Columns of the returned matrix form a basis of the span of `vectors`.
Matrix column_basis(const std::vector<Vector>& vectors, Eigen::Index n) {
  Matrix m(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vectors[i];
  const auto cols = linalg::independent_columns(m);
  Matrix out(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = m.col(cols[i]);
  return out;
}

}  // namespace

MatrixCoefficient::MatrixCoefficient(std::shared_ptr<const RepSpec> rep, Vector phi, Vector v)
    : rep_(std::move(rep)), phi_(std::move(phi)), v_(std::move(v)) {
  if (!rep_) throw ValidationError("matrix coefficient without a module");
  const auto n = static_cast<Eigen::Index>(rep_->dim());
  if (phi_.size() != n || v_.size() != n) {
    throw ValidationError("matrix coefficient: covector/vector length does not match module dimension " +
                          std::to_string(n));
  }
}

FiniteFunctional phi(const Word& w) { return FiniteFunctional{NcPoly(w)}; }

FiniteFunctional shuffle_product(const FiniteFunctional& h1, const FiniteFunctional& h2) {
  FiniteFunctional out;
  for (const auto& [w1, c1] : h1.coeffs.terms()) {
    for (const auto& [w2, c2] : h2.coeffs.terms()) {
      const Rational c = c1 * c2;
      for (const auto& [w, mult] : shuffles(w1, w2)) out.coeffs.add_term(w, c * Rational(mult));
    }
  }
  return out;
}

Rational evaluate(const Functional& h, const NcPoly& x) {
  return std::visit(overloaded{[&](const FiniteFunctional& f) {
                                 Rational s = 0;
                                 for (const auto& [w, c] : x.terms()) s += c * f.coeffs.coeff(w);
                                 return s;
                               },
                               [&](const MatrixCoefficient& m) { return pair(m.phi(), act_poly(m.rep(), x, m.v())); }},
                    h);
}

Rational evaluate(const Functional& h, const Word& w) { return evaluate(h, NcPoly(w)); }

Functional right_translate(const NcPoly& x, const Functional& h) {
  return std::visit(overloaded{[&](const FiniteFunctional& f) -> Functional {
                                 FiniteFunctional out;
                                 for (const auto& [w, c] : f.coeffs.terms()) {
                                   for (const auto& [u, a] : x.terms()) {
                                     if (is_suffix(u, w)) out.coeffs.add_term(w.subword(0, w.length() - u.length()), c * a);
                                   }
                                 }
                                 return out;
                               },
                               [&](const MatrixCoefficient& m) -> Functional {
                                 return MatrixCoefficient(m.rep_ptr(), m.phi(), act_poly(m.rep(), x, m.v()));
                               }},
                    h);
}

Functional left_translate(const NcPoly& x, const Functional& h) {
  return std::visit(overloaded{[&](const FiniteFunctional& f) -> Functional {
                                 FiniteFunctional out;
                                 for (const auto& [w, c] : f.coeffs.terms()) {
                                   for (const auto& [u, a] : x.terms()) {
                                     if (is_prefix(u, w)) out.coeffs.add_term(w.subword(u.length(), w.length() - u.length()), c * a);
                                   }
                                 }
                                 return out;
                               },
                               [&](const MatrixCoefficient& m) -> Functional {
                                 // phi(x z v) = ((x_V)^T phi)(z v); on the dual module words act reversed.
                                 const RepSpec dual = dual_rep(m.rep());
                                 NcPoly reversed;
                                 for (const auto& [w, c] : x.terms()) reversed.add_term(w.reversed(), c);
                                 return MatrixCoefficient(m.rep_ptr(), act_poly(dual, reversed, m.phi()), m.v());
                               }},
                    h);
}

MatrixCoefficient realize(const FiniteFunctional& h, const Alphabet& alphabet, std::size_t dim_cap) {
  const std::size_t n = h.coeffs.max_length();
  if (n == 0) {
    Vector phi_vec(1);
    phi_vec(0) = h.coeffs.counit();
    Vector v(1);
    v(0) = 1;
    return MatrixCoefficient(make_trivial(alphabet), phi_vec, v);
  }
  const RepSpec vnj = make_VNJ(alphabet, n, h.coeffs.support(), dim_cap);
  Vector phi_vec = vnj.zero_vector();
  for (const auto& [w, c] : h.coeffs.terms()) phi_vec(static_cast<Eigen::Index>(*vnj.label_index("b_" + alphabet.format(w)))) = c;
  Vector v = vnj.basis_vector(*vnj.label_index("b_1"));
  return MatrixCoefficient(vnj, std::move(phi_vec), std::move(v));
}

Functional product(const Functional& h1, const Functional& h2) {
  const auto* f1 = std::get_if<FiniteFunctional>(&h1);
  const auto* f2 = std::get_if<FiniteFunctional>(&h2);
  if (f1 && f2) return shuffle_product(*f1, *f2);
  const MatrixCoefficient m1 = f1 ? realize(*f1, std::get<MatrixCoefficient>(h2).rep().alphabet())
                                  : std::get<MatrixCoefficient>(h1);
  const MatrixCoefficient m2 = f2 ? realize(*f2, m1.rep().alphabet()) : std::get<MatrixCoefficient>(h2);
  return MatrixCoefficient(tensor(m1.rep(), m2.rep()), tensor_vector(m1.phi(), m2.phi()),
                           tensor_vector(m1.v(), m2.v()));
}

RhoExpansion expand_rho(const MatrixCoefficient& h, const std::vector<Letter>& tuple) {
  RhoExpansion out{tuple, {}, {}};
  for (const Letter e : tuple) out.kinds.push_back(h.rep().kind(e));
  std::vector<long> index(tuple.size(), 0);
  expand_positions(h, tuple, tuple.size(), h.v(), index, out);
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
    it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
  }
  return out;
}

RhoExpansion expand_rho(const Functional& h, const std::vector<Letter>& tuple, const Alphabet& alphabet) {
  return std::visit(overloaded{[&](const FiniteFunctional& f) { return expand_finite(f, tuple, alphabet); },
                               [&](const MatrixCoefficient& m) { return expand_rho(m, tuple); }},
                    h);
}

RegularityCertificate is_regular(const Functional& h, const Alphabet& alphabet, std::size_t max_tuple) {
  RegularityCertificate cert;
  const Alphabet& letters_from =
      std::holds_alternative<MatrixCoefficient>(h) ? std::get<MatrixCoefficient>(h).rep().alphabet() : alphabet;
  std::vector<Letter> current;
  for (std::size_t p = 1; p <= max_tuple && cert.regular; ++p) {
    for_each_tuple(letters_from.letters(), p, current, [&](const std::vector<Letter>& tuple) {
      if (!cert.regular) return;
      try {
        const RhoExpansion ex = expand_rho(h, tuple, letters_from);
        TupleBound b{tuple, std::vector<long>(tuple.size(), 0)};
        for (const auto& [k, c] : ex.coeffs) {
          for (std::size_t i = 0; i < k.size(); ++i) b.max_abs_index[i] = std::max(b.max_abs_index[i], std::labs(k[i]));
        }
        cert.bounds.push_back(std::move(b));
      } catch (const ValidationError& e) {
        cert.regular = false;
        cert.reason = e.what();
      }
    });
  }
  return cert;
}

FfrMembership membership_ffr(const Functional& h) {
  FfrMembership out;
  if (const auto* m = std::get_if<MatrixCoefficient>(&h)) {
    const auto n = static_cast<Eigen::Index>(m->rep().dim());
    const Matrix w = column_basis(submodule_generated(m->rep(), m->v()), n);
    const Matrix p = column_basis(submodule_generated(dual_rep(m->rep()), m->phi()), n);
    // U(g)▷h ≅ (U·v) / {u : phi(U u) = 0}; its dimension is the rank of the
    // pairing between the two generated subspaces.
    out.dim = static_cast<std::size_t>(linalg::rank(Matrix(p.transpose() * w)));
    out.integrable = validate_integrable(m->rep()).ok;
    out.member = out.integrable;
    return out;
  }
  const auto& f = std::get<FiniteFunctional>(h);
  // Right translation by a letter strips a suffix, so the closure is spanned
  // by finitely many functionals supported on prefixes.
  std::map<Word, Eigen::Index> index;
  for (const auto& [w, c] : f.coeffs.terms()) {
    for (const Word& p : r_cut(w)) index.try_emplace(p, 0);
  }
  Eigen::Index next = 0;
  for (auto& [w, i] : index) i = next++;
  auto as_vector = [&](const FiniteFunctional& g) {
    Vector v = Vector::Zero(next);
    for (const auto& [w, c] : g.coeffs.terms()) v(index.at(w)) = c;
    return v;
  };
  const auto letters = f.coeffs.support();
  Matrix span(next, 0);
  std::vector<FiniteFunctional> frontier;
  auto try_add = [&](const FiniteFunctional& g) {
    const Vector v = as_vector(g);
    if (linalg::in_column_span(span, v)) return;
    span.conservativeResize(next, span.cols() + 1);
    span.col(span.cols() - 1) = v;
    frontier.push_back(g);
  };
  try_add(f);
  while (!frontier.empty()) {
    const FiniteFunctional g = frontier.back();
    frontier.pop_back();
    for (const Letter l : letters) try_add(std::get<FiniteFunctional>(right_translate(NcPoly::letter(l), g)));
  }
  out.dim = static_cast<std::size_t>(span.cols());
  return out;
}

bool in_shuffle_span(const Functional& h, std::size_t n, std::size_t slack) {
  if (const auto* f = std::get_if<FiniteFunctional>(&h)) {
    for (const auto& [w, c] : f->coeffs.terms()) {
      if (w.length() > n && w.length() <= n + slack) return false;
    }
    return true;
  }
  const auto& m = std::get<MatrixCoefficient>(h);
  const auto dim = static_cast<Eigen::Index>(m.rep().dim());
  // layer = basis of span{w·v : l(w) = L}
  Matrix layer = column_basis({m.v()}, dim);
  for (std::size_t len = 1; len <= n + slack; ++len) {
    std::vector<Vector> images;
    for (Eigen::Index c = 0; c < layer.cols(); ++c) {
      for (const auto& mat : m.rep().matrices()) images.push_back(mat * layer.col(c));
    }
    layer = column_basis(images, dim);
    if (len <= n) continue;
    for (Eigen::Index c = 0; c < layer.cols(); ++c) {
      if (!pair(m.phi(), layer.col(c)).is_zero()) return false;
    }
  }
  return true;
}

ZMonoid::ZMonoid(std::set<long> generators) {
  for (const long g : generators) {
    if (g == 0) continue;
    generators_.insert(g);
    gcd_ = std::gcd(gcd_, g);
    (g > 0 ? has_positive_ : has_negative_) = true;
  }
}

bool ZMonoid::contains(long n) const {
  if (n == 0) return true;
  if (gcd_ == 0 || n % gcd_ != 0) return false;
  if (has_positive_ && has_negative_) return true;
  if ((n > 0 && !has_positive_) || (n < 0 && !has_negative_)) return false;
  const long target = std::labs(n) / gcd_;
  std::vector<long> gens;
  for (const long g : generators_) gens.push_back(std::labs(g) / gcd_);
  const long smallest = *std::min_element(gens.begin(), gens.end());
  const long largest = *std::max_element(gens.begin(), gens.end());
  // Past the Schur bound every element of the group gcd·ℤ≥0 is reachable.
  if (target > (smallest - 1) * (largest - 1)) return true;
  std::vector<bool> reachable(static_cast<std::size_t>(target) + 1, false);
  reachable[0] = true;
  for (long s = 1; s <= target; ++s) {
    for (const long g : gens) {
      if (g <= s && reachable[static_cast<std::size_t>(s - g)]) {
        reachable[static_cast<std::size_t>(s)] = true;
        break;
      }
    }
  }
  return reachable[static_cast<std::size_t>(target)];
}

std::vector<long> ZMonoid::elements(long lo, long hi) const {
  std::vector<long> out;
  for (long n = lo; n <= hi; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

ZMonoid z_monoid(Letter e, const std::vector<RepSpec>& reps) {
  std::set<long> gens;
  for (const RepSpec& r : reps) {
    if (r.kind(e) != GeneratorKind::DiagonalizableInteger) {
      throw ValidationError("z_monoid: letter '" + r.alphabet().name(e) + "' is not diagonalizable");
    }
    const Matrix& m = r.matrix(e);
    for (const auto& [eigenvalue, comp] : diagonal_components(m, Vector::Ones(m.rows()), r.alphabet().name(e))) {
      gens.insert(eigenvalue);
    }
  }
  return ZMonoid(std::move(gens));
}

bool agree_on_words(const Functional& a, const Functional& b, std::size_t letters, std::size_t max_length) {
  for (const Word& w : words_up_to(letters, max_length)) {
    if (evaluate(a, w) != evaluate(b, w)) return false;
  }
  return true;
}

}  // namespace ugdual
