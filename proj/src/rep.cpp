#include "ugdual/rep.hpp"

#include <algorithm>

#include "ugdual/errors.hpp"
#include "ugdual/linalg.hpp"

namespace ugdual {

namespace {

void require_dim(const RepSpec& r, const Vector& v, const char* op) {
  if (static_cast<std::size_t>(v.size()) != r.dim()) {
    throw ValidationError(std::string(op) + ": vector of length " + std::to_string(v.size()) +
                          " for module of dimension " + std::to_string(r.dim()));
  }
}

bool is_diagonal(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero()) return false;
    }
  }
  return true;
}

// m^n == 0 checked by repeated squaring up to an exponent >= n.
bool is_nilpotent(const Matrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  if (n == 0) return true;
  Matrix p = m;
  std::size_t exponent = 1;
  while (exponent < n) {
    p = (p * p).eval();
    exponent *= 2;
  }
  return linalg::is_zero(p);
}

std::string letter_label(const Alphabet& a, const Word& w) { return "b_" + a.format(w); }

}  // namespace

RepSpec::RepSpec(Alphabet alphabet, std::size_t dim, std::vector<Matrix> action, std::vector<std::string> labels)
    : alphabet_(std::move(alphabet)), dim_(dim), action_(std::move(action)), labels_(std::move(labels)) {
  if (action_.size() != alphabet_.size()) {
    throw ValidationError("RepSpec: " + std::to_string(action_.size()) + " matrices for an alphabet of " +
                          std::to_string(alphabet_.size()) + " letters");
  }
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (static_cast<std::size_t>(action_[i].rows()) != dim_ || static_cast<std::size_t>(action_[i].cols()) != dim_) {
      throw ValidationError("RepSpec: matrix of letter '" + alphabet_.names()[i] + "' is not " +
                            std::to_string(dim_) + "x" + std::to_string(dim_));
    }
  }
  if (!labels_.empty() && labels_.size() != dim_) {
    throw ValidationError("RepSpec: " + std::to_string(labels_.size()) + " labels for dimension " +
                          std::to_string(dim_));
  }
}

const Matrix& RepSpec::matrix(Letter l) const {
  if (!alphabet_.contains(l)) throw ValidationError("letter id " + std::to_string(l.id) + " outside module alphabet");
  return action_[l.id];
}

std::optional<std::size_t> RepSpec::label_index(const std::string& label) const {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (label == "b" + std::to_string(i)) return i;
    }
    return std::nullopt;
  }
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Vector RepSpec::basis_vector(std::size_t i) const {
  if (i >= dim_) throw ValidationError("basis index " + std::to_string(i) + " out of range");
  Vector v = zero_vector();
  v(static_cast<Eigen::Index>(i)) = 1;
  return v;
}

bool operator==(const RepSpec& a, const RepSpec& b) {
  if (!(a.alphabet_ == b.alphabet_) || a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.action_.size(); ++i) {
    if (a.action_[i] != b.action_[i]) return false;
  }
  return true;
}

ValidationReport validate_integrable(const RepSpec& r) {
  ValidationReport report;
  for (const Letter l : r.alphabet().letters()) {
    const Matrix& m = r.matrix(l);
    const std::string& name = r.alphabet().name(l);
    if (r.kind(l) == GeneratorKind::LocallyNilpotent) {
      if (!is_nilpotent(m)) report.violations.push_back({l, "letter '" + name + "' is not nilpotent"});
      continue;
    }
    if (!is_diagonal(m)) {
      report.violations.push_back({l, "letter '" + name + "' is not diagonal in the given basis"});
      report.notes.push_back("diagonalizable letters must be supplied in diagonal form; '" + name +
                             "' may still be diagonalizable over a different basis");
      continue;
    }
    std::set<long> eig;
    bool integral = true;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!m(i, i).is_integer()) {
        integral = false;
        break;
      }
      eig.insert(m(i, i).to_long());
    }
    if (!integral) {
      report.violations.push_back({l, "letter '" + name + "' has a non-integer eigenvalue"});
      continue;
    }
    report.eigenvalues[l] = std::move(eig);
  }
  report.ok = report.violations.empty();
  return report;
}

Vector act_word(const RepSpec& r, const Word& w, const Vector& v) {
  require_dim(r, v, "act_word");
  Vector out = v;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out = (r.matrix(*it) * out).eval();
  }
  return out;
}

Vector act_poly(const RepSpec& r, const NcPoly& x, const Vector& v) {
  require_dim(r, v, "act_poly");
  Vector out = r.zero_vector();
  for (const auto& [w, c] : x.terms()) out += c * act_word(r, w, v);
  return out;
}

Matrix poly_matrix(const RepSpec& r, const NcPoly& x) {
  const auto n = static_cast<Eigen::Index>(r.dim());
  Matrix out = Matrix::Zero(n, n);
  for (const auto& [w, c] : x.terms()) {
    Matrix m = Matrix::Identity(n, n);
    for (const Letter l : w) m = (m * r.matrix(l)).eval();
    out += c * m;
  }
  return out;
}

RepSpec tensor(const RepSpec& r1, const RepSpec& r2) {
  if (!(r1.alphabet() == r2.alphabet())) {
    throw ValidationError("tensor: modules have different alphabets or letter kinds");
  }
  const auto d1 = static_cast<Eigen::Index>(r1.dim());
  const auto d2 = static_cast<Eigen::Index>(r2.dim());
  const Matrix i1 = Matrix::Identity(d1, d1);
  const Matrix i2 = Matrix::Identity(d2, d2);
  std::vector<Matrix> action;
  for (const Letter l : r1.alphabet().letters()) {
    action.push_back(linalg::kronecker(r1.matrix(l), i2) + linalg::kronecker(i1, r2.matrix(l)));
  }
  std::vector<std::string> labels;
  if (!r1.labels().empty() && !r2.labels().empty()) {
    for (const auto& a : r1.labels()) {
      for (const auto& b : r2.labels()) labels.push_back(a + "⊗" + b);
    }
  }
  return RepSpec(r1.alphabet(), r1.dim() * r2.dim(), std::move(action), std::move(labels));
}

Vector tensor_vector(const Vector& a, const Vector& b) { return linalg::kronecker(a, b); }

RepSpec dual_rep(const RepSpec& r) {
  std::vector<Matrix> action;
  for (const auto& m : r.matrices()) action.push_back(m.transpose());
  return RepSpec(r.alphabet(), r.dim(), std::move(action), r.labels());
}

std::vector<Vector> submodule_generated(const RepSpec& r, const Vector& v) {
  require_dim(r, v, "submodule_generated");
  const auto n = static_cast<Eigen::Index>(r.dim());
  // Columns of `span` hold the vectors found so far; the frontier holds the
  // ones whose images have not been taken yet.
  Matrix span(n, 0);
  std::vector<Vector> frontier;
  auto try_add = [&](const Vector& u) {
    if (linalg::in_column_span(span, u)) return;
    span.conservativeResize(n, span.cols() + 1);
    span.col(span.cols() - 1) = u;
    frontier.push_back(u);
  };
  try_add(v);
  while (!frontier.empty()) {
    const Vector u = frontier.back();
    frontier.pop_back();
    for (const auto& m : r.matrices()) try_add(m * u);
  }
  const auto ech = linalg::rref(Matrix(span.transpose()));
  std::vector<Vector> basis;
  for (Eigen::Index i = 0; i < ech.rank(); ++i) basis.push_back(ech.reduced.row(i).transpose());
  return basis;
}

RepSpec make_VNJ(const Alphabet& alphabet, std::size_t n, const std::set<Letter>& j, std::size_t dim_cap) {
  if (j.empty()) throw ValidationError("make_VNJ: letter set J must be nonempty");
  for (const Letter l : j) {
    if (alphabet.kind(l) != GeneratorKind::LocallyNilpotent) {
      throw ValidationError("make_VNJ: letter '" + alphabet.name(l) + "' is not locally nilpotent");
    }
  }
  // dim = Σ_{k<=N} |J|^k, checked against the cap before enumerating.
  std::size_t dim = 0;
  std::size_t layer = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    dim += layer;
    if (dim > dim_cap) {
      throw CapExceeded("make_VNJ: dimension exceeds cap " + std::to_string(dim_cap));
    }
    layer *= j.size();
  }
  const std::vector<Letter> jl(j.begin(), j.end());
  std::vector<Word> basis;
  for (const Word& w : words_up_to(jl.size(), n)) {
    std::vector<Letter> mapped;
    for (const Letter l : w) mapped.push_back(jl[l.id]);
    basis.emplace_back(std::move(mapped));
  }
  std::sort(basis.begin(), basis.end());
  std::map<Word, Eigen::Index> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<Eigen::Index>(i);

  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<Matrix> action(alphabet.size(), Matrix::Zero(d, d));
  for (const Letter l : jl) {
    for (const Word& w : basis) {
      if (w.length() + 1 > n) continue;
      const Word target = concat(Word(std::vector<Letter>{l}), w);
      action[l.id](index.at(target), index.at(w)) = 1;
    }
  }
  std::vector<std::string> labels;
  for (const Word& w : basis) labels.push_back(letter_label(alphabet, w));
  return RepSpec(alphabet, dim, std::move(action), std::move(labels));
}

RepSpec make_chain(const Alphabet& alphabet, const std::vector<Letter>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (alphabet.kind(seq[i]) != GeneratorKind::LocallyNilpotent) {
      throw ValidationError("make_chain: letter '" + alphabet.name(seq[i]) + "' is not locally nilpotent");
    }
    if (i > 0 && seq[i] == seq[i - 1]) {
      throw ValidationError("make_chain: adjacent letters at positions " + std::to_string(i - 1) + " and " +
                            std::to_string(i) + " coincide");
    }
  }
  const auto d = static_cast<Eigen::Index>(seq.size() + 1);
  std::vector<Matrix> action(alphabet.size(), Matrix::Zero(d, d));
  for (std::size_t k = 0; k < seq.size(); ++k) {
    action[seq[k].id](static_cast<Eigen::Index>(k + 1), static_cast<Eigen::Index>(k)) = 1;
  }
  std::vector<std::string> labels;
  for (Eigen::Index k = 0; k < d; ++k) labels.push_back("b" + std::to_string(k));
  return RepSpec(alphabet, static_cast<std::size_t>(d), std::move(action), std::move(labels));
}

RepSpec make_alternating_pair(const Alphabet& alphabet, Letter e1, Letter e2) {
  if (e1 == e2) throw ValidationError("make_alternating_pair: letters must differ");
  for (const Letter l : {e1, e2}) {
    if (alphabet.kind(l) != GeneratorKind::LocallyNilpotent) {
      throw ValidationError("make_alternating_pair: letter '" + alphabet.name(l) + "' is not locally nilpotent");
    }
  }
  std::vector<Matrix> action(alphabet.size(), Matrix::Zero(2, 2));
  action[e1.id](0, 1) = 1;  // e1 b2 = b1
  action[e2.id](1, 0) = 1;  // e2 b1 = b2
  return RepSpec(alphabet, 2, std::move(action), {"b1", "b2"});
}

RepSpec make_trivial(const Alphabet& alphabet) {
  return RepSpec(alphabet, 1, std::vector<Matrix>(alphabet.size(), Matrix::Zero(1, 1)), {"b"});
}

std::set<Letter> support(const RepSpec& r) {
  std::set<Letter> out;
  for (const Letter l : r.alphabet().letters()) {
    if (!linalg::is_zero(r.matrix(l))) out.insert(l);
  }
  return out;
}

}  // namespace ugdual
