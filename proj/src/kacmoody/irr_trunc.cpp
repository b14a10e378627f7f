#include <future>
#include <mutex>
#include <set>

#include "ugdual/kacmoody.hpp"
#include "ugdual/linalg.hpp"

namespace ugdual::km {

namespace {

struct WeightSpace {
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> monomials;
  Matrix gram;
  Matrix spanning_gram;
  std::vector<Matrix> raise;  // raise[j]: dim(k - e_j) x dim
  std::vector<Matrix> lower;  // lower[i]: dim(k + e_i) x dim, filled one level later
};

struct Candidate {
  std::size_t index;
  std::size_t parent_col;
};

struct ChildResult {
  Depth k;
  WeightSpace space;
  // For every i with k_i >= 1: f_i from k - e_i into k.
  std::vector<std::pair<std::size_t, Matrix>> lowers;
};

Depth shifted(Depth k, std::size_t i, int by) {
  k[i] += by;
  return k;
}

}  // namespace

struct IrrTrunc::Impl {
  Gcm gcm;
  std::vector<long> highest;
  IrrTruncOptions opts;
  mutable std::recursive_mutex mu;
  std::size_t depth = 0;
  std::map<Depth, WeightSpace> spaces;
  std::size_t total_dim = 0;

  [[nodiscard]] std::size_t n() const { return gcm.size(); }

  [[nodiscard]] std::size_t dim_at(const Depth& k) const {
    for (const int x : k) {
      if (x < 0) return 0;
    }
    auto it = spaces.find(k);
    return it == spaces.end() ? 0 : it->second.dim;
  }

  [[nodiscard]] ChildResult build_child(const Depth& k) const {
    const std::size_t n_ = n();
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < n_; ++i) {
      if (k[i] < 1) continue;
      const std::size_t pd = dim_at(shifted(k, i, -1));
      for (std::size_t b = 0; b < pd; ++b) cands.push_back({i, b});
    }
    const auto nc = static_cast<Eigen::Index>(cands.size());

    // E[j] = e_j applied to each candidate f_i v_b, in coordinates of k - e_j:
    // e_j f_i v_b = f_i e_j v_b + δ_ij λ_P(h_i) v_b with P = k - e_i.
    std::vector<Matrix> e(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      const auto rows = static_cast<Eigen::Index>(k[j] >= 1 ? dim_at(shifted(k, j, -1)) : 0);
      e[j] = Matrix::Zero(rows, nc);
      if (rows == 0) continue;
      for (Eigen::Index c = 0; c < nc; ++c) {
        const auto [i, b] = cands[static_cast<std::size_t>(c)];
        const Depth p = shifted(k, i, -1);
        const auto& ps = spaces.at(p);
        if (p[j] >= 1) {
          const Depth pj = shifted(p, j, -1);
          if (dim_at(pj) > 0) {
            const Matrix& low = spaces.at(pj).lower[i];
            if (low.rows() > 0) e[j].col(c) += low * ps.raise[j].col(static_cast<Eigen::Index>(b));
          }
        }
        if (i == j) {
          const long lam = weight_coords(gcm, highest, p)[i];
          e[j](static_cast<Eigen::Index>(b), c) += Rational(lam);
        }
      }
    }

    // <f_i v_b, y> = <v_b, e_i y>.
    Matrix g(nc, nc);
    for (Eigen::Index c = 0; c < nc; ++c) {
      const auto [i, b] = cands[static_cast<std::size_t>(c)];
      const auto& ps = spaces.at(shifted(k, i, -1));
      g.row(c) = ps.gram.row(static_cast<Eigen::Index>(b)) * e[i];
    }

    ChildResult out;
    out.k = k;
    WeightSpace& s = out.space;
    s.spanning_gram = g;
    const auto basis = linalg::independent_columns(g);
    const auto nb = static_cast<Eigen::Index>(basis.size());
    s.dim = basis.size();
    s.gram = Matrix(nb, nb);
    Matrix gb(nb, nc);
    for (Eigen::Index r = 0; r < nb; ++r) {
      gb.row(r) = g.row(basis[static_cast<std::size_t>(r)]);
      for (Eigen::Index c = 0; c < nb; ++c) s.gram(r, c) = g(basis[static_cast<std::size_t>(r)], basis[static_cast<std::size_t>(c)]);
    }
    Matrix x(nb, nc);
    if (nb > 0) {
      const auto inv = linalg::inverse(s.gram);
      if (!inv) throw std::logic_error("contravariant form degenerate on a chosen basis");
      x = *inv * gb;
    }
    for (const auto col : basis) {
      const auto [i, b] = cands[static_cast<std::size_t>(col)];
      std::vector<std::size_t> mono{i};
      const auto& pm = spaces.at(shifted(k, i, -1)).monomials[b];
      mono.insert(mono.end(), pm.begin(), pm.end());
      s.monomials.push_back(std::move(mono));
    }
    s.raise.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      s.raise[j] = Matrix(e[j].rows(), nb);
      for (Eigen::Index c = 0; c < nb; ++c) s.raise[j].col(c) = e[j].col(basis[static_cast<std::size_t>(c)]);
    }
    s.lower.resize(n_);
    Eigen::Index start = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (k[i] < 1) continue;
      const auto pd = static_cast<Eigen::Index>(dim_at(shifted(k, i, -1)));
      if (pd == 0) continue;
      out.lowers.emplace_back(i, x.middleCols(start, pd));
      start += pd;
    }
    return out;
  }

  void build_level(std::size_t d) {
    const std::size_t n_ = n();
    std::set<Depth> children;
    for (const auto& [k, s] : spaces) {
      if (static_cast<std::size_t>(level(k)) != d - 1) continue;
      for (std::size_t i = 0; i < n_; ++i) children.insert(shifted(k, i, 1));
    }
    std::vector<Depth> keys(children.begin(), children.end());
    std::vector<ChildResult> results(keys.size());
    if (opts.parallel && keys.size() > 1) {
      std::vector<std::future<ChildResult>> futs;
      futs.reserve(keys.size());
      for (const auto& k : keys) futs.push_back(std::async(std::launch::async, [this, k] { return build_child(k); }));
      for (std::size_t t = 0; t < keys.size(); ++t) results[t] = futs[t].get();
    } else {
      for (std::size_t t = 0; t < keys.size(); ++t) results[t] = build_child(keys[t]);
    }

    // Parents now learn their f-action into level d.
    for (auto& [k, s] : spaces) {
      if (static_cast<std::size_t>(level(k)) != d - 1) continue;
      for (std::size_t i = 0; i < n_; ++i) s.lower[i] = Matrix::Zero(0, static_cast<Eigen::Index>(s.dim));
    }
    std::size_t added = 0;
    for (auto& r : results) {
      for (auto& [i, m] : r.lowers) spaces.at(shifted(r.k, i, -1)).lower[i] = std::move(m);
      if (r.space.dim == 0) continue;
      r.space.lower.assign(n_, Matrix());
      added += r.space.dim;
      spaces.emplace(r.k, std::move(r.space));
    }
    total_dim += added;
    depth = d;
    if (total_dim > opts.dim_cap) {
      throw CapExceeded("truncated module dimension " + std::to_string(total_dim) + " at depth " + std::to_string(d) +
                        " exceeds the dimension cap " + std::to_string(opts.dim_cap));
    }
  }

  void extend(std::size_t target) {
    std::lock_guard lock(mu);
    if (target <= depth) return;
    if (target > opts.depth_cap) {
      throw CapExceeded("required truncation depth " + std::to_string(target) + " exceeds the depth cap " +
                        std::to_string(opts.depth_cap));
    }
    for (std::size_t d = depth + 1; d <= target; ++d) build_level(d);
  }

  [[nodiscard]] const WeightSpace* find(const Depth& k) const {
    auto it = spaces.find(k);
    return it == spaces.end() ? nullptr : &it->second;
  }

  void check_depth(const Depth& k) const {
    if (k.size() != n()) throw ValidationError("weight offset has " + std::to_string(k.size()) + " entries, expected " + std::to_string(n()));
  }
};

IrrTrunc::IrrTrunc(Gcm gcm, std::vector<long> highest, std::size_t depth, IrrTruncOptions options)
    : impl_(std::make_shared<Impl>()) {
  if (highest.size() != gcm.size()) throw ValidationError("highest weight must list one coordinate per simple root");
  for (std::size_t i = 0; i < highest.size(); ++i) {
    if (highest[i] < 0) throw ValidationError("highest weight is not dominant at coordinate " + std::to_string(i + 1));
  }
  impl_->gcm = std::move(gcm);
  impl_->highest = std::move(highest);
  impl_->opts = options;
  WeightSpace top;
  top.dim = 1;
  top.monomials = {{}};
  top.gram = Matrix::Constant(1, 1, Rational(1));
  top.spanning_gram = top.gram;
  top.raise.assign(impl_->n(), Matrix::Zero(0, 1));
  top.lower.assign(impl_->n(), Matrix());
  impl_->spaces.emplace(Depth(impl_->n(), 0), std::move(top));
  impl_->total_dim = 1;
  impl_->extend(depth);
}

const Gcm& IrrTrunc::gcm() const { return impl_->gcm; }
const std::vector<long>& IrrTrunc::highest_weight() const { return impl_->highest; }
const IrrTruncOptions& IrrTrunc::options() const { return impl_->opts; }

std::size_t IrrTrunc::depth() const {
  std::lock_guard lock(impl_->mu);
  return impl_->depth;
}

void IrrTrunc::extend_to(std::size_t depth) const { impl_->extend(depth); }

std::vector<Depth> IrrTrunc::weights() const {
  std::lock_guard lock(impl_->mu);
  std::vector<Depth> out;
  for (const auto& [k, s] : impl_->spaces) out.push_back(k);
  return out;
}

std::size_t IrrTrunc::multiplicity(const Depth& k) const {
  impl_->check_depth(k);
  for (const int x : k) {
    if (x < 0) return 0;
  }
  impl_->extend(static_cast<std::size_t>(level(k)));
  std::lock_guard lock(impl_->mu);
  return impl_->dim_at(k);
}

std::size_t IrrTrunc::dimension() const {
  std::lock_guard lock(impl_->mu);
  return impl_->total_dim;
}

std::vector<long> IrrTrunc::coords(const Depth& k) const {
  impl_->check_depth(k);
  return weight_coords(impl_->gcm, impl_->highest, k);
}

Matrix IrrTrunc::gram(const Depth& k) const {
  std::lock_guard lock(impl_->mu);
  const auto* s = impl_->find(k);
  return s ? s->gram : Matrix(0, 0);
}

Matrix IrrTrunc::spanning_gram(const Depth& k) const {
  std::lock_guard lock(impl_->mu);
  const auto* s = impl_->find(k);
  return s ? s->spanning_gram : Matrix(0, 0);
}

std::vector<std::vector<std::size_t>> IrrTrunc::basis_monomials(const Depth& k) const {
  std::lock_guard lock(impl_->mu);
  const auto* s = impl_->find(k);
  return s ? s->monomials : std::vector<std::vector<std::size_t>>{};
}

Matrix IrrTrunc::raise(std::size_t i, const Depth& k) const {
  impl_->check_depth(k);
  std::lock_guard lock(impl_->mu);
  const auto* s = impl_->find(k);
  if (!s) return Matrix(static_cast<Eigen::Index>(k[i] >= 1 ? impl_->dim_at(shifted(k, i, -1)) : 0), 0);
  return s->raise[i];
}

Matrix IrrTrunc::lower(std::size_t i, const Depth& k) const {
  impl_->check_depth(k);
  impl_->extend(static_cast<std::size_t>(level(k)) + 1);
  std::lock_guard lock(impl_->mu);
  const auto* s = impl_->find(k);
  if (!s) return Matrix(static_cast<Eigen::Index>(impl_->dim_at(shifted(k, i, 1))), 0);
  return s->lower[i];
}

WeightVector IrrTrunc::highest_weight_vector() const { return basis_vector(Depth(impl_->n(), 0), 0); }

WeightVector IrrTrunc::basis_vector(const Depth& k, std::size_t j) const {
  const std::size_t d = multiplicity(k);
  if (j >= d) throw ValidationError("basis index out of range for the weight space");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(j)) = 1;
  WeightVector out;
  out.add(k, v);
  return out;
}

WeightVector IrrTrunc::apply(const Chevalley& g, const WeightVector& v, bool extend) const {
  const std::size_t i = g.index;
  if (i >= impl_->n()) throw ValidationError("generator index out of range");
  WeightVector out;
  for (const auto& [k, x] : v.components()) {
    switch (g.type) {
      case Chevalley::Type::E:
        if (k[i] >= 1) out.add(shifted(k, i, -1), raise(i, k) * x);
        break;
      case Chevalley::Type::F: {
        const auto target = static_cast<std::size_t>(level(k)) + 1;
        if (target > depth() && !extend) {
          throw OutOfTruncation("f_" + std::to_string(i + 1) + " needs depth " + std::to_string(target) +
                                " but the truncation has depth " + std::to_string(depth()));
        }
        const Matrix low = lower(i, k);
        if (low.rows() > 0) out.add(shifted(k, i, 1), low * x);
        break;
      }
      case Chevalley::Type::H:
        out.add(k, Rational(coords(k)[i]) * x);
        break;
    }
  }
  return out;
}

IrrTrunc build_irr_trunc(const Gcm& gcm, const std::vector<long>& highest, std::size_t depth, IrrTruncOptions options) {
  return IrrTrunc(gcm, highest, depth, options);
}

WeightVector act_chevalley(const IrrTrunc& m, const Chevalley& g, const WeightVector& v) { return m.apply(g, v, false); }

std::size_t weight_multiplicity(const IrrTrunc& m, const Depth& k) { return m.multiplicity(k); }

}  // namespace ugdual::km
