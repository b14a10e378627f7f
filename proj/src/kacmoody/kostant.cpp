#include "ugdual/kacmoody.hpp"
#include "ugdual/linalg.hpp"

namespace ugdual::km {

namespace {

struct Block {
  Depth k1;
  Depth k2;
  Eigen::Index d1;
  Eigen::Index d2;
  Eigen::Index offset;
};

class TensorSquare {
 public:
  explicit TensorSquare(const IrrTrunc& m) : m_(m) {}

  const std::vector<Block>& blocks(const Depth& total) {
    auto it = layout_.find(total);
    if (it != layout_.end()) return it->second;
    std::vector<Block> out;
    Eigen::Index off = 0;
    for (const auto& k1 : m_.weights()) {
      Depth k2 = total;
      bool ok = true;
      for (std::size_t i = 0; i < k2.size(); ++i) {
        k2[i] -= k1[i];
        if (k2[i] < 0) ok = false;
      }
      if (!ok) continue;
      const auto d2 = static_cast<Eigen::Index>(m_.multiplicity(k2));
      if (d2 == 0) continue;
      const auto d1 = static_cast<Eigen::Index>(m_.multiplicity(k1));
      out.push_back({k1, k2, d1, d2, off});
      off += d1 * d2;
    }
    return layout_.emplace(total, std::move(out)).first->second;
  }

  Eigen::Index size(const Depth& total) {
    const auto& b = blocks(total);
    return b.empty() ? 0 : b.back().offset + b.back().d1 * b.back().d2;
  }

  Eigen::Index offset(const Depth& total, const Depth& k1) {
    for (const auto& b : blocks(total)) {
      if (b.k1 == k1) return b.offset;
    }
    return -1;
  }

  // Weight-K part of U(n-)(v_Λ⊗v_Λ), as independent columns.
  const Matrix& component(const Depth& total) {
    auto it = comps_.find(total);
    if (it != comps_.end()) return it->second;
    Matrix span;
    if (level(total) == 0) {
      span = Matrix::Constant(1, 1, Rational(1));
    } else {
      const Eigen::Index rows = size(total);
      std::vector<Vector> cols;
      for (std::size_t i = 0; i < total.size(); ++i) {
        if (total[i] < 1) continue;
        Depth src = total;
        --src[i];
        const Matrix parent = component(src);
        if (parent.cols() == 0) continue;
        Matrix image = Matrix::Zero(rows, parent.cols());
        for (const auto& b : blocks(src)) {
          const auto blk = parent.middleRows(b.offset, b.d1 * b.d2);
          Depth up1 = b.k1;
          ++up1[i];
          Depth up2 = b.k2;
          ++up2[i];
          const Matrix l1 = m_.lower(i, b.k1);
          if (l1.rows() > 0) {
            const Matrix op = linalg::kronecker(l1, Matrix::Identity(b.d2, b.d2));
            image.middleRows(offset(total, up1), op.rows()) += op * blk;
          }
          const Matrix l2 = m_.lower(i, b.k2);
          if (l2.rows() > 0) {
            const Matrix op = linalg::kronecker(Matrix::Identity(b.d1, b.d1), l2);
            image.middleRows(offset(total, b.k1), op.rows()) += op * blk;
          }
        }
        for (Eigen::Index c = 0; c < image.cols(); ++c) cols.push_back(image.col(c));
      }
      Matrix all(rows, static_cast<Eigen::Index>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c) all.col(static_cast<Eigen::Index>(c)) = cols[c];
      const auto keep = linalg::independent_columns(all);
      span = Matrix(rows, static_cast<Eigen::Index>(keep.size()));
      for (std::size_t c = 0; c < keep.size(); ++c) span.col(static_cast<Eigen::Index>(c)) = all.col(keep[c]);
    }
    return comps_.emplace(total, std::move(span)).first->second;
  }

 private:
  const IrrTrunc& m_;
  std::map<Depth, std::vector<Block>> layout_;
  std::map<Depth, Matrix> comps_;
};

}  // namespace

bool kostant_cone_test(const IrrTrunc& m, const IrrTrunc& doubled, const WeightVector& v) {
  const auto& lam = m.highest_weight();
  const auto& lam2 = doubled.highest_weight();
  if (lam2.size() != lam.size()) throw ValidationError("doubled module has a different rank");
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (lam2[i] != 2 * lam[i]) throw ValidationError("second module must have highest weight 2Λ");
  }
  if (v.is_zero()) return true;
  const auto top = static_cast<std::size_t>(2 * v.max_level());
  m.extend_to(top);
  doubled.extend_to(top);

  std::map<Depth, Vector> square;
  TensorSquare ts(m);
  for (const auto& [k1, x1] : v.components()) {
    for (const auto& [k2, x2] : v.components()) {
      Depth total = k1;
      for (std::size_t i = 0; i < total.size(); ++i) total[i] += k2[i];
      auto it = square.find(total);
      if (it == square.end()) it = square.emplace(total, Vector::Zero(ts.size(total))).first;
      const Vector piece = linalg::kronecker(Matrix(x1), Matrix(x2));
      it->second.segment(ts.offset(total, k1), piece.size()) += piece;
    }
  }
  for (const auto& [total, x] : square) {
    const Matrix& span = ts.component(total);
    if (static_cast<std::size_t>(span.cols()) != doubled.multiplicity(total)) {
      throw std::logic_error("Cartan component dimension disagrees with the doubled module");
    }
    if (!linalg::in_column_span(span, x)) return false;
  }
  return true;
}

}  // namespace ugdual::km
