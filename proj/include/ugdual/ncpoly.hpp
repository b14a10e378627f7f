#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ugdual/errors.hpp"
#include "ugdual/rational.hpp"
#include "ugdual/word.hpp"

namespace ugdual {

/// Finite linear combination of words: an element of U(g) for the free Lie
/// algebra, i.e. the free associative algebra. Terms are kept in shortlex
/// order and zero coefficients are never stored.
template <typename Scalar>
class BasicNcPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  BasicNcPoly() = default;
  explicit BasicNcPoly(const Word& w, Scalar c = Scalar(1)) { add_term(w, std::move(c)); }
  static BasicNcPoly constant(Scalar c) { return BasicNcPoly(Word{}, std::move(c)); }
  static BasicNcPoly letter(Letter l) { return BasicNcPoly(Word(std::vector<Letter>{l})); }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Scalar coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  /// Coefficient of the empty word (the counit).
  [[nodiscard]] Scalar counit() const { return coeff(Word{}); }
  [[nodiscard]] std::size_t max_length() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.length();
  }
  [[nodiscard]] std::set<Letter> support() const {
    std::set<Letter> out;
    for (const auto& [w, c] : terms_) out.insert(w.begin(), w.end());
    return out;
  }

  void add_term(const Word& w, const Scalar& c) {
    if (c == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  BasicNcPoly& operator+=(const BasicNcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  BasicNcPoly& operator-=(const BasicNcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  BasicNcPoly& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend BasicNcPoly operator+(BasicNcPoly a, const BasicNcPoly& b) { return a += b; }
  friend BasicNcPoly operator-(BasicNcPoly a, const BasicNcPoly& b) { return a -= b; }
  friend BasicNcPoly operator-(BasicNcPoly a) { return a *= Scalar(-1); }
  friend BasicNcPoly operator*(BasicNcPoly a, const Scalar& s) { return a *= s; }
  friend BasicNcPoly operator*(const Scalar& s, BasicNcPoly a) { return a *= s; }
  /// Concatenation product.
  friend BasicNcPoly operator*(const BasicNcPoly& x, const BasicNcPoly& y) {
    BasicNcPoly out;
    for (const auto& [wx, cx] : x.terms_) {
      for (const auto& [wy, cy] : y.terms_) out.add_term(concat(wx, wy), cx * cy);
    }
    return out;
  }

  friend bool operator==(const BasicNcPoly&, const BasicNcPoly&) = default;

 private:
  Terms terms_;
};

/// Element of U(g) ⊗ U(g), spanned by pairs of words.
template <typename Scalar>
class BasicTensorNcPoly {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, Scalar>;

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Scalar coeff(const Word& a, const Word& b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Word& a, const Word& b, const Scalar& c) {
    if (c == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  BasicTensorNcPoly& operator+=(const BasicTensorNcPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }

  /// Componentwise concatenation: (a⊗b)(c⊗d) = ac ⊗ bd.
  friend BasicTensorNcPoly operator*(const BasicTensorNcPoly& x, const BasicTensorNcPoly& y) {
    BasicTensorNcPoly out;
    for (const auto& [kx, cx] : x.terms_) {
      for (const auto& [ky, cy] : y.terms_) {
        out.add_term(concat(kx.first, ky.first), concat(kx.second, ky.second), cx * cy);
      }
    }
    return out;
  }

  friend bool operator==(const BasicTensorNcPoly&, const BasicTensorNcPoly&) = default;

 private:
  Terms terms_;
};

using NcPoly = BasicNcPoly<Rational>;
using TensorNcPoly = BasicTensorNcPoly<Rational>;

/// Longest word accepted by coproduct(); 2^length subsets are enumerated.
inline constexpr std::size_t kMaxCoproductLength = 30;

template <typename Scalar>
BasicNcPoly<Scalar> poly_mul(const BasicNcPoly<Scalar>& x, const BasicNcPoly<Scalar>& y) {
  return x * y;
}

/// Δ(w) = Σ_I w|_I ⊗ w|_{complement of I}, letters being primitive.
template <typename Scalar>
BasicTensorNcPoly<Scalar> coproduct(const BasicNcPoly<Scalar>& x) {
  BasicTensorNcPoly<Scalar> out;
  for (const auto& [w, c] : x.terms()) {
    const std::size_t l = w.length();
    if (l > kMaxCoproductLength) {
      throw CapExceeded("coproduct: word of length " + std::to_string(l) + " exceeds limit " +
                        std::to_string(kMaxCoproductLength));
    }
    std::vector<Letter> left;
    std::vector<Letter> right;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
      left.clear();
      right.clear();
      for (std::size_t i = 0; i < l; ++i) {
        ((mask >> i) & 1U ? left : right).push_back(w[i]);
      }
      out.add_term(Word(left), Word(right), c);
    }
  }
  return out;
}

/// S(w) = (-1)^{l(w)} reverse(w).
template <typename Scalar>
BasicNcPoly<Scalar> antipode(const BasicNcPoly<Scalar>& x) {
  BasicNcPoly<Scalar> out;
  for (const auto& [w, c] : x.terms()) out.add_term(w.reversed(), w.length() % 2 ? -c : c);
  return out;
}

/// Multiplication map U(g) ⊗ U(g) → U(g).
template <typename Scalar>
BasicNcPoly<Scalar> multiply_tensor(const BasicTensorNcPoly<Scalar>& t) {
  BasicNcPoly<Scalar> out;
  for (const auto& [k, c] : t.terms()) out.add_term(concat(k.first, k.second), c);
  return out;
}

/// Left-nested commutator [⋯[[l1, l2], l3], …, lp].
template <typename Scalar = Rational>
BasicNcPoly<Scalar> multibracket(const std::vector<Letter>& seq) {
  if (seq.empty()) throw ValidationError("multibracket: empty letter sequence");
  auto out = BasicNcPoly<Scalar>::letter(seq.front());
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const auto e = BasicNcPoly<Scalar>::letter(seq[i]);
    out = out * e - e * out;
  }
  return out;
}

}  // namespace ugdual
