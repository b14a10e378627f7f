#pragma once

#include <initializer_list>
#include <utility>

#include "ugdual/ncpoly.hpp"
#include "ugdual/rep.hpp"

namespace testing {

using ugdual::Letter;
using ugdual::NcPoly;
using ugdual::Rational;
using ugdual::Vector;
using ugdual::Word;

inline const Letter e1{0};
inline const Letter e2{1};
inline const Letter e3{2};

inline NcPoly poly(std::initializer_list<std::pair<Word, Rational>> terms) {
  NcPoly p;
  for (const auto& [w, c] : terms) p.add_term(w, c);
  return p;
}

inline Vector vec(std::initializer_list<long> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const long x : xs) v(i++) = Rational(x);
  return v;
}

}  // namespace testing
