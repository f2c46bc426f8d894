#pragma once

#include <stdexcept>

#include "ffactor/rational.hpp"

namespace ffactor {

namespace detail {

// 4a(δ-b)/(b+1)^2 without domain checks; negative when δ < b.
inline Rational stability_bound(int a, int b, int delta) {
  return Rational(4LL * a * (static_cast<long long>(delta) - b), static_cast<long long>(b + 1) * (b + 1));
}

}  // namespace detail

/// 4a(δ-b)/(b+1)^2, the stability threshold of the main theorem.
inline Rational main_bound(int a, int b, int delta) {
  if (b < 2) throw std::invalid_argument("main_bound needs b >= 2");
  if (delta < b) throw std::invalid_argument("main_bound needs delta >= b");
  if (a < 0) throw std::invalid_argument("main_bound needs a >= 0");
  return detail::stability_bound(a, b, delta);
}

}  // namespace ffactor
