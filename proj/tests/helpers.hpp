#pragma once

#include <algorithm>
#include <cmath>

#include "zetakit/numeric.hpp"

namespace testing {

using zetakit::Complex;

inline double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

// relative where |want| > 1, absolute otherwise
inline double rel1(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

template <class F>
zetakit::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const zetakit::Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected zetakit::Error");
}

}  // namespace testing
