#pragma once

#include <doctest.h>

#include "qpos/laurent_poly.hpp"

namespace doctest {
template <>
struct StringMaker<qpos::LaurentPoly> {
  static String convert(const qpos::LaurentPoly& p) { return qpos::to_string(p).c_str(); }
};
}  // namespace doctest
