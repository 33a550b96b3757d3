#pragma once

#include <doctest.h>

#include "logdiv/groebner.hpp"
#include "logdiv/poly.hpp"
#include "logdiv/weyl.hpp"

namespace doctest {
template <>
struct StringMaker<logdiv::Polynomial> {
  static String convert(const logdiv::Polynomial& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<logdiv::FreeModuleVector> {
  static String convert(const logdiv::FreeModuleVector& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<logdiv::WeylOperator> {
  static String convert(const logdiv::WeylOperator& op) { return op.to_string().c_str(); }
};
}  // namespace doctest
