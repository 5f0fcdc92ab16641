#pragma once

#include "tiltwall/numclass.hpp"

namespace helpers {

inline tiltwall::Rational R(const char* s) { return tiltwall::parse_rational(s); }
inline tiltwall::NumClass C(const char* s) { return tiltwall::parse_class(s); }

}  // namespace helpers
