#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hcover {

/// Exact rational. GMP keeps every result in lowest terms with a positive
/// denominator.
using Scalar = mpq_class;
using Integer = mpz_class;

inline int sign(const Scalar& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

/// Parses "p/q", "p", or a finite decimal such as "-0.25". Scientific
/// notation, "inf" and "nan" are rejected with std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Scalar& x);

Scalar make_scalar(std::int64_t num, std::int64_t den = 1);

}  // namespace hcover
