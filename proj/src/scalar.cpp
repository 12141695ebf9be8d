#include "hcover/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "hcover/combinatorics.hpp"
#include "hcover/errors.hpp"

namespace hcover {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Scalar value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    Integer d(std::string(den), 10);
    if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Scalar(Integer(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal literal '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Scalar(Integer(std::string(whole) + std::string(frac), 10), scale);
  } else {
    if (!all_digits(body)) {
      throw std::invalid_argument("malformed numeric literal '" + std::string(text) + "'");
    }
    value = Scalar(Integer(std::string(body), 10));
  }
  value.canonicalize();
  return negative ? Scalar(-value) : value;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

Scalar make_scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  Scalar r(Integer(std::to_string(num), 10), Integer(std::to_string(den), 10));
  r.canonicalize();
  return r;
}

std::uint64_t binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binom(" + std::to_string(n) + ", " + std::to_string(k) + ") is undefined");
  }
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > UINT64_MAX) throw DomainError("binom overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace hcover
