#include "regseq/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace regseq {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("malformed rational: '" + text + "'");
  };
  size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "" : text.substr(slash + 1);

  size_t start = 0;
  if (!num.empty() && num[0] == '-') start = 1;
  if (!all_digits(num, start, num.size())) throw bad();
  if (slash != std::string::npos) {
    if (!all_digits(den, 0, den.size())) throw bad();
  }

  mpz_class n(num, 10);
  mpz_class d = slash == std::string::npos ? mpz_class(1) : mpz_class(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rational_pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("0 raised to a negative power");
    return 1 / rational_pow(base, -exp);
  }
  Rational acc(1);
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  acc.canonicalize();
  return acc;
}

std::optional<long> exact_log(const Rational& value, int q) {
  if (value <= 0 || q < 2) return std::nullopt;
  if (value == 1) return 0;
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  if (den == 1 && num > 1) {
    long j = 0;
    mpz_class n = num;
    while (n > 1) {
      if (n % q != 0) return std::nullopt;
      n /= q;
      ++j;
    }
    return j;
  }
  if (num == 1 && den > 1) {
    auto j = exact_log(Rational(den), q);
    if (j) return -*j;
    return std::nullopt;
  }
  return std::nullopt;
}

Rational binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace regseq
