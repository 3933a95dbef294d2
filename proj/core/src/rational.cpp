#include "flagphase/rational.hpp"

#include <cctype>

#include "flagphase/errors.hpp"

namespace flagphase {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(ErrorCode::InvalidArgument, "not a rational: '" + std::string(whole) + "'");
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) fail(ErrorCode::InvalidArgument, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) fail(ErrorCode::InvalidArgument, "bad denominator in '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      fail(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer num(digits.empty() ? "0" : digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational q(negative ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(text, text));
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) fail(ErrorCode::NotIntegral, to_string(q) + " is not an integer");
  return q.get_num();
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

WeightVector WeightVector::unit(std::size_t rank, std::size_t index) {
  WeightVector w(rank);
  w[index] = 1;
  return w;
}

WeightVector WeightVector::from_ints(std::span<const long> values) {
  WeightVector w(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) w[i] = values[i];
  return w;
}

bool WeightVector::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool WeightVector::is_integral() const {
  for (const auto& c : coords_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

WeightVector& WeightVector::operator+=(const WeightVector& other) {
  if (other.size() != size()) fail(ErrorCode::DimensionMismatch, "weight vectors of different length");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other) {
  if (other.size() != size()) fail(ErrorCode::DimensionMismatch, "weight vectors of different length");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

WeightVector& WeightVector::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

std::string to_string(const WeightVector& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += to_string(w[i]);
  }
  return out + ")";
}

}  // namespace flagphase
