#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagphase {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "p/q" and finite decimals such as "-0.25" (converted exactly).
// Throws Error(InvalidArgument) on anything else.
Rational parse_rational(std::string_view text);

// num/den in lowest terms. Throws Error(InvalidArgument) when den is zero.
Rational ratio(const Integer& num, const Integer& den);

double to_double(const Rational& q);

bool is_integer(const Rational& q);
Integer to_integer(const Rational& q);  // requires is_integer

Rational factorial(unsigned n);

// Rational coordinates of a weight in the fundamental-weight basis.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::size_t rank) : coords_(rank) {}
  explicit WeightVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  WeightVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static WeightVector unit(std::size_t rank, std::size_t index);
  static WeightVector from_ints(std::span<const long> values);

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_integral() const;

  WeightVector& operator+=(const WeightVector& other);
  WeightVector& operator-=(const WeightVector& other);
  WeightVector& operator*=(const Rational& scalar);

  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(WeightVector a, const Rational& s) { return a *= s; }
  friend WeightVector operator*(const Rational& s, WeightVector a) { return a *= s; }
  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const WeightVector& w);

}  // namespace flagphase
