#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagphase/rational.hpp"

namespace flagphase {

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);

// Cartan datum of a simple type (Bourbaki numbering).
//
// matrix[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j), so that
// alpha_i = sum_j matrix[i][j] varpi_j. The symmetrizer d is minimal with
// (alpha_i, alpha_i) = 2 d_i, hence d_j matrix[i][j] = (alpha_i, alpha_j) is symmetric.
struct CartanDatum {
  Series series = Series::A;
  int rank = 0;
  std::vector<std::vector<int>> matrix;
  std::vector<int> symmetrizer;
};

CartanDatum cartan_datum(Series series, int rank);

// Throws Error(InvalidCartanType) if the datum violates any structural invariant.
void validate(const CartanDatum& datum);

// Parses type names such as "A2", "e8", "G2".
struct CartanType {
  Series series;
  int rank;
};
CartanType parse_cartan_type(std::string_view text);

struct Root {
  std::vector<int> coeffs;  // beta = sum_i coeffs[i] alpha_i, all >= 0
  int height = 0;
  Rational normsq;          // (beta, beta) with (alpha_i, alpha_i) = 2 d_i

  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
};

std::string to_string(const Root& root);

class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum);

  const CartanDatum& cartan() const noexcept { return datum_; }
  int rank() const noexcept { return datum_.rank; }
  std::string name() const;

  // Ordered by (height, descending lexicographic coefficients); the first rank()
  // entries are the simple roots alpha_1, ..., alpha_rank.
  std::span<const Root> positive_roots() const noexcept { return roots_; }
  const Root& simple_root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }
  const Root& highest_root() const { return roots_.back(); }

  std::optional<std::size_t> index_of(std::span<const int> coeffs) const;

  // <varpi_alpha, beta^vee>, always a nonnegative integer.
  int fundamental_pairing(int alpha, std::size_t root_index) const;
  int fundamental_pairing(int alpha, const Root& root) const;

  // <lambda, beta^vee> for lambda in fundamental-weight coordinates.
  Rational coroot_pairing(const WeightVector& lambda, const Root& root) const;

  // Weight coordinates m_j = sum_i c_i C_ij.
  WeightVector root_to_weight_coords(const Root& root) const;

  // Half the sum of positive roots; all coordinates are 1.
  WeightVector rho_plus() const;

 private:
  void generate_roots();
  std::vector<int> coroot_coefficients(const Root& root) const;

  CartanDatum datum_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
  // pairing_[k][alpha] = <varpi_alpha, beta_k^vee>
  std::vector<std::vector<int>> pairing_;
};

RootSystem build_root_system(Series series, int rank);

}  // namespace flagphase
