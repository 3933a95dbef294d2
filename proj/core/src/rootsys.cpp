#include "flagphase/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "flagphase/errors.hpp"

namespace flagphase {

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    case Series::E: return 'E';
    case Series::F: return 'F';
    case Series::G: return 'G';
  }
  return '?';
}

namespace {

bool valid_rank(Series s, int r) {
  switch (s) {
    case Series::A: return r >= 1;
    case Series::B: return r >= 2;
    case Series::C: return r >= 2;
    case Series::D: return r >= 3;
    case Series::E: return r >= 6 && r <= 8;
    case Series::F: return r == 4;
    case Series::G: return r == 2;
  }
  return false;
}

void link(std::vector<std::vector<int>>& c, int i, int j) {
  c[i][j] = -1;
  c[j][i] = -1;
}

// Determinant by fraction-free Bareiss elimination.
Integer determinant(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

CartanDatum cartan_datum(Series series, int rank) {
  if (!valid_rank(series, rank)) {
    fail(ErrorCode::InvalidCartanType,
         std::string(1, series_letter(series)) + std::to_string(rank) + " is not a simple type");
  }
  CartanDatum d;
  d.series = series;
  d.rank = rank;
  d.matrix.assign(rank, std::vector<int>(rank, 0));
  d.symmetrizer.assign(rank, 1);
  auto& c = d.matrix;
  for (int i = 0; i < rank; ++i) c[i][i] = 2;

  switch (series) {
    case Series::A:
      for (int i = 0; i + 1 < rank; ++i) link(c, i, i + 1);
      break;
    case Series::B:
      // alpha_n short
      for (int i = 0; i + 1 < rank; ++i) link(c, i, i + 1);
      c[rank - 2][rank - 1] = -2;
      for (int i = 0; i + 1 < rank; ++i) d.symmetrizer[i] = 2;
      break;
    case Series::C:
      // alpha_n long
      for (int i = 0; i + 1 < rank; ++i) link(c, i, i + 1);
      c[rank - 1][rank - 2] = -2;
      d.symmetrizer[rank - 1] = 2;
      break;
    case Series::D:
      for (int i = 0; i + 2 < rank; ++i) link(c, i, i + 1);
      link(c, rank - 3, rank - 1);
      break;
    case Series::E:
      // 1-3-4-5-6-7-8 with 2 attached to 4
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < rank; ++i) link(c, i, i + 1);
      break;
    case Series::F:
      link(c, 0, 1);
      link(c, 1, 2);
      link(c, 2, 3);
      c[1][2] = -2;
      d.symmetrizer = {2, 2, 1, 1};
      break;
    case Series::G:
      c[0][1] = -1;
      c[1][0] = -3;
      d.symmetrizer = {1, 3};
      break;
  }
  validate(d);
  return d;
}

void validate(const CartanDatum& datum) {
  const int r = datum.rank;
  auto bad = [](const std::string& why) { fail(ErrorCode::InvalidCartanType, why); };
  if (r < 1) bad("rank must be positive");
  if (static_cast<int>(datum.matrix.size()) != r || static_cast<int>(datum.symmetrizer.size()) != r)
    bad("matrix/symmetrizer size does not match rank");
  for (const auto& row : datum.matrix)
    if (static_cast<int>(row.size()) != r) bad("matrix is not square");

  int g = 0;
  for (int i = 0; i < r; ++i) {
    if (datum.symmetrizer[i] <= 0) bad("symmetrizer must be positive");
    g = std::gcd(g, datum.symmetrizer[i]);
    for (int j = 0; j < r; ++j) {
      const int cij = datum.matrix[i][j];
      const int cji = datum.matrix[j][i];
      if (i == j) {
        if (cij != 2) bad("diagonal entries must be 2");
        continue;
      }
      if (cij > 0 || cij < -3) bad("off-diagonal entries must lie in {0,-1,-2,-3}");
      if ((cij == 0) != (cji == 0)) bad("zero pattern is not symmetric");
      if (datum.symmetrizer[j] * cij != datum.symmetrizer[i] * cji) bad("symmetrizer does not symmetrize");
    }
  }
  if (g != 1) bad("symmetrizer is not minimal");
  if (determinant(datum.matrix) == 0) bad("Cartan matrix is singular");
}

CartanType parse_cartan_type(std::string_view text) {
  if (text.size() < 2) fail(ErrorCode::InvalidCartanType, "bad type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  Series s;
  switch (letter) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    case 'E': s = Series::E; break;
    case 'F': s = Series::F; break;
    case 'G': s = Series::G; break;
    default: fail(ErrorCode::InvalidCartanType, "unknown series in '" + std::string(text) + "'");
  }
  std::string_view digits = text.substr(1);
  int rank = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 1000)
      fail(ErrorCode::InvalidCartanType, "bad rank in '" + std::string(text) + "'");
    rank = rank * 10 + (ch - '0');
  }
  if (!valid_rank(s, rank)) fail(ErrorCode::InvalidCartanType, std::string(text) + " is not a simple type");
  return {s, rank};
}

std::string to_string(const Root& root) {
  std::string out = "[";
  for (std::size_t i = 0; i < root.coeffs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(root.coeffs[i]);
  }
  return out + "]";
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  validate(datum_);
  generate_roots();
}

std::string RootSystem::name() const { return std::string(1, series_letter(datum_.series)) + std::to_string(rank()); }

void RootSystem::generate_roots() {
  const int r = rank();
  const auto& c = datum_.matrix;
  const auto& d = datum_.symmetrizer;

  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> level;
  std::vector<std::vector<int>> all;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    level.push_back(e);
    known.insert(e);
  }
  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0, where p is
  // the length of the alpha_i-string below beta. Lower roots are all known already.
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : level) {
      all.push_back(beta);
      for (int i = 0; i < r; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += beta[j] * c[j][i];
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& v : level) known.insert(v);
  }

  std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  roots_.clear();
  index_.clear();
  pairing_.clear();
  for (auto& coeffs : all) {
    Root root;
    root.height = std::accumulate(coeffs.begin(), coeffs.end(), 0);
    long norm = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) norm += static_cast<long>(coeffs[i]) * coeffs[j] * d[j] * c[i][j];
    if (norm <= 0) fail(ErrorCode::Internal, "non-positive root length");
    root.normsq = Rational(norm);
    root.coeffs = std::move(coeffs);
    index_.emplace(root.coeffs, roots_.size());
    pairing_.push_back(coroot_coefficients(root));
    roots_.push_back(std::move(root));
  }
}

std::vector<int> RootSystem::coroot_coefficients(const Root& root) const {
  // <varpi_alpha, beta^vee> = 2 c_alpha d_alpha / (beta, beta)
  const long norm = root.normsq.get_num().get_si();
  std::vector<int> out(static_cast<std::size_t>(rank()));
  for (int a = 0; a < rank(); ++a) {
    const long num = 2L * root.coeffs[a] * datum_.symmetrizer[a];
    if (num % norm != 0) fail(ErrorCode::Internal, "non-integral coroot coefficient");
    out[a] = static_cast<int>(num / norm);
  }
  return out;
}

std::optional<std::size_t> RootSystem::index_of(std::span<const int> coeffs) const {
  auto it = index_.find(std::vector<int>(coeffs.begin(), coeffs.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::fundamental_pairing(int alpha, std::size_t root_index) const {
  if (alpha < 0 || alpha >= rank()) fail(ErrorCode::IndexOutOfRange, "simple root index out of range");
  return pairing_.at(root_index)[alpha];
}

int RootSystem::fundamental_pairing(int alpha, const Root& root) const {
  auto idx = index_of(root.coeffs);
  if (!idx) fail(ErrorCode::DimensionMismatch, "root does not belong to " + name());
  return fundamental_pairing(alpha, *idx);
}

Rational RootSystem::coroot_pairing(const WeightVector& lambda, const Root& root) const {
  if (static_cast<int>(lambda.size()) != rank() || static_cast<int>(root.coeffs.size()) != rank())
    fail(ErrorCode::DimensionMismatch, "weight and root lengths differ from rank");
  auto idx = index_of(root.coeffs);
  if (!idx) fail(ErrorCode::DimensionMismatch, "root does not belong to " + name());
  const auto& row = pairing_[*idx];
  Rational sum = 0;
  for (int a = 0; a < rank(); ++a) {
    if (row[a] != 0) sum += lambda[a] * row[a];
  }
  return sum;
}

WeightVector RootSystem::root_to_weight_coords(const Root& root) const {
  if (static_cast<int>(root.coeffs.size()) != rank()) fail(ErrorCode::DimensionMismatch, "root length differs from rank");
  WeightVector m(static_cast<std::size_t>(rank()));
  for (int j = 0; j < rank(); ++j) {
    long s = 0;
    for (int i = 0; i < rank(); ++i) s += static_cast<long>(root.coeffs[i]) * datum_.matrix[i][j];
    m[j] = s;
  }
  return m;
}

WeightVector RootSystem::rho_plus() const {
  WeightVector sum(static_cast<std::size_t>(rank()));
  for (const auto& root : roots_) sum += root_to_weight_coords(root);
  return sum * ratio(1, 2);
}

RootSystem build_root_system(Series series, int rank) { return RootSystem(cartan_datum(series, rank)); }

}  // namespace flagphase
