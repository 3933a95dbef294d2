#pragma once

#include <map>
#include <memory>
#include <random>
#include <vector>

#include "flagphase/flag.hpp"
#include "flagphase/gaussian.hpp"
#include "flagphase/rootsys.hpp"

namespace oracle {

using flagphase::Rational;

// A root system realized with integer coordinates in R^m.
struct Euclidean {
  std::vector<std::vector<long>> simple;
  std::vector<std::vector<long>> roots;  // every root, positive and negative
};

Euclidean realize(flagphase::Series series, int rank);

long dot(const std::vector<long>& a, const std::vector<long>& b);

struct EuclideanData {
  // positive roots as simple-root coefficients, mapped to (beta, beta) rescaled so min simple length is 2
  std::map<std::vector<int>, Rational> positive;
  std::vector<std::vector<int>> cartan;
  // <varpi_a, beta^vee> per positive root
  std::map<std::vector<int>, std::vector<Rational>> fundamental;
};

EuclideanData analyse(const Euclidean& e);

// Sum over alpha of b_alpha prod_{beta != alpha} (1 + i a_beta), expanded by subsets.
flagphase::GaussianRational leave_one_out_expansion(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Random flag of the listed types with a random proper subset I.
flagphase::ParabolicGeometry random_flag(std::mt19937_64& rng,
                                         const std::vector<std::shared_ptr<const flagphase::RootSystem>>& pool);

std::shared_ptr<const flagphase::RootSystem> system(const char* type);

Rational random_rational(std::mt19937_64& rng, long num_range, long den_max);
long random_int(std::mt19937_64& rng, long lo, long hi);

flagphase::KahlerClass random_kahler(std::mt19937_64& rng, const flagphase::ParabolicGeometry& flag, bool integral);
flagphase::InvariantClass random_class(std::mt19937_64& rng, const flagphase::ParabolicGeometry& flag);
flagphase::WeightVector random_line(std::mt19937_64& rng, const flagphase::ParabolicGeometry& flag, long range);
flagphase::SplitBundle random_bundle(std::mt19937_64& rng, const flagphase::ParabolicGeometry& flag,
                                     std::size_t max_rank, long range);

// Every (type, I) with complex dimension at most max_dim, over types of rank <= max_rank.
std::vector<flagphase::ParabolicGeometry> small_flags(int max_dim, int max_rank);

}  // namespace oracle
