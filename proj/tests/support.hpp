#pragma once

// Test-only helpers: seeded generators and independent oracles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hallfrac::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'f4a3'2024ULL);
  return engine;
}

inline std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline double uniform_real(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline double log_uniform(double lo, double hi) {
  return std::exp(uniform_real(std::log(lo), std::log(hi)));
}

/// Brute-force Farey series: every reduced p/q in [0,1] with q <= n,
/// sorted by cross-multiplication. Pairs are (p, q).
inline std::vector<std::pair<std::int64_t, std::int64_t>> brute_force_farey(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t q = 1; q <= n; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first * b.second < b.first * a.second;
  });
  return out;
}

/// Euler totient by trial division.
inline std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::string read_file(const std::string& relative) {
  std::ifstream in(std::string(HALLFRAC_TEST_DATA_DIR) + "/" + relative);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  return out;
}

}  // namespace hallfrac::test
