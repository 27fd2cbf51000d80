#pragma once

#include <random>
#include <string>

#include "artri/io.hpp"

namespace artri::testing {

inline std::string fixture(const std::string& name) { return std::string(ARTRI_FIXTURE_DIR) + "/" + name; }

inline AlgebraPtr alg(const std::string& name) {
  static std::map<std::string, AlgebraPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  return cache[name] = load_algebra(fixture(name + ".alg"));
}

inline ModuleRep uniserial(const std::string& a, int i) {
  return load_module(fixture(a + "_V" + std::to_string(i) + ".mod"), alg(a));
}

inline PerfectComplex cx(const std::string& a, const std::string& name) {
  return load_complex(fixture(a + "_" + name + ".cx"), alg(a));
}

inline Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, const Fp& f, int zero_bias = 0) {
  Mat m(r, c, f);
  std::uniform_int_distribution<std::uint64_t> d(0, f.p() - 1);
  std::uniform_int_distribution<int> z(0, zero_bias);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) == 0 ? static_cast<Scalar>(d(rng)) : 0;
  return m;
}

}  // namespace artri::testing
