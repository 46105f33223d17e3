#pragma once

// Hand-rolled random generators for the property tests. Seeds are fixed so a
// failure reproduces.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "belyi/dessin.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline belyi::Perm random_perm(Rng& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return belyi::Perm(std::move(img));
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Rejection sampling; at these degrees two random permutations are almost
// always transitive.
inline belyi::Dessin random_transitive(Rng& rng, int n) {
  for (;;) {
    belyi::Dessin d(random_perm(rng, n), random_perm(rng, n));
    if (belyi::is_transitive(d)) return d;
  }
}

// A permutation of the given cycle type, on shuffled points.
inline belyi::Perm with_cycle_type(Rng& rng, const belyi::Partition& type) {
  const int n = belyi::partition_sum(type);
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<int> img(n);
  int at = 0;
  for (int len : type) {
    for (int i = 0; i < len; ++i) img[pts[at + i]] = pts[at + (i + 1) % len];
    at += len;
  }
  return belyi::Perm(std::move(img));
}

inline belyi::Partition random_partition(Rng& rng, int n) {
  belyi::Partition p;
  while (n > 0) {
    int part = uniform(rng, 1, n);
    p.push_back(part);
    n -= part;
  }
  return belyi::make_partition(std::move(p));
}

inline nlohmann::json load_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

}  // namespace gen
