#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace belyi {

// Largest degree accepted by the parsers.
inline constexpr int kMaxDegree = 1'000'000;

class PermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A permutation of {0..N-1}. Printing and parsing use 1-based points.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  // Cycles are given with 1-based points.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // "(1 17)(3 18)"; degree 0 means "largest point mentioned".
  static Perm parse(std::string_view text, int degree = 0);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;

  // 0-based cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  // Sorted ascending, fixed points included.
  std::vector<int> cycle_type() const;
  int cycle_count() const;

  // 1-based cycle notation without fixed points; identity prints as "()".
  std::string str() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

// Apply p first, then q.
Perm compose(const Perm& p, const Perm& q);
// g^-1 p g: the point x of p becomes g(x).
Perm conjugate(const Perm& p, const Perm& g);

// Orbits of the group generated by gens, two ways.
std::vector<std::vector<int>> orbits(std::span<const Perm> gens, int degree);
std::vector<std::vector<int>> orbits_bfs(std::span<const Perm> gens, int degree);

bool is_transitive(std::span<const Perm> gens);
bool is_transitive(std::span<const Perm> gens, int degree);

}  // namespace belyi
