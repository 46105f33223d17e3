#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "belyi/dessin.hpp"

namespace belyi {

class PassportError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& q);

enum class EquationKind { lame, gen2, gen3 };
enum class Point { e1, e2, e3, wpa, inf };

std::string_view kind_name(EquationKind k);
EquationKind parse_kind(std::string_view s);
std::string_view point_name(Point p);

struct ExponentProfile {
  EquationKind kind;
  std::vector<std::pair<Point, Rational>> diffs;
};

Rational normalize_n(const Rational& n);
ExponentProfile exponent_profile(EquationKind kind, std::optional<Rational> n0, std::optional<Rational> n1);

enum class SchwarzGroup { dihedral, A4, S4, A5 };

// Exponent differences 1/m[0], 1/m[1], 1/m[2] over 0, 1 and infinity.
struct SchwarzTarget {
  SchwarzGroup group;
  int n = 0;  // dihedral order parameter
  std::array<int, 3> m;

  static SchwarzTarget dihedral(int n);
  static SchwarzTarget A4();
  static SchwarzTarget S4();
  static SchwarzTarget A5();
  // "S4", "A5", "A4", "D7"
  static SchwarzTarget parse(std::string_view s);
  std::string name() const;
};

struct Assignment {
  Point point;
  int target;  // 0, 1 or 2 (infinity)
  int ram;

  bool operator==(const Assignment&) const = default;
  auto operator<=>(const Assignment&) const = default;
};

struct RamTable {
  int degree = 0;
  std::vector<Assignment> assignment;  // in profile order
  std::array<int, 3> free{};           // unbranched-point counts over 0, 1, infinity
  std::array<int, 3> free_ram{};       // their ramification (the target denominators)

  Passport passport() const;
  nlohmann::json to_json() const;
};

std::vector<RamTable> derive_tables(const ExponentProfile& profile, const SchwarzTarget& target);

// 2N - 2 - sum(e - 1); zero exactly for genus 0 data.
int hurwitz_defect(const Passport& p);

// Finite union of cosets a + Z and lattices Z/q, minus excluded lattices.
struct ResidueClassSet {
  std::vector<Rational> cosets;  // representatives in [0, 1)
  std::vector<int> lattices;
  std::vector<int> excluded;

  bool contains(const Rational& n) const;
  std::string str() const;
};

// n (lame, gen2) or n0 and n1 (gen3), plus the side condition in words.
struct AllowedN {
  ResidueClassSet n0;
  std::optional<ResidueClassSet> n1;
  std::string side;
};

AllowedN allowed_n(std::string_view group, EquationKind kind);
bool check_n(std::string_view group, EquationKind kind, const Rational& n);
bool check_n(std::string_view group, EquationKind kind, const Rational& n0, const Rational& n1);

}  // namespace belyi
