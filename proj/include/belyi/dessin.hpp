#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "belyi/perm.hpp"

namespace belyi {

class DessinError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Multiset of positive integers, kept sorted ascending.
using Partition = std::vector<int>;

Partition make_partition(std::vector<int> parts);
// {a: count} style input, e.g. {{1,2},{2,14}} for 1^2 2^14.
Partition partition_of(std::initializer_list<std::pair<int, int>> powers);
int partition_sum(const Partition& p);
// "1^2 2^14"
std::string partition_str(const Partition& p);

// Cycle types over 0, 1 and infinity.
struct Passport {
  std::array<Partition, 3> cols;

  int degree() const { return partition_sum(cols[0]); }
  bool balanced() const;
  // "[1^2 2^14, 3^7 9^1, 2^1 4^7]"
  std::string str() const;
  static Passport parse(std::string_view text);

  bool operator==(const Passport&) const = default;
  auto operator<=>(const Passport&) const = default;
};

// Edges 0..N-1; sigma0 rotates around white vertices, sigma1 around black ones.
class Dessin {
 public:
  Dessin() = default;
  Dessin(Perm sigma0, Perm sigma1);

  int degree() const { return s0_.degree(); }
  const Perm& sigma0() const { return s0_; }
  const Perm& sigma1() const { return s1_; }
  // The unique permutation with sigma0 * sigma1 * sigma_inf = 1.
  Perm sigma_inf() const;

  bool operator==(const Dessin&) const = default;
  auto operator<=>(const Dessin&) const = default;

 private:
  Perm s0_;
  Perm s1_;
};

Dessin one_edge_dessin();
bool is_transitive(const Dessin& d);
// Throws DessinError on a disconnected dessin.
int genus(const Dessin& d);
Passport passport_of(const Dessin& d);
// Relabel edge x as g(x).
Dessin relabel(const Dessin& d, const Perm& g);
Dessin canonical_form(const Dessin& d);
bool is_equivalent(const Dessin& a, const Dessin& b);
std::string to_dot(const Dessin& d);

nlohmann::json cycles_json(const Perm& p);
Perm perm_from_json(const nlohmann::json& j, int degree);
nlohmann::json to_json(const Dessin& d);
Dessin dessin_from_json(const nlohmann::json& j);

}  // namespace belyi
