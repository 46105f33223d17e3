#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "belyi/dessin.hpp"

namespace belyi {

inline constexpr int kDefaultDegreeBound = 40;

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EnumStatus {
  found,       // at least one class
  none_found,  // genus-0 data, but no transitive triple realizes it
  infeasible,  // nonzero Hurwitz defect; nothing was searched
};

struct EnumerateOptions {
  int degree_bound = kDefaultDegreeBound;
  // Stop after this many classes. A limited search always runs serially so the
  // returned prefix does not depend on thread timing.
  std::optional<std::size_t> limit;
  bool parallel = true;
  int jobs = 0;  // 0: OpenMP default
};

struct EnumerateResult {
  std::vector<Dessin> dessins;  // canonical forms, sorted
  EnumStatus status = EnumStatus::none_found;
  int defect = 0;
  bool truncated = false;  // stopped early because of the limit
  std::size_t nodes = 0;   // search nodes visited
};

// sigma0 with the given cycle type: cycles on consecutive points, shortest first.
Perm canonical_sigma0(const Partition& type);

EnumerateResult enumerate_dessins(const Passport& p, const EnumerateOptions& opt = {});
std::size_t count_dessins(const Passport& p, const EnumerateOptions& opt = {});

std::string_view status_name(EnumStatus s);

}  // namespace belyi
