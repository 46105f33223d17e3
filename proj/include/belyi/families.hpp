#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "belyi/dessin.hpp"
#include "belyi/glue.hpp"

namespace belyi {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GeneratorStatus {
  transcribed,    // follows a drawing, with k copies of its repeated part
  stored,         // small fixed dessin found once by the enumerator
  reconstructed,  // no drawing to follow; built by our own gluing
};

std::string status_name(GeneratorStatus s);

struct FamilyParams {
  int k = 0;
  int l = 0;  // only for two-parameter families
};

struct FamilyInfo {
  std::string id;
  std::string exponents;  // the local exponent data the family answers
  // Passport in k and l, e.g. "[1^3 2^{3k}, 3^{2k+1}, (2k+3)^1 4^k]".
  std::string formula;
  int k_min = 0;
  int k_max = -1;  // -1: unbounded
  int k_step = 1;
  bool two_params = false;
  int l_min = 0;
  int l_skip_mod = 0;  // l divisible by this is out of range (0: none)
  bool primitive = false;  // primitivity is claimed and checked
  GeneratorStatus status = GeneratorStatus::transcribed;
  std::string note;
};

const std::vector<FamilyInfo>& family_registry();
// Throws FamilyError for an unknown id.
const FamilyInfo& family_info(std::string_view id);

// The registered formula at the given parameters; throws FamilyError out of range.
Passport family_passport(const FamilyInfo& f, FamilyParams p);
// The first count valid parameter values, ordered by k (two-parameter
// families: by k + l, then k).
std::vector<FamilyParams> first_parameters(const FamilyInfo& f, int count);
bool in_range(const FamilyInfo& f, FamilyParams p);

// Builds the family member and checks passport, connectivity, genus 0 and,
// where claimed, primitivity; FamilyError on failure.
Dessin family(std::string_view id, FamilyParams p);
inline Dessin family(std::string_view id, int k) { return family(id, FamilyParams{k, 0}); }

// One copy of the A5 strip: in-ports are its three left vertices, out-ports
// three vertices standing in for the next copy's. Chained copies are planar
// with every inner black vertex of degree 5.
Motif a5_strip_motif();

// Evaluates a passport formula such as "[1^3 (2k+1)^1 2^{5k}, 3^{4k+2}, 2^1 4^{3k+1}]".
Passport eval_passport_formula(std::string_view formula, FamilyParams p);

}  // namespace belyi
