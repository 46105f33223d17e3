#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "belyi/blocks.hpp"
#include "belyi/dessin.hpp"
#include "belyi/enumerate.hpp"
#include "belyi/families.hpp"
#include "belyi/passport.hpp"
#include "belyi/ratfunc.hpp"

using namespace belyi;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInfeasible = 2, kBound = 3 };

// Errors in the data the user handed us, as opposed to bad flags.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DessinInput {
  std::string file;
  std::string sigma0, sigma1;
  int degree = 0;

  void add(CLI::App* app) {
    app->add_option("--dessin", file, "dessin JSON file ('-' for stdin)");
    app->add_option("--sigma0", sigma0, "cycle notation, 1-based");
    app->add_option("--sigma1", sigma1, "cycle notation, 1-based");
    app->add_option("--degree", degree, "degree when the cycles leave trailing fixed points");
  }

  Dessin load() const {
    if (!file.empty() && !sigma0.empty()) throw CLI::ValidationError("give --dessin or --sigma0/--sigma1, not both");
    if (!file.empty()) {
      json j;
      try {
        if (file == "-") {
          j = json::parse(std::cin);
        } else {
          std::ifstream in(file);
          if (!in) throw InputError("cannot read " + file);
          j = json::parse(in);
        }
      } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
      }
      return dessin_from_json(j);
    }
    if (sigma0.empty() || sigma1.empty()) throw CLI::ValidationError("need --dessin or both --sigma0 and --sigma1");
    int n = degree;
    if (n == 0) n = std::max(Perm::parse(sigma0).degree(), Perm::parse(sigma1).degree());
    return Dessin(Perm::parse(sigma0, n), Perm::parse(sigma1, n));
  }
};

// Output sink shared by the subcommands.
struct Out {
  bool text = false;
  void emit(const json& j, const std::string& plain) const {
    if (text)
      std::cout << plain;
    else
      std::cout << j.dump(2) << "\n";
  }
};

json passport_json(const Passport& p) {
  json j;
  j["passport"] = p.str();
  j["degree"] = p.degree();
  j["defect"] = hurwitz_defect(p);
  return j;
}

json dessin_report(const Dessin& d) {
  json j = to_json(d);
  const bool connected = is_transitive(d);
  j["transitive"] = connected;
  j["passport"] = passport_of(d).str();
  if (connected) j["genus"] = genus(d);
  return j;
}

int cmd_derive(const std::string& kind, const std::string& n, const std::string& n1, const std::string& target,
               const Out& out) {
  EquationKind k = parse_kind(kind);
  if (n.empty() && !(k == EquationKind::gen2 && !n1.empty())) throw CLI::ValidationError("--n is required");
  std::optional<Rational> first, second;
  if (!n.empty()) first = parse_rational(n);
  if (!n1.empty()) second = parse_rational(n1);
  // gen2 has a single parameter; accept it under either name
  if (k == EquationKind::gen2 && !second) std::swap(first, second);
  auto profile = exponent_profile(k, first, second);
  auto tables = derive_tables(profile, SchwarzTarget::parse(target));
  json j;
  j["kind"] = kind;
  j["target"] = target;
  j["tables"] = json::array();
  std::ostringstream s;
  s << "tables=" << tables.size() << "\n";
  for (const auto& t : tables) {
    json jt = t.to_json();
    jt["passport"] = t.passport().str();
    j["tables"].push_back(jt);
    s << t.degree << " " << t.passport().str() << "\n";
  }
  out.emit(j, s.str());
  return tables.empty() ? kInfeasible : kOk;
}

int cmd_enumerate(const std::string& text, int bound, int limit, int jobs, const Out& out) {
  Passport p = Passport::parse(text);
  if (!p.balanced()) {
    std::cerr << "infeasible: passport columns have different sums\n";
    return kInfeasible;
  }
  EnumerateOptions opt;
  opt.degree_bound = bound;
  if (limit > 0) opt.limit = static_cast<std::size_t>(limit);
  opt.jobs = jobs;
  EnumerateResult r = enumerate_dessins(p, opt);
  json j = passport_json(p);
  j["status"] = std::string(status_name(r.status));
  j["classes"] = r.dessins.size();
  j["truncated"] = r.truncated;
  j["dessins"] = json::array();
  for (const auto& d : r.dessins) j["dessins"].push_back(to_json(d));
  std::ostringstream s;
  s << "classes=" << r.dessins.size() << " degree=" << p.degree() << " defect=" << r.defect << "\n";
  for (const auto& d : r.dessins) s << "  " << d.sigma0().str() << " | " << d.sigma1().str() << "\n";
  out.emit(j, s.str());
  return r.status == EnumStatus::infeasible ? kInfeasible : kOk;
}

int cmd_family_list(const Out& out) {
  json j = json::array();
  std::ostringstream s;
  for (const auto& f : family_registry()) {
    std::string claims = f.primitive ? "primitive" : "-";
    std::string range = "k>=" + std::to_string(f.k_min);
    if (f.k_max >= 0) range = f.k_max == f.k_min ? "k=" + std::to_string(f.k_min) : range + ",k<=" + std::to_string(f.k_max);
    if (f.two_params) range += " l>=" + std::to_string(f.l_min);
    if (f.l_skip_mod) range += " l!=0 mod " + std::to_string(f.l_skip_mod);
    j.push_back({{"id", f.id},
                 {"formula", f.formula},
                 {"exponents", f.exponents},
                 {"range", range},
                 {"primitive", f.primitive},
                 {"status", status_name(f.status)},
                 {"note", f.note}});
    s << f.id << "\t" << f.formula << "\t" << range << "\t" << claims << "\t" << status_name(f.status) << "\n";
  }
  out.emit(j, s.str());
  return kOk;
}

int cmd_family(const std::string& id, int k, int l, const std::string& file, const Out& out) {
  const FamilyInfo& f = family_info(id);
  Dessin d = family(id, FamilyParams{k, l});
  json j = dessin_report(d);
  j["id"] = f.id;
  j["k"] = k;
  if (f.two_params) j["l"] = l;
  j["status"] = status_name(f.status);
  j["primitive"] = is_primitive(d).primitive;
  if (!file.empty()) {
    std::ofstream o(file);
    if (!o) throw InputError("cannot write " + file);
    o << to_json(d).dump(2) << "\n";
  }
  std::ostringstream s;
  s << f.id << " k=" << k << (f.two_params ? " l=" + std::to_string(l) : "") << " degree=" << d.degree() << " "
    << passport_of(d).str() << "\n";
  out.emit(j, s.str());
  return kOk;
}

int cmd_blocks(const Dessin& d, const std::vector<int>& seed, const Out& out) {
  if (!is_transitive(d)) throw InputError("dessin is disconnected");
  std::ostringstream s;
  if (seed.size() == 2) {
    auto sys = minimal_blocks(d, seed[0] - 1, seed[1] - 1);
    json j;
    j["seed"] = seed;
    j["trivial"] = !sys.has_value();
    if (sys) {
      PrimitivityReport r{false, seed[1] - 1, sys};
      j = certificate_json(d, r);
      j.erase("witness_seed");
      j["seed"] = seed;
      s << "blocks=" << sys->block_count() << " size=" << sys->block_size() << "\n";
    } else {
      s << "trivial\n";
    }
    out.emit(j, s.str());
    return kOk;
  }
  if (!seed.empty()) throw CLI::ValidationError("--seed takes two edges, e.g. 1,3");
  auto r = is_primitive(d);
  json j = certificate_json(d, r);
  if (r.primitive)
    s << "primitive\n";
  else
    s << "imprimitive blocks=" << r.witness->block_count() << " size=" << r.witness->block_size() << "\n";
  out.emit(j, s.str());
  return kOk;
}

int cmd_profile(const std::string& f, const std::string& g, const std::string& expect, const Out& out) {
  RatFunc r = parse_ratfunc(f);
  if (!g.empty()) r = compose(r, parse_ratfunc(g));
  Passport p = ramification_profile(r);
  BelyiReport b = is_belyi(r);
  json j;
  j["function"] = r.str();
  j["degree"] = r.degree();
  j["profile"] = p.str();
  j["belyi"] = b.belyi;
  int code = kOk;
  if (!expect.empty()) {
    bool match = b.belyi && p == Passport::parse(expect);
    j["matches"] = match;
    if (!match) code = kInfeasible;
  }
  std::ostringstream s;
  s << p.str() << (b.belyi ? " belyi" : " not-belyi") << "\n";
  out.emit(j, s.str());
  return code;
}

int cmd_check_n(const std::string& group, const std::string& kind, const std::string& n, const std::string& n1,
                const Out& out) {
  EquationKind k = parse_kind(kind);
  bool ok = n1.empty() ? check_n(group, k, parse_rational(n)) : check_n(group, k, parse_rational(n), parse_rational(n1));
  json j{{"group", group}, {"kind", kind}, {"n", n}, {"allowed", ok}};
  if (!n1.empty()) j["n1"] = n1;
  out.emit(j, ok ? "true\n" : "false\n");
  return kOk;
}

int cmd_validate(const Dessin& d, const Out& out) {
  json j = dessin_report(d);
  std::vector<std::string> violations;
  if (!is_transitive(d)) violations.push_back("not transitive");
  Passport p = passport_of(d);
  if (int defect = hurwitz_defect(p); defect != 0) {
    // a connected dessin of genus g has defect -2g
    j["defect"] = defect;
    violations.push_back("genus is not 0");
  } else {
    j["defect"] = 0;
  }
  j["violations"] = violations;
  j["valid"] = violations.empty();
  std::ostringstream s;
  s << (violations.empty() ? "valid" : "invalid") << " " << p.str();
  for (const auto& v : violations) s << "; " << v;
  s << "\n";
  out.emit(j, s.str());
  return violations.empty() ? kOk : kInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dessins, passports and Belyi maps for finite-monodromy Lame equations"};
  app.require_subcommand(1);
  std::string format = "text";
  int jobs = 0;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", jobs, "threads for parallel kernels (0: default)")->check(CLI::NonNegativeNumber);

  std::string kind = "lame", n, n1, target;
  auto* derive = app.add_subcommand("derive", "ramification tables for an exponent profile");
  derive->add_option("--kind", kind)->check(CLI::IsMember({"lame", "gen2", "gen3"}));
  derive->add_option("--n", n, "n (lame, gen2) or n0 (gen3), as p/q");
  derive->add_option("--n1", n1, "n1 for gen3");
  derive->add_option("--target", target, "A4, S4, A5 or Dn")->required();

  std::string passport;
  int bound = kDefaultDegreeBound, limit = 0;
  auto* enumerate = app.add_subcommand("enumerate", "dessins with a given passport, up to equivalence");
  enumerate->add_option("--passport", passport)->required();
  enumerate->add_option("--bound", bound, "largest degree searched");
  enumerate->add_option("--limit", limit, "stop after this many classes");

  std::string id, outfile;
  int k = 0, l = 0;
  bool list = false;
  auto* fam = app.add_subcommand("family", "a member of a registered dessin family");
  fam->add_option("--id", id);
  fam->add_option("--k", k);
  fam->add_option("--l", l);
  fam->add_option("--out", outfile, "also write the dessin JSON here");
  fam->add_flag("--list", list, "print the registry");

  DessinInput blocks_in;
  std::vector<int> seed;
  auto* blocks = app.add_subcommand("blocks", "primitivity test with a block-system certificate");
  blocks_in.add(blocks);
  blocks->add_option("--seed", seed, "two edges to put in one block")->delimiter(',');

  std::string func, inner, expect;
  auto* profile = app.add_subcommand("profile", "ramification of a rational function over 0, 1, infinity");
  profile->add_option("--f", func, "e.g. 'x*(x^2+190x-1215)^2/(5x+27)^4'")->required();
  profile->add_option("--compose", inner, "inner function g, to profile f(g(x))");
  profile->add_option("--expect", expect, "passport the profile must equal");

  std::string group;
  auto* check = app.add_subcommand("check-n", "is n allowed for the group by the residue tables");
  check->add_option("--group", group)->required();
  check->add_option("--kind", kind)->check(CLI::IsMember({"lame", "gen2", "gen3"}));
  check->add_option("--n", n, "n or n0, as p/q")->required();
  check->add_option("--n1", n1, "n1 for gen3");

  DessinInput validate_in, dot_in;
  auto* validate = app.add_subcommand("validate", "check a dessin file against the core invariants");
  validate_in.add(validate);
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a dessin");
  dot_in.add(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  if (jobs > 0) omp_set_num_threads(jobs);
  Out out{format == "text"};

  try {
    if (*derive) return cmd_derive(kind, n, n1, target, out);
    if (*enumerate) return cmd_enumerate(passport, bound, limit, jobs, out);
    if (*fam) {
      if (list) return cmd_family_list(out);
      if (id.empty()) throw CLI::ValidationError("family needs --id or --list");
      return cmd_family(id, k, l, outfile, out);
    }
    if (*blocks) return cmd_blocks(blocks_in.load(), seed, out);
    if (*profile) return cmd_profile(func, inner, expect, out);
    if (*check) return cmd_check_n(group, kind, n, n1, out);
    if (*validate) return cmd_validate(validate_in.load(), out);
    if (*dot) {
      std::cout << to_dot(dot_in.load());
      return kOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
