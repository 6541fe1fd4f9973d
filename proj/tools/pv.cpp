// pv: command-line front end over the paravector C API.
//
// Exit codes: 0 success, 1 domain error, 2 usage or parse error,
// 3 fuzz campaign found a counterexample.

#include <CLI11.hpp>

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "paravector/paravector.h"

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;
constexpr int kCounterexample = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code(pv_status s) {
  switch (s) {
    case PV_ERR_SINGULAR:
    case PV_ERR_IMPROPER:
    case PV_ERR_NOT_ORTHOGONAL:
    case PV_ERR_ORIENTATION_MISMATCH:
    case PV_ERR_ISOTROPIC_NORMAL:
    case PV_ERR_DEGENERATE_COMPOSITION:
    case PV_ERR_NOT_A_PARAVECTOR_MATRIX:
      return kDomain;
    default:
      return kUsage;
  }
}

void check(pv_status s) {
  if (s == PV_OK) return;
  throw Failure{exit_code(s), std::string(pv_status_string(s)) + ": " + pv_last_error_message()};
}

std::string take(char* s) {
  std::string out(s);
  pv_string_free(s);
  return out;
}

// An argument of "-" is read from stdin (once).
std::string resolve(const std::string& arg) {
  if (arg != "-") return arg;
  static bool consumed = false;
  if (consumed) throw Failure{kUsage, "stdin can supply only one argument"};
  consumed = true;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

pv_paravector paravector(const std::string& arg) {
  pv_paravector g;
  check(pv_parse(resolve(arg).c_str(), &g));
  return g;
}

pv_vector3 vector3(const std::string& arg) {
  pv_vector3 v;
  check(pv_parse_vector3(resolve(arg).c_str(), &v));
  return v;
}

pv_spatial_rotation spatial(const std::string& arg) {
  double r[4];
  check(pv_parse_reals(resolve(arg).c_str(), 4, r));
  return {{r[0], r[1], r[2]}, r[3]};
}

std::string text(const pv_paravector& g) {
  char* s = nullptr;
  check(pv_format(&g, &s));
  return take(s);
}

std::string text(pv_complex z) {
  char* s = nullptr;
  check(pv_format_complex(z, &s));
  return take(s);
}

std::string text(double x) {
  char* s = nullptr;
  check(pv_format_double(x, &s));
  return take(s);
}

std::string text(const pv_vector3& v) {
  char* s = nullptr;
  check(pv_format_vector3(&v, &s));
  return take(s);
}

struct Options {
  std::optional<double> tol;
  bool left = false;
  bool right = false;
  bool json = false;
  std::uint64_t seed = 42;
  std::uint64_t trials = 10000;
  std::vector<std::string> args;
};

pv_tolerance tolerance(const Options& o) {
  pv_tolerance t = pv_default_tolerance();
  double value;
  if (o.tol) {
    value = *o.tol;
  } else if (const char* env = std::getenv("PV_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    errno = 0;
    value = std::strtod(env, &end);
    if (errno != 0 || *end != '\0') throw Failure{kUsage, "PV_TOL is not a number: " + std::string(env)};
  } else {
    return t;
  }
  if (!(value >= 0.0) || value > 1e300) throw Failure{kUsage, "tolerance must be finite and non-negative"};
  return {value, value};
}

pv_orientation orientation(const Options& o, pv_orientation fallback) {
  if (o.left) return PV_LEFT;
  if (o.right) return PV_RIGHT;
  return fallback;
}

using Handler = std::string (*)(const Options&);

std::string run_add(const Options& o) {
  const pv_paravector p = paravector(o.args[0]), q = paravector(o.args[1]);
  pv_paravector r;
  check(pv_add(&p, &q, &r));
  return text(r);
}

std::string run_mul(const Options& o) {
  const pv_paravector p = paravector(o.args[0]), q = paravector(o.args[1]);
  pv_paravector r;
  check(pv_mul(&p, &q, &r));
  return text(r);
}

std::string run_rev(const Options& o) {
  const pv_paravector p = paravector(o.args[0]);
  pv_paravector r;
  check(pv_rev(&p, &r));
  return text(r);
}

std::string run_conj(const Options& o) {
  const pv_paravector p = paravector(o.args[0]);
  pv_paravector r;
  check(pv_conj(&p, &r));
  return text(r);
}

std::string run_vig(const Options& o) {
  const pv_paravector p = paravector(o.args[0]);
  pv_paravector r;
  check(pv_vigor(&p, &r));
  return text(r);
}

std::string run_det(const Options& o) {
  const pv_paravector p = paravector(o.args[0]);
  pv_complex r;
  check(pv_det(&p, &r));
  return text(r);
}

std::string run_inv(const Options& o) {
  const pv_paravector p = paravector(o.args[0]);
  const pv_tolerance t = tolerance(o);
  pv_paravector r;
  check(pv_inverse(&p, &t, &r));
  return text(r);
}

std::string run_module(const Options& o) {
  const pv_paravector p = paravector(o.args[0]);
  const pv_tolerance t = tolerance(o);
  double r;
  check(pv_module(&p, &t, &r));
  return text(r);
}

std::string run_normalize(const Options& o) {
  const pv_paravector p = paravector(o.args[0]);
  const pv_tolerance t = tolerance(o);
  pv_paravector r;
  check(pv_normalize(&p, &t, &r));
  return text(r);
}

std::string run_classify(const Options& o) {
  const pv_paravector p = paravector(o.args[0]);
  const pv_tolerance t = tolerance(o);
  pv_classification c;
  check(pv_classify(&p, &t, &c));
  char* s = nullptr;
  check(pv_format_classification(&c, &t, o.json ? 1 : 0, &s));
  std::string out = take(s);
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

std::string run_sprod(const Options& o) {
  const pv_paravector p = paravector(o.args[0]), q = paravector(o.args[1]);
  pv_complex r;
  check(pv_scalar_product(&p, &q, &r));
  return text(r);
}

std::string run_vprod(const Options& o) {
  const pv_paravector p = paravector(o.args[0]), q = paravector(o.args[1]);
  pv_vector3 r;
  check(pv_vector_product(&p, &q, orientation(o, PV_RIGHT), &r));
  return text(r);
}

std::string run_angle(const Options& o) {
  const pv_paravector p = paravector(o.args[0]), q = paravector(o.args[1]);
  const pv_tolerance t = tolerance(o);
  pv_paravector r;
  check(pv_angle(&p, &q, orientation(o, PV_RIGHT), &t, &r));
  return text(r);
}

std::string run_compose_angle(const Options& o) {
  const pv_paravector p = paravector(o.args[0]), q = paravector(o.args[1]);
  const pv_tolerance t = tolerance(o);
  const pv_orientation k = orientation(o, PV_RIGHT);
  pv_paravector r;
  check(pv_compose_angles(&p, k, &q, k, &t, &r));
  return text(r);
}

std::string run_rotate(const Options& o) {
  const pv_paravector g = paravector(o.args[0]), axis = paravector(o.args[1]);
  const pv_tolerance t = tolerance(o);
  pv_paravector r;
  check(pv_rotate(&g, &axis, orientation(o, PV_LEFT), &t, &r));
  return text(r);
}

std::string run_mirror(const Options& o) {
  const pv_paravector g = paravector(o.args[0]);
  const pv_vector3 w = vector3(o.args[1]);
  const pv_tolerance t = tolerance(o);
  pv_paravector r;
  check(pv_mirror(&g, &w, &t, &r));
  return text(r);
}

std::string run_axial(const Options& o) {
  const pv_paravector g = paravector(o.args[0]);
  const pv_vector3 w = vector3(o.args[1]);
  const pv_tolerance t = tolerance(o);
  pv_paravector r;
  check(pv_axial_symmetry(&g, &w, &t, &r));
  return text(r);
}

std::string run_euler(const Options& o) {
  const pv_spatial_rotation r1 = spatial(o.args[0]), r2 = spatial(o.args[1]);
  const pv_tolerance t = tolerance(o);
  pv_spatial_rotation r;
  int defined = 0;
  check(pv_euler_compose(&r1, &r2, &t, &r, &defined));
  return "{\"n\":[" + text(r.n[0]) + "," + text(r.n[1]) + "," + text(r.n[2]) +
         "],\"phi\":" + text(r.phi) + ",\"axis_defined\":" + (defined ? "true" : "false") + "}";
}

std::string run_matrep(const Options& o) {
  const pv_paravector g = paravector(o.args[0]);
  pv_matrix4 m;
  check(pv_to_matrix4(&g, &m));
  char* s = nullptr;
  check(pv_format_matrix4(&m, &s));
  std::string out = take(s);
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

std::string run_pauli(const Options& o) {
  const pv_paravector g = paravector(o.args[0]);
  pv_matrix2 m;
  check(pv_to_pauli(&g, &m));
  char* s = nullptr;
  check(pv_format_matrix2(&m, &s));
  std::string out = take(s);
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

struct Command {
  const char* name;
  const char* help;
  std::size_t arity;
  const char* args;
  bool oriented;
  Handler handler;
};

const Command kCommands[] = {
    {"add", "sum of two paravectors", 2, "G1 G2", false, run_add},
    {"mul", "product G1 G2", 2, "G1 G2", false, run_mul},
    {"rev", "reverse paravector", 1, "G", false, run_rev},
    {"conj", "complex conjugate paravector", 1, "G", false, run_conj},
    {"vig", "vigor G G*", 1, "G", false, run_vig},
    {"det", "determinant as [re,im]", 1, "G", false, run_det},
    {"inv", "inverse paravector", 1, "G", false, run_inv},
    {"module", "module of a proper or singular paravector", 1, "G", false, run_module},
    {"normalize", "G / |G| for proper G", 1, "G", false, run_normalize},
    {"classify", "proper/singular/orthogonal/special/unitar flags", 1, "G", false, run_classify},
    {"sprod", "scalar product as [re,im]", 2, "G1 G2", false, run_sprod},
    {"vprod", "vector product as [bx,by,bz,cx,cy,cz] (default --right)", 2, "G1 G2", true,
     run_vprod},
    {"angle", "angle between proper paravectors (default --right)", 2, "G1 G2", true, run_angle},
    {"compose-angle", "product of two angles of one orientation (default --right)", 2, "P Q", true,
     run_compose_angle},
    {"rotate", "rotate G about a proper axis (default --left)", 2, "G AXIS", true, run_rotate},
    {"mirror", "mirror symmetry in the plane with normal W", 2, "G W", false, run_mirror},
    {"axial", "straight-angle rotation about W", 2, "G W", false, run_axial},
    {"euler", "compose spatial rotations given as [nx,ny,nz,phi]", 2, "R1 R2", false, run_euler},
    {"matrep", "4x4 matrix representation", 1, "G", false, run_matrep},
    {"pauli", "2x2 Pauli-basis representation", 1, "G", false, run_pauli},
};

int run_fuzz(const Options& o) {
  const pv_tolerance t = tolerance(o);
  pv_fuzz_report* report = nullptr;
  check(pv_fuzz_run(o.seed, o.trials, &t, &report));
  char* s = nullptr;
  const pv_status st = pv_fuzz_report_format(report, o.json ? 1 : 0, &s);
  const std::size_t failing = pv_fuzz_report_failing_properties(report);
  pv_fuzz_report_free(report);
  check(st);
  std::cout << take(s);
  return failing == 0 ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paravector algebra: arithmetic, geometry, transforms, matrix forms and fuzzing"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Options opts;
  const Command* chosen = nullptr;
  bool fuzz = false;

  double tol = 0.0;
  std::vector<CLI::Option*> tol_options;
  const auto common = [&](CLI::App* sub) {
    tol_options.push_back(
        sub->add_option("--tol", tol, "Absolute and relative tolerance (default 1e-9, env PV_TOL)")
            ->check(CLI::NonNegativeNumber));
  };

  for (const Command& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("args", opts.args, c.args)
        ->expected(static_cast<int>(c.arity))
        ->allow_extra_args(false)
        ->required();
    common(sub);
    if (c.oriented) {
      auto* l = sub->add_flag("--left", opts.left, "Left orientation");
      auto* r = sub->add_flag("--right", opts.right, "Right orientation");
      l->excludes(r);
    }
    if (std::string(c.name) == "classify") sub->add_flag("--json", opts.json, "JSON object output");
    sub->callback([&chosen, &c] { chosen = &c; });
  }

  CLI::App* fz = app.add_subcommand("fuzz", "run the seeded property campaign");
  fz->add_option("--seed", opts.seed, "PRNG seed")->capture_default_str();
  fz->add_option("--trials", opts.trials, "trials per property")->capture_default_str();
  fz->add_flag("--json", opts.json, "JSON report");
  common(fz);
  fz->callback([&fuzz] { fuzz = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "pv: " << e.what() << "\n";
    return kUsage;
  }

  for (const CLI::Option* o : tol_options)
    if (o->count() > 0) opts.tol = tol;

  try {
    if (fuzz) {
      if (opts.trials == 0) throw Failure{kUsage, "trials must be at least 1"};
      return run_fuzz(opts);
    }
    std::cout << chosen->handler(opts) << "\n";
    return kOk;
  } catch (const Failure& f) {
    std::cerr << "pv: " << f.message << "\n";
    return f.code;
  }
}
