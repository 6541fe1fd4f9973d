#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "paravector/paravector.h"

namespace {

pv_paravector parse(const char* text) {
  pv_paravector g;
  REQUIRE(pv_parse(text, &g) == PV_OK);
  return g;
}

std::string format(const pv_paravector& g) {
  char* s = nullptr;
  REQUIRE(pv_format(&g, &s) == PV_OK);
  std::string out(s);
  pv_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("arithmetic through the C interface") {
  const pv_paravector e1 = parse("[1,0,1,0,0,0,0,0]");
  const pv_paravector e2 = parse("[0,0,0,1,0,0,0,0]");
  pv_paravector r;
  REQUIRE(pv_mul(&e1, &e2, &r) == PV_OK);
  CHECK(format(r) == "[0,0,0,1,0,0,0,1]");
  REQUIRE(pv_add(&e1, &e2, &r) == PV_OK);
  CHECK(format(r) == "[1,0,1,1,0,0,0,0]");

  pv_complex d;
  const pv_paravector g = parse("[1,1,1,0,0,0,0,0]");
  REQUIRE(pv_det(&g, &d) == PV_OK);
  CHECK(d.re == -1.0);
  CHECK(d.im == 2.0);
}

TEST_CASE("errors map to status codes") {
  const pv_paravector singular = parse("[1,0,1,0,0,0,0,0]");
  pv_paravector r;
  CHECK(pv_inverse(&singular, nullptr, &r) == PV_ERR_SINGULAR);
  CHECK(std::string(pv_last_error_message()).find("singular") != std::string::npos);
  CHECK(std::string(pv_status_string(PV_ERR_SINGULAR)) == "singular paravector");

  const pv_paravector improper = parse("[1,0,2,0,0,0,0,0]");
  double m;
  CHECK(pv_module(&improper, nullptr, &m) == PV_ERR_IMPROPER);
  CHECK(pv_module(&singular, nullptr, &m) == PV_OK);
  CHECK(m == 0.0);

  pv_paravector g;
  CHECK(pv_parse("[1,0,0]", &g) == PV_ERR_ARITY);
  CHECK(pv_parse("[1,0", &g) == PV_ERR_PARSE);
  CHECK(pv_parse(nullptr, &g) == PV_ERR_NULL_ARGUMENT);
  CHECK(pv_add(&g, nullptr, &r) == PV_ERR_NULL_ARGUMENT);

  const pv_paravector nan_input{std::nan(""), 0, {0, 0, 0}, {0, 0, 0}};
  CHECK(pv_rev(&nan_input, &r) == PV_ERR_VALIDATION);

  const pv_tolerance bad{-1.0, 0.0};
  CHECK(pv_inverse(&singular, &bad, &r) == PV_ERR_VALIDATION);
}

TEST_CASE("classification and geometry") {
  const pv_paravector g = parse("[2,0,1,0,0,0,0,0]");
  pv_classification c;
  REQUIRE(pv_classify(&g, nullptr, &c) == PV_OK);
  CHECK(c.proper == 1);
  CHECK(c.orthogonal == 0);

  const pv_paravector h = parse("[1,0,2,0,0,0,0,0]");
  int perpendicular = 0;
  REQUIRE(pv_is_perpendicular(&g, &h, nullptr, &perpendicular) == PV_OK);
  CHECK(perpendicular == 1);

  pv_paravector a;
  const pv_paravector k = parse("[2,0,0,1,0,0,0,0]");
  REQUIRE(pv_angle(&g, &k, PV_RIGHT, nullptr, &a) == PV_OK);
  CHECK(std::abs(a.a - 4.0 / 3.0) < 1e-15);

  pv_paravector composed;
  CHECK(pv_compose_angles(&a, PV_RIGHT, &a, PV_LEFT, nullptr, &composed) ==
        PV_ERR_ORIENTATION_MISMATCH);
}

TEST_CASE("transforms and matrices") {
  const pv_spatial_rotation quarter{{0, 0, 1}, 0.7853981633974483};
  double w[3] = {1, 0, 0}, out[3];
  REQUIRE(pv_rotate_vector(w, &quarter, nullptr, out) == PV_OK);
  CHECK(std::abs(out[1] - 1.0) < 1e-15);

  pv_spatial_rotation e;
  int defined = 0;
  REQUIRE(pv_euler_compose(&quarter, &quarter, nullptr, &e, &defined) == PV_OK);
  CHECK(defined == 1);
  CHECK(std::abs(e.phi - 1.5707963267948966) < 1e-15);

  const pv_vector3 isotropic{{1, 0, 0}, {0, 1, 0}};
  const pv_paravector g = parse("[1,2,3,4,5,6,7,8]");
  pv_paravector r;
  CHECK(pv_mirror(&g, &isotropic, nullptr, &r) == PV_ERR_ISOTROPIC_NORMAL);

  pv_matrix4 m;
  REQUIRE(pv_to_matrix4(&g, &m) == PV_OK);
  REQUIRE(pv_from_matrix4(&m, nullptr, &r) == PV_OK);
  CHECK(format(r) == format(g));
  m.m[2][1].re += 1.0;
  CHECK(pv_from_matrix4(&m, nullptr, &r) == PV_ERR_NOT_A_PARAVECTOR_MATRIX);

  pv_matrix2 p;
  REQUIRE(pv_to_pauli(&g, &p) == PV_OK);
  char* grid = nullptr;
  REQUIRE(pv_format_matrix2(&p, &grid) == PV_OK);
  CHECK(std::strchr(grid, '\n') != nullptr);
  pv_string_free(grid);
}

TEST_CASE("fuzz report handle") {
  pv_fuzz_report* report = nullptr;
  REQUIRE(pv_fuzz_run(42, 50, nullptr, &report) == PV_OK);
  const size_t n = pv_fuzz_report_property_count(report);
  CHECK(n > 50);
  CHECK(pv_fuzz_report_failing_properties(report) == 0);
  const char* name = nullptr;
  int criterion = 0;
  uint64_t passes = 0, failures = 0, skips = 0;
  REQUIRE(pv_fuzz_report_property(report, 0, &name, &criterion, &passes, &failures, &skips) == PV_OK);
  CHECK(std::string(name).size() > 0);
  CHECK(passes + failures + skips == 50);
  CHECK(pv_fuzz_report_property(report, n, &name, nullptr, nullptr, nullptr, nullptr) ==
        PV_ERR_VALIDATION);
  char* json = nullptr;
  REQUIRE(pv_fuzz_report_format(report, 1, &json) == PV_OK);
  CHECK(std::string(json).find("\"failing_properties\":0") != std::string::npos);
  pv_string_free(json);
  pv_fuzz_report_free(report);

  CHECK(pv_fuzz_run(42, 0, nullptr, &report) == PV_ERR_VALIDATION);
}
