#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "oracles.hpp"
#include "paravector/fuzz.hpp"
#include "paravector/wire.hpp"

using namespace pv;
using oracle::I;
using oracle::P;

namespace {

ErrorCode code_of(const char* text) {
  try {
    (void)parse_paravector(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure for " << text);
  return ErrorCode::Validation;
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse_paravector("[1,0,0,0,0,0,0,0]") == P(1.0));
  CHECK(parse_paravector("[1,1,1,0,0,0,0,0]") == P({1, 1}, 1.0));
  CHECK(parse_paravector(" [ 0, 0, 1, 2, 3, 4, 5, 6 ] ") == P(0.0, {1, 4}, {2, 5}, {3, 6}));
  CHECK(code_of("[1,0,0]") == ErrorCode::Arity);
  CHECK(code_of("[1,0,0,0,0,0,0,") == ErrorCode::Parse);
  CHECK(code_of("{\"a\":1}") == ErrorCode::Parse);
  CHECK(code_of("[1,0,0,0,0,0,0,\"x\"]") == ErrorCode::Parse);
  CHECK(code_of("[1,0,0,0,0,0,0,1e999]") == ErrorCode::Validation);
  CHECK(std::signbit(parse_paravector("[-0,0,0,0,0,0,0,0]").scalar().real()));
  CHECK(parse_vector3("[1,2,3,4,5,6]") == CVector3({1, 4}, {2, 5}, {3, 6}));
}

TEST_CASE("parse errors carry a byte position") {
  try {
    (void)parse_paravector("[1,2,,3]");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("at byte") != std::string::npos);
  }
}

TEST_CASE("formatting round-trips bit for bit") {
  const Paravector g = P({0.1, -1.0 / 3.0}, {1e-300, 2.5e17}, {-0.0, std::nextafter(1.0, 2.0)},
                         {5e-324, -123456.789});
  const std::string text = format_paravector(g);
  const Paravector back = parse_paravector(text);
  const auto a = g.components(), b = back.components();
  CHECK(std::memcmp(a.data(), b.data(), sizeof(double) * 8) == 0);
  CHECK(format_paravector(back) == text);
  CHECK(format_paravector(P({1, 1}, 1.0)) == "[1,1,1,0,0,0,0,0]");
  CHECK(format_complex({-1.0, 2.0}) == "[-1,2]");
  CHECK(format_vector3(CVector3(1.0, I, 0.0)) == "[1,0,0,0,1,0]");
}

TEST_CASE("classification text and JSON") {
  const Classification c = classify(P(1.0, 1.0));
  const std::string json = format_classification(c, true);
  CHECK(json.find("\"singular\":true") != std::string::npos);
  CHECK(json.find("\"proper\":false") != std::string::npos);
  CHECK(format_classification(c, false).find("singular    true") != std::string::npos);
}

TEST_CASE("SplitMix64 reference values") {
  // first outputs for seed 0 as published with the algorithm
  fuzz::SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  fuzz::SplitMix64 u(7);
  for (int k = 0; k < 1000; ++k) {
    const double x = u.unit();
    CHECK((x >= 0.0 && x < 1.0));
  }
}

TEST_CASE("fuzz campaigns are deterministic") {
  fuzz::FuzzConfig config;
  config.trials = 200;
  const std::string first = fuzz::format_report(fuzz::run(config), true);
  const std::string second = fuzz::format_report(fuzz::run(config), true);
  CHECK(first == second);
  config.seed = 43;
  CHECK(fuzz::format_report(fuzz::run(config), true) != first);
}

TEST_CASE("fuzz rejects an empty campaign") {
  fuzz::FuzzConfig config;
  config.trials = 0;
  CHECK_THROWS_AS((void)fuzz::run(config), Error);
}

TEST_CASE("fuzz records the first counterexample") {
  std::vector<fuzz::Property> props;
  props.push_back({"always", 1, [](fuzz::Sampler&, const Tolerance&) {
                     return fuzz::Outcome{fuzz::Verdict::Pass, {}};
                   }});
  props.push_back({"odd trials", 1, [](fuzz::Sampler& s, const Tolerance&) {
                     const Paravector g = s.general();
                     return fuzz::Outcome{s.chance(0.5) ? fuzz::Verdict::Fail : fuzz::Verdict::Pass, {g}};
                   }});
  props.push_back({"throws", 2, [](fuzz::Sampler&, const Tolerance&) -> fuzz::Outcome {
                     throw Error(ErrorCode::SingularParavector, "boom");
                   }});
  fuzz::FuzzConfig config;
  config.trials = 50;
  const fuzz::FuzzReport report = fuzz::run(config, props);
  CHECK(report.failing_properties() == 2);
  CHECK(report.properties[0].passes == 50);
  REQUIRE(report.properties[1].first_failure.has_value());
  CHECK(report.properties[1].first_failure->inputs.size() == 1);
  CHECK(report.properties[1].passes + report.properties[1].failures == 50);
  CHECK(report.properties[2].first_failure->message == "boom");
  CHECK(report.properties[2].first_failure->trial == 0);

  const std::string text = fuzz::format_report(report, false);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("2 failing") != std::string::npos);
}

TEST_CASE("fuzz samplers honour their contracts") {
  fuzz::Sampler s(fuzz::mix(99));
  for (int k = 0; k < 500; ++k) {
    CHECK(classify(s.orthogonal()).is_orthogonal);
    CHECK(classify(s.proper()).is_proper);
    CHECK(classify(s.singular()).is_singular);
    CHECK(classify(s.special()).is_special);
    const Paravector g = s.uniform_paravector();
    for (double x : g.components()) CHECK((x >= -2.0 && x <= 2.0));
  }
}

TEST_CASE("property catalogue covers every acceptance group") {
  std::array<int, 11> per{};
  for (const fuzz::Property& p : fuzz::catalogue()) {
    REQUIRE(p.criterion >= 1);
    REQUIRE(p.criterion <= 10);
    ++per[p.criterion];
  }
  for (int c = 1; c <= 10; ++c) CHECK(per[c] > 0);
}
