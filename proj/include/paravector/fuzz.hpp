#pragma once

// Seeded property fuzzing over the algebraic laws of the library.
//
// Randomness: SplitMix64 (Steele, Lea & Flood 2014; the seeding generator of
// xoshiro). Trial t of a campaign with seed s draws property p's inputs from
// the stream seeded with mix(mix(s ^ mix(t)) + p), where mix is the
// SplitMix64 output function. Doubles are (x >> 11) * 2^-53, scaled to the
// requested interval; paravector components are uniform on [-2, 2]. With
// probability 1/10 a generated paravector is replaced by a structured corner
// case (zero, identity, {1|e1}, a random singular, special, unitar or real
// paravector). Reports are therefore a pure function of (seed, trials, tol).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paravector/core.hpp"
#include "paravector/transforms.hpp"

namespace pv::fuzz {

std::uint64_t mix(std::uint64_t x) noexcept;
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;
  /// Uniform on [0, 1).
  double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * unit(); }

 private:
  std::uint64_t state_;
};

/// Input generators for one property evaluation.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return rng_.uniform(lo, hi); }
  bool chance(double p) { return rng_.unit() < p; }
  Complex complex(double lo = -2.0, double hi = 2.0);
  /// Complex number with modulus in [0.25, 2].
  Complex nonzero_complex();
  Vec3 real_vector(double lo = -2.0, double hi = 2.0);
  Vec3 unit_vector();
  CVector3 complex_vector();

  /// Uniform components; 10% structured corner cases.
  Paravector general();
  Paravector uniform_paravector();
  Paravector corner();
  /// det = 1; components stay O(1).
  Paravector orthogonal();
  /// r * orthogonal() with r in [0.5, 2].
  Paravector proper();
  /// a^2 = B.B, built as a = +-sqrt(B.B).
  Paravector singular();
  /// {a | i c}
  Paravector special();
  /// All imaginary parts zero.
  Paravector real_paravector();
  /// Real paravector with det > 0 (|a| > |b|).
  Paravector real_proper();
  SpatialRotation spatial_rotation();

 private:
  SplitMix64 rng_;
};

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
  Verdict verdict = Verdict::Skip;
  std::vector<Paravector> witness;
};

struct Property {
  std::string name;
  /// Acceptance group this law belongs to.
  int criterion = 0;
  std::function<Outcome(Sampler&, const Tolerance&)> check;
};

/// Every law checked by the fuzzer, in report order.
const std::vector<Property>& catalogue();

struct Counterexample {
  std::uint64_t trial = 0;
  std::vector<Paravector> inputs;
  std::string message;
};

struct PropertyResult {
  std::string name;
  int criterion = 0;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
  std::uint64_t skips = 0;
  std::optional<Counterexample> first_failure;
};

struct FuzzConfig {
  std::uint64_t seed = 42;
  std::uint64_t trials = 10000;
  Tolerance tol;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<PropertyResult> properties;

  std::size_t failing_properties() const;
};

/// Throws Validation when trials == 0.
FuzzReport run(const FuzzConfig& config);
FuzzReport run(const FuzzConfig& config, const std::vector<Property>& properties);

std::string format_report(const FuzzReport& report, bool json);

}  // namespace pv::fuzz
