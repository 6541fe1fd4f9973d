#include "paravector/fuzz.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <json.hpp>
#include <numbers>

#include "paravector/wire.hpp"

namespace pv::fuzz {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t x) noexcept { return SplitMix64(x).next(); }

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  return mix(seed ^ mix(trial));
}

// --- Sampler ----------------------------------------------------------------

Complex Sampler::complex(double lo, double hi) {
  const double re = uniform(lo, hi);
  return {re, uniform(lo, hi)};
}

Complex Sampler::nonzero_complex() {
  const double r = uniform(0.25, 2.0);
  return std::polar(r, uniform(-std::numbers::pi, std::numbers::pi));
}

Vec3 Sampler::real_vector(double lo, double hi) {
  Vec3 v;
  for (double& x : v) x = uniform(lo, hi);
  return v;
}

Vec3 Sampler::unit_vector() {
  for (;;) {
    const Vec3 v = real_vector(-1.0, 1.0);
    const double n = norm(v);
    if (n > 0.1 && n <= 1.0) return {v[0] / n, v[1] / n, v[2] / n};
  }
}

CVector3 Sampler::complex_vector() {
  const Vec3 re = real_vector();
  return CVector3::from_parts(re, real_vector());
}

Paravector Sampler::uniform_paravector() {
  std::array<double, 8> c;
  for (double& x : c) x = uniform(-2.0, 2.0);
  return Paravector::from_components(c);
}

Paravector Sampler::general() { return chance(0.1) ? corner() : uniform_paravector(); }

Paravector Sampler::corner() {
  switch (rng_.next() % 7) {
    case 0: return Paravector{};
    case 1: return Paravector::one();
    case 2: return Paravector(1.0, CVector3(1.0, 0.0, 0.0));
    case 3: return singular();
    case 4: return special();
    case 5: {
      const SpatialRotation r = spatial_rotation();
      return spatial_axis(r).value();
    }
    default: return real_paravector();
  }
}

Paravector Sampler::orthogonal() {
  if (chance(0.1)) {
    switch (rng_.next() % 3) {
      case 0: return Paravector::one();
      case 1: return spatial_axis(spatial_rotation()).value();
      default: {
        const Vec3 n = unit_vector();
        const double t = uniform(-1.5, 1.5);
        const double s = std::sinh(t);
        return Paravector(std::cosh(t), CVector3::from_parts({n[0] * s, n[1] * s, n[2] * s}, {}));
      }
    }
  }
  for (;;) {
    const Paravector g = uniform_paravector();
    const Complex d = det(g);
    if (std::abs(d) >= 1.0) return g / std::sqrt(d);
  }
}

Paravector Sampler::proper() {
  const double r = uniform(0.5, 2.0);
  return orthogonal() * Complex(r, 0.0);
}

Paravector Sampler::singular() {
  if (chance(0.1)) {
    if (chance(0.5)) return Paravector(1.0, CVector3(1.0, 0.0, 0.0));
    const Vec3 x = real_vector();
    return Paravector(norm(x), CVector3::from_parts(x, {}));
  }
  const CVector3 b = complex_vector();
  const Complex a = std::sqrt(dot(b, b));
  return Paravector(chance(0.5) ? a : -a, b);
}

Paravector Sampler::special() {
  const double a = uniform(-2.0, 2.0);
  return Paravector(a, CVector3::from_parts({}, real_vector()));
}

Paravector Sampler::real_paravector() {
  const double a = uniform(-2.0, 2.0);
  return Paravector(a, CVector3::from_parts(real_vector(), {}));
}

Paravector Sampler::real_proper() {
  const Vec3 b = real_vector(-1.0, 1.0);
  const double a = norm(b) + uniform(0.25, 2.0);
  return Paravector(chance(0.5) ? a : -a, CVector3::from_parts(b, {}));
}

SpatialRotation Sampler::spatial_rotation() {
  SpatialRotation r;
  r.n = unit_vector();
  r.phi = uniform(-std::numbers::pi, std::numbers::pi);
  return r;
}

// --- runner -----------------------------------------------------------------

std::size_t FuzzReport::failing_properties() const {
  std::size_t n = 0;
  for (const PropertyResult& p : properties) n += p.failures > 0 ? 1 : 0;
  return n;
}

FuzzReport run(const FuzzConfig& config) { return run(config, catalogue()); }

FuzzReport run(const FuzzConfig& config, const std::vector<Property>& properties) {
  if (config.trials == 0) throw Error(ErrorCode::Validation, "trials must be at least 1");
  FuzzReport report;
  report.config = config;
  report.properties.reserve(properties.size());
  for (const Property& p : properties) {
    PropertyResult r;
    r.name = p.name;
    r.criterion = p.criterion;
    report.properties.push_back(std::move(r));
  }

  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const std::uint64_t base = trial_seed(config.seed, t);
    for (std::size_t k = 0; k < properties.size(); ++k) {
      PropertyResult& result = report.properties[k];
      Sampler sampler(mix(base + k));
      Outcome outcome;
      std::string message;
      try {
        outcome = properties[k].check(sampler, config.tol);
      } catch (const std::exception& e) {
        outcome.verdict = Verdict::Fail;
        message = e.what();
      }
      switch (outcome.verdict) {
        case Verdict::Pass: ++result.passes; break;
        case Verdict::Skip: ++result.skips; break;
        case Verdict::Fail:
          if (result.failures++ == 0) {
            result.first_failure = Counterexample{t, std::move(outcome.witness), message};
          }
          break;
      }
    }
  }
  return report;
}

std::string format_report(const FuzzReport& report, bool json) {
  if (json) {
    nlohmann::ordered_json doc;
    doc["seed"] = report.config.seed;
    doc["trials"] = report.config.trials;
    doc["tol"] = {{"abs", report.config.tol.abs}, {"rel", report.config.tol.rel}};
    doc["properties"] = nlohmann::ordered_json::array();
    for (const PropertyResult& p : report.properties) {
      nlohmann::ordered_json entry;
      entry["name"] = p.name;
      entry["criterion"] = p.criterion;
      entry["pass"] = p.passes;
      entry["fail"] = p.failures;
      entry["skip"] = p.skips;
      if (p.first_failure) {
        nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
        for (const Paravector& g : p.first_failure->inputs) inputs.push_back(g.components());
        entry["counterexample"] = {{"trial", p.first_failure->trial}, {"inputs", inputs}};
        if (!p.first_failure->message.empty()) {
          entry["counterexample"]["message"] = p.first_failure->message;
        }
      } else {
        entry["counterexample"] = nullptr;
      }
      doc["properties"].push_back(std::move(entry));
    }
    doc["failing_properties"] = report.failing_properties();
    return doc.dump() + "\n";
  }

  std::string out = "fuzz seed=" + std::to_string(report.config.seed) +
                    " trials=" + std::to_string(report.config.trials) +
                    " tol.abs=" + format_double(report.config.tol.abs) +
                    " tol.rel=" + format_double(report.config.tol.rel) + "\n";
  char line[256];
  for (const PropertyResult& p : report.properties) {
    std::snprintf(line, sizeof line, "  %s  [%2d] %-48s %8llu pass %6llu fail %6llu skip\n",
                  p.failures == 0 ? "PASS" : "FAIL", p.criterion, p.name.c_str(),
                  static_cast<unsigned long long>(p.passes),
                  static_cast<unsigned long long>(p.failures),
                  static_cast<unsigned long long>(p.skips));
    out += line;
    if (p.first_failure) {
      out += "        first counterexample (trial " + std::to_string(p.first_failure->trial) + "):";
      for (const Paravector& g : p.first_failure->inputs) out += " " + format_paravector(g);
      if (!p.first_failure->message.empty()) out += " -- " + p.first_failure->message;
      out += "\n";
    }
  }
  out += "summary: " + std::to_string(report.properties.size()) + " properties, " +
         std::to_string(report.failing_properties()) + " failing\n";
  return out;
}

}  // namespace pv::fuzz
