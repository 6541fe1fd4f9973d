// Fuzz driver compiled against a deliberately broken core (see CMakeLists.txt).
// Exits 3 when the campaign catches the defect, 0 when it slips through.

#include <cstdio>
#include <cstdlib>

#include "paravector/fuzz.hpp"

int main(int argc, char** argv) {
  pv::fuzz::FuzzConfig config;
  config.seed = 42;
  config.trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000;
  const pv::fuzz::FuzzReport report = pv::fuzz::run(config);
  for (const auto& p : report.properties) {
    if (p.failures > 0) {
      std::printf("caught by %s (criterion %d) at trial %llu\n", p.name.c_str(), p.criterion,
                  static_cast<unsigned long long>(p.first_failure->trial));
    }
  }
  std::printf("%zu of %zu properties failing\n", report.failing_properties(),
              report.properties.size());
  return report.failing_properties() > 0 ? 3 : 0;
}
