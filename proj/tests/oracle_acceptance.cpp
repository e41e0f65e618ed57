// Oracle band: the graph-cut ratio oracle agrees with the main solver within 3%.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "cheeger/koch.hpp"
#include "cheeger/solver.hpp"
#include "cheeger/tv_oracle.hpp"
#include "support/fixtures.hpp"

using namespace cheeger;

int main() {
  struct Case {
    const char* fixture;
    double reference;
  };
  const Case cases[] = {
      {"square", solve(test_support::load_fixture("square")).h},
      {"disk256", solve(test_support::load_fixture("disk256")).h},
      {"k2", closed_form_k2().h2},
  };
  bool ok = true;
  for (const Case& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const OracleResult res = oracle_h(test_support::load_fixture(c.fixture), 256);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double rel = std::abs(res.h_approx - c.reference) / c.reference;
    const bool pass = rel <= 0.03 && secs < 60.0;
    ok &= pass;
    std::printf("%s criterion 10 oracle band %s: h_approx %.6f vs %.6f (%.2f%%, %d cuts) [%.2f s]\n",
                pass ? "PASS" : "FAIL", c.fixture, res.h_approx, c.reference, 100.0 * rel, res.iterations, secs);
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
