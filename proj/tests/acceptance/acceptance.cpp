// Acceptance suite: one line per criterion, exact integer equality
// throughout, wall-clock budgets asserted. Criterion 10 exercises the CLI
// binary, whose path is passed as argv[1].

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "../unit/testutil.hpp"
#include "hodgecalc/bott.hpp"
#include "hodgecalc/constructors.hpp"
#include "hodgecalc/dsl.hpp"
#include "hodgecalc/spectral.hpp"
#include "hodgecalc/toric.hpp"

using namespace hodgecalc;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::string g_cli_path;

void run_criterion(int number, const std::string& label, double budget_ms,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = Clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (elapsed_ms > budget_ms) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over budget ") +
              std::to_string(budget_ms) + " ms";
  }
  std::printf("[%s] criterion %2d: %s (%.2f ms%s%s)\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), elapsed_ms, detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

struct CommandResult {
  int exit_code = -1;
  std::string stderr_text;
  std::string stdout_text;
};

CommandResult run_cli(const std::string& args) {
  CommandResult result;
  const std::string base = "'" + g_cli_path + "' " + args;

  FILE* err_pipe = popen((base + " 2>&1 >/dev/null").c_str(), "r");
  if (!err_pipe) return result;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, err_pipe)) > 0)
    result.stderr_text.append(buffer, n);
  int status = pclose(err_pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  FILE* out_pipe = popen((base + " 2>/dev/null").c_str(), "r");
  if (!out_pipe) return result;
  while ((n = fread(buffer, 1, sizeof buffer, out_pipe)) > 0)
    result.stdout_text.append(buffer, n);
  pclose(out_pipe);
  return result;
}

bool expect_cli_error(const std::string& args, int exit_code, const std::string& kind,
                      std::string& detail) {
  const CommandResult r = run_cli(args);
  if (r.exit_code != exit_code) {
    detail = args + ": exit " + std::to_string(r.exit_code) + ", expected " +
             std::to_string(exit_code);
    return false;
  }
  if (r.stderr_text.find("\"error\":\"" + kind + "\"") == std::string::npos) {
    detail = args + ": diagnostic does not name the \"" + kind + "\" class";
    return false;
  }
  if (!r.stdout_text.empty()) {
    detail = args + ": error path wrote to the output stream";
    return false;
  }
  const size_t newlines = std::count(r.stderr_text.begin(), r.stderr_text.end(), '\n');
  if (newlines != 1) {
    detail = args + ": diagnostic is not a single line";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  run_criterion(1, "surface blown up at a point", 1.0, [](std::string& detail) {
    const HodgeGrid g = eval(parse("blowup(P(2), point, codim=2)"));
    HodgeGrid expected = projective_space(2);
    expected.h[1][1] = 2;
    if (g != expected) {
      detail = "table differs from the plane plus one (1,1) class";
      return false;
    }
    return true;
  });

  run_criterion(2, "toric equivalence sweep, plane and quadric seeds, depth 6", 5000.0,
                [](std::string& detail) {
                  long long fans = 0;
                  for (const Fan& seed : {p2_fan(), p1xp1_fan()}) {
                    const SweepResult result = oracle_equivalence_sweep(seed, 6);
                    if (!result.ok) {
                      detail = result.first_failure;
                      return false;
                    }
                    fans += result.fans_visited;
                  }
                  detail = std::to_string(fans) + " fans";
                  if (fans < 200) {
                    detail += ", expected hundreds";
                    return false;
                  }
                  return true;
                });

  run_criterion(3, "codimension-2 curve centers in the threefold fan", 1000.0,
                [](std::string& detail) {
                  const Fan p3 = p3_fan();
                  const HodgeGrid expected =
                      blow_up(projective_space(3), curve(0), 2);
                  if (expected.h[1][1] != 2 || expected.h[2][2] != 2) {
                    detail = "expected table is wrong";
                    return false;
                  }
                  const auto two_cones = cones_of_dimension(p3, 2);
                  if (two_cones.size() != 6) {
                    detail = "the threefold fan should have six 2-cones";
                    return false;
                  }
                  for (const auto& sigma : two_cones)
                    if (hodge_from_fan(stellar_subdivision(p3, sigma)) != expected) {
                      detail = "mismatch at a 2-cone";
                      return false;
                    }
                  return true;
                });

  run_criterion(4, "closed-form twisted-forms dimensions against the chase oracle", 10000.0,
                [](std::string& detail) {
                  for (int n = 1; n <= 4; ++n)
                    for (int p = 0; p <= n; ++p)
                      for (int m = -6; m <= 6; ++m)
                        for (int q = 0; q <= n; ++q) {
                          const BottQuery query{n, p, m, q};
                          if (bott_h(query) != bott_oracle(query)) {
                            detail = "mismatch at n=" + std::to_string(n) +
                                     " p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                     " q=" + std::to_string(q);
                            return false;
                          }
                        }
                  for (int n = 1; n <= 4; ++n)
                    if (const auto violation = bott_vanishing_check(n, 10)) {
                      detail = "vanishing fails at n=" + std::to_string(n) +
                               " p=" + std::to_string(violation->query.p) +
                               " m=" + std::to_string(violation->query.m) +
                               " q=" + std::to_string(violation->query.q);
                      return false;
                    }
                  return true;
                });

  run_criterion(5, "blow-up preserves the boundary rows and columns", 1000.0,
                [](std::string& detail) {
                  testutil::Rng rng(50505);
                  for (int trial = 0; trial < 200; ++trial) {
                    const int n = testutil::uniform(rng, 2, 5);
                    const int c = testutil::uniform(rng, 2, n);
                    const HodgeGrid x = testutil::random_valid_grid(rng, n);
                    const HodgeGrid z = testutil::random_valid_grid(rng, n - c);
                    const HodgeGrid g = blow_up(x, z, c);
                    for (int k = 0; k <= n; ++k)
                      if (g.h[0][k] != x.h[0][k] || g.h[n][k] != x.h[n][k] ||
                          g.h[k][0] != x.h[k][0] || g.h[k][n] != x.h[k][n]) {
                        detail = "boundary changed on trial " + std::to_string(trial);
                        return false;
                      }
                  }
                  return true;
                });

  run_criterion(6, "total dimensions add up under blow-up", 1000.0, [](std::string& detail) {
    testutil::Rng rng(60606);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = testutil::uniform(rng, 2, 5);
      const int c = testutil::uniform(rng, 2, n);
      const HodgeGrid x = testutil::random_valid_grid(rng, n);
      const HodgeGrid z = testutil::random_valid_grid(rng, n - c);
      const HodgeGrid g = blow_up(x, z, c);
      for (int l = 0; l <= 2 * n; ++l) {
        Int expected = total_hodge(x, l);
        for (int i = 1; i < c; ++i) {
          const int k = l - 2 * i;
          if (k >= 0 && k <= 2 * z.dim) expected += total_hodge(z, k);
        }
        if (total_hodge(g, l) != expected) {
          detail = "degree " + std::to_string(l) + " on trial " + std::to_string(trial);
          return false;
        }
      }
    }
    return true;
  });

  run_criterion(7, "defect of a blow-up equals the blow-up of defects", 1000.0,
                [](std::string& detail) {
                  testutil::Rng rng(70707);
                  for (int trial = 0; trial < 200; ++trial) {
                    const int n = testutil::uniform(rng, 2, 5);
                    const int c = testutil::uniform(rng, 2, n);
                    const HodgeGrid x = testutil::random_valid_grid(rng, n);
                    const HodgeGrid z = testutil::random_valid_grid(rng, n - c);

                    // consistent E1 fixtures with a random defect profile
                    std::vector<Int> bx(2 * n + 1), bz(2 * (n - c) + 1);
                    for (int l = 0; l <= 2 * n; ++l) {
                      const Int bound = total_hodge(x, l);
                      bx[l] = bound - (l > 0 && bound > 0
                                           ? testutil::uniform(rng, 0, int(bound))
                                           : 0);
                    }
                    for (int l = 0; l <= 2 * (n - c); ++l) {
                      const Int bound = total_hodge(z, l);
                      bz[l] = bound - (l > 0 && bound > 0
                                           ? testutil::uniform(rng, 0, int(bound))
                                           : 0);
                    }
                    const DeRhamDims bxd = make_de_rham(n, bx), bzd = make_de_rham(n - c, bz);
                    const DefectVector e1_direct =
                        e1_defect(blow_up(x, z, c), de_rham_blowup(bxd, bzd, c));
                    const DefectVector e1_moved =
                        e1_defect_blowup(e1_defect(x, bxd), e1_defect(z, bzd), c);
                    if (e1_direct != e1_moved) {
                      detail = "E1 mismatch on trial " + std::to_string(trial);
                      return false;
                    }
                    if (e1_direct.is_zero() !=
                        (e1_defect(x, bxd).is_zero() && e1_defect(z, bzd).is_zero())) {
                      detail = "E1 zero-iff-zero fails on trial " + std::to_string(trial);
                      return false;
                    }

                    // consistent E2 fixtures
                    std::vector<Int> hx(2 * n + 1), hz(2 * (n - c) + 1);
                    for (int l = -n; l <= n; ++l) {
                      const Int bound = anti_diagonal(x, l);
                      hx[l + n] =
                          bound - (bound > 0 ? testutil::uniform(rng, 0, int(bound)) : 0);
                    }
                    for (int l = -(n - c); l <= n - c; ++l) {
                      const Int bound = anti_diagonal(z, l);
                      hz[l + n - c] =
                          bound - (bound > 0 ? testutil::uniform(rng, 0, int(bound)) : 0);
                    }
                    const HochschildDims hxd = make_hochschild(n, hx),
                                         hzd = make_hochschild(n - c, hz);
                    const DefectVector e2_direct =
                        e2_defect(blow_up(x, z, c), hh_blowup(hxd, hzd, c));
                    const DefectVector e2_moved =
                        e2_defect_blowup(e2_defect(x, hxd), e2_defect(z, hzd), c);
                    if (e2_direct != e2_moved) {
                      detail = "E2 mismatch on trial " + std::to_string(trial);
                      return false;
                    }
                    if (e2_direct.is_zero() !=
                        (e2_defect(x, hxd).is_zero() && e2_defect(z, hzd).is_zero())) {
                      detail = "E2 zero-iff-zero fails on trial " + std::to_string(trial);
                      return false;
                    }
                  }
                  return true;
                });

  run_criterion(8, "strong-HKR reads commute with blow-up and bundles", 1000.0,
                [](std::string& detail) {
                  testutil::Rng rng(80808);
                  const long long primes[] = {0, 5, 7, 11};
                  for (int trial = 0; trial < 200; ++trial) {
                    const int n = testutil::uniform(rng, 2, 5);
                    const int c = testutil::uniform(rng, 2, n);
                    HodgeGrid x = testutil::random_valid_grid(rng, n);
                    HodgeGrid z = testutil::random_valid_grid(rng, n - c);
                    x.characteristic = primes[testutil::uniform(rng, 0, 3)];
                    z.characteristic = x.characteristic;
                    if (hh_from_grid(blow_up(x, z, c)) !=
                        hh_blowup(hh_from_grid(x), hh_from_grid(z), c)) {
                      detail = "blow-up read mismatch on trial " + std::to_string(trial);
                      return false;
                    }
                    const int rank = testutil::uniform(rng, 1, 3);
                    const HodgeGrid base = testutil::random_valid_grid(rng, testutil::uniform(rng, 0, 3));
                    if (hh_from_grid(projective_bundle(base, rank)) !=
                        hh_projbundle(hh_from_grid(base), rank)) {
                      detail = "bundle read mismatch on trial " + std::to_string(trial);
                      return false;
                    }
                  }
                  return true;
                });

  run_criterion(9, "every random expression evaluates to a valid table", 5000.0,
                [](std::string& detail) {
                  testutil::Rng rng(90909);
                  for (int trial = 0; trial < 1000; ++trial) {
                    const VarietyExpr e = testutil::random_expr(rng, 5, 5);
                    const ValidationReport report = validate(eval(e));
                    if (!report.ok()) {
                      detail = "invalid table from " + to_string(e);
                      return false;
                    }
                  }
                  return true;
                });

  run_criterion(10, "parser round trip and the documented error contract", 1000.0,
                [](std::string& detail) {
                  testutil::Rng rng(101010);
                  for (int trial = 0; trial < 1000; ++trial) {
                    const VarietyExpr e = testutil::random_expr(rng, 5, 6);
                    if (parse(to_string(e)) != e) {
                      detail = "round trip broke on " + to_string(e);
                      return false;
                    }
                  }
                  if (g_cli_path.empty()) {
                    detail = "CLI path missing (pass it as argv[1])";
                    return false;
                  }
                  return expect_cli_error("eval 'P(2) @'", 1, "lexical", detail) &&
                         expect_cli_error("eval 'prod(P(2)'", 1, "syntax", detail) &&
                         expect_cli_error("eval 'blowup(P(2), point, codim=1)'", 1, "semantic",
                                          detail) &&
                         expect_cli_error("hh 'P(5)' --char 2", 2, "hypothesis", detail) &&
                         expect_cli_error("defect e1 --grid /nonexistent --data /nonexistent",
                                          1, "io", detail);
                });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
