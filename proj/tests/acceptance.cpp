// Acceptance suite: every criterion prints exactly one PASS/FAIL line with
// its runtime; the process exits nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypercycle/brute_oracle.hpp"
#include "hypercycle/charpoly.hpp"
#include "hypercycle/multiplicity.hpp"
#include "hypercycle/path_spectra.hpp"
#include "hypercycle/trace_engine.hpp"

using namespace hypercycle;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& name, double time_limit_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && time_limit_seconds > 0 && seconds > time_limit_seconds) {
        ok = false;
        detail = "runtime " + std::to_string(seconds) + "s exceeds limit " +
                 std::to_string(time_limit_seconds) + "s";
    }
    if (!ok) ++g_failures;
    std::printf("%s  %d. %s [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(), seconds,
                detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
}

bool same_vector(const MultiplicityVector& a, const MultiplicityVector& b, std::string& detail) {
    if (a.m0 == b.m0 && a.m == b.m) return true;
    std::ostringstream out;
    out << "r=" << a.r << " solver (m0=" << a.m0.get_str();
    for (const Int& x : a.m) out << "," << x.get_str();
    out << ") vs closed form (m0=" << b.m0.get_str();
    for (const Int& x : b.m) out << "," << x.get_str();
    out << ")";
    detail = out.str();
    return false;
}

} // namespace

int main() {
    run_criterion(1, "closed-form multiplicities for l = 5, 6 reproduce the solver, r = 3..12", 5.0,
                  [](std::string& detail) {
                      for (unsigned r = 3; r <= 12; ++r) {
                          if (!same_vector(solve_multiplicities(r, 5),
                                           multiplicities_l5_closed_form(r), detail))
                              return false;
                          if (!same_vector(solve_multiplicities(r, 6),
                                           multiplicities_l6_closed_form(r), detail))
                              return false;
                      }
                      return true;
                  });

    run_criterion(2, "brute-force enumeration equals the trace formulas at (3,3), orders 1..9",
                  300.0, [](std::string& detail) {
                      for (unsigned order = 1; order <= 9; ++order) {
                          const Rat brute = brute_trace(3, 3, order);
                          const Int formula = trace_any(3, 3, order);
                          if (brute != Rat(formula)) {
                              detail = "order " + std::to_string(order) + ": brute " +
                                       brute.get_str() + " vs formula " + formula.get_str();
                              return false;
                          }
                      }
                      if (brute_trace(3, 3, 9) != Rat(1836)) {
                          detail = "cycle-term order 9 does not equal 1836";
                          return false;
                      }
                      return true;
                  });

    run_criterion(3, "matrix identities: S = H*B^-1, Det(S), B*B^-1 = I", 10.0,
                  [](std::string& detail) {
                      for (unsigned l = 3; l <= 8; ++l) {
                          const IdentityReport rep = verify_identities(l);
                          if (!rep.s_equals_h_times_b_inverse || !rep.det_s_matches_closed_form) {
                              detail = "l=" + std::to_string(l) + ": " + rep.detail;
                              return false;
                          }
                      }
                      for (unsigned l = 3; l <= 10; ++l)
                          if (!(b_matrix(l) * b_inverse_matrix(l) == ExactMatrix::identity(l))) {
                              detail = "B*B^-1 != I at l=" + std::to_string(l);
                              return false;
                          }
                      return true;
                  });

    run_criterion(4, "Laplacian-minor determinant closed forms, 100 random draws per kind", 30.0,
                  [](std::string& detail) {
                      std::mt19937_64 rng(0x5eed5eed);
                      std::uniform_int_distribution<unsigned> pick_r(3, 5), pick_s(1, 5),
                          pick_l(3, 5), pick_a(1, 5);
                      for (int i = 0; i < 100; ++i) {
                          const unsigned r = pick_r(rng);
                          std::vector<unsigned> a(pick_s(rng));
                          for (unsigned& w : a) w = pick_a(rng);
                          if (!minor_check_path(r, a)) {
                              detail = "path draw " + std::to_string(i);
                              return false;
                          }
                      }
                      for (int i = 0; i < 100; ++i) {
                          const unsigned r = pick_r(rng);
                          std::vector<unsigned> a(pick_l(rng));
                          for (unsigned& w : a) w = pick_a(rng);
                          if (!minor_check_cycle(r, a)) {
                              detail = "cycle draw " + std::to_string(i);
                              return false;
                          }
                      }
                      for (int i = 0; i < 100; ++i) {
                          if (!minor_check_uniform_cycle(pick_r(rng), pick_l(rng), pick_a(rng))) {
                              detail = "uniform cycle draw " + std::to_string(i);
                              return false;
                          }
                      }
                      return true;
                  });

    run_criterion(
        5, "moment closure: T = r S m and factored power sums reproduce every trace", 30.0,
        [](std::string& detail) {
            for (unsigned r = 3; r <= 6; ++r)
                for (unsigned l = 3; l <= 8; ++l) {
                    const MultiplicityVector mv = solve_multiplicities(r, l);
                    const ExactMatrix s = s_matrix(l);
                    const TraceVector tv = trace_vector(r, l);
                    const FactoredCharPoly f = assemble(r, l);
                    for (unsigned d = 1; d <= l; ++d) {
                        Rat lhs(0);
                        for (unsigned j = 1; j <= l; ++j)
                            lhs += s.at(d - 1, j - 1) * Rat(mv.m[j - 1]);
                        if (Rat(r) * lhs != Rat(tv.entries[d - 1])) {
                            detail = "T != r S m at r=" + std::to_string(r) +
                                     " l=" + std::to_string(l) + " d=" + std::to_string(d);
                            return false;
                        }
                        if (factored_power_sum(f, d) != tv.entries[d - 1]) {
                            detail = "power sum mismatch at r=" + std::to_string(r) +
                                     " l=" + std::to_string(l) + " d=" + std::to_string(d);
                            return false;
                        }
                    }
                }
            return true;
        });

    run_criterion(6, "degree accounting and the r = 3 vanishing multiplicity", 30.0,
                  [](std::string& detail) {
                      for (unsigned r = 3; r <= 6; ++r)
                          for (unsigned l = 3; l <= 8; ++l) {
                              const Int expected =
                                  Int(l) * int_pow(r - 1, static_cast<unsigned long>(l) * (r - 1));
                              if (assemble(r, l).total_degree() != expected) {
                                  detail = "degree mismatch at r=" + std::to_string(r) +
                                           " l=" + std::to_string(l);
                                  return false;
                              }
                              if (r == 3 && solve_multiplicities(r, l).m[l - 1] != 0) {
                                  detail = "m_l != 0 at r=3, l=" + std::to_string(l);
                                  return false;
                              }
                          }
                      return true;
                  });

    run_criterion(7, "spectrum membership at tol 1e-9, r in {3,4,5}, l in 3..7", 60.0,
                  [](std::string& detail) {
                      for (unsigned r : {3u, 4u, 5u})
                          for (unsigned l = 3; l <= 7; ++l) {
                              const SpectrumCheckReport rep =
                                  numeric_spectrum_check(assemble(r, l), 1e-9);
                              if (!rep.pass) {
                                  detail = "r=" + std::to_string(r) + " l=" + std::to_string(l) +
                                           ": " + rep.detail;
                                  return false;
                              }
                          }
                      return true;
                  });

    run_criterion(8, "numeric closed form of S^-1 at tol 1e-6, l in {3,4,5}", 60.0,
                  [](std::string& detail) {
                      for (unsigned l : {3u, 4u, 5u})
                          if (!s_inverse_closed_form_check(l, 1e-6)) {
                              detail = "l=" + std::to_string(l);
                              return false;
                          }
                      return true;
                  });

    if (g_failures > 0) {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
