// Acceptance suite: runs every top-level claim of the engine at full scale
// and prints one pass/fail line per criterion. Exit code = number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "hhq/bar_complex.hpp"
#include "hhq/hochschild.hpp"
#include "hhq/resolution.hpp"
#include "hhq/yoneda.hpp"

using namespace hhq;

namespace {

const std::vector<FieldSpec> kFields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                        FieldSpec::prime(3), FieldSpec::prime(5)};

struct Harness {
    int failures = 0;

    void run(int number, const std::string& what, const std::function<bool(std::string&)>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " - " << what
                  << " (" << ms << " ms)";
        if (!ok && !detail.empty()) std::cout << "\n    " << detail;
        std::cout << std::endl;
        if (!ok) ++failures;
    }
};

bool all_reports(std::string& detail, const std::vector<CheckReport>& reps) {
    for (const auto& rep : reps)
        if (!rep.ok) {
            detail = rep.failures.empty() ? "failed" : rep.failures.front();
            return false;
        }
    return true;
}

}  // namespace

int main() {
    Harness h;

    h.run(1, "dim A_T = 16(2T+1) for T = 0..4 over Q, F2, F3, F5", [](std::string& detail) {
        for (int T = 0; T <= 4; ++T)
            for (const auto& f : kFields)
                if (Algebra(T, f).dim() != 16 * (2 * T + 1)) {
                    detail = "wrong dimension at T=" + std::to_string(T) + " over " + f.str();
                    return false;
                }
        return true;
    });

    h.run(2, "d^n d^{n+1} = 0 and radical minimality for T <= 3, n <= 11, char in {0,2,3,5}",
          [](std::string& detail) {
              std::vector<CheckReport> reps;
              for (int T = 0; T <= 3; ++T) {
                  for (const auto& f : kFields) reps.push_back(verify_complex(Algebra(T, f), 12));
                  reps.push_back(verify_minimality(T, 12));
              }
              return all_reports(detail, reps);
          });

    h.run(3, "induced right complex equals the factorization differential and is exact to degree 8, T <= 2",
          [](std::string& detail) {
              for (int T = 0; T <= 2; ++T)
                  for (const auto& f : kFields) {
                      Algebra A(T, f);
                      for (int n = 1; n <= 8; ++n) {
                          auto cmp = induced_right_complex(A, n);
                          if (!cmp.matches) {
                              detail = "entry mismatch at T=" + std::to_string(T) +
                                       ", n=" + std::to_string(n);
                              return false;
                          }
                      }
                      auto rep = verify_right_resolution(A, 9);
                      if (!rep.ok) {
                          detail = rep.failures.front();
                          return false;
                      }
                  }
              return true;
          });

    h.run(4, "degree-n generators for T = 0 are homogeneous of length n up to degree 10",
          [](std::string& detail) {
              if (!generators_linear(0, 10)) {
                  detail = "nonlinear generator found";
                  return false;
              }
              return true;
          });

    h.run(5, "computed (im, ker, hh) match the closed tables for T <= 3, n <= 11, both branches",
          [](std::string& detail) {
              std::vector<std::pair<int, FieldSpec>> cells;
              for (int T = 0; T <= 3; ++T) cells.emplace_back(T, FieldSpec::rationals());
              cells.emplace_back(1, FieldSpec::prime(3));  // 3 | 2T+1
              cells.emplace_back(2, FieldSpec::prime(5));  // 5 | 2T+1
              cells.emplace_back(0, FieldSpec::prime(3));
              cells.emplace_back(2, FieldSpec::prime(3));
              for (const auto& [T, f] : cells) {
                  Algebra A(T, f);
                  CochainComplex cx(A);
                  auto rep = verify_dimension_formulas(cx, 11);
                  if (!rep.ok) {
                      detail = rep.failures.front();
                      return false;
                  }
              }
              return true;
          });

    h.run(6, "catalogued image/kernel/cohomology bases verify for m = 0, 1 in every residue",
          [](std::string& detail) {
              std::vector<std::pair<int, FieldSpec>> cells = {{0, FieldSpec::rationals()},
                                                              {1, FieldSpec::rationals()},
                                                              {1, FieldSpec::prime(3)},
                                                              {2, FieldSpec::rationals()},
                                                              {2, FieldSpec::prime(5)},
                                                              {2, FieldSpec::prime(3)}};
              for (const auto& [T, f] : cells) {
                  Algebra A(T, f);
                  CochainComplex cx(A);
                  for (int n = 0; n <= 8; ++n) {
                      auto rep = verify_reference_bases(cx, n);
                      if (!rep.ok) {
                          detail = rep.failures.front();
                          return false;
                      }
                  }
              }
              return true;
          });

    h.run(7, "centre: dimension 2T+1 with table K[X,Y]/(X^{T+1}, XY, Y^{T+1}); HH^0 matches, T <= 3",
          [](std::string& detail) {
              std::vector<CheckReport> reps;
              for (int T = 0; T <= 3; ++T)
                  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(3)})
                      reps.push_back(verify_center_correspondence(Algebra(T, f)));
              return all_reports(detail, reps);
          });

    h.run(8, "ring of the degree-4 classes: liftings (l <= 7), product formula (w <= 4), six relations, counts 4w+1, powers nonzero",
          [](std::string& detail) {
              Algebra A(0, FieldSpec::rationals());
              CochainComplex cx(A);
              auto lift = verify_shift_liftings(A, 7);
              auto ring = verify_ring_presentation(A, cx, 4);
              return all_reports(detail, {lift, ring});
          });

    h.run(9, "squares of the degree-1 and degree-2 basis classes are coboundaries (T = 0)",
          [](std::string& detail) {
              std::vector<CheckReport> reps;
              for (const auto& f :
                   {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5)}) {
                  Algebra A(0, f);
                  CochainComplex cx(A);
                  reps.push_back(verify_nilpotent_part(A, cx));
              }
              return all_reports(detail, reps);
          });

    h.run(10, "reduced bar complex agrees with the resolution for (T=0, n<=4), (T=1, n<=2) over Q, F3",
          [](std::string& detail) {
              for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(3)})
                  for (int T = 0; T <= 1; ++T) {
                      Algebra A(T, f);
                      CochainComplex cx(A);
                      const int n_max = T == 0 ? 4 : 2;
                      for (int n = 0; n <= n_max; ++n)
                          if (bar_hh_dimension(A, n) != cx.dimensions(n).hh) {
                              detail = "disagreement at T=" + std::to_string(T) +
                                       ", n=" + std::to_string(n) + " over " + f.str();
                              return false;
                          }
                  }
              return true;
          });

    std::cout << (h.failures == 0 ? "all criteria passed" : "FAILURES: " + std::to_string(h.failures))
              << std::endl;
    return h.failures;
}
