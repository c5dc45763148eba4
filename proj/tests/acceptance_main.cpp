// Acceptance gate: one pass/fail line per criterion, exact arithmetic
// throughout, pinned bounds. Exit status is the number of failed criteria.

#include "cmgr/suites.hpp"
#include "cmgr/symfun.hpp"

#include <chrono>
#include <iostream>

using namespace cmgr;
using namespace cmgr::suites;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "A" << idx << " " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    std::cout.flush();
    if (!ok) ++failures;
}

void run_cases(int idx, const std::string& what, std::vector<Case> cases) {
    SuiteReport r = execute("acceptance", 0, 0, 0, std::move(cases));
    std::string detail = std::to_string(r.passed) + "/" + std::to_string(r.run) + " cases";
    if (r.failed > 0) detail += "; first witness: " + r.witnesses[0].dump();
    report(idx, what, r.failed == 0, detail);
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();

    // 1. rank([X,Y] + I) = 1 for every fixed point, n = 1..7
    run_cases(1, "fixed-point rank-one validity, all partitions n <= 7", fixed_point_cases(7));

    // 2. eigenvalues of YX at the fixed point of lambda = contents of the transpose, n <= 7
    run_cases(2, "residue of Y X equals transposed contents, n <= 7", residue_cases(7));

    // 3. tau at fixed points is proportional to the Schur polynomial, n <= 6
    run_cases(3, "tau of fixed points proportional to schur_in_t, n <= 6", tau_schur_cases(6));

    // 4. bispectral operator of a fixed point is the Euler product over
    //    transposed-partition exponents, n <= 6
    run_cases(4, "fixed-point operator factors as euler product (transposed exponents), n <= 6",
              baker_operator_cases(6));

    // 5. monic wronskian of the solution space equals the monic
    //    characteristic polynomial of X: fixed points n <= 6, 100 samples per n <= 5
    {
        auto cases = wronskian_fixed_cases(6);
        auto sampled = wronskian_sample_cases(5, 42, 100);
        cases.insert(cases.end(), sampled.begin(), sampled.end());
        run_cases(5, "wronskian of solution space = monic det(xI - X), fixed n <= 6 + 100 samples per n <= 5",
                  std::move(cases));
    }

    // 6. eta of sampled cells lands in the transposed Schubert cell and is
    //    canonical of degree n: 100 samples per partition, n <= 5
    run_cases(6, "eta lands in the transposed cell, canonical of degree n, 100 samples per cell n <= 5",
              eta_cell_cases(5, 42, 100));

    // 7. star involution transposes the cell label, n <= 6
    run_cases(7, "classify(star(fixed point)) is the transposed partition, n <= 6",
              involution_cases(6, 42));

    // 8. factorization along two-cluster Y spectra: blocks validate, supports
    //    and classifications recompose; 50 samples per n <= 5
    run_cases(8, "factorization into rank-one blocks recomposing support and cells, 50 samples per n <= 5",
              factorization_cases(5, 42, 50));

    // 9. tau bridge: matrix tau proportional to pairing tau of the solution
    //    space, m <= 3, fixed points and 25 samples per n <= 4
    run_cases(9, "tau_cm proportional to tau_qe of the solution space, fixed + 25 samples per n <= 4",
              tau_bridge_cases(4, 42, 25));

    // 10. dimension identities: induced-module dimension sum and the
    //     three-way intersection numbers, every multipartition of n <= 6
    run_cases(10, "dimension identities and three-oracle agreement, all multipartitions n <= 6",
              dimension_identity_cases(6));

    // 11. slice span annihilates the solution space exactly, fixed points n <= 5
    run_cases(11, "slice span at depth 2n annihilates the solution space, n <= 5", cperp_cases(5));

    // 12. determinism and wall time of the full verification run
    {
        SuiteReport a = run_suite("all", 5, 42, 25);
        SuiteReport b = run_suite("all", 5, 42, 25);
        bool identical = a.to_json().dump() == b.to_json().dump();
        bool green = a.failed == 0;
        auto elapsed =
            std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0);
        bool in_time = elapsed.count() < 600;
        report(12, "verify --suite all --nmax 5 --seed 42 is byte-stable, green, under 10 minutes",
               identical && in_time && green,
               std::string("identical=") + (identical ? "yes" : "no") + ", failed=" +
                   std::to_string(a.failed) + ", total elapsed " + std::to_string(elapsed.count()) + "s");
    }

    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) + " criteria FAILED\n");
    return failures;
}
