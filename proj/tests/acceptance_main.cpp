// Acceptance suite: one pass/fail line per criterion, all identities exact.
// Run with no arguments for the full suite or with --criterion N for one.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <vector>

#include "jacksf/verify.hpp"

using namespace jacksf;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::function<std::vector<CheckResult>()> run;
};

bool run_criterion(const Criterion& criterion) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results = criterion.run();
    auto seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - t0)
            .count();
    long checks = 0;
    for (const auto& r : results)
        checks += r.checks;
    bool ok = all_pass(results);
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number << ": "
              << criterion.description << " (" << checks << " checks, " << seconds << " s)\n";
    if (!ok)
        for (const auto& r : results)
            if (!r.pass)
                std::cout << "       " << r.name << ": " << r.counterexample << "\n";
    return ok;
}

std::vector<CheckResult> criterion_eigen() {
    return {verify_eigen_A<AlphaRat>(8, 4)};
}

std::vector<CheckResult> criterion_commute() {
    return {verify_commute<AlphaRat>(8, 4)};
}

std::vector<CheckResult> criterion_hs() {
    return {verify_hs<AlphaRat>(8)};
}

std::vector<CheckResult> criterion_jack() {
    std::vector<CheckResult> results;
    results.push_back(verify_jack_orthogonality<AlphaRat>(8));
    CheckResult frozen{"P_(2) expansion reproduced"};
    frozen.checks = 1;
    SymFun expected(Basis::m);
    expected.add_term(Partition{2}, AlphaRat::one());
    expected.add_term(Partition{1, 1}, AlphaRat(AlphaPoly(Rat(2)), AlphaPoly({Rat(1), Rat(1)})));
    if (!(jack_P<AlphaRat>(Partition{2}).m_form == expected))
        frozen.fail("P_(2) != m_(2) + (2/(α+1))m_(1,1)");
    results.push_back(frozen);
    return results;
}

std::vector<CheckResult> criterion_pieri_steps() {
    std::vector<CheckResult> results;
    results.push_back(verify_pieri<AlphaRat>(7));
    results.push_back(verify_bc_commutators<AlphaRat>(7, 5));
    results.push_back(verify_steps<AlphaRat>(6));
    CheckResult worked{"worked step values"};
    worked.checks = 2;
    auto down = step_down<AlphaRat>(Partition{1}, 1);
    if (!(down.first == Partition() && down.second == AlphaRat::one()))
        worked.fail("step_down((1),1) != 1");
    auto up = step_up<AlphaRat>(Partition{1}, 1);
    if (!(up.first == Partition() && up.second == AlphaRat::one() / AlphaRat::alpha()))
        worked.fail("step_up((1),1) != 1/α");
    results.push_back(worked);
    return results;
}

std::vector<CheckResult> criterion_finite_n() {
    return {verify_eigen_S_N<AlphaRat>(6, 3), verify_stability<AlphaRat>(6, 3)};
}

std::vector<CheckResult> criterion_detid() {
    return {verify_detid_numeric(4, 4, 100), verify_detid_series(3, 4),
            verify_detid_term_counts(6)};
}

std::vector<CheckResult> criterion_kernel() {
    return {verify_kernel<AlphaRat>(6)};
}

std::vector<CheckResult> criterion_heisenberg() {
    return {verify_heisenberg<AlphaRat>(6, 4)};
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[i + 1]);
    }

    std::vector<Criterion> criteria = {
        {1, "A^(k)P_λ = eigenvalue·P_λ via the Pochhammer expansion, |λ| ≤ 8, k ≤ 4",
         criterion_eigen},
        {2, "[A^(j),A^(k)] = 0 on graded components of weight ≤ 8, j,k ≤ 4", criterion_commute},
        {3, "-A^(1) = H^(1) and A^(1)(A^(1)+1) - 2A^(2) = H^(2) on weight ≤ 8", criterion_hs},
        {4, "Jack orthogonality to weight 8 and the frozen P_(2) expansion", criterion_jack},
        {5, "Pieri rules (≤7), B/C commutator vs closed forms (≤7), step evaluations (≤6)",
         criterion_pieri_steps},
        {6, "S_N(u) eigen-equations and A_N(u) stability, |λ| ≤ 6, N ≤ 3", criterion_finite_n},
        {7, "determinantal identity: 100 numeric instances per (N≤4,M≤4), series N≤3 D≤4, "
            "term counts N≤6",
         criterion_detid},
        {8, "reproducing-kernel lemma for all p_λ, |λ| ≤ 6", criterion_kernel},
        {9, "[a_m,a_n] = mα·δ_{m+n,0} on weight ≤ 6, |m|,|n| ≤ 4", criterion_heisenberg},
    };

    bool all_ok = true;
    for (const Criterion& criterion : criteria) {
        if (only != 0 && criterion.number != only)
            continue;
        all_ok = run_criterion(criterion) && all_ok;
    }
    return all_ok ? 0 : 1;
}
