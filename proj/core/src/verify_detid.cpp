#include "jacksf/verify.hpp"

namespace jacksf {

CheckResult verify_detid_numeric(int max_n, int max_m, int seeds) {
    CheckResult result{"determinantal identity on random rational instances"};
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
            for (int s = 0; s < seeds; ++s) {
                unsigned long seed = 1000003UL * static_cast<unsigned long>(n) +
                                     1009UL * static_cast<unsigned long>(m) +
                                     static_cast<unsigned long>(s);
                PsiInstance inst = random_psi_instance(n, m, seed);
                ++result.checks;
                if (!psi_matrix_satisfies_kk(inst))
                    result.fail("Ψ functional equation at N=" + std::to_string(n) +
                                " M=" + std::to_string(m) + " seed=" + std::to_string(seed));
                ++result.checks;
                if (!detid_check(inst))
                    result.fail("identity at N=" + std::to_string(n) + " M=" +
                                std::to_string(m) + " seed=" + std::to_string(seed));
                if (n <= 3) {
                    for (int k = 0; k <= n; ++k) {
                        ++result.checks;
                        if (detid_rhs_pairsets_layer(inst, k) !=
                            detid_rhs_symmetrized_layer(inst, k))
                            result.fail("pair-set vs symmetrized layer k=" + std::to_string(k) +
                                        " seed=" + std::to_string(seed));
                    }
                }
            }
        }
    }
    return result;
}

CheckResult verify_detid_series(int max_n, int ydeg) {
    CheckResult result{"determinantal identity as truncated series"};
    for (int n = 1; n <= max_n; ++n)
        for (int d = 1; d <= ydeg; ++d) {
            ++result.checks;
            if (!detid_check_series(n, d))
                result.fail("series form at N=" + std::to_string(n) + " D=" + std::to_string(d));
        }
    return result;
}

CheckResult verify_detid_term_counts(int max_n) {
    CheckResult result{"cancellation-sum term counts"};
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            ++result.checks;
            try {
                long long count = detid_term_count(n, k);
                if (count != detid_term_count_closed_form(n, k))
                    result.fail("N=" + std::to_string(n) + " k=" + std::to_string(k));
            } catch (const internal_error& e) {
                result.fail("N=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + e.what());
            }
        }
    return result;
}

} // namespace jacksf
