#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "jacksf/finite_n.hpp"
#include "jacksf/kernel.hpp"
#include "jacksf/operators.hpp"

namespace jacksf {

// Outcome of one named verification, with the number of individual identity
// checks it ran and the first counterexample when it failed.
struct CheckResult {
    std::string name;
    bool pass = true;
    long checks = 0;
    std::string counterexample;

    void fail(const std::string& detail) {
        if (pass) {
            pass = false;
            counterexample = detail;
        }
    }
};

inline bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return true;
}

// Matrix of a degree-preserving operator on the p basis of one graded
// component; column c holds the image of the c-th basis element.
template <CoeffField F, class Op>
std::vector<std::vector<F>> graded_matrix(int weight, Op&& op) {
    std::vector<Partition> basis = enumerate_partitions(weight);
    const size_t n = basis.size();
    std::vector<std::vector<F>> matrix(n, std::vector<F>(n, F::zero()));
    for (size_t c = 0; c < n; ++c) {
        SymFunT<F> image = op(SymFunT<F>::unit(basis[c], Basis::p));
        for (const auto& [la, v] : image.terms()) {
            if (la.weight() != weight)
                throw internal_error("graded matrix of a non-degree-preserving operator");
            size_t r = 0;
            while (!(basis[r] == la))
                ++r;
            matrix[r][c] = v;
        }
    }
    return matrix;
}

template <CoeffField F>
std::vector<std::vector<F>> matrix_product(const std::vector<std::vector<F>>& a,
                                           const std::vector<std::vector<F>>& b) {
    const size_t n = a.size();
    std::vector<std::vector<F>> out(n, std::vector<F>(n, F::zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero())
                    out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    return out;
}

// [A^(j), A^(k)] = 0 on every graded component of weight ≤ max_weight.
template <CoeffField F>
CheckResult verify_commute(int max_weight, int max_k) {
    CheckResult result{"commuting hierarchy [A^(j),A^(k)] = 0"};
    for (int w = 1; w <= max_weight; ++w) {
        std::vector<std::vector<std::vector<F>>> mats;
        for (int k = 1; k <= max_k; ++k)
            mats.push_back(graded_matrix<F>(w, [&](const SymFunT<F>& f) { return apply_A(k, f); }));
        for (int j = 0; j < max_k; ++j)
            for (int k = j + 1; k < max_k; ++k) {
                ++result.checks;
                if (!(matrix_product(mats[static_cast<size_t>(j)], mats[static_cast<size_t>(k)]) ==
                      matrix_product(mats[static_cast<size_t>(k)], mats[static_cast<size_t>(j)]))) {
                    std::ostringstream detail;
                    detail << "[A^(" << j + 1 << "),A^(" << k + 1 << ")] != 0 at weight " << w;
                    result.fail(detail.str());
                }
            }
    }
    return result;
}

// apply_A(k, P_λ) = eigenvalue_A_k(λ,k)·P_λ, including the vanishing cases
// ℓ(λ) < k.
template <CoeffField F>
CheckResult verify_eigen_A(int max_weight, int max_k) {
    CheckResult result{"A^(k) eigen-equations on Jack functions"};
    for (int w = 0; w <= max_weight; ++w) {
        for (const auto& jack : jack_weight_component<F>(w)) {
            for (int k = 1; k <= max_k; ++k) {
                ++result.checks;
                SymFunT<F> lhs = apply_A(k, jack.p_form);
                SymFunT<F> rhs = eigenvalue_A_k<F>(jack.label, k) * jack.p_form;
                if (!(lhs == rhs))
                    result.fail("A^(" + std::to_string(k) + ")P_" + jack.label.to_string());
            }
        }
    }
    return result;
}

// S_N(u)P_λ against the finite-N eigenvalue product.
template <CoeffField F>
CheckResult verify_eigen_S_N(int max_weight, int max_n) {
    CheckResult result{"S_N(u) eigen-equations"};
    for (int n = 1; n <= max_n; ++n)
        for (int w = 0; w <= max_weight; ++w)
            for (const Partition& la : enumerate_partitions(w)) {
                if (la.length() > n)
                    continue;
                ++result.checks;
                if (!check_eigen_S_N<F>(la, n))
                    result.fail("S_" + std::to_string(n) + " on P_" + la.to_string());
            }
    return result;
}

// ρ_N A_N(u) = A_{N-1}(u) ρ_N on restrictions of the p basis and of Jacks.
template <CoeffField F>
CheckResult verify_stability(int max_weight, int max_n) {
    CheckResult result{"stability of A_N(u) under x_N = 0"};
    for (int n = 1; n <= max_n; ++n)
        for (int w = 0; w <= max_weight; ++w)
            for (const Partition& la : enumerate_partitions(w)) {
                ++result.checks;
                if (!check_stability_A_N<F>(SymFunT<F>::unit(la, Basis::p), n))
                    result.fail("p_" + la.to_string() + " at N=" + std::to_string(n));
                if (la.length() <= n) {
                    ++result.checks;
                    if (!check_stability_A_N<F>(jack_P<F>(la).m_form, n))
                        result.fail("P_" + la.to_string() + " at N=" + std::to_string(n));
                }
            }
    return result;
}

// -A^(1) = H^(1) and A^(1)(A^(1)+1) - 2A^(2) = H^(2) on the p basis.
template <CoeffField F>
CheckResult verify_hs(int max_weight) {
    CheckResult result{"H^(1), H^(2) against A^(1), A^(2)"};
    for (int w = 0; w <= max_weight; ++w) {
        for (const Partition& la : enumerate_partitions(w)) {
            SymFunT<F> f = SymFunT<F>::unit(la, Basis::p);
            ++result.checks;
            if (!(-apply_A(1, f) == apply_H1(f)))
                result.fail("HS1 on p_" + la.to_string());
            ++result.checks;
            SymFunT<F> a1 = apply_A(1, f);
            SymFunT<F> lhs = apply_A(1, a1) + a1 - F::from_int(2) * apply_A(2, f);
            if (!(lhs == apply_H2(f)))
                result.fail("HS2 on p_" + la.to_string());
        }
    }
    return result;
}

// Jack structure: pairwise orthogonality within each weight component.
template <CoeffField F>
CheckResult verify_jack_orthogonality(int max_weight) {
    CheckResult result{"Jack orthogonality"};
    for (int w = 0; w <= max_weight; ++w) {
        const auto& component = jack_weight_component<F>(w);
        for (size_t a = 0; a < component.size(); ++a)
            for (size_t b = a + 1; b < component.size(); ++b) {
                ++result.checks;
                if (!inner_product(component[a].p_form, component[b].p_form).is_zero())
                    result.fail("<P_" + component[a].label.to_string() + ",P_" +
                                component[b].label.to_string() + "> != 0");
            }
    }
    return result;
}

// p₁P_μ and ∂P_λ/∂p₁ against the Pieri coefficient products.
template <CoeffField F>
CheckResult verify_pieri(int max_weight) {
    CheckResult result{"Pieri expansions of p₁·P and ∂P/∂p₁"};
    for (int w = 0; w <= max_weight; ++w) {
        for (const auto& jack : jack_weight_component<F>(w)) {
            const Partition& mu = jack.label;
            if (w + 1 <= max_weight) {
                SymFunT<F> lhs = mul(SymFunT<F>::unit(Partition{1}, Basis::p), jack.p_form);
                SymFunT<F> rhs(Basis::p);
                for (int i = 1; i <= mu.length() + 1; ++i) {
                    if (i > 1 && mu.part(i - 1) <= mu.part(i))
                        continue;
                    rhs += pieri_up_coeff<F>(mu, i) * jack_P<F>(mu.with_incremented_part(i)).p_form;
                }
                ++result.checks;
                if (!(lhs == rhs))
                    result.fail("p₁P_" + mu.to_string());
            }
            if (w >= 1) {
                SymFunT<F> lhs =
                    (F::one() / F::alpha()) *
                    adjoint_apply(SymFunT<F>::unit(Partition{1}, Basis::p), jack.p_form);
                SymFunT<F> rhs(Basis::p);
                for (int i = 1; i <= mu.length(); ++i) {
                    if (i < mu.length() && mu.part(i) == mu.part(i + 1))
                        continue;
                    rhs += pieri_down_coeff<F>(mu, i) * jack_P<F>(mu.with_decremented_part(i)).p_form;
                }
                ++result.checks;
                if (!(lhs == rhs))
                    result.fail("∂P_" + mu.to_string() + "/∂p₁");
            }
        }
    }
    return result;
}

// Commutator definitions against the closed forms:
// [p₁·, A^(k)] = αB^(k) and [A^(k), ∂/∂p₁] = C^(k).
template <CoeffField F>
CheckResult verify_bc_commutators(int max_weight, int max_k) {
    CheckResult result{"B^(k), C^(k) commutator definitions"};
    SymFunT<F> p1 = SymFunT<F>::unit(Partition{1}, Basis::p);
    for (int w = 0; w <= max_weight; ++w) {
        for (const Partition& la : enumerate_partitions(w)) {
            SymFunT<F> f = SymFunT<F>::unit(la, Basis::p);
            for (int k = 1; k <= max_k; ++k) {
                SymFunT<F> comm_b = mul(p1, apply_A(k, f)) - apply_A(k, mul(p1, f));
                ++result.checks;
                if (!(comm_b == F::alpha() * apply_B(k, f)))
                    result.fail("svbu at p_" + la.to_string() + ", k=" + std::to_string(k));
                auto dp1 = [&](const SymFunT<F>& g) {
                    return (F::one() / F::alpha()) * scaled_power_derivation(1, to_p_basis(g));
                };
                ++result.checks;
                if (!(apply_A(k, dp1(f)) - dp1(apply_A(k, f)) == apply_C(k, f)))
                    result.fail("svcu at p_" + la.to_string() + ", k=" + std::to_string(k));
            }
        }
    }
    return result;
}

// ⟨B^(k)f, g⟩ = ⟨f, C^(k)g⟩.
template <CoeffField F>
CheckResult verify_bc_adjoint(int max_weight, int max_k) {
    CheckResult result{"adjoint pairing of B^(k) and C^(k)"};
    for (int w = 0; w + 1 <= max_weight; ++w)
        for (const Partition& la : enumerate_partitions(w))
            for (const Partition& mu : enumerate_partitions(w + 1))
                for (int k = 1; k <= max_k; ++k) {
                    SymFunT<F> f = SymFunT<F>::unit(la, Basis::p);
                    SymFunT<F> g = SymFunT<F>::unit(mu, Basis::p);
                    ++result.checks;
                    if (!(inner_product(apply_B(k, f), g) == inner_product(f, apply_C(k, g))))
                        result.fail("pairing at p_" + la.to_string() + ", p_" + mu.to_string() +
                                    ", k=" + std::to_string(k));
                }
    return result;
}

// B(u)P_μ = Σ_λ B_λμ(u)P_λ and C(u)P_λ = Σ_μ C_μλ(u)P_μ, compared through
// the Pochhammer coefficients of the matrix elements.
template <CoeffField F>
CheckResult verify_matrix_elements(int max_weight) {
    CheckResult result{"B(u), C(u) matrix elements"};
    for (int w = 0; w <= max_weight; ++w) {
        for (const auto& jack : jack_weight_component<F>(w)) {
            const Partition& mu = jack.label;
            // up moves: collect Σ_λ expansions of B_λμ(u) per Pochhammer depth
            int depth = w + 1; // B^(k)P_μ vanishes beyond k = |μ|+1
            std::vector<SymFunT<F>> rhs(static_cast<size_t>(depth) + 1, SymFunT<F>(Basis::p));
            for (int i = 1; i <= mu.length() + 1; ++i) {
                if (i > 1 && mu.part(i - 1) <= mu.part(i))
                    continue;
                Partition la = mu.with_incremented_part(i);
                UPolyRat<F> element = matrix_element_B<F>(la, mu);
                std::vector<F> coeffs = expand_pochhammer(element, la.length());
                for (size_t k = 0; k < coeffs.size(); ++k) {
                    if (coeffs[k].is_zero())
                        continue;
                    if (k > static_cast<size_t>(depth))
                        throw internal_error("matrix element deeper than expected");
                    rhs[k] += coeffs[k] * jack_P<F>(la).p_form;
                }
            }
            for (int k = 1; k <= depth; ++k) {
                ++result.checks;
                if (!(apply_B(k, jack.p_form) == rhs[static_cast<size_t>(k)]))
                    result.fail("B^(" + std::to_string(k) + ")P_" + mu.to_string());
            }
            if (w >= 1) {
                std::vector<SymFunT<F>> rhs_c(static_cast<size_t>(w) + 1, SymFunT<F>(Basis::p));
                for (int i = 1; i <= mu.length(); ++i) {
                    if (i < mu.length() && mu.part(i) == mu.part(i + 1))
                        continue;
                    Partition below = mu.with_decremented_part(i);
                    UPolyRat<F> element = matrix_element_C<F>(below, mu);
                    std::vector<F> coeffs = expand_pochhammer(element, mu.length());
                    for (size_t k = 0; k < coeffs.size(); ++k) {
                        if (coeffs[k].is_zero())
                            continue;
                        rhs_c[k] += coeffs[k] * jack_P<F>(below).p_form;
                    }
                }
                for (int k = 1; k <= w; ++k) {
                    ++result.checks;
                    if (!(apply_C(k, jack.p_form) == rhs_c[static_cast<size_t>(k)]))
                        result.fail("C^(" + std::to_string(k) + ")P_" + mu.to_string());
                }
            }
        }
    }
    return result;
}

// Step evaluations at u = αλ_i - i + 1.  The C(u) series genuinely collapses
// there to a single Jack component, and that is checked in full.  For B(u)
// the evaluation point distinguishes the (λ,μ) matrix element rather than
// annihilating the other components, so what is checked is the coefficient:
// the reduced rational function B_λμ(u) evaluated at the point against the
// closed product form, the P_λ projection of the evaluated series, and the
// adjoint pairing coeff_up·⟨P_λ,P_λ⟩ = coeff_down·⟨P_μ,P_μ⟩.
template <CoeffField F>
CheckResult verify_steps(int max_weight) {
    CheckResult result{"step operators at u = αλ_i - i + 1"};
    for (int w = 1; w <= max_weight; ++w) {
        for (const auto& jack : jack_weight_component<F>(w)) {
            const Partition& la = jack.label;
            for (int i = 1; i <= la.length(); ++i) {
                if (i < la.length() && la.part(i) == la.part(i + 1))
                    continue;
                F shift_point = F::alpha() * F::from_int(la.part(i)) - F::from_int(i - 1);
                auto [mu, coeff_up] = step_up<F>(la, i);
                auto [mu_again, coeff_down] = step_down<F>(la, i);
                const JackExpansion<F>& jack_mu = jack_P<F>(mu);

                // coefficient route: reduce the matrix element, then substitute
                ++result.checks;
                if (!(matrix_element_B<F>(la, mu).eval(shift_point) == coeff_up))
                    result.fail("B coefficient at λ=" + la.to_string() + ", i=" + std::to_string(i));
                ++result.checks;
                if (!(matrix_element_C<F>(mu, la).eval(shift_point) == coeff_down))
                    result.fail("C coefficient at λ=" + la.to_string() + ", i=" + std::to_string(i));

                // C(u) series collapse: Σ_k C^(k)P_λ/(u)_k at the point
                SymFunT<F> series_c(Basis::p);
                F poch = F::one();
                for (int k = 1; k <= la.weight(); ++k) {
                    poch = poch * (shift_point + F::from_int(k - 1));
                    series_c += (F::one() / poch) * apply_C(k, jack.p_form);
                }
                ++result.checks;
                if (!(series_c == coeff_down * jack_mu.p_form))
                    result.fail("C step at λ=" + la.to_string() + ", i=" + std::to_string(i));

                // P_λ projection of the evaluated B(u) series
                SymFunT<F> series_b(Basis::p);
                poch = F::one();
                for (int k = 1; k <= mu.weight() + 1; ++k) {
                    poch = poch * (shift_point + F::from_int(k - 1));
                    series_b += (F::one() / poch) * apply_B(k, jack_mu.p_form);
                }
                ++result.checks;
                if (!(inner_product(series_b, jack.p_form) == coeff_up * jack.norm))
                    result.fail("B projection at λ=" + la.to_string() + ", i=" + std::to_string(i));

                // adjoint pairing of the two step coefficients
                ++result.checks;
                if (!(coeff_up * jack.norm == coeff_down * jack_mu.norm))
                    result.fail("step pairing at λ=" + la.to_string() + ", i=" + std::to_string(i));
                (void)mu_again;
            }
        }
    }
    return result;
}

// Truncated reproducing-kernel lemma f*(Π)/Π = f(y) for all p_λ.
template <CoeffField F>
CheckResult verify_kernel(int max_degree) {
    CheckResult result{"reproducing-kernel lemma"};
    for (int w = 0; w <= max_degree; ++w)
        for (const Partition& la : enumerate_partitions(w)) {
            ++result.checks;
            if (!kernel_lemma_check(SymFunT<F>::unit(la, Basis::p), max_degree))
                result.fail("p_" + la.to_string());
        }
    return result;
}

// [a_m, a_n] = mα·δ_{m+n,0} on graded components.
template <CoeffField F>
CheckResult verify_heisenberg(int max_weight, int max_mn) {
    CheckResult result{"Heisenberg commutation relations"};
    for (int m = -max_mn; m <= max_mn; ++m) {
        for (int n = -max_mn; n <= max_mn; ++n) {
            if (m == 0 || n == 0)
                continue;
            for (int w = 0; w <= max_weight; ++w)
                for (const Partition& la : enumerate_partitions(w)) {
                    SymFunT<F> f = SymFunT<F>::unit(la, Basis::p);
                    SymFunT<F> comm =
                        heisenberg_a(m, heisenberg_a(n, f)) - heisenberg_a(n, heisenberg_a(m, f));
                    SymFunT<F> expected(Basis::p);
                    if (m + n == 0)
                        expected = (F::from_int(m) * F::alpha()) * f;
                    ++result.checks;
                    if (!(comm == expected))
                        result.fail("[a_" + std::to_string(m) + ",a_" + std::to_string(n) +
                                    "] on p_" + la.to_string());
                }
        }
    }
    return result;
}

// Self-adjointness of A^(k) for the Jack inner product.
template <CoeffField F>
CheckResult verify_self_adjoint(int max_weight, int max_k) {
    CheckResult result{"self-adjointness of A^(k)"};
    for (int w = 0; w <= max_weight; ++w) {
        std::vector<Partition> basis = enumerate_partitions(w);
        for (size_t a = 0; a < basis.size(); ++a)
            for (size_t b = a; b < basis.size(); ++b)
                for (int k = 1; k <= max_k; ++k) {
                    SymFunT<F> f = SymFunT<F>::unit(basis[a], Basis::p);
                    SymFunT<F> g = SymFunT<F>::unit(basis[b], Basis::p);
                    ++result.checks;
                    if (!(inner_product(apply_A(k, f), g) == inner_product(f, apply_A(k, g))))
                        result.fail("A^(" + std::to_string(k) + ") at p_" + basis[a].to_string() +
                                    ", p_" + basis[b].to_string());
                }
    }
    return result;
}

// Numeric determinantal identity sweeps: instance checks of the Ψ functional
// equation, the identity itself, and the agreement of the two
// right-hand-side forms.
CheckResult verify_detid_numeric(int max_n, int max_m, int seeds);
// Formal truncated series form plus the term-count law.
CheckResult verify_detid_series(int max_n, int ydeg);
CheckResult verify_detid_term_counts(int max_n);

} // namespace jacksf
