#pragma once

#include <numeric>
#include <vector>

#include "jacksf/jack.hpp"
#include "jacksf/multipoly.hpp"
#include "jacksf/upoly.hpp"

namespace jacksf {

// A polynomial in u whose coefficients are multivariate polynomials;
// value[k] multiplies u^k.  Trailing zero coefficients are trimmed.
template <CoeffField F>
using UPolyOver = std::vector<MultiPoly<F>>;

namespace detail {

template <CoeffField F>
void trim_ucoeffs(UPolyOver<F>& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

// Sign of a permutation given as 0-based images.
inline int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        size_t j = i;
        int cycle = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j]);
            ++cycle;
        }
        if (cycle % 2 == 0)
            sign = -sign;
    }
    return sign;
}

} // namespace detail

// S_N(u) applied to f: the alternated sum over permutations of products
// x_i^{N-σ(i)}(u+σ(i)-1-α x_i ∂_i), divided exactly by the Vandermonde
// polynomial.  Returns the u-coefficient list.  The division must be exact;
// a remainder raises internal_error.
template <CoeffField F>
UPolyOver<F> apply_S_N(const MultiPoly<F>& f) {
    const int n = f.nvars();
    const F alpha = F::alpha();
    UPolyOver<F> total;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = detail::permutation_sign(perm);
        // g holds the u-coefficients of the partial product.
        UPolyOver<F> g = {f};
        for (int i = 0; i < n; ++i) {
            const int col = perm[static_cast<size_t>(i)]; // σ(i)-1
            UPolyOver<F> next(g.size() + 1, MultiPoly<F>(n));
            for (size_t t = 0; t < g.size(); ++t) {
                // (u + col - α x_i ∂_i) then multiply by x_i^{N-1-col}
                MultiPoly<F> base =
                    F::from_int(col) * g[t] - alpha * g[t].euler(i);
                next[t] += base.multiply_by_power(i, n - 1 - col);
                next[t + 1] += g[t].multiply_by_power(i, n - 1 - col);
            }
            detail::trim_ucoeffs(next);
            g = std::move(next);
        }
        if (total.size() < g.size())
            total.resize(g.size(), MultiPoly<F>(n));
        for (size_t t = 0; t < g.size(); ++t) {
            if (sign > 0)
                total[t] += g[t];
            else
                total[t] -= g[t];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    detail::trim_ucoeffs(total);
    for (auto& coeff : total)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                coeff = divide_by_linear_difference(coeff, i, j);
    return total;
}

// S_N(u)P_λ = Π_{i=1}^N (u+i-1-αλ_i) · P_λ for ℓ(λ) ≤ N.
template <CoeffField F>
bool check_eigen_S_N(const Partition& la, int nvars) {
    if (la.length() > nvars)
        throw argument_error("partition is longer than the variable count");
    MultiPoly<F> restricted = restrict_to_n(jack_P<F>(la).m_form, nvars);
    UPolyOver<F> lhs = apply_S_N(restricted);
    UPoly<F> eigen = UPoly<F>::one();
    for (int i = 1; i <= nvars; ++i)
        eigen = eigen * UPoly<F>::linear(F::from_int(i - 1) - F::alpha() * F::from_int(la.part(i)));
    UPolyOver<F> rhs(static_cast<size_t>(eigen.degree()) + 1, MultiPoly<F>(nvars));
    for (int t = 0; t <= eigen.degree(); ++t)
        rhs[static_cast<size_t>(t)] = eigen.coeff(t) * restricted;
    detail::trim_ucoeffs(rhs);
    return lhs == rhs;
}

// Stability of A_N(u) = S_N(u)/(u)_N: setting x_N = 0 after S_N(u) equals
// (u+N-1)·S_{N-1}(u) after x_N = 0, which is the intertwining
// ρ_N A_N(u) = A_{N-1}(u) ρ_N cleared of denominators.
template <CoeffField F>
bool check_stability_A_N(const SymFunT<F>& f, int nvars) {
    if (nvars < 1)
        throw argument_error("stability check needs N ≥ 1");
    MultiPoly<F> g = restrict_to_n(f, nvars);
    UPolyOver<F> lhs_full = apply_S_N(g);
    UPolyOver<F> lhs;
    lhs.reserve(lhs_full.size());
    for (const auto& coeff : lhs_full)
        lhs.push_back(coeff.eliminate_last());
    detail::trim_ucoeffs(lhs);

    MultiPoly<F> g_below = g.eliminate_last();
    UPolyOver<F> rhs_base =
        nvars == 1 ? UPolyOver<F>{g_below} : apply_S_N(g_below);
    // multiply by (u + N - 1)
    UPolyOver<F> rhs(rhs_base.size() + 1, MultiPoly<F>(nvars - 1));
    for (size_t t = 0; t < rhs_base.size(); ++t) {
        rhs[t] += F::from_int(nvars - 1) * rhs_base[t];
        rhs[t + 1] += rhs_base[t];
    }
    detail::trim_ucoeffs(rhs);
    return lhs == rhs;
}

// Numeric data for the determinantal identity: pairwise distinct nonzero
// x-values and ψ-values with x_i ≠ ψ_l, inducing Ψ_{il} = x_i/(x_i - ψ_l).
struct PsiInstance {
    std::vector<Rat> xvals;
    std::vector<Rat> psivals;
};

// Validates the PsiInstance invariants; throws argument_error on violation.
void validate_psi_instance(const PsiInstance& inst);

// The induced matrix Ψ_{il}.
std::vector<std::vector<Rat>> psi_matrix(const PsiInstance& inst);

// Checks (x_i-x_j)Ψ_{il}Ψ_{jl} = x_iΨ_{jl} - x_jΨ_{il} for all i, j, l.
bool psi_matrix_satisfies_kk(const PsiInstance& inst);

// Both sides of the determinantal identity for one numeric instance, as
// polynomials in u; detid_check compares them for exact equality.  The
// right-hand side is assembled from the pair-set sum of the identity.
struct DetIdSides {
    UPoly<NumericAlpha> lhs;
    UPoly<NumericAlpha> rhs;
};
DetIdSides detid_sides(const PsiInstance& inst);

// Exact verification of the determinantal identity on a numeric instance.
bool detid_check(const PsiInstance& inst);

// The degree-k layer of the right-hand side evaluated through the explicit
// pair-set sum and through the symmetrized subset-permutation sum; the two
// forms are cross-checked in the verification suites.
Rat detid_rhs_pairsets_layer(const PsiInstance& inst, int k);
Rat detid_rhs_symmetrized_layer(const PsiInstance& inst, int k);

// Formal-series verification with Ψ(x,y) = xy/(xy-1) expanded as
// -Σ_{n≥1}(xy)^n, truncated at total y-degree ydeg, with M = N formal
// y-variables.  Compares the determinant with the signed combinatorial sum.
// Variables 0..N-1 are the x's, N..2N-1 the y's.
struct DetIdSeriesSides {
    UPolyOver<NumericAlpha> lhs;
    UPolyOver<NumericAlpha> rhs;
};
DetIdSeriesSides detid_series_sides(int nvars, int ydeg);
bool detid_check_series(int nvars, int ydeg);

// Number of quadruples in the boundary cancellation sum, enumerated
// directly; throws internal_error unless it equals (N-1)!(N-2)(N-k)k/2.
long long detid_term_count(int nvars, int k);

// Closed form (N-1)!(N-2)(N-k)k/2.
long long detid_term_count_closed_form(int nvars, int k);

// Deterministic random instance generation for verification sweeps.
PsiInstance random_psi_instance(int nvals, int mvals, unsigned long seed);

} // namespace jacksf
