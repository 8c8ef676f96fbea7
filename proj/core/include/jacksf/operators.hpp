#pragma once

#include <mutex>
#include <utility>
#include <vector>

#include "jacksf/jack.hpp"
#include "jacksf/symfun.hpp"
#include "jacksf/upoly.hpp"

namespace jacksf {

namespace detail {

// m_λ as a p-basis element of F-coefficients; memoized since the operator
// sums revisit the same partitions constantly.
template <CoeffField F>
const SymFunT<F>& monomial_in_p(const Partition& la) {
    static std::mutex mu;
    static std::map<Partition, SymFunT<F>, PartitionRevLexGreater> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(la);
    if (it == cache.end())
        it = cache.emplace(la, to_p_basis(SymFunT<F>::unit(la, Basis::m))).first;
    return it->second;
}

// Partitions with length exactly k and weight in [k, max_weight].
inline std::vector<Partition> partitions_of_length(int k, int max_weight) {
    std::vector<Partition> result;
    for (int w = k; w <= max_weight; ++w)
        for (auto& la : enumerate_partitions(w, k))
            result.push_back(std::move(la));
    return result;
}

} // namespace detail

// A^(k) = (-1)^k Σ_{ℓ(λ)=k} c_λ m_λ m_λ*.  The sum truncates at |λ| ≤ deg f
// because m_λ* annihilates lower degrees; A^(k) preserves degree.
template <CoeffField F>
SymFunT<F> apply_A(int k, const SymFunT<F>& f) {
    if (k < 1)
        throw argument_error("operator index k must be ≥ 1");
    SymFunT<F> fp = to_p_basis(f);
    SymFunT<F> result(Basis::p);
    F sign = (k % 2 == 0) ? F::one() : -F::one();
    for (const Partition& la : detail::partitions_of_length(k, fp.degree())) {
        SymFunT<F> mp = detail::monomial_in_p<F>(la);
        SymFunT<F> image = adjoint_apply(mp, fp);
        if (image.is_zero())
            continue;
        result += (sign * F::from_rat(c_of(la))) * mul(mp, image);
    }
    return result;
}

// B^(k+1) = (-1)^k Σ_{ℓ(μ)=k} c_{μ⊔1} m_{μ⊔1} m_μ*; raises degree by one.
template <CoeffField F>
SymFunT<F> apply_B(int k, const SymFunT<F>& f) {
    if (k < 1)
        throw argument_error("operator index k must be ≥ 1");
    SymFunT<F> fp = to_p_basis(f);
    SymFunT<F> result(Basis::p);
    F sign = (k % 2 == 1) ? F::one() : -F::one(); // (-1)^(k-1)
    if (k == 1)
        return mul(SymFunT<F>::unit(Partition{1}, Basis::p), fp); // m_∅⊔1 · identity
    for (const Partition& mu : detail::partitions_of_length(k - 1, fp.degree())) {
        SymFunT<F> image = adjoint_apply(detail::monomial_in_p<F>(mu), fp);
        if (image.is_zero())
            continue;
        Partition raised = mu.with_appended_one();
        result += (sign * F::from_rat(c_of(raised))) *
                  mul(detail::monomial_in_p<F>(raised), image);
    }
    return result;
}

// C^(k+1) = (-1)^k Σ_{ℓ(μ)=k} c_{μ⊔1} m_μ m_{μ⊔1}*; lowers degree by one and
// is the ⟨,⟩-adjoint of B^(k+1).
template <CoeffField F>
SymFunT<F> apply_C(int k, const SymFunT<F>& f) {
    if (k < 1)
        throw argument_error("operator index k must be ≥ 1");
    SymFunT<F> fp = to_p_basis(f);
    SymFunT<F> result(Basis::p);
    F sign = (k % 2 == 1) ? F::one() : -F::one();
    for (int w = k - 1; w + 1 <= fp.degree(); ++w) {
        for (const Partition& mu : enumerate_partitions(w, k - 1)) {
            Partition raised = mu.with_appended_one();
            SymFunT<F> image = adjoint_apply(detail::monomial_in_p<F>(raised), fp);
            if (image.is_zero())
                continue;
            result += (sign * F::from_rat(c_of(raised))) *
                      mul(detail::monomial_in_p<F>(mu), image);
        }
    }
    return result;
}

// H^(1) = Σ αn p_n ∂/∂p_n: multiplies each homogeneous component by α·deg.
template <CoeffField F>
SymFunT<F> apply_H1(const SymFunT<F>& f) {
    SymFunT<F> fp = to_p_basis(f);
    SymFunT<F> result(Basis::p);
    for (const auto& [la, c] : fp.terms())
        result.add_term(la, F::alpha() * F::from_int(la.weight()) * c);
    return result;
}

// H^(2): splitting terms α(m+n)p_m p_n ∂_{m+n}, joining terms
// α²mn p_{m+n}∂_m∂_n, and the diagonal (α-1)Σ αn² p_n ∂_n.
template <CoeffField F>
SymFunT<F> apply_H2(const SymFunT<F>& f) {
    SymFunT<F> fp = to_p_basis(f);
    const F alpha = F::alpha();
    SymFunT<F> result(Basis::p);
    for (const auto& [la, c] : fp.terms()) {
        const std::vector<int>& parts = la.parts();
        const int len = la.length();
        // splitting: remove one part w, insert m and w-m for every ordered (m, w-m)
        for (int a = 0; a < len; ++a) {
            int w = parts[static_cast<size_t>(a)];
            for (int m = 1; m < w; ++m) {
                std::vector<int> rest;
                rest.reserve(static_cast<size_t>(len) + 1);
                for (int t = 0; t < len; ++t)
                    if (t != a)
                        rest.push_back(parts[static_cast<size_t>(t)]);
                rest.push_back(m);
                rest.push_back(w - m);
                result.add_term(Partition(std::move(rest)), alpha * F::from_int(w) * c);
            }
        }
        // joining: fuse an ordered pair of distinct positions into one part
        for (int a = 0; a < len; ++a) {
            for (int b = 0; b < len; ++b) {
                if (a == b)
                    continue;
                std::vector<int> rest;
                rest.reserve(static_cast<size_t>(len) - 1);
                for (int t = 0; t < len; ++t)
                    if (t != a && t != b)
                        rest.push_back(parts[static_cast<size_t>(t)]);
                rest.push_back(parts[static_cast<size_t>(a)] + parts[static_cast<size_t>(b)]);
                F coeff = alpha * alpha *
                          F::from_int(parts[static_cast<size_t>(a)]) *
                          F::from_int(parts[static_cast<size_t>(b)]) * c;
                result.add_term(Partition(std::move(rest)), coeff);
            }
        }
        // diagonal
        long sum_sq = 0;
        for (int p : parts)
            sum_sq += static_cast<long>(p) * p;
        result.add_term(la, (alpha - F::one()) * alpha * F::from_int(sum_sq) * c);
    }
    return result;
}

// Heisenberg generator a_n: multiplication by p_{-n} for n<0, the scaled
// derivation αn ∂/∂p_n for n>0.
template <CoeffField F>
SymFunT<F> heisenberg_a(int n, const SymFunT<F>& f) {
    if (n == 0)
        throw argument_error("a_0 is not defined");
    SymFunT<F> fp = to_p_basis(f);
    if (n < 0)
        return mul(SymFunT<F>::unit(Partition{-n}, Basis::p), fp);
    return scaled_power_derivation(n, fp);
}

// The spectral factor common to the B(u), C(u) matrix elements:
// 1/(u+i-1) · Π_{j≤ℓ(λ), j≠i} (u+j-1-αλ_j)/(u+j-1).
template <CoeffField F>
UPolyRat<F> spectral_skip_factor(const Partition& la, int i) {
    UPoly<F> num = UPoly<F>::one();
    UPoly<F> den = UPoly<F>::linear(F::from_int(i - 1));
    for (int j = 1; j <= la.length(); ++j) {
        if (j == i)
            continue;
        num = num * UPoly<F>::linear(F::from_int(j - 1) - F::alpha() * F::from_int(la.part(j)));
        den = den * UPoly<F>::linear(F::from_int(j - 1));
    }
    return UPolyRat<F>(std::move(num), std::move(den));
}

// A(u)P_λ = Π_{i≤ℓ(λ)} (u+i-1-αλ_i)/(u+i-1) · P_λ, as a reduced rational
// function of u.
template <CoeffField F>
UPolyRat<F> eigenvalue_A_series(const Partition& la) {
    UPoly<F> num = UPoly<F>::one();
    UPoly<F> den = UPoly<F>::one();
    for (int i = 1; i <= la.length(); ++i) {
        num = num * UPoly<F>::linear(F::from_int(i - 1) - F::alpha() * F::from_int(la.part(i)));
        den = den * UPoly<F>::linear(F::from_int(i - 1));
    }
    return UPolyRat<F>(std::move(num), std::move(den));
}

// Coefficient of 1/(u)_k in the expansion of eigenvalue_A_series(λ): the
// eigenvalue of A^(k) on P_λ.  Zero when k exceeds ℓ(λ).
template <CoeffField F>
F eigenvalue_A_k(const Partition& la, int k) {
    if (k < 1)
        throw argument_error("operator index k must be ≥ 1");
    if (k > la.length())
        return F::zero();
    std::vector<F> coeffs = expand_pochhammer(eigenvalue_A_series<F>(la), la.length());
    return coeffs[static_cast<size_t>(k)];
}

namespace detail {

// Locates the unique index at which `larger` exceeds `smaller` by one box;
// throws unless the two partitions are related by a single box.
inline int single_box_index(const Partition& larger, const Partition& smaller) {
    if (larger.weight() != smaller.weight() + 1 || larger.length() < smaller.length() ||
        larger.length() > smaller.length() + 1)
        throw argument_error("partitions are not related by a single box");
    int found = 0;
    for (int i = 1; i <= larger.length(); ++i) {
        if (larger.part(i) == smaller.part(i))
            continue;
        if (larger.part(i) != smaller.part(i) + 1 || found != 0)
            throw argument_error("partitions are not related by a single box");
        found = i;
    }
    if (found == 0)
        throw argument_error("partitions are not related by a single box");
    return found;
}

} // namespace detail

// B_λμ(u): coefficient of P_λ in B(u)P_μ, for λ = μ plus one box.
template <CoeffField F>
UPolyRat<F> matrix_element_B(const Partition& la, const Partition& mu) {
    int i = detail::single_box_index(la, mu);
    F pieri = pieri_up_coeff<F>(mu, i);
    return UPolyRat<F>(UPoly<F>(pieri), UPoly<F>::one()) * spectral_skip_factor<F>(la, i);
}

// C_μλ(u): coefficient of P_μ in C(u)P_λ, for μ = λ minus one box.
template <CoeffField F>
UPolyRat<F> matrix_element_C(const Partition& mu, const Partition& la) {
    int i = detail::single_box_index(la, mu);
    F pieri = pieri_down_coeff<F>(la, i);
    return UPolyRat<F>(UPoly<F>(F::alpha() * pieri), UPoly<F>::one()) *
           spectral_skip_factor<F>(la, i);
}

// The value of the reduced spectral factor at u = αλ_i - i + 1:
// Π_{j≤ℓ(λ)} 1/(αλ_i-i+j) · Π_{j≠i} (αλ_i-αλ_j-i+j).
template <CoeffField F>
F spectral_skip_at_shift(const Partition& la, int i) {
    const F alpha = F::alpha();
    F value = F::one();
    F ali = alpha * F::from_int(la.part(i));
    for (int j = 1; j <= la.length(); ++j) {
        F den = ali + F::from_int(j - i);
        if (den.is_zero())
            throw internal_error("step evaluation point coincides with a pole");
        value = value / den;
        if (j != i)
            value = value * (ali - alpha * F::from_int(la.part(j)) + F::from_int(j - i));
    }
    return value;
}

// Step up to λ through row i: B_λμ(u) evaluated at the distinguished point
// u = αλ_i - i + 1, the coefficient with which P_λ appears in B(u)P_μ there.
// μ is λ with one box removed at row i; returns (μ, coeff).
template <CoeffField F>
std::pair<Partition, F> step_up(const Partition& la, int i) {
    Partition mu = la.with_decremented_part(i);
    F coeff = pieri_up_coeff<F>(mu, i) * spectral_skip_at_shift<F>(la, i);
    return {std::move(mu), std::move(coeff)};
}

// Step down from λ through row i: at u = αλ_i - i + 1 every other matrix
// element of C(u) on P_λ vanishes, so C(u)P_λ = coeff·P_μ exactly.
template <CoeffField F>
std::pair<Partition, F> step_down(const Partition& la, int i) {
    Partition mu = la.with_decremented_part(i);
    F coeff = F::alpha() * pieri_down_coeff<F>(la, i) * spectral_skip_at_shift<F>(la, i);
    return {std::move(mu), std::move(coeff)};
}

} // namespace jacksf
