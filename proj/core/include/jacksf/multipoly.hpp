#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "jacksf/fields.hpp"
#include "jacksf/partition.hpp"
#include "jacksf/symfun.hpp"

namespace jacksf {

// Sparse polynomial in x_1..x_nvars over F.  Keys are exponent vectors of
// fixed length nvars; zero coefficients are never stored.
template <CoeffField F>
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, F>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(const F& value, int nvars) {
        MultiPoly p(nvars);
        p.add_term(Exponents(static_cast<size_t>(nvars), 0), value);
        return p;
    }
    static MultiPoly one(int nvars) { return constant(F::one(), nvars); }
    static MultiPoly variable(int index, int nvars) {
        MultiPoly p(nvars);
        Exponents e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(index)] = 1;
        p.add_term(std::move(e), F::one());
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exponents exps, const F& value) {
        if (value.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(std::move(exps), value);
        if (!inserted) {
            it->second = it->second + value;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& other) {
        check_vars(other);
        for (const auto& [e, c] : other.terms_)
            add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& other) {
        check_vars(other);
        for (const auto& [e, c] : other.terms_)
            add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly result(nvars_);
        for (const auto& [e, c] : terms_)
            result.terms_.emplace(e, -c);
        return result;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly result(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (size_t i = 0; i < e.size(); ++i)
                    e[i] += eb[i];
                result.add_term(std::move(e), ca * cb);
            }
        }
        return result;
    }
    friend MultiPoly operator*(const F& scalar, const MultiPoly& p) {
        MultiPoly result(p.nvars_);
        if (scalar.is_zero())
            return result;
        for (const auto& [e, c] : p.terms_)
            result.add_term(e, scalar * c);
        return result;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // ∂/∂x_index
    MultiPoly derivative(int index) const {
        MultiPoly result(nvars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<size_t>(index)];
            if (k == 0)
                continue;
            Exponents shifted = e;
            shifted[static_cast<size_t>(index)] -= 1;
            result.add_term(std::move(shifted), F::from_int(k) * c);
        }
        return result;
    }

    // x_index · ∂/∂x_index (the Euler factor of the Sekiguchi determinant).
    MultiPoly euler(int index) const {
        MultiPoly result(nvars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<size_t>(index)];
            if (k != 0)
                result.add_term(e, F::from_int(k) * c);
        }
        return result;
    }

    MultiPoly multiply_by_power(int index, int power) const {
        MultiPoly result(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents shifted = e;
            shifted[static_cast<size_t>(index)] += power;
            result.add_term(std::move(shifted), c);
        }
        return result;
    }

    // Image under x_last = 0, dropping the variable.
    MultiPoly eliminate_last() const {
        MultiPoly result(nvars_ - 1);
        for (const auto& [e, c] : terms_) {
            if (e.back() != 0)
                continue;
            result.add_term(Exponents(e.begin(), e.end() - 1), c);
        }
        return result;
    }

    // Substitute x_a := x_b (used as the remainder test for division by
    // x_a - x_b).
    MultiPoly substitute_var(int a, int b) const {
        MultiPoly result(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents merged = e;
            merged[static_cast<size_t>(b)] += merged[static_cast<size_t>(a)];
            merged[static_cast<size_t>(a)] = 0;
            result.add_term(std::move(merged), c);
        }
        return result;
    }

    bool is_symmetric() const {
        for (int i = 0; i + 1 < nvars_; ++i) {
            MultiPoly swapped(nvars_);
            for (const auto& [e, c] : terms_) {
                Exponents s = e;
                std::swap(s[static_cast<size_t>(i)], s[static_cast<size_t>(i + 1)]);
                swapped.add_term(std::move(s), c);
            }
            if (!(swapped == *this))
                return false;
        }
        return true;
    }

private:
    void check_vars(const MultiPoly& other) const {
        if (nvars_ != other.nvars_)
            throw argument_error("variable-count mismatch in multivariate arithmetic");
    }
    int nvars_;
    Terms terms_;
};

// Exact quotient of f by (x_a - x_b); throws internal_error when the
// division is not exact.  Uses x^k = (x_a-x_b)(Σ_t x_a^t x_b^{k-1-t}) + x_b^k
// termwise in x_a.
template <CoeffField F>
MultiPoly<F> divide_by_linear_difference(const MultiPoly<F>& f, int a, int b) {
    if (!f.substitute_var(a, b).is_zero())
        throw internal_error("division by x_a - x_b is not exact");
    MultiPoly<F> quotient(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        int k = e[static_cast<size_t>(a)];
        for (int t = 0; t < k; ++t) {
            auto shifted = e;
            shifted[static_cast<size_t>(a)] = t;
            shifted[static_cast<size_t>(b)] += k - 1 - t;
            quotient.add_term(std::move(shifted), c);
        }
    }
    return quotient;
}

// Δ(x_1..x_N) = Π_{i<j} (x_i - x_j).
template <CoeffField F>
MultiPoly<F> vandermonde(int nvars) {
    MultiPoly<F> result = MultiPoly<F>::one(nvars);
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
            result = result * (MultiPoly<F>::variable(i, nvars) - MultiPoly<F>::variable(j, nvars));
    return result;
}

// m_λ(x_1..x_N): the sum of all distinct monomials with exponent multiset λ;
// zero when ℓ(λ) > N.
template <CoeffField F>
MultiPoly<F> monomial_poly(const Partition& la, int nvars) {
    MultiPoly<F> result(nvars);
    if (la.length() > nvars)
        return result;
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    for (int i = 0; i < la.length(); ++i)
        exps[static_cast<size_t>(i)] = la.parts()[static_cast<size_t>(i)];
    std::sort(exps.begin(), exps.end());
    do {
        result.add_term(exps, F::one());
    } while (std::next_permutation(exps.begin(), exps.end()));
    return result;
}

// Image of f ∈ Λ under x_{N+1} = x_{N+2} = ... = 0, expanded termwise in the
// monomial basis.
template <CoeffField F>
MultiPoly<F> restrict_to_n(const SymFunT<F>& f, int nvars) {
    SymFunT<F> fm = to_m_basis(f);
    MultiPoly<F> result(nvars);
    for (const auto& [la, c] : fm.terms())
        result += c * monomial_poly<F>(la, nvars);
    return result;
}

} // namespace jacksf
