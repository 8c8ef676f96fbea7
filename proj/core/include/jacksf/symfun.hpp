#pragma once

#include <algorithm>
#include <map>
#include <utility>

#include "jacksf/basis_transition.hpp"
#include "jacksf/fields.hpp"
#include "jacksf/partition.hpp"

namespace jacksf {

enum class Basis { m, p };

inline const char* basis_name(Basis b) { return b == Basis::m ? "m" : "p"; }

// Element of Λ: a finite linear combination of basis functions indexed by
// partitions, tagged with the basis.  Zero coefficients are never stored, so
// the zero element is the empty map and equality within one basis is
// structural.  Terms iterate in reverse lexicographic order.
template <CoeffField F>
class SymFunT {
public:
    using Terms = std::map<Partition, F, PartitionRevLexGreater>;

    explicit SymFunT(Basis basis = Basis::p) : basis_(basis) {}

    static SymFunT zero(Basis basis = Basis::p) { return SymFunT(basis); }
    static SymFunT one(Basis basis = Basis::p) { return unit(Partition(), basis); }
    // The basis function m_λ or p_λ itself.
    static SymFunT unit(const Partition& la, Basis basis) {
        SymFunT f(basis);
        f.terms_.emplace(la, F::one());
        return f;
    }
    static SymFunT constant(const F& value, Basis basis = Basis::p) {
        SymFunT f(basis);
        f.add_term(Partition(), value);
        return f;
    }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // max |λ| over the support; -1 for the zero element.
    int degree() const {
        int d = -1;
        for (const auto& [la, c] : terms_)
            d = std::max(d, la.weight());
        return d;
    }

    F coeff(const Partition& la) const {
        auto it = terms_.find(la);
        return it == terms_.end() ? F::zero() : it->second;
    }

    void add_term(const Partition& la, const F& value) {
        if (value.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(la, value);
        if (!inserted) {
            it->second = it->second + value;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    SymFunT& operator+=(const SymFunT& other) {
        require_same_basis(other);
        for (const auto& [la, c] : other.terms_)
            add_term(la, c);
        return *this;
    }

    SymFunT& operator-=(const SymFunT& other) {
        require_same_basis(other);
        for (const auto& [la, c] : other.terms_)
            add_term(la, -c);
        return *this;
    }

    friend SymFunT operator+(SymFunT a, const SymFunT& b) { return a += b; }
    friend SymFunT operator-(SymFunT a, const SymFunT& b) { return a -= b; }

    SymFunT operator-() const {
        SymFunT result(basis_);
        for (const auto& [la, c] : terms_)
            result.terms_.emplace(la, -c);
        return result;
    }

    friend SymFunT operator*(const F& scalar, const SymFunT& f) {
        SymFunT result(f.basis_);
        if (scalar.is_zero())
            return result;
        for (const auto& [la, c] : f.terms_)
            result.add_term(la, scalar * c);
        return result;
    }

    friend bool operator==(const SymFunT& a, const SymFunT& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    void require_same_basis(const SymFunT& other) const {
        if (basis_ != other.basis_)
            throw argument_error("basis mismatch in symmetric-function arithmetic");
    }

    Basis basis_;
    Terms terms_;
};

namespace detail {

// Converts one graded slice through the cached transition matrices.
template <CoeffField F>
void convert_weight_slice(const std::map<Partition, F, PartitionRevLexGreater>& slice, int weight,
                          bool p_to_m, SymFunT<F>& out) {
    const WeightTransition& table = weight_transition(weight);
    const auto& matrix = p_to_m ? table.p_in_m : table.m_in_p;
    for (const auto& [la, c] : slice) {
        int col = table.index.at(la);
        for (size_t row = 0; row < table.partitions.size(); ++row) {
            const Rat& entry = p_to_m ? matrix[row][static_cast<size_t>(col)]
                                      : matrix[static_cast<size_t>(col)][row];
            if (entry != 0)
                out.add_term(table.partitions[row], c * F::from_rat(entry));
        }
    }
}

template <CoeffField F>
SymFunT<F> convert(const SymFunT<F>& f, Basis target) {
    if (f.basis() == target) {
        return f;
    }
    SymFunT<F> result(target);
    std::map<int, std::map<Partition, F, PartitionRevLexGreater>> by_weight;
    for (const auto& [la, c] : f.terms())
        by_weight[la.weight()].emplace(la, c);
    for (const auto& [w, slice] : by_weight)
        convert_weight_slice(slice, w, target == Basis::m, result);
    return result;
}

} // namespace detail

// Basis conversions.  p_to_m expands power sums through the refinement
// numbers R_λμ; m_to_p inverts the (triangular) relation weight by weight.
template <CoeffField F>
SymFunT<F> to_m_basis(const SymFunT<F>& f) {
    return detail::convert(f, Basis::m);
}

template <CoeffField F>
SymFunT<F> to_p_basis(const SymFunT<F>& f) {
    return detail::convert(f, Basis::p);
}

// Product in Λ, returned in the p basis where multiplication is the
// concatenation of partition multisets.
template <CoeffField F>
SymFunT<F> mul(const SymFunT<F>& f, const SymFunT<F>& g) {
    SymFunT<F> fp = to_p_basis(f);
    SymFunT<F> gp = to_p_basis(g);
    SymFunT<F> result(Basis::p);
    for (const auto& [la, a] : fp.terms()) {
        for (const auto& [mu, b] : gp.terms()) {
            std::vector<int> joined = la.parts();
            joined.insert(joined.end(), mu.parts().begin(), mu.parts().end());
            result.add_term(Partition(std::move(joined)), a * b);
        }
    }
    return result;
}

// ⟨p_λ, p_μ⟩ = α^{ℓ(λ)} z_λ δ_{λμ}, extended bilinearly.
template <CoeffField F>
F inner_product(const SymFunT<F>& f, const SymFunT<F>& g) {
    SymFunT<F> fp = to_p_basis(f);
    SymFunT<F> gp = to_p_basis(g);
    const auto* small = &fp;
    const auto* large = &gp;
    if (large->term_count() < small->term_count())
        std::swap(small, large);
    F total = F::zero();
    for (const auto& [la, a] : small->terms()) {
        F b = large->coeff(la);
        if (b.is_zero())
            continue;
        F diag = field_pow(F::alpha(), la.length()) * F::from_rat(z_of(la));
        total = total + a * b * diag;
    }
    return total;
}

// α·n·∂/∂p_n applied to g (given and returned in the p basis).
template <CoeffField F>
SymFunT<F> scaled_power_derivation(int n, const SymFunT<F>& g) {
    SymFunT<F> result(Basis::p);
    F scale = F::alpha() * F::from_int(n);
    for (const auto& [la, c] : g.terms()) {
        int mult = la.multiplicity(n);
        if (mult == 0)
            continue;
        std::vector<int> parts = la.parts();
        parts.erase(std::find(parts.begin(), parts.end(), n));
        result.add_term(Partition(std::move(parts)), scale * F::from_int(mult) * c);
    }
    return result;
}

// f*(g): the ⟨,⟩-adjoint of multiplication by f, acting on g.  Expands f in
// the p basis and applies the commuting derivations α·n·∂/∂p_n factor by
// factor.
template <CoeffField F>
SymFunT<F> adjoint_apply(const SymFunT<F>& f, const SymFunT<F>& g) {
    SymFunT<F> fp = to_p_basis(f);
    SymFunT<F> gp = to_p_basis(g);
    SymFunT<F> result(Basis::p);
    for (const auto& [la, c] : fp.terms()) {
        SymFunT<F> image = gp;
        for (int part : la.parts()) {
            image = scaled_power_derivation(part, image);
            if (image.is_zero())
                break;
        }
        result += c * image;
    }
    return result;
}

// Equality as elements of Λ regardless of the bases the operands carry.
template <CoeffField F>
bool equal_elements(const SymFunT<F>& f, const SymFunT<F>& g) {
    if (f.basis() == g.basis())
        return f == g;
    return to_p_basis(f) == to_p_basis(g);
}

using SymFun = SymFunT<AlphaRat>;

} // namespace jacksf
