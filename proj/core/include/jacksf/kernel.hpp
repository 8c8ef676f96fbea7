#pragma once

#include <map>
#include <utility>

#include "jacksf/symfun.hpp"

namespace jacksf {

// Element of Λ(x) ⊗ Λ(y) with both tensor factors expanded in power sums:
// a sparse map (λ, μ) ↦ coefficient of p_λ(x)p_μ(y).  Carrier for truncated
// computations with the reproducing kernel.
template <CoeffField F>
class BiSymFun {
public:
    using Key = std::pair<Partition, Partition>;
    using Terms = std::map<Key, F>;

    BiSymFun() = default;
    static BiSymFun one() {
        BiSymFun b;
        b.terms_.emplace(Key{Partition(), Partition()}, F::one());
        return b;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& la, const Partition& mu, const F& value) {
        if (value.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(Key{la, mu}, value);
        if (!inserted) {
            it->second = it->second + value;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    BiSymFun& operator+=(const BiSymFun& other) {
        for (const auto& [key, c] : other.terms_)
            add_term(key.first, key.second, c);
        return *this;
    }
    friend BiSymFun operator+(BiSymFun a, const BiSymFun& b) { return a += b; }
    BiSymFun operator-() const {
        BiSymFun result;
        for (const auto& [key, c] : terms_)
            result.terms_.emplace(key, -c);
        return result;
    }
    friend BiSymFun operator-(BiSymFun a, const BiSymFun& b) { return a + (-b); }
    friend bool operator==(const BiSymFun& a, const BiSymFun& b) { return a.terms_ == b.terms_; }

    // Product truncated at total y-degree ≤ ydeg_bound; in the p basis the
    // partition multisets concatenate on both tensor factors.
    static BiSymFun mul_truncated(const BiSymFun& a, const BiSymFun& b, int ydeg_bound) {
        BiSymFun result;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                if (ka.second.weight() + kb.second.weight() > ydeg_bound)
                    continue;
                std::vector<int> xs = ka.first.parts();
                xs.insert(xs.end(), kb.first.parts().begin(), kb.first.parts().end());
                std::vector<int> ys = ka.second.parts();
                ys.insert(ys.end(), kb.second.parts().begin(), kb.second.parts().end());
                result.add_term(Partition(std::move(xs)), Partition(std::move(ys)), ca * cb);
            }
        }
        return result;
    }

    // Applies f* to the x tensor factor, term by term.
    BiSymFun adjoint_on_x(const SymFunT<F>& f) const {
        SymFunT<F> fp = to_p_basis(f);
        BiSymFun result;
        for (const auto& [key, c] : terms_) {
            for (const auto& [fla, fc] : fp.terms()) {
                SymFunT<F> piece = SymFunT<F>::unit(key.first, Basis::p);
                for (int part : fla.parts()) {
                    piece = scaled_power_derivation(part, piece);
                    if (piece.is_zero())
                        break;
                }
                for (const auto& [xla, xc] : piece.terms())
                    result.add_term(xla, key.second, c * fc * xc);
            }
        }
        return result;
    }

private:
    Terms terms_;
};

// Truncation of the reproducing kernel Π = exp(Σ_n p_n(x)p_n(y)/(αn)) to
// total degree ≤ max_degree in each variable set.  By orthogonality the
// expansion is diagonal with coefficient 1/(α^{ℓ(λ)} z_λ) on p_λ(x)p_λ(y).
template <CoeffField F>
BiSymFun<F> kernel_truncated(int max_degree) {
    if (max_degree < 0)
        throw argument_error("kernel truncation degree must be ≥ 0");
    BiSymFun<F> result;
    for (int w = 0; w <= max_degree; ++w) {
        for (const Partition& la : enumerate_partitions(w)) {
            F coeff = F::one() / (field_pow(F::alpha(), la.length()) * F::from_rat(z_of(la)));
            result.add_term(la, la, coeff);
        }
    }
    return result;
}

// Inverse of Π (a series with constant term 1) in the quotient by
// y-degree > ydeg_bound, via the Neumann series.
template <CoeffField F>
BiSymFun<F> invert_kernel_truncated(const BiSymFun<F>& pi, int ydeg_bound) {
    BiSymFun<F> rest = pi - BiSymFun<F>::one(); // strictly positive y-degree
    BiSymFun<F> result = BiSymFun<F>::one();
    BiSymFun<F> power = BiSymFun<F>::one();
    for (int j = 1; j <= ydeg_bound; ++j) {
        power = BiSymFun<F>::mul_truncated(power, rest, ydeg_bound);
        if (power.is_zero())
            break;
        result = (j % 2 == 1) ? result - power : result + power;
    }
    return result;
}

// The reproducing-kernel lemma f*(Π)/Π = f(y), verified exactly through
// degree ≤ max_degree in the y variables.  Requires deg f ≤ max_degree.
template <CoeffField F>
bool kernel_lemma_check(const SymFunT<F>& f, int max_degree) {
    if (f.degree() > max_degree)
        throw argument_error("truncation degree is smaller than deg f");
    BiSymFun<F> pi = kernel_truncated<F>(max_degree);
    BiSymFun<F> numerator = pi.adjoint_on_x(f);
    BiSymFun<F> inv = invert_kernel_truncated(pi, max_degree);
    BiSymFun<F> quotient = BiSymFun<F>::mul_truncated(numerator, inv, max_degree);

    SymFunT<F> expected = to_p_basis(f);
    BiSymFun<F> target;
    for (const auto& [la, c] : expected.terms())
        target.add_term(Partition(), la, c);
    return quotient == target;
}

} // namespace jacksf
