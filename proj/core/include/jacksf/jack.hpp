#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "jacksf/symfun.hpp"

namespace jacksf {

// Jack symmetric function P_λ: the unique element m_λ + Σ_{μ<λ} c_μ m_μ
// orthogonal to all P_μ with μ below λ in dominance.  Both basis expansions
// and the norm ⟨P_λ,P_λ⟩ are kept since every consumer needs them.
template <CoeffField F>
struct JackExpansion {
    Partition label;
    SymFunT<F> m_form{Basis::m};
    SymFunT<F> p_form{Basis::p};
    F norm = F::zero();
};

namespace detail {

template <CoeffField F>
struct JackWeightComponent {
    std::vector<JackExpansion<F>> items; // ordered as enumerate_partitions(weight)
    std::map<Partition, int> index;
};

// Gram–Schmidt along ascending reverse-lex order, a linear extension of
// dominance processed smallest first, so every earlier P_μ is available when
// λ is reached.
template <CoeffField F>
std::unique_ptr<JackWeightComponent<F>> build_jack_component(int weight) {
    auto component = std::make_unique<JackWeightComponent<F>>();
    std::vector<Partition> order = enumerate_partitions(weight);
    component->items.resize(order.size());
    for (size_t i = 0; i < order.size(); ++i)
        component->index[order[i]] = static_cast<int>(i);
    for (size_t pos = order.size(); pos-- > 0;) {
        const Partition& la = order[pos];
        SymFunT<F> v = to_p_basis(SymFunT<F>::unit(la, Basis::m));
        for (size_t prev = order.size(); prev-- > pos + 1;) {
            const JackExpansion<F>& built = component->items[prev];
            F proj = inner_product(v, built.p_form);
            if (!proj.is_zero())
                v -= (proj / built.norm) * built.p_form;
        }
        JackExpansion<F>& out = component->items[pos];
        out.label = la;
        out.p_form = v;
        out.m_form = to_m_basis(v);
        out.norm = inner_product(v, v);
        if (out.norm.is_zero())
            throw pole_error("degenerate Jack norm at weight " + std::to_string(weight));
        if (!(out.m_form.coeff(la) == F::one()))
            throw internal_error("Jack expansion lost unitriangular normalization");
    }
    return component;
}

template <CoeffField F>
const JackWeightComponent<F>& jack_component(int weight) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<JackWeightComponent<F>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(weight);
    if (it == cache.end())
        it = cache.emplace(weight, build_jack_component<F>(weight)).first;
    return *it->second;
}

} // namespace detail

template <CoeffField F>
const JackExpansion<F>& jack_P(const Partition& la) {
    const auto& component = detail::jack_component<F>(la.weight());
    return component.items[static_cast<size_t>(component.index.at(la))];
}

// All Jack functions of the given weight, in reverse lexicographic order.
template <CoeffField F>
const std::vector<JackExpansion<F>>& jack_weight_component(int weight) {
    return detail::jack_component<F>(weight).items;
}

// Coefficient of P_λ in p₁·P_μ, where λ is μ with part i (1-based,
// i ≤ ℓ(μ)+1) increased by one: the two products over j < i of the Pieri
// rule, with empty products equal to 1.
template <CoeffField F>
F pieri_up_coeff(const Partition& mu, int i) {
    Partition la = mu.with_incremented_part(i); // validates i
    const F alpha = F::alpha();
    F result = F::one();
    for (int j = 1; j < i; ++j) {
        F diff = F::from_int(la.part(i) - la.part(j));
        F offset = F::from_int(j - i);
        // [α(λ_i-λ_j)-i+j-1] / [α(λ_i-λ_j-1)-i+j]
        result = result * (alpha * diff + offset - F::one()) / (alpha * (diff - F::one()) + offset);
        // [α(λ_i-λ_j-1)-i+j+1] / [α(λ_i-λ_j)-i+j]
        result = result * (alpha * (diff - F::one()) + offset + F::one()) / (alpha * diff + offset);
    }
    return result;
}

// Coefficient of P_μ in ∂P_λ/∂p₁ = α⁻¹p₁*P_λ, where μ is λ with part i
// decreased by one; products run over j < λ_i against the conjugate λ'.
template <CoeffField F>
F pieri_down_coeff(const Partition& la, int i) {
    la.with_decremented_part(i); // validates i
    const Partition conj = la.conjugate();
    const F alpha = F::alpha();
    F result = F::one();
    int lai = la.part(i);
    for (int j = 1; j < lai; ++j) {
        F cj = F::from_int(conj.part(j) - i);
        F dj = F::from_int(lai - j);
        // [α(λ_i-j-1)+λ'_j-i+1] / [α(λ_i-j)+λ'_j-i]
        result = result * (alpha * (dj - F::one()) + cj + F::one()) / (alpha * dj + cj);
        // [α(λ_i-j+1)+λ'_j-i] / [α(λ_i-j)+λ'_j-i+1]
        result = result * (alpha * (dj + F::one()) + cj) / (alpha * dj + cj + F::one());
    }
    return result;
}

} // namespace jacksf
