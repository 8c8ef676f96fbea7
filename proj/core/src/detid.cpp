#include "jacksf/finite_n.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace jacksf {

using NF = NumericAlpha;

void validate_psi_instance(const PsiInstance& inst) {
    if (inst.xvals.empty())
        throw argument_error("PsiInstance needs at least one x value");
    for (size_t i = 0; i < inst.xvals.size(); ++i) {
        if (inst.xvals[i] == 0)
            throw argument_error("x values must be nonzero");
        for (size_t j = i + 1; j < inst.xvals.size(); ++j)
            if (inst.xvals[i] == inst.xvals[j])
                throw argument_error("x values must be pairwise distinct");
        for (const Rat& psi : inst.psivals)
            if (inst.xvals[i] == psi)
                throw argument_error("x values must differ from all ψ values");
    }
}

std::vector<std::vector<Rat>> psi_matrix(const PsiInstance& inst) {
    validate_psi_instance(inst);
    std::vector<std::vector<Rat>> psi(inst.xvals.size(),
                                      std::vector<Rat>(inst.psivals.size()));
    for (size_t i = 0; i < inst.xvals.size(); ++i)
        for (size_t l = 0; l < inst.psivals.size(); ++l)
            psi[i][l] = inst.xvals[i] / (inst.xvals[i] - inst.psivals[l]);
    return psi;
}

bool psi_matrix_satisfies_kk(const PsiInstance& inst) {
    auto psi = psi_matrix(inst);
    const auto& x = inst.xvals;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            for (size_t l = 0; l < inst.psivals.size(); ++l)
                if ((x[i] - x[j]) * psi[i][l] * psi[j][l] != x[i] * psi[j][l] - x[j] * psi[i][l])
                    return false;
    return true;
}

namespace {

// Sum over sets of k pairs {(i_1,j_1)..(i_k,j_k)} with distinct i's and
// distinct j's of Π_r Ψ_{i_r j_r}.  Pairs are chosen with strictly
// increasing i, which enumerates every admissible pair-set exactly once.
void pairset_layer_rec(const std::vector<std::vector<Rat>>& psi, int k, size_t start_i,
                       std::vector<bool>& used_j, const Rat& acc, Rat& total) {
    if (k == 0) {
        total += acc;
        return;
    }
    for (size_t i = start_i; i < psi.size(); ++i)
        for (size_t j = 0; j < used_j.size(); ++j) {
            if (used_j[j])
                continue;
            used_j[j] = true;
            pairset_layer_rec(psi, k - 1, i + 1, used_j, acc * psi[i][j], total);
            used_j[j] = false;
        }
}

// All k-element subsets of {0..limit-1} in increasing order.
void for_each_subset(int limit, int k, std::vector<int>& prefix,
                     const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(prefix.size()) == k) {
        fn(prefix);
        return;
    }
    int start = prefix.empty() ? 0 : prefix.back() + 1;
    for (int v = start; v <= limit - (k - static_cast<int>(prefix.size())); ++v) {
        prefix.push_back(v);
        for_each_subset(limit, k, prefix, fn);
        prefix.pop_back();
    }
}

} // namespace

Rat detid_rhs_pairsets_layer(const PsiInstance& inst, int k) {
    auto psi = psi_matrix(inst);
    if (k == 0)
        return Rat(1);
    if (k > static_cast<int>(inst.xvals.size()) || k > static_cast<int>(inst.psivals.size()))
        return Rat(0);
    Rat total(0);
    std::vector<bool> used_j(inst.psivals.size(), false);
    pairset_layer_rec(psi, k, 0, used_j, Rat(1), total);
    return total;
}

Rat detid_rhs_symmetrized_layer(const PsiInstance& inst, int k) {
    auto psi = psi_matrix(inst);
    if (k == 0)
        return Rat(1);
    const int n = static_cast<int>(inst.xvals.size());
    const int m = static_cast<int>(inst.psivals.size());
    if (k > n || k > m)
        return Rat(0);
    Rat total(0);
    std::vector<int> iset, jset;
    for_each_subset(n, k, iset, [&](const std::vector<int>& rows) {
        for_each_subset(m, k, jset, [&](const std::vector<int>& cols) {
            std::vector<int> arrangement = cols;
            std::sort(arrangement.begin(), arrangement.end());
            do {
                Rat prod(1);
                for (int r = 0; r < k; ++r)
                    prod *= psi[static_cast<size_t>(rows[static_cast<size_t>(r)])]
                               [static_cast<size_t>(arrangement[static_cast<size_t>(r)])];
                total += prod;
            } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        });
    });
    return total;
}

DetIdSides detid_sides(const PsiInstance& inst) {
    auto psi = psi_matrix(inst);
    const int n = static_cast<int>(inst.xvals.size());

    std::vector<Rat> row_sums(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i)
        for (const Rat& v : psi[static_cast<size_t>(i)])
            row_sums[static_cast<size_t>(i)] += v;

    // Determinant by permutation expansion; entries are linear in u.
    UPoly<NF> lhs;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = detail::permutation_sign(perm);
        UPoly<NF> prod = UPoly<NF>::one();
        for (int i = 0; i < n; ++i) {
            int j = perm[static_cast<size_t>(i)]; // column, 0-based
            Rat xpow = 1;
            for (int t = 0; t < n - 1 - j; ++t)
                xpow *= inst.xvals[static_cast<size_t>(i)];
            // x_i^{N-j} (u + j - 1 + Σ_l Ψ_{il}) with 1-based j
            UPoly<NF> factor =
                UPoly<NF>::linear(NF(Rat(j) + row_sums[static_cast<size_t>(i)]));
            prod = prod * (NF(xpow) * factor);
        }
        lhs = (sign > 0) ? lhs + prod : lhs - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Rat delta(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            delta *= inst.xvals[static_cast<size_t>(i)] - inst.xvals[static_cast<size_t>(j)];

    UPoly<NF> rhs;
    for (int k = 0; k <= n; ++k) {
        Rat layer = detid_rhs_pairsets_layer(inst, k);
        if (layer == 0)
            continue;
        rhs = rhs + NF(delta * layer) * UPoly<NF>::rising_product(k, n);
    }
    return {std::move(lhs), std::move(rhs)};
}

bool detid_check(const PsiInstance& inst) {
    DetIdSides sides = detid_sides(inst);
    return sides.lhs == sides.rhs;
}

namespace {

// y-degree of an exponent vector in 2N variables (y's occupy the top half).
int ydeg_of(const std::vector<int>& exps, int nvars) {
    int d = 0;
    for (int v = nvars; v < 2 * nvars; ++v)
        d += exps[static_cast<size_t>(v)];
    return d;
}

MultiPoly<NF> truncate_ydeg(const MultiPoly<NF>& p, int nvars, int ydeg) {
    MultiPoly<NF> result(2 * nvars);
    for (const auto& [e, c] : p.terms())
        if (ydeg_of(e, nvars) <= ydeg)
            result.add_term(e, c);
    return result;
}

// m_λ over a chosen block of the 2N variables.
MultiPoly<NF> monomial_on_block(const Partition& la, int nvars, bool yblock) {
    MultiPoly<NF> inner = monomial_poly<NF>(la, nvars);
    MultiPoly<NF> result(2 * nvars);
    for (const auto& [e, c] : inner.terms()) {
        std::vector<int> wide(static_cast<size_t>(2 * nvars), 0);
        for (int v = 0; v < nvars; ++v)
            wide[static_cast<size_t>(yblock ? nvars + v : v)] = e[static_cast<size_t>(v)];
        result.add_term(std::move(wide), c);
    }
    return result;
}

} // namespace

DetIdSeriesSides detid_series_sides(int nvars, int ydeg) {
    if (nvars < 1 || ydeg < 1)
        throw argument_error("series verification needs N ≥ 1 and ydeg ≥ 1");
    const int n = nvars;
    const int w = 2 * n;

    // Ψ(x_i, y_l) = -Σ_{d=1}^{ydeg} (x_i y_l)^d
    auto psi_series = [&](int i, int l) {
        MultiPoly<NF> p(w);
        for (int d = 1; d <= ydeg; ++d) {
            std::vector<int> e(static_cast<size_t>(w), 0);
            e[static_cast<size_t>(i)] = d;
            e[static_cast<size_t>(n + l)] = d;
            p.add_term(std::move(e), -NF::one());
        }
        return p;
    };

    std::vector<MultiPoly<NF>> row_sums;
    for (int i = 0; i < n; ++i) {
        MultiPoly<NF> s(w);
        for (int l = 0; l < n; ++l)
            s += psi_series(i, l);
        row_sums.push_back(std::move(s));
    }

    UPolyOver<NF> lhs;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = detail::permutation_sign(perm);
        UPolyOver<NF> g = {MultiPoly<NF>::one(w)};
        for (int i = 0; i < n; ++i) {
            int j = perm[static_cast<size_t>(i)];
            MultiPoly<NF> constant_part =
                NF::from_int(j) * MultiPoly<NF>::one(w) + row_sums[static_cast<size_t>(i)];
            UPolyOver<NF> next(g.size() + 1, MultiPoly<NF>(w));
            for (size_t t = 0; t < g.size(); ++t) {
                MultiPoly<NF> scaled =
                    truncate_ydeg(g[t] * constant_part, n, ydeg).multiply_by_power(i, n - 1 - j);
                next[t] += scaled;
                next[t + 1] += g[t].multiply_by_power(i, n - 1 - j);
            }
            g = std::move(next);
        }
        if (lhs.size() < g.size())
            lhs.resize(g.size(), MultiPoly<NF>(w));
        for (size_t t = 0; t < g.size(); ++t) {
            if (sign > 0)
                lhs[t] += g[t];
            else
                lhs[t] -= g[t];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    detail::trim_ucoeffs(lhs);

    MultiPoly<NF> delta(w);
    {
        MultiPoly<NF> acc = MultiPoly<NF>::one(w);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                acc = acc * (MultiPoly<NF>::variable(i, w) - MultiPoly<NF>::variable(j, w));
        delta = std::move(acc);
    }

    UPolyOver<NF> rhs;
    for (int k = 0; k <= n; ++k) {
        MultiPoly<NF> layer(w);
        if (k == 0) {
            layer = MultiPoly<NF>::one(w);
        } else {
            for (int weight = k; weight <= ydeg; ++weight) {
                for (const Partition& la : enumerate_partitions(weight, k)) {
                    MultiPoly<NF> pair =
                        monomial_on_block(la, n, false) * monomial_on_block(la, n, true);
                    layer += NF::from_rat(c_of(la)) * pair;
                }
            }
            if (k % 2 == 1)
                layer = -layer;
        }
        MultiPoly<NF> scaled = delta * layer;
        UPoly<NF> rising = UPoly<NF>::rising_product(k, n);
        if (rhs.size() < static_cast<size_t>(rising.degree()) + 1)
            rhs.resize(static_cast<size_t>(rising.degree()) + 1, MultiPoly<NF>(w));
        for (int t = 0; t <= rising.degree(); ++t)
            rhs[static_cast<size_t>(t)] += rising.coeff(t) * scaled;
    }
    detail::trim_ucoeffs(rhs);
    return {std::move(lhs), std::move(rhs)};
}

bool detid_check_series(int nvars, int ydeg) {
    DetIdSeriesSides sides = detid_series_sides(nvars, ydeg);
    return sides.lhs == sides.rhs;
}

long long detid_term_count_closed_form(int nvars, int k) {
    long long fact = 1;
    for (int t = 2; t <= nvars - 1; ++t)
        fact *= t;
    return fact * (nvars - 2) * (nvars - k) * k / 2;
}

long long detid_term_count(int nvars, int k) {
    if (nvars < 2 || k < 1 || k > nvars - 1)
        throw argument_error("term count requires N ≥ 2 and 1 ≤ k ≤ N-1");
    // Fixed distinct indices i_1..i_k = 0..k-1; quadruples (i, s, σ, r) with
    // σ(i) = 1 and r ranging over 2..σ(i_s)-1 (1-based values of σ).
    long long count = 0;
    std::vector<int> perm(static_cast<size_t>(nvars));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int i = k; i < nvars; ++i) {
            if (perm[static_cast<size_t>(i)] != 0)
                continue;
            for (int s = 0; s < k; ++s) {
                int sigma_is = perm[static_cast<size_t>(s)] + 1;
                if (sigma_is >= 3)
                    count += sigma_is - 2;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    long long closed = detid_term_count_closed_form(nvars, k);
    if (count != closed)
        throw internal_error("term-count enumeration disagrees with the closed form");
    return count;
}

PsiInstance random_psi_instance(int nvals, int mvals, unsigned long seed) {
    if (nvals < 1 || mvals < 0)
        throw argument_error("instance needs N ≥ 1 and M ≥ 0");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 9);
    auto draw = [&]() { return Rat(num_dist(rng), den_dist(rng)); };
    PsiInstance inst;
    while (static_cast<int>(inst.xvals.size()) < nvals) {
        Rat x = draw();
        x.canonicalize();
        if (x == 0)
            continue;
        bool dup = false;
        for (const Rat& seen : inst.xvals)
            dup = dup || seen == x;
        if (!dup)
            inst.xvals.push_back(x);
    }
    while (static_cast<int>(inst.psivals.size()) < mvals) {
        Rat psi = draw();
        psi.canonicalize();
        bool clash = false;
        for (const Rat& x : inst.xvals)
            clash = clash || x == psi;
        if (!clash)
            inst.psivals.push_back(psi);
    }
    return inst;
}

} // namespace jacksf
