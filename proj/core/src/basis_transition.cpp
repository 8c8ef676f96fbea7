#include "jacksf/basis_transition.hpp"

#include <memory>
#include <mutex>

namespace jacksf {

namespace {

std::unique_ptr<WeightTransition> build_transition(int weight) {
    auto table = std::make_unique<WeightTransition>();
    table->partitions = enumerate_partitions(weight);
    const size_t n = table->partitions.size();
    for (size_t i = 0; i < n; ++i)
        table->index[table->partitions[i]] = static_cast<int>(i);

    table->p_in_m.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i <= j; ++i)
            table->p_in_m[i][j] =
                Rat(static_cast<long>(refinement_count(table->partitions[i], table->partitions[j])));

    // Invert the upper-triangular refinement matrix by back-substitution.
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t j = n; j-- > 0;) {
        inv[j][j] = 1 / table->p_in_m[j][j];
        for (size_t i = j; i-- > 0;) {
            Rat acc(0);
            for (size_t t = i + 1; t <= j; ++t)
                acc += table->p_in_m[i][t] * inv[t][j];
            inv[i][j] = -acc / table->p_in_m[i][i];
        }
    }
    table->m_in_p.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            table->m_in_p[i][j] = inv[j][i];
    return table;
}

} // namespace

const WeightTransition& weight_transition(int weight) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<WeightTransition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(weight);
    if (it == cache.end())
        it = cache.emplace(weight, build_transition(weight)).first;
    return *it->second;
}

} // namespace jacksf
