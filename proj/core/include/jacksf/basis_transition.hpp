#pragma once

#include <map>
#include <vector>

#include "jacksf/partition.hpp"

namespace jacksf {

// Transition data between the power-sum and monomial bases on one graded
// component of Λ.  All entries are rational: the matrices do not involve α.
//
// partitions are listed in reverse lexicographic order (largest first); both
// matrices are indexed by positions in that list.  p_in_m is the refinement
// matrix (upper triangular against the listing, diagonal c_λ); m_in_p is its
// inverse arranged so that m_{parts[i]} = Σ_j m_in_p[i][j] · p_{parts[j]}.
struct WeightTransition {
    std::vector<Partition> partitions;
    std::map<Partition, int> index;
    std::vector<std::vector<Rat>> p_in_m; // p_{parts[j]} = Σ_i p_in_m[i][j] · m_{parts[i]}
    std::vector<std::vector<Rat>> m_in_p;
};

// Shared write-once cache; safe for concurrent readers.
const WeightTransition& weight_transition(int weight);

} // namespace jacksf
