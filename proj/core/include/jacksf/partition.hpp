#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "jacksf/rational.hpp"

namespace jacksf {

// Integer partition: weakly decreasing positive parts.  The empty partition
// (length 0, weight 0) is the default value.  Trailing zeros are never stored,
// so partitions are canonical keys for sparse maps.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts); // sorted and zero-stripped here

    // Text form "3,1,1"; the empty partition is "-".
    static Partition parse(const std::string& text);
    std::string to_string() const;

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    // 1-based part access; indices beyond the length read as 0.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    Partition with_appended_one() const; // μ ⊔ 1

    // Partition with part i (1-based) increased by one; i may be length()+1.
    // Throws argument_error when the result would not be a partition.
    Partition with_incremented_part(int i) const;
    // Partition with part i (1-based) decreased by one; throws argument_error
    // when invalid.
    Partition with_decremented_part(int i) const;

    // Multiplicity of the value v among the parts.
    int multiplicity(int v) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    // Lexicographic comparison of part sequences; descending order under this
    // comparison is the reverse lexicographic listing of partitions.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Orders partitions reverse-lexicographically (largest first); a linear
// extension of dominance on each weight component.
struct PartitionRevLexGreater {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

// true iff μ ≤ λ in dominance order.  Unequal weights compare as false.
bool dominance_leq(const Partition& mu, const Partition& la);

// z_λ = 1^{k₁}k₁!·2^{k₂}k₂!·…  with k_v the multiplicity of part v.
Rat z_of(const Partition& la);

// c_λ = k₁!·k₂!·…
Rat c_of(const Partition& la);

// R_λμ: number of maps θ : {1..ℓ(μ)} → {1,2,...} with Σ_{θ(j)=i} μ_j = λ_i.
// Zero when |λ| ≠ |μ| or μ is not dominated by λ.
long long refinement_count(const Partition& la, const Partition& mu);

// All partitions of n in reverse lexicographic order, optionally restricted
// to length exactly k.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> k = std::nullopt);

} // namespace jacksf
