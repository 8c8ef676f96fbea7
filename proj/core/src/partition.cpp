#include "jacksf/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace jacksf {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    if (!parts_.empty() && parts_.back() < 0)
        throw argument_error("negative part in partition");
}

Partition Partition::parse(const std::string& text) {
    if (text == "-" || text.empty())
        return Partition();
    std::vector<int> parts;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            size_t pos = 0;
            int value = std::stoi(piece, &pos);
            if (pos != piece.size() || value <= 0)
                throw argument_error("bad partition part: " + piece);
            parts.push_back(value);
        } catch (const std::logic_error&) {
            throw argument_error("bad partition part: " + piece);
        }
    }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw argument_error("partition parts must be weakly decreasing: " + text);
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty())
        return "-";
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            out << ",";
        out << parts_[i];
    }
    return out.str();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1 || i > length())
        return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                conj[static_cast<size_t>(j)] += 1;
    }
    return Partition(std::move(conj));
}

Partition Partition::with_appended_one() const {
    std::vector<int> parts = parts_;
    parts.push_back(1);
    return Partition(std::move(parts));
}

Partition Partition::with_incremented_part(int i) const {
    if (i < 1 || i > length() + 1)
        throw argument_error("part index " + std::to_string(i) + " out of range");
    if (i > 1 && part(i - 1) <= part(i))
        throw argument_error("incrementing part " + std::to_string(i) + " of " + to_string() +
                             " does not give a partition");
    std::vector<int> parts = parts_;
    if (i == length() + 1)
        parts.push_back(1);
    else
        parts[static_cast<size_t>(i - 1)] += 1;
    return Partition(std::move(parts));
}

Partition Partition::with_decremented_part(int i) const {
    if (i < 1 || i > length())
        throw argument_error("part index " + std::to_string(i) + " out of range");
    if (i < length() && part(i) - 1 < part(i + 1))
        throw argument_error("decrementing part " + std::to_string(i) + " of " + to_string() +
                             " does not give a partition");
    std::vector<int> parts = parts_;
    parts[static_cast<size_t>(i - 1)] -= 1;
    return Partition(std::move(parts));
}

int Partition::multiplicity(int v) const {
    int count = 0;
    for (int p : parts_)
        count += (p == v) ? 1 : 0;
    return count;
}

bool dominance_leq(const Partition& mu, const Partition& la) {
    if (mu.weight() != la.weight())
        return false;
    int len = std::max(mu.length(), la.length());
    long long sum_mu = 0, sum_la = 0;
    for (int i = 1; i <= len; ++i) {
        sum_mu += mu.part(i);
        sum_la += la.part(i);
        if (sum_mu > sum_la)
            return false;
    }
    return true;
}

Rat z_of(const Partition& la) {
    Int result = 1;
    int i = 0;
    const auto& parts = la.parts();
    while (i < la.length()) {
        int j = i;
        while (j < la.length() && parts[static_cast<size_t>(j)] == parts[static_cast<size_t>(i)])
            ++j;
        unsigned mult = static_cast<unsigned>(j - i);
        Int vpow;
        mpz_ui_pow_ui(vpow.get_mpz_t(), static_cast<unsigned long>(parts[static_cast<size_t>(i)]), mult);
        result *= vpow * factorial(mult);
        i = j;
    }
    return Rat(result);
}

Rat c_of(const Partition& la) {
    Int result = 1;
    int i = 0;
    const auto& parts = la.parts();
    while (i < la.length()) {
        int j = i;
        while (j < la.length() && parts[static_cast<size_t>(j)] == parts[static_cast<size_t>(i)])
            ++j;
        result *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return Rat(result);
}

namespace {

// Backtracking over the positions of μ, largest parts first; remaining[i]
// is the unfilled capacity λ_i.
long long count_assignments(const std::vector<int>& mu_parts, size_t pos, std::vector<int>& remaining) {
    if (pos == mu_parts.size()) {
        for (int r : remaining)
            if (r != 0)
                return 0;
        return 1;
    }
    int value = mu_parts[pos];
    long long total = 0;
    for (size_t i = 0; i < remaining.size(); ++i) {
        if (remaining[i] >= value) {
            remaining[i] -= value;
            total += count_assignments(mu_parts, pos + 1, remaining);
            remaining[i] += value;
        }
    }
    return total;
}

} // namespace

long long refinement_count(const Partition& la, const Partition& mu) {
    if (la.weight() != mu.weight())
        return 0;
    if (la.empty())
        return 1; // the unique empty map
    std::vector<int> remaining = la.parts();
    return count_assignments(mu.parts(), 0, remaining);
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(std::vector<int>(prefix)));
        return;
    }
    for (int m = std::min(remaining, max_part); m >= 1; --m) {
        prefix.push_back(m);
        enumerate_rec(remaining - m, m, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> k) {
    if (n < 0 || (k && *k < 0))
        throw argument_error("enumerate_partitions requires n ≥ 0 and k ≥ 0");
    std::vector<Partition> all;
    std::vector<int> prefix;
    enumerate_rec(n, n == 0 ? 1 : n, prefix, all);
    if (!k)
        return all;
    std::vector<Partition> filtered;
    for (auto& p : all)
        if (p.length() == *k)
            filtered.push_back(std::move(p));
    return filtered;
}

} // namespace jacksf
