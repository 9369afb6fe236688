#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace heomcast {

/// Multi-index (n_1, ..., n_N) of one auxiliary density operator.
struct HierarchyIndex {
    std::vector<int> n;
    int depth = 0;  // sum of entries
};

/// Flat enumeration of all multi-indices with depth <= K, graded-lex order
/// (by depth, then lexicographically ascending). Position 0 is the zero
/// index, whose operator is the reduced density matrix.
struct HierarchyLayout {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::size_t n_sites = 0;
    int depth = 0;
    std::vector<HierarchyIndex> indices;
    // raise[i * n_sites + j]: position of indices[i] with n_j + 1, or npos
    std::vector<std::size_t> raise_table;
    // lower[i * n_sites + j]: position of indices[i] with n_j - 1, or npos
    std::vector<std::size_t> lower_table;

    std::size_t size() const { return indices.size(); }
    std::size_t raise(std::size_t i, std::size_t j) const { return raise_table[i * n_sites + j]; }
    std::size_t lower(std::size_t i, std::size_t j) const { return lower_table[i * n_sites + j]; }
};

constexpr std::size_t kDefaultMemoryBudgetBytes = std::size_t(2) * 1024 * 1024 * 1024;

/// Builds the layout for `n_sites` baths truncated at depth K. The estimated
/// propagation footprint (six operator pools) is checked against
/// `memory_budget_bytes`; a capacity_error names the offending index count.
HierarchyLayout enumerate_hierarchy(std::size_t n_sites, int depth,
                                    std::size_t memory_budget_bytes = kDefaultMemoryBudgetBytes);

/// binomial(K + N, N): number of multi-indices with depth <= K.
std::size_t hierarchy_size(std::size_t n_sites, int depth);

} // namespace heomcast
