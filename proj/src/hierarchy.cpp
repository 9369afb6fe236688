#include "heomcast/hierarchy.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "heomcast/errors.hpp"

namespace heomcast {

std::size_t hierarchy_size(std::size_t n_sites, int depth) {
    // binomial(depth + n_sites, n_sites) with overflow-safe ordering
    std::size_t count = 1;
    for (std::size_t i = 1; i <= n_sites; ++i)
        count = count * (static_cast<std::size_t>(depth) + i) / i;
    return count;
}

namespace {

// packs a multi-index into a hash key; entries fit in 8 bits for any depth
// this artifact runs at
std::uint64_t pack_key(const std::vector<int>& n) {
    std::uint64_t key = 0;
    for (int v : n) key = (key << 8) | static_cast<std::uint64_t>(v & 0xff);
    return key;
}

void emit_depth(std::vector<int>& current, std::size_t site, int remaining,
                std::vector<HierarchyIndex>& out) {
    if (site + 1 == current.size()) {
        current[site] = remaining;
        int depth = 0;
        for (int v : current) depth += v;
        out.push_back({current, depth});
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        current[site] = v;
        emit_depth(current, site + 1, remaining - v, out);
    }
}

} // namespace

HierarchyLayout enumerate_hierarchy(std::size_t n_sites, int depth,
                                    std::size_t memory_budget_bytes) {
    if (n_sites < 1) throw std::invalid_argument("enumerate_hierarchy: n_sites must be >= 1");
    if (depth < 0) throw std::invalid_argument("enumerate_hierarchy: depth must be >= 0");
    if (depth > 255) throw std::invalid_argument("enumerate_hierarchy: depth too large");

    const std::size_t count = hierarchy_size(n_sites, depth);
    // one complex matrix per index in each of the six propagation pools
    const std::size_t bytes = count * n_sites * n_sites * sizeof(std::complex<double>) * 6;
    if (bytes > memory_budget_bytes)
        throw capacity_error("hierarchy of " + std::to_string(count) + " indices needs ~" +
                                 std::to_string(bytes / (1024 * 1024)) +
                                 " MiB, over the budget of " +
                                 std::to_string(memory_budget_bytes / (1024 * 1024)) + " MiB",
                             count, bytes);

    HierarchyLayout layout;
    layout.n_sites = n_sites;
    layout.depth = depth;
    layout.indices.reserve(count);

    std::vector<int> current(n_sites, 0);
    for (int g = 0; g <= depth; ++g) emit_depth(current, 0, g, layout.indices);

    std::unordered_map<std::uint64_t, std::size_t> position;
    position.reserve(layout.indices.size() * 2);
    for (std::size_t i = 0; i < layout.indices.size(); ++i)
        position.emplace(pack_key(layout.indices[i].n), i);

    layout.raise_table.assign(layout.indices.size() * n_sites, HierarchyLayout::npos);
    layout.lower_table.assign(layout.indices.size() * n_sites, HierarchyLayout::npos);
    std::vector<int> neighbor;
    for (std::size_t i = 0; i < layout.indices.size(); ++i) {
        for (std::size_t j = 0; j < n_sites; ++j) {
            neighbor = layout.indices[i].n;
            neighbor[j] += 1;
            if (layout.indices[i].depth + 1 <= depth)
                layout.raise_table[i * n_sites + j] = position.at(pack_key(neighbor));
            if (layout.indices[i].n[j] > 0) {
                neighbor[j] -= 2;
                layout.lower_table[i * n_sites + j] = position.at(pack_key(neighbor));
            }
        }
    }
    return layout;
}

} // namespace heomcast
