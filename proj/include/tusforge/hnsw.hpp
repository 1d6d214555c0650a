#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tusforge {

struct HnswParams {
    std::size_t max_connections = 16; // M; layer 0 allows 2M before pruning
    std::size_t ef_construction = 200;
    std::size_t ef_search = 64; // effective breadth at query is max(ef_search, 4k)
};

/// Hierarchical navigable small world graph over vectors owned elsewhere.
/// Node i reads its vector at base + i * dim; the base pointer is passed per
/// call so the owner is free to grow or move its storage between calls.
/// Construction is deterministic: level draws are seeded by (seed, node id)
/// and all tie-breaks are by node id, so re-inserting the same vectors in the
/// same order reproduces the graph bit for bit.
class HnswGraph {
public:
    HnswGraph(std::size_t dim, HnswParams params, bool l2_distance, std::uint64_t seed);

    /// Add node `id` (must equal size()). O(ef_construction * log n) distance
    /// evaluations against existing nodes only.
    void insert(const float* base, std::size_t id);

    /// Greedy descent + beam search. Returns up to k node ids ordered by
    /// ascending distance (ties by ascending id).
    std::vector<std::size_t> search(const float* base, const float* query, std::size_t k,
                                    std::size_t ef) const;

    std::size_t size() const { return nodes_.size(); }

private:
    struct Node {
        int level = 0;
        std::vector<std::vector<std::uint32_t>> neighbors; // per level
    };

    float dist(const float* a, const float* b) const;
    int sample_level(std::size_t id) const;
    std::size_t greedy_descend(const float* base, const float* query, std::size_t entry,
                               int level) const;
    // Beam search on one level; results ascending by (distance, id).
    std::vector<std::pair<float, std::uint32_t>> search_layer(const float* base,
                                                              const float* query,
                                                              std::size_t entry, std::size_t ef,
                                                              int level) const;
    std::vector<std::uint32_t> select_neighbors(const float* base,
                                                const std::vector<std::pair<float, std::uint32_t>>&
                                                    candidates,
                                                std::size_t m) const;
    void prune_node(const float* base, std::uint32_t id, int level);

    std::size_t dim_;
    HnswParams params_;
    bool l2_;
    std::uint64_t seed_;
    double level_mult_;
    std::vector<Node> nodes_;
    std::size_t entry_point_ = 0;
    int max_level_ = -1;
};

} // namespace tusforge
