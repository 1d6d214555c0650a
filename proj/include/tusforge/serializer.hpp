#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tusforge/rng.hpp"
#include "tusforge/table.hpp"
#include "tusforge/tokenizer.hpp"

namespace tusforge {

/// Row-sampling and rendering knobs. Identical configs produce identical
/// serializations; the store manifest pins them for the online phase.
struct SamplerConfig {
    std::size_t rows = 32;
    std::uint64_t seed = 0;
    std::string sep = ",";
    std::string newline = "\n";
};

/// One token-bounded text rendering of sampled table rows, tagged with the
/// identity of the table it came from.
struct Serialization {
    TableRef ref;
    std::string text;
    std::size_t token_count = 0;
    bool truncated = false;
};

struct BatchPlan {
    std::vector<std::vector<Serialization>> batches;
    std::size_t limit_n = 0; // per-serialization token budget
    std::size_t limit_m = 0; // per-batch token budget
};

/// Sample up to cfg.rows rows. Tables at or under the budget are returned
/// whole in original order; larger tables yield cfg.rows distinct rows drawn
/// uniformly without replacement, in draw order. Seeding mixes cfg.seed with
/// the table's content digest, so the draw depends only on content.
std::vector<std::vector<std::string>> sample_rows(const Table& table, const SamplerConfig& cfg);

/// Join cell values with cfg.sep inside a row and cfg.newline between rows.
std::string serialize_rows(std::span<const std::vector<std::string>> rows,
                           const SamplerConfig& cfg);

/// Enforce the per-serialization token budget. Over-limit multi-row texts are
/// end-truncated at token granularity; a single over-limit row has its values
/// shuffled (seeded) and re-joined before truncation.
Serialization finalize(Serialization s, std::size_t limit_n, const Tokenizer& tokenizer,
                       const SamplerConfig& cfg, SplitMix64& rng);

/// sample -> serialize -> count -> finalize, the full per-table path.
Serialization serialize_table(const Table& table, const SamplerConfig& cfg,
                              const Tokenizer& tokenizer, std::size_t limit_n);

/// Greedy batch packing: serializations are kept in input order and appended
/// to the current batch until the next one would push its token sum past
/// limit_m, which closes the batch. Requires limit_n <= limit_m and every
/// input finalized to <= limit_n tokens (ConfigError otherwise).
BatchPlan greedy_batch(std::vector<Serialization> serializations, std::size_t limit_n,
                       std::size_t limit_m);

} // namespace tusforge
