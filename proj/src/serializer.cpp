#include "tusforge/serializer.hpp"

#include "tusforge/errors.hpp"

namespace tusforge {

std::vector<std::vector<std::string>> sample_rows(const Table& table, const SamplerConfig& cfg) {
    if (table.n_rows() <= cfg.rows)
        return table.rows;
    SplitMix64 rng(mix_u64(cfg.seed, table.content_digest()));
    auto picks = rng.sample_indices(table.n_rows(), cfg.rows);
    std::vector<std::vector<std::string>> out;
    out.reserve(picks.size());
    for (std::size_t i : picks)
        out.push_back(table.rows[i]);
    return out;
}

std::string serialize_rows(std::span<const std::vector<std::string>> rows,
                           const SamplerConfig& cfg) {
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r)
            out += cfg.newline;
        const auto& row = rows[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += cfg.sep;
            out += row[c];
        }
    }
    return out;
}

Serialization finalize(Serialization s, std::size_t limit_n, const Tokenizer& tokenizer,
                       const SamplerConfig& cfg, SplitMix64& rng) {
    s.token_count = tokenizer.count(s.text);
    if (s.token_count <= limit_n)
        return s;

    bool single_row = s.text.find(cfg.newline) == std::string::npos;
    if (single_row && !cfg.sep.empty()) {
        // One row alone blows the budget: shuffle its values first so the
        // surviving prefix is not biased toward the leading columns.
        std::vector<std::string> cells;
        std::size_t pos = 0;
        while (true) {
            std::size_t next = s.text.find(cfg.sep, pos);
            if (next == std::string::npos) {
                cells.push_back(s.text.substr(pos));
                break;
            }
            cells.push_back(s.text.substr(pos, next - pos));
            pos = next + cfg.sep.size();
        }
        rng.shuffle(cells);
        std::string joined;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                joined += cfg.sep;
            joined += cells[i];
        }
        s.text = std::move(joined);
    }
    s.text = tokenizer.truncate(s.text, limit_n);
    s.token_count = tokenizer.count(s.text);
    s.truncated = true;
    return s;
}

Serialization serialize_table(const Table& table, const SamplerConfig& cfg,
                              const Tokenizer& tokenizer, std::size_t limit_n) {
    if (limit_n < 1)
        throw ConfigError("serialization token limit must be >= 1");
    if (cfg.rows < 1)
        throw ConfigError("sampler row count must be >= 1");
    if (cfg.sep == cfg.newline)
        throw ConfigError("sampler separator and newline must differ");
    auto rows = sample_rows(table, cfg);
    Serialization s;
    s.ref = table.ref;
    s.text = serialize_rows(rows, cfg);
    SplitMix64 rng(mix_u64(cfg.seed, table.content_digest()) ^ 0x5e5ea11ced00dULL);
    return finalize(std::move(s), limit_n, tokenizer, cfg, rng);
}

BatchPlan greedy_batch(std::vector<Serialization> serializations, std::size_t limit_n,
                       std::size_t limit_m) {
    if (limit_n > limit_m)
        throw ConfigError("per-serialization limit exceeds batch limit");
    for (const auto& s : serializations)
        if (s.token_count > limit_n)
            throw ConfigError("serialization " + s.ref.composite() + " exceeds token limit");

    BatchPlan plan;
    plan.limit_n = limit_n;
    plan.limit_m = limit_m;
    std::vector<Serialization> batch;
    std::size_t tokens = 0;
    for (auto& s : serializations) {
        if (tokens + s.token_count > limit_m) {
            plan.batches.push_back(std::move(batch));
            batch.clear();
            tokens = 0;
        }
        tokens += s.token_count;
        batch.push_back(std::move(s));
    }
    if (!batch.empty())
        plan.batches.push_back(std::move(batch));
    return plan;
}

} // namespace tusforge
