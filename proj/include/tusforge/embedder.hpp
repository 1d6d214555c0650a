#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tusforge/serializer.hpp"
#include "tusforge/tokenizer.hpp"

namespace tusforge {

enum class ProviderKind { mock, remote };

struct ProviderConfig {
    ProviderKind kind = ProviderKind::mock;
    std::string model = "mock-trigram";
    std::size_t dim = 256;
    std::size_t limit_n = 512;  // per-serialization token limit
    std::size_t limit_m = 4096; // per-batch token limit
    std::uint64_t seed = 0;     // hashing seed (mock only)
    std::string endpoint;       // remote only, e.g. http://host:8080/v1/embeddings
    std::string credential_env; // env var holding the bearer token; never persisted
    unsigned retry_backoff_ms = 100;
};

/// A fixed-dimension unit-norm vector plus the table identity it represents.
struct EmbeddingRecord {
    TableRef ref;
    std::vector<float> vector;
    std::string model_id;
};

/// Deterministic offline embedder: signed feature hashing of character
/// 3-grams of the lowercased text. Disjoint vocabularies land near-orthogonal
/// while shared content scores high, which is what the retrieval tests need.
/// All-zero accumulations map to the unit basis vector e_0.
std::vector<float> mock_embed(std::string_view text, std::size_t dim, std::uint64_t seed);

class Provider {
public:
    explicit Provider(ProviderConfig cfg);
    virtual ~Provider() = default;

    const ProviderConfig& config() const { return cfg_; }
    virtual const Tokenizer& tokenizer() const = 0;

    /// One API call: order-aligned raw vectors, one per input text.
    virtual std::vector<std::vector<float>> embed_texts(const std::vector<std::string>& texts) = 0;

    /// Per-serialization budget with the 0.9 safety factor applied when the
    /// local tokenizer only estimates the provider's counts.
    std::size_t effective_limit_n() const;

    std::size_t calls() const { return calls_.load(); }

protected:
    ProviderConfig cfg_;
    std::atomic<std::size_t> calls_{0};
};

class MockProvider final : public Provider {
public:
    explicit MockProvider(ProviderConfig cfg);
    const Tokenizer& tokenizer() const override { return tokenizer_; }
    std::vector<std::vector<float>> embed_texts(const std::vector<std::string>& texts) override;

private:
    WordPunctTokenizer tokenizer_;
};

/// HTTP embeddings client: POST {"model": ..., "input": [...]} and read back
/// order-aligned vectors from data[i].embedding. Transient failures are
/// retried (3 attempts, exponential backoff) before ProviderError.
class RemoteProvider final : public Provider {
public:
    explicit RemoteProvider(ProviderConfig cfg);
    const Tokenizer& tokenizer() const override { return tokenizer_; }
    std::vector<std::vector<float>> embed_texts(const std::vector<std::string>& texts) override;

private:
    ByteRatioTokenizer tokenizer_;
    std::string host_;
    std::string path_;
};

std::unique_ptr<Provider> make_provider(const ProviderConfig& cfg);

std::size_t count_tokens(std::string_view text, const Provider& provider);

/// Embed one batch (one provider call). Output records are order-aligned with
/// the inputs and re-normalized locally to unit length regardless of what the
/// provider returned.
std::vector<EmbeddingRecord> embed_batch(const std::vector<Serialization>& batch,
                                         Provider& provider);

/// Embed a whole plan with up to `workers` batches in flight; results are
/// returned in plan order.
std::vector<EmbeddingRecord> embed_batches(const BatchPlan& plan, Provider& provider,
                                           std::size_t workers = 4);

} // namespace tusforge
