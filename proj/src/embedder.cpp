#include "tusforge/embedder.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <future>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "tusforge/errors.hpp"
#include "tusforge/rng.hpp"

namespace tusforge {

namespace {

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

void normalize_or_e0(std::vector<float>& v) {
    double sq = 0.0;
    for (float x : v)
        sq += static_cast<double>(x) * x;
    if (sq == 0.0) {
        v.assign(v.size(), 0.0f);
        v[0] = 1.0f;
        return;
    }
    double inv = 1.0 / std::sqrt(sq);
    for (float& x : v)
        x = static_cast<float>(x * inv);
}

} // namespace

std::vector<float> mock_embed(std::string_view text, std::size_t dim, std::uint64_t seed) {
    if (dim < 8)
        throw ConfigError("embedding dimension must be >= 8");
    std::vector<float> acc(dim, 0.0f);
    if (text.size() >= 3) {
        for (std::size_t i = 0; i + 3 <= text.size(); ++i) {
            char gram[3] = {ascii_lower(text[i]), ascii_lower(text[i + 1]),
                            ascii_lower(text[i + 2])};
            std::uint64_t h = fnv1a64(std::string_view(gram, 3), mix_u64(seed, 0xfeedULL));
            std::size_t bucket = static_cast<std::size_t>((h >> 1) % dim);
            acc[bucket] += (h & 1) ? 1.0f : -1.0f;
        }
    }
    normalize_or_e0(acc);
    return acc;
}

Provider::Provider(ProviderConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.dim < 8)
        throw ConfigError("provider dimension must be >= 8");
    if (cfg_.limit_n > cfg_.limit_m)
        throw ConfigError("provider limit N exceeds batch limit M");
}

std::size_t Provider::effective_limit_n() const {
    if (tokenizer().exact())
        return cfg_.limit_n;
    return static_cast<std::size_t>(static_cast<double>(cfg_.limit_n) * 0.9);
}

MockProvider::MockProvider(ProviderConfig cfg) : Provider(std::move(cfg)) {}

std::vector<std::vector<float>> MockProvider::embed_texts(const std::vector<std::string>& texts) {
    calls_.fetch_add(1);
    std::vector<std::vector<float>> out;
    out.reserve(texts.size());
    for (const auto& t : texts)
        out.push_back(mock_embed(t, cfg_.dim, cfg_.seed));
    return out;
}

RemoteProvider::RemoteProvider(ProviderConfig cfg) : Provider(std::move(cfg)) {
    std::string_view url = cfg_.endpoint;
    auto scheme_end = url.find("://");
    if (scheme_end == std::string_view::npos || url.substr(0, scheme_end) != "http")
        throw ConfigError("remote endpoint must be an http:// URL: " + cfg_.endpoint);
    auto rest = url.substr(scheme_end + 3);
    auto slash = rest.find('/');
    host_ = "http://" + std::string(rest.substr(0, slash));
    path_ = slash == std::string_view::npos ? "/" : std::string(rest.substr(slash));
}

std::vector<std::vector<float>> RemoteProvider::embed_texts(const std::vector<std::string>& texts) {
    nlohmann::json body;
    body["model"] = cfg_.model;
    body["input"] = texts;
    const std::string payload = body.dump();

    httplib::Headers headers;
    if (!cfg_.credential_env.empty()) {
        if (const char* secret = std::getenv(cfg_.credential_env.c_str()))
            headers.emplace("Authorization", std::string("Bearer ") + secret);
    }

    std::string last_error;
    for (int attempt = 0; attempt < 3; ++attempt) {
        if (attempt > 0)
            std::this_thread::sleep_for(
                std::chrono::milliseconds(cfg_.retry_backoff_ms << (attempt - 1)));
        calls_.fetch_add(1);
        httplib::Client client(host_);
        client.set_read_timeout(60, 0);
        auto res = client.Post(path_, headers, payload, "application/json");
        if (!res) {
            last_error = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status < 200 || res->status >= 300) {
            last_error = "http status " + std::to_string(res->status);
            continue;
        }
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(res->body);
        } catch (const nlohmann::json::exception& e) {
            throw ProviderError(std::string("unparseable embeddings response: ") + e.what());
        }
        if (!parsed.contains("data") || !parsed["data"].is_array() ||
            parsed["data"].size() != texts.size())
            throw ProviderError("embeddings response misaligned with input batch");
        std::vector<std::vector<float>> out(texts.size());
        for (const auto& item : parsed["data"]) {
            std::size_t index = item.value("index", out.size());
            if (index >= out.size() || !item.contains("embedding"))
                throw ProviderError("embeddings response misaligned with input batch");
            out[index] = item["embedding"].get<std::vector<float>>();
        }
        return out;
    }
    throw ProviderError("embeddings request failed after 3 attempts: " + last_error);
}

std::unique_ptr<Provider> make_provider(const ProviderConfig& cfg) {
    if (cfg.kind == ProviderKind::remote)
        return std::make_unique<RemoteProvider>(cfg);
    return std::make_unique<MockProvider>(cfg);
}

std::size_t count_tokens(std::string_view text, const Provider& provider) {
    return provider.tokenizer().count(text);
}

std::vector<EmbeddingRecord> embed_batch(const std::vector<Serialization>& batch,
                                         Provider& provider) {
    std::vector<std::string> texts;
    texts.reserve(batch.size());
    for (const auto& s : batch)
        texts.push_back(s.text);

    auto vectors = provider.embed_texts(texts);
    if (vectors.size() != batch.size())
        throw ProviderError("provider returned " + std::to_string(vectors.size()) +
                            " vectors for " + std::to_string(batch.size()) + " inputs");

    std::vector<EmbeddingRecord> out;
    out.reserve(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        if (vectors[i].size() != provider.config().dim)
            throw ProviderError("provider returned dimension " +
                                std::to_string(vectors[i].size()) + ", expected " +
                                std::to_string(provider.config().dim));
        normalize_or_e0(vectors[i]);
        out.push_back(EmbeddingRecord{batch[i].ref, std::move(vectors[i]),
                                      provider.config().model});
    }
    return out;
}

std::vector<EmbeddingRecord> embed_batches(const BatchPlan& plan, Provider& provider,
                                           std::size_t workers) {
    if (workers == 0)
        workers = 1;
    std::vector<std::future<std::vector<EmbeddingRecord>>> pending;
    std::vector<EmbeddingRecord> out;
    auto drain_one = [&] {
        auto records = pending.front().get();
        pending.erase(pending.begin());
        for (auto& r : records)
            out.push_back(std::move(r));
    };
    for (const auto& batch : plan.batches) {
        if (pending.size() >= workers)
            drain_one();
        pending.push_back(std::async(std::launch::async,
                                     [&provider, &batch] { return embed_batch(batch, provider); }));
    }
    while (!pending.empty())
        drain_one();
    return out;
}

} // namespace tusforge
