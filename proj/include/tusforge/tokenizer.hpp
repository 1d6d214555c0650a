#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace tusforge {

/// Token-counting contract: count("") == 0 and count is monotone under
/// concatenation. truncate() returns the longest prefix that still counts
/// within the limit, cutting only at token boundaries.
class Tokenizer {
public:
    virtual ~Tokenizer() = default;

    virtual std::string_view name() const = 0;
    virtual std::size_t count(std::string_view text) const = 0;
    virtual std::string truncate(std::string_view text, std::size_t limit) const = 0;

    /// Exact tokenizers count the provider's real tokens; estimated ones get
    /// a safety margin applied to the per-serialization limit.
    virtual bool exact() const = 0;
};

/// Deterministic stand-in for a model's native tokenizer: whitespace-split
/// words, with every punctuation character as its own token.
class WordPunctTokenizer final : public Tokenizer {
public:
    std::string_view name() const override { return "wordpunct"; }
    std::size_t count(std::string_view text) const override;
    std::string truncate(std::string_view text, std::size_t limit) const override;
    bool exact() const override { return true; }
};

/// ceil(bytes / 4) estimate for remote providers without a local tokenizer.
/// Truncation backs off to a UTF-8 boundary so cuts never split a character.
class ByteRatioTokenizer final : public Tokenizer {
public:
    std::string_view name() const override { return "byte-ratio"; }
    std::size_t count(std::string_view text) const override;
    std::string truncate(std::string_view text, std::size_t limit) const override;
    bool exact() const override { return false; }
};

} // namespace tusforge
