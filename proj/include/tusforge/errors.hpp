#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tusforge {

/// Base of all domain errors. `code()` is the stable machine-parseable
/// identifier the CLI prints on stderr (one line, `E_X: message`).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct IoError : Error {
    explicit IoError(const std::string& m) : Error("E_IO", m) {}
};

struct MalformedTableError : Error {
    explicit MalformedTableError(const std::string& m) : Error("E_MALFORMED_TABLE", m) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error("E_CONFIG", m) {}
};

struct ProviderError : Error {
    explicit ProviderError(const std::string& m) : Error("E_PROVIDER", m) {}
};

struct DuplicateError : Error {
    explicit DuplicateError(const std::string& m) : Error("E_DUPLICATE", m) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& m) : Error("E_DIMENSION", m) {}
};

struct StoreNotFoundError : Error {
    explicit StoreNotFoundError(const std::string& m) : Error("E_STORE_NOT_FOUND", m) {}
};

struct CorruptStoreError : Error {
    explicit CorruptStoreError(const std::string& m) : Error("E_CORRUPT_STORE", m) {}
};

struct CorpusError : Error {
    explicit CorpusError(const std::string& m) : Error("E_CORPUS", m) {}
};

struct EvalError : Error {
    explicit EvalError(const std::string& m) : Error("E_EVAL", m) {}
};

/// Raised by ap_at_k for queries with an empty ground-truth set; callers
/// exclude such queries from averages instead of treating this as failure.
struct ExcludedQueryError : Error {
    explicit ExcludedQueryError(const std::string& m) : Error("E_EXCLUDED_QUERY", m) {}
};

} // namespace tusforge
