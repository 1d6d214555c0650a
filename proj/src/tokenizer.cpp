#include "tusforge/tokenizer.hpp"

namespace tusforge {

namespace {

inline bool is_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// ASCII punctuation only; bytes >= 0x80 count as word characters so UTF-8
// sequences stay inside one token.
inline bool is_punct(unsigned char c) {
    return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
           (c >= '{' && c <= '~');
}

// Calls sink(begin, end) for each token, in order. Returns the token count.
template <typename Sink>
std::size_t scan_tokens(std::string_view text, Sink&& sink) {
    std::size_t n = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_space(c)) {
            ++i;
            continue;
        }
        std::size_t begin = i;
        if (is_punct(c)) {
            ++i;
        } else {
            while (i < text.size() && !is_space(static_cast<unsigned char>(text[i])) &&
                   !is_punct(static_cast<unsigned char>(text[i])))
                ++i;
        }
        sink(begin, i);
        ++n;
    }
    return n;
}

} // namespace

std::size_t WordPunctTokenizer::count(std::string_view text) const {
    return scan_tokens(text, [](std::size_t, std::size_t) {});
}

std::string WordPunctTokenizer::truncate(std::string_view text, std::size_t limit) const {
    std::size_t cut = text.size();
    std::size_t seen = 0;
    scan_tokens(text, [&](std::size_t begin, std::size_t) {
        if (seen == limit && cut == text.size())
            cut = begin;
        ++seen;
    });
    if (seen <= limit)
        return std::string(text);
    std::string_view kept = text.substr(0, cut);
    while (!kept.empty() && is_space(static_cast<unsigned char>(kept.back())))
        kept.remove_suffix(1);
    return std::string(kept);
}

std::size_t ByteRatioTokenizer::count(std::string_view text) const {
    return (text.size() + 3) / 4;
}

std::string ByteRatioTokenizer::truncate(std::string_view text, std::size_t limit) const {
    if (count(text) <= limit)
        return std::string(text);
    std::string_view kept = text.substr(0, limit * 4);
    // Do not end on a dangling UTF-8 lead/continuation run.
    while (!kept.empty() && (static_cast<unsigned char>(kept.back()) & 0xC0) == 0x80)
        kept.remove_suffix(1);
    if (!kept.empty() && static_cast<unsigned char>(kept.back()) >= 0xC0)
        kept.remove_suffix(1);
    return std::string(kept);
}

} // namespace tusforge
