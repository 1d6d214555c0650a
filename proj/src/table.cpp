#include "tusforge/table.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "tusforge/errors.hpp"
#include "tusforge/rng.hpp"

namespace tusforge {

namespace {

// Invalid UTF-8 bytes are replaced with U+FFFD; data lakes are uncurated.
std::string sanitize_utf8(std::string_view in) {
    static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
    std::string out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        unsigned char c = static_cast<unsigned char>(in[i]);
        std::size_t len = 0;
        if (c < 0x80)
            len = 1;
        else if ((c & 0xE0) == 0xC0)
            len = 2;
        else if ((c & 0xF0) == 0xE0)
            len = 3;
        else if ((c & 0xF8) == 0xF0)
            len = 4;
        if (len == 0 || i + len > in.size()) {
            out += kReplacement;
            ++i;
            continue;
        }
        bool ok = true;
        for (std::size_t j = 1; j < len; ++j)
            if ((static_cast<unsigned char>(in[i + j]) & 0xC0) != 0x80)
                ok = false;
        if (!ok) {
            out += kReplacement;
            ++i;
            continue;
        }
        out.append(in.substr(i, len));
        i += len;
    }
    return out;
}

// RFC-4180-ish row splitter: quoted fields with "" escapes, LF or CRLF rows.
std::vector<std::vector<std::string>> split_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool in_quotes = false;
    bool row_has_content = false;

    auto end_cell = [&] {
        row.push_back(std::move(cell));
        cell.clear();
    };
    auto end_row = [&] {
        end_cell();
        // Fully blank lines are skipped; they are separators, not 1-cell rows.
        if (row.size() > 1 || !row[0].empty() || row_has_content)
            rows.push_back(std::move(row));
        row.clear();
        row_has_content = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cell += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            if (cell.empty()) {
                in_quotes = true;
                row_has_content = true;
            } else {
                cell += c;
            }
            break;
        case ',':
            end_cell();
            break;
        case '\r':
            if (i + 1 < text.size() && text[i + 1] == '\n')
                break; // consumed with the \n
            end_row();
            break;
        case '\n':
            end_row();
            break;
        default:
            cell += c;
        }
    }
    if (!cell.empty() || !row.empty() || row_has_content)
        end_row(); // file without trailing newline
    return rows;
}

std::string synthetic_column(std::size_t i) {
    return "col_" + std::to_string(i);
}

} // namespace

bool cell_is_numeric(std::string_view cell) {
    std::size_t b = 0, e = cell.size();
    while (b < e && std::isspace(static_cast<unsigned char>(cell[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(cell[e - 1])))
        --e;
    if (b == e)
        return false;
    double value;
    auto [ptr, ec] = std::from_chars(cell.data() + b, cell.data() + e, value);
    return ec == std::errc() && ptr == cell.data() + e;
}

std::uint64_t Table::content_digest() const {
    std::uint64_t h = fnv1a64("table");
    h = mix_u64(h, n_cols());
    for (const auto& row : rows) {
        for (const auto& cell : row) {
            h = fnv1a64(cell, h);
            h = fnv1a64("\x1f", h); // cell boundary
        }
        h = fnv1a64("\x1e", h); // row boundary
    }
    return h;
}

Table parse_table(std::string_view content, TableRef ref) {
    auto raw_rows = split_csv(sanitize_utf8(content));
    if (raw_rows.empty())
        throw MalformedTableError("empty table: " + ref.composite());

    std::size_t n_cols = 0;
    for (const auto& r : raw_rows)
        n_cols = std::max(n_cols, r.size());
    if (n_cols == 0)
        throw MalformedTableError("zero columns: " + ref.composite());

    for (auto& r : raw_rows)
        r.resize(n_cols); // pad ragged rows with empty cells

    // Header rule: the first row, and only the first row, has no numeric cell.
    auto numeric_free = [](const std::vector<std::string>& r) {
        for (const auto& c : r)
            if (cell_is_numeric(c))
                return false;
        return true;
    };
    bool header = numeric_free(raw_rows[0]);
    if (header) {
        for (std::size_t i = 1; i < raw_rows.size() && header; ++i)
            if (numeric_free(raw_rows[i]))
                header = false;
    }

    Table table;
    table.ref = std::move(ref);
    if (header) {
        table.columns = raw_rows[0];
        raw_rows.erase(raw_rows.begin());
        // Blank or duplicate header cells get synthetic fallbacks so column
        // names stay unique within the table.
        std::set<std::string> seen;
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (table.columns[i].empty())
                table.columns[i] = synthetic_column(i);
            while (!seen.insert(table.columns[i]).second)
                table.columns[i] += "_" + std::to_string(i);
        }
    } else {
        table.columns.reserve(n_cols);
        for (std::size_t i = 0; i < n_cols; ++i)
            table.columns.push_back(synthetic_column(i));
    }
    table.rows = std::move(raw_rows);
    return table;
}

Table load_table(const std::filesystem::path& path, std::string_view lake_id) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("read failure on " + path.string());
    TableRef ref{std::string(lake_id), path.stem().string()};
    return parse_table(buf.str(), std::move(ref));
}

void write_table_csv(const Table& table, const std::filesystem::path& path, bool with_header) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write " + path.string());
    auto write_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out << ',';
            const std::string& c = cells[i];
            if (c.find_first_of(",\"\r\n") != std::string::npos) {
                out << '"';
                for (char ch : c) {
                    if (ch == '"')
                        out << '"';
                    out << ch;
                }
                out << '"';
            } else {
                out << c;
            }
        }
        out << '\n';
    };
    if (with_header)
        write_row(table.columns);
    for (const auto& row : table.rows)
        write_row(row);
    if (!out)
        throw IoError("write failure on " + path.string());
}

StripResult strip_metadata(const DataLake& lake, std::uint64_t seed) {
    if (lake.tables.empty())
        throw ConfigError("strip_metadata: lake " + lake.lake_id + " is empty");

    SplitMix64 rng(seed);
    StripResult result;
    result.lake.lake_id = lake.lake_id;
    result.lake.has_metadata = false;
    result.lake.tables.reserve(lake.tables.size());

    std::set<std::string> used;
    for (const Table& t : lake.tables) {
        char hex[17];
        do {
            std::snprintf(hex, sizeof hex, "%016llx",
                          static_cast<unsigned long long>(rng.next_u64()));
        } while (!used.insert(hex).second);

        Table stripped;
        stripped.ref = TableRef{lake.lake_id, hex};
        stripped.columns.reserve(t.n_cols());
        for (std::size_t i = 0; i < t.n_cols(); ++i)
            stripped.columns.push_back("col_" + std::to_string(i));
        stripped.rows = t.rows;
        result.renames.emplace(t.ref.table_id, hex);
        result.lake.tables.push_back(std::move(stripped));
    }
    return result;
}

} // namespace tusforge
