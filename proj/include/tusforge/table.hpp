#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tusforge {

/// Identity of a table: (data lake, table file name without extension).
/// Rendered as the composite key "lake_id/table_id".
struct TableRef {
    std::string lake_id;
    std::string table_id;

    std::string composite() const { return lake_id + "/" + table_id; }

    auto operator<=>(const TableRef&) const = default;
};

/// Parsed tabular content. Immutable after load; all cells are text (no type
/// inference), rows are rectangular: every row has exactly columns.size()
/// cells.
struct Table {
    TableRef ref;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t n_cols() const { return columns.size(); }
    std::size_t n_rows() const { return rows.size(); }

    /// 64-bit digest of the cell content (shape + values, not column names or
    /// identity). Row sampling seeds on this, so the sampled rows of a table
    /// depend only on its content and never on its name or neighbors.
    std::uint64_t content_digest() const;
};

struct DataLake {
    std::string lake_id;
    std::vector<Table> tables;
    bool has_metadata = true;
};

/// Parse a delimited UTF-8 text file into a Table.
/// Ragged rows are padded with empty cells. The first row is consumed as the
/// header when it, and only it, contains no cell parseable as a number;
/// otherwise synthetic names col_0..col_{n-1} are assigned.
/// Throws IoError (unreadable file) or MalformedTableError (zero columns).
Table load_table(const std::filesystem::path& path, std::string_view lake_id);

/// Parse CSV content already in memory (same rules as load_table).
Table parse_table(std::string_view content, TableRef ref);

/// Write a table as CSV. Column names are emitted as a header row only when
/// with_header is set; stripped lakes are written headerless since col_i
/// names are exactly what the loader synthesizes.
void write_table_csv(const Table& table, const std::filesystem::path& path, bool with_header);

struct StripResult {
    DataLake lake;
    std::map<std::string, std::string> renames; // old table_id -> new
};

/// Replace every table_id with a seeded 16-hex-digit identifier (collision
/// free within the lake) and every column name with col_i. Cell values are
/// untouched. The rename map supports ground-truth translation.
StripResult strip_metadata(const DataLake& lake, std::uint64_t seed);

/// True when the trimmed cell parses completely as a floating-point number.
bool cell_is_numeric(std::string_view cell);

} // namespace tusforge
