#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sgs/regress.hpp"

namespace sgs {

inline constexpr const char* kToolVersion = "sgshape 0.1.0";

// One line of the append-only JSON-lines aggregate store.
struct CacheRecord {
    std::string kind;  // "genus_row" | "frob_row" | "heatmap_meta"
    int scale = 0;
    std::string count;                 // exact count, decimal
    std::array<double, 6> sums{};      // regression sums (17 significant digits on disk)
    std::string version;
    std::string created;               // ISO-8601, preserved verbatim on re-emission

    std::string to_line() const;       // canonical field order; byte-stable
    static std::optional<CacheRecord> parse_line(const std::string& line);
};

CacheRecord cache_record_for(const TableRow& row, std::string created_at);
TableRow row_from_cache(const CacheRecord& rec);

// Reads all records whose version matches kToolVersion; corrupt lines are
// skipped with a warning on stderr, mismatched versions are dropped.
std::vector<CacheRecord> read_cache(const std::string& path);
void append_cache(const std::string& path, const CacheRecord& rec);

}  // namespace sgs
