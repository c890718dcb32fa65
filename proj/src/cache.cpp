#include "sgs/cache.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "sgs/errors.hpp"

namespace sgs {

namespace {

std::string format_sum(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string CacheRecord::to_line() const {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["scale"] = scale;
    j["count"] = count;
    nlohmann::ordered_json sums_json = nlohmann::ordered_json::array();
    for (double s : sums) sums_json.push_back(format_sum(s));
    j["sums"] = std::move(sums_json);
    j["version"] = version;
    j["created"] = created;
    return j.dump();
}

std::optional<CacheRecord> CacheRecord::parse_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    try {
        CacheRecord rec;
        rec.kind = j.at("kind").get<std::string>();
        rec.scale = j.at("scale").get<int>();
        rec.count = j.at("count").get<std::string>();
        const auto& sums = j.at("sums");
        if (!sums.is_array() || sums.size() != 6) return std::nullopt;
        for (std::size_t i = 0; i < 6; ++i) rec.sums[i] = std::stod(sums[i].get<std::string>());
        rec.version = j.at("version").get<std::string>();
        rec.created = j.at("created").get<std::string>();
        return rec;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

CacheRecord cache_record_for(const TableRow& row, std::string created_at) {
    CacheRecord rec;
    rec.kind = row.conv == Convention::Genus ? "genus_row" : "frob_row";
    rec.scale = row.scale;
    rec.count = u128_to_string(row.count);
    rec.sums = row.raw_sums;
    rec.version = kToolVersion;
    rec.created = std::move(created_at);
    return rec;
}

TableRow row_from_cache(const CacheRecord& rec) {
    if (rec.kind != "genus_row" && rec.kind != "frob_row")
        fail(Errc::WrongFamily, "cache record is not a table row");
    const Convention conv = rec.kind == "genus_row" ? Convention::Genus : Convention::Frobenius;
    BigUint n = BigUint::from_decimal(rec.count);
    if (n.limb_count() > 2) fail(Errc::CorruptLine, "cached count exceeds 128 bits");
    unsigned __int128 count = 0;
    for (std::size_t i = n.limb_count(); i-- > 0;) count = (count << 64) | n.limb(i);
    return table_row_from_sums(conv, rec.scale, count, rec.sums);
}

std::vector<CacheRecord> read_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::vector<CacheRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto rec = CacheRecord::parse_line(line);
        if (!rec) {
            std::cerr << "warning: skipping corrupt cache line " << lineno << " in " << path << "\n";
            continue;
        }
        if (rec->version != kToolVersion) continue;  // stale: recompute
        out.push_back(std::move(*rec));
    }
    return out;
}

void append_cache(const std::string& path, const CacheRecord& rec) {
    std::ofstream out(path, std::ios::app);
    if (!out) fail(Errc::IoError, "cannot open cache file " + path);
    out << rec.to_line() << '\n';
    if (!out) fail(Errc::IoError, "cannot write cache file " + path);
}

}  // namespace sgs
