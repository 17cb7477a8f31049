#include "virfusion/cache.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <system_error>
#include <tuple>
#include <unistd.h>

namespace virfusion {

namespace {

using Key = std::tuple<Rational, Rational, int>;

Key key_of(const CacheEntry& e)
{
    return {e.c, e.h, e.grade};
}

Json entry_to_json(const CacheEntry& e)
{
    return {{"c", rational_to_json(e.c)},
            {"h", rational_to_json(e.h)},
            {"grade", e.grade},
            {"value", to_json(e.value)}};
}

CacheEntry entry_from_json(const Json& j, int schema_version)
{
    if (!j.is_object() || !j.contains("grade") || !j["grade"].is_number_integer() || !j.contains("value"))
        throw SchemaError("malformed entry " + j.dump());
    CacheEntry e;
    e.c = rational_from_json(j.value("c", Json()));
    e.h = rational_from_json(j.value("h", Json()));
    e.grade = j["grade"].get<int>();
    e.value = verma_vector_from_json(j["value"]);
    e.schema_version = schema_version;
    if (e.value.params() != HighestWeightParams{e.c, e.h})
        throw SchemaError("entry value lives in a different Verma module than its key");
    if (e.value.is_zero() || !e.value.is_homogeneous() || e.value.grade() != e.grade)
        throw SchemaError("entry value is not a nonzero vector of grade " + std::to_string(e.grade));
    return e;
}

} // namespace

std::vector<CacheEntry> read_cache(const std::filesystem::path& path)
{
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        return {};
    std::ifstream in(path);
    if (!in)
        throw CacheError(path.string() + ": cannot open for reading");
    std::vector<CacheEntry> entries;
    try {
        Json doc = Json::parse(in);
        if (!doc.is_object() || !doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
            throw SchemaError("missing schema_version");
        const int version = doc["schema_version"].get<int>();
        if (version != kSchemaVersion)
            throw SchemaError("unsupported schema_version " + std::to_string(version));
        if (!doc.contains("entries") || !doc["entries"].is_array())
            throw SchemaError("missing entries array");
        for (const auto& j : doc["entries"])
            entries.push_back(entry_from_json(j, version));
    } catch (const Json::exception& e) {
        throw CacheError(path.string() + ": " + e.what());
    } catch (const SchemaError& e) {
        throw CacheError(path.string() + ": " + e.what());
    }
    return entries;
}

void write_cache(const std::filesystem::path& path, const std::vector<CacheEntry>& entries)
{
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["entries"] = Json::array();
    for (const auto& e : entries)
        doc["entries"].push_back(entry_to_json(e));

    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw CacheError(tmp.string() + ": cannot open for writing");
        out << doc.dump(1) << '\n';
        out.flush();
        if (!out)
            throw CacheError(tmp.string() + ": write failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw CacheError(path.string() + ": cannot replace (" + ec.message() + ")");
    }
}

std::size_t merge_cache(const std::filesystem::path& path, const std::vector<CacheEntry>& entries)
{
    std::vector<CacheEntry> merged = read_cache(path);
    std::map<Key, std::size_t> index;
    for (std::size_t i = 0; i < merged.size(); ++i)
        index.emplace(key_of(merged[i]), i);

    std::size_t appended = 0;
    for (const auto& e : entries) {
        auto it = index.find(key_of(e));
        if (it != index.end()) {
            if (merged[it->second].value != e.value)
                throw CacheError(path.string() + ": conflicting value for c=" + e.c.to_string()
                                 + ", h=" + e.h.to_string() + ", grade=" + std::to_string(e.grade));
            continue;
        }
        index.emplace(key_of(e), merged.size());
        merged.push_back(e);
        ++appended;
    }
    if (appended > 0)
        write_cache(path, merged);
    return appended;
}

CacheEntry cache_roundtrip(const std::filesystem::path& path, const CacheEntry& entry)
{
    merge_cache(path, {entry});
    for (auto& e : read_cache(path))
        if (key_of(e) == key_of(entry))
            return e;
    throw CacheError(path.string() + ": entry missing after write");
}

std::vector<CacheEntry> cache_entries_from_memo(const SingularMemo& memo)
{
    std::vector<CacheEntry> out;
    for (const auto& [key, v] : memo.solved_entries()) {
        const auto& [c, h, n] = key;
        out.push_back(CacheEntry{c, h, n, v, kSchemaVersion});
    }
    return out;
}

std::size_t preload_memo(SingularMemo& memo, const std::vector<CacheEntry>& entries)
{
    std::size_t n = 0;
    for (const auto& e : entries)
        if (memo.insert({e.c, e.h}, e.grade, e.value))
            ++n;
    return n;
}

} // namespace virfusion
