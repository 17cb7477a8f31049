#pragma once

#include "virfusion/serialize.hpp"
#include "virfusion/virasoro.hpp"

#include <filesystem>
#include <stdexcept>
#include <vector>

namespace virfusion {

// Any failure to read, parse or write a cache file. The message names the path.
struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solved singular vector keyed by (c, h, grade).
struct CacheEntry {
    Rational c, h;
    int grade = 0;
    VermaVector value;
    int schema_version = kSchemaVersion;
    friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

// A missing file reads as empty.
std::vector<CacheEntry> read_cache(const std::filesystem::path& path);

// Writes to a sibling temporary and renames it over path.
void write_cache(const std::filesystem::path& path, const std::vector<CacheEntry>& entries);

// Appends entries whose key is not yet present. An entry whose key exists with a
// different value is a CacheError; existing entries are never rewritten.
// Returns the number of entries appended.
std::size_t merge_cache(const std::filesystem::path& path, const std::vector<CacheEntry>& entries);

// Merge a single entry, read the file back and return the stored entry for its key.
CacheEntry cache_roundtrip(const std::filesystem::path& path, const CacheEntry& entry);

std::vector<CacheEntry> cache_entries_from_memo(const SingularMemo& memo);
// Returns the number of entries preloaded.
std::size_t preload_memo(SingularMemo& memo, const std::vector<CacheEntry>& entries);

} // namespace virfusion
