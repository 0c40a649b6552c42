#pragma once

#include "esub/orbits.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace esub {

inline constexpr int kBasisOrderVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

class CacheError : public std::runtime_error {
public:
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

// One cached orbit file per (family, n, r, q).
struct OrbitFileRecord {
    std::vector<std::vector<int>> representative; // canonical basis rows
    long long size = 0;
    std::string stabilizer_order;                 // decimal, may exceed 64 bits
    std::vector<std::vector<int>> jordan_types;
};

struct OrbitFileData {
    std::string family;
    int n = 0, r = 0, d = 1;
    long long p = 0, q = 0;
    std::string modulus;
    long long point_count = 0;
    std::vector<OrbitFileRecord> records;
};

std::string orbit_cache_filename(Family family, int n, int r, long long q);

OrbitFileData make_orbit_file_data(Family family, int n, int r, const FieldCtx& field,
                                   const std::vector<OrbitRecord>& records, long long point_count);

// Byte-stable serialization with a content checksum; atomic rename-on-commit.
void write_orbit_file(const std::string& path, const OrbitFileData& data);

// Throws CacheError naming the file on checksum or header mismatch.
OrbitFileData read_orbit_file(const std::string& path);

// One canonical basis per line, entries as integer coefficient vectors.
void write_pointset_jsonl(std::ostream& os, const PointSet& points);

std::string report_markdown(const TableReport& report);
std::string report_csv(const TableReport& report);

} // namespace esub
