#include "esub/census_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace esub {

using nlohmann::json;

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

json records_to_json(const std::vector<OrbitFileRecord>& records) {
    json arr = json::array();
    for (const auto& rec : records) {
        arr.push_back(json{{"representative", rec.representative},
                           {"size", rec.size},
                           {"stabilizer_order", rec.stabilizer_order},
                           {"jordan_types", rec.jordan_types}});
    }
    return arr;
}

} // namespace

std::string orbit_cache_filename(Family family, int n, int r, long long q) {
    std::ostringstream os;
    os << family_to_string(family) << "_n" << n << "_r" << r << "_q" << q << ".json";
    return os.str();
}

OrbitFileData make_orbit_file_data(Family family, int n, int r, const FieldCtx& field,
                                   const std::vector<OrbitRecord>& records, long long point_count) {
    OrbitFileData data;
    data.family = family_to_string(family);
    data.n = n;
    data.r = r;
    data.p = field.p();
    data.d = int(field.d());
    data.q = field.q();
    data.modulus = field.modulus_string();
    data.point_count = point_count;
    for (const OrbitRecord& rec : records) {
        OrbitFileRecord out;
        for (int i = 0; i < rec.representative.rank(); ++i) {
            std::vector<int> row;
            for (Fe x : rec.representative.basis_row(i)) row.push_back(int(x));
            out.representative.push_back(std::move(row));
        }
        out.size = rec.size;
        out.stabilizer_order = rec.stabilizer_order.str();
        for (const Partition& part : rec.jordan_types) out.jordan_types.emplace_back(part.begin(), part.end());
        data.records.push_back(std::move(out));
    }
    return data;
}

void write_orbit_file(const std::string& path, const OrbitFileData& data) {
    json body{{"family", data.family},
              {"n", data.n},
              {"r", data.r},
              {"p", data.p},
              {"d", data.d},
              {"q", data.q},
              {"modulus", data.modulus},
              {"basis_order_version", kBasisOrderVersion},
              {"artifact_version", kArtifactVersion},
              {"point_count", data.point_count},
              {"records", records_to_json(data.records)}};
    body["checksum"] = fnv1a(body["records"].dump());
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) throw CacheError("cannot write cache file " + tmp);
        os << body.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw CacheError("cannot commit cache file " + path);
}

OrbitFileData read_orbit_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw CacheError("cannot open cache file " + path);
    json body;
    try {
        is >> body;
    } catch (const json::exception& e) {
        throw CacheError("cache file " + path + " is not valid JSON: " + e.what());
    }
    try {
        if (body.at("basis_order_version").get<int>() != kBasisOrderVersion)
            throw CacheError("cache file " + path + " has mismatched basis_order_version");
        if (body.at("checksum").get<std::uint64_t>() != fnv1a(body.at("records").dump()))
            throw CacheError("cache file " + path + " failed its checksum");
        OrbitFileData data;
        data.family = body.at("family").get<std::string>();
        data.n = body.at("n").get<int>();
        data.r = body.at("r").get<int>();
        data.p = body.at("p").get<long long>();
        data.d = body.at("d").get<int>();
        data.q = body.at("q").get<long long>();
        data.modulus = body.at("modulus").get<std::string>();
        data.point_count = body.at("point_count").get<long long>();
        for (const json& rec : body.at("records")) {
            OrbitFileRecord out;
            out.representative = rec.at("representative").get<std::vector<std::vector<int>>>();
            out.size = rec.at("size").get<long long>();
            out.stabilizer_order = rec.at("stabilizer_order").get<std::string>();
            out.jordan_types = rec.at("jordan_types").get<std::vector<std::vector<int>>>();
            data.records.push_back(std::move(out));
        }
        return data;
    } catch (const json::exception& e) {
        throw CacheError("cache file " + path + " has malformed contents: " + e.what());
    }
}

void write_pointset_jsonl(std::ostream& os, const PointSet& points) {
    for (const Subspace& s : points.points) {
        json rows = json::array();
        for (int i = 0; i < s.rank(); ++i) {
            std::vector<int> row;
            for (Fe x : s.basis_row(i)) row.push_back(int(x));
            rows.push_back(row);
        }
        os << rows.dump() << "\n";
    }
}

std::string report_markdown(const TableReport& report) {
    std::ostringstream os;
    auto grid = [&](const char* title, auto getter) {
        std::map<int, std::vector<int>> by_n;
        int max_r = 0;
        for (const auto& [key, _] : report.family_counts) {
            by_n[key.first];
            max_r = std::max(max_r, key.second);
        }
        os << "## " << title << "\n\n| n |";
        for (int r = 1; r <= max_r; ++r) os << " r=" << r << " |";
        os << "\n|---|";
        for (int r = 1; r <= max_r; ++r) os << "---|";
        os << "\n";
        for (const auto& [n, _] : by_n) {
            os << "| " << n << " |";
            for (int r = 1; r <= max_r; ++r) {
                auto val = getter(std::make_pair(n, r));
                os << " " << val << " |";
            }
            os << "\n";
        }
        os << "\n";
    };
    grid("Orbit-family counts (upper bounds)", [&](std::pair<int, int> key) -> std::string {
        auto it = report.family_counts.find(key);
        return it == report.family_counts.end() ? "-" : std::to_string(it->second);
    });
    grid("Largest fitted degree", [&](std::pair<int, int> key) -> std::string {
        auto it = report.max_degrees.find(key);
        return it == report.max_degrees.end() ? "-" : std::to_string(it->second);
    });
    grid("Dimension formula (n+r-1)(n-1)-r^2", [&](std::pair<int, int> key) -> std::string {
        auto it = report.dim_formula_values.find(key);
        return it == report.dim_formula_values.end() ? "-" : std::to_string(it->second);
    });
    os << "## Point-count polynomials per orbit family\n\n";
    for (const auto& [key, polys] : report.polynomials) {
        os << "### n=" << key.first << ", r=" << key.second << "\n";
        for (const std::string& poly : polys) os << "- " << poly << "\n";
        os << "\n";
    }
    return os.str();
}

std::string report_csv(const TableReport& report) {
    std::ostringstream os;
    os << "n,r,orbit_families,max_degree,dim_formula,polynomials\n";
    for (const auto& [key, count] : report.family_counts) {
        os << key.first << "," << key.second << "," << count << ","
           << report.max_degrees.at(key) << "," << report.dim_formula_values.at(key) << ",\"";
        auto it = report.polynomials.find(key);
        if (it != report.polynomials.end())
            for (std::size_t i = 0; i < it->second.size(); ++i)
                os << (i ? "; " : "") << it->second[i];
        os << "\"\n";
    }
    return os.str();
}

} // namespace esub
