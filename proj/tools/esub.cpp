// esub: enumeration, orbit, census, and bridge front end.
//
// Exit codes: 0 success / all checks pass, 1 mathematical check failure,
// 2 usage or configuration error, 3 budget or resource error.
#include "esub/census_io.hpp"
#include "esub/quillen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <unordered_set>

using namespace esub;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eed5eedull;

struct Options {
    std::string family = "gl";
    int n = 3;
    int r = 1;
    long long p = 5;
    int d = 1;
    std::vector<long long> primes;
    long long trials = 1000;
    std::uint64_t seed = kDefaultSeed;
    long long budget_lines = EnumBudget{}.line_budget;
    long long budget_forms = EnumBudget{}.canonical_form_cap;
    std::string cache_dir;
    std::string out;
    std::string format = "json";
    bool force = false;
};

std::string resolved_cache_dir(const Options& opt) {
    if (!opt.cache_dir.empty()) return opt.cache_dir;
    if (const char* env = std::getenv("ESUB_CACHE_DIR")) return env;
    return "esub-cache";
}

EnumBudget budget_of(const Options& opt) {
    EnumBudget b;
    b.line_budget = opt.budget_lines;
    b.canonical_form_cap = opt.budget_forms;
    return b;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(opt.out);
    if (!os) throw std::runtime_error("cannot open output file " + opt.out);
    os << text;
}

json record_to_json(const OrbitRecord& rec) {
    json rows = json::array();
    for (int i = 0; i < rec.representative.rank(); ++i) {
        std::vector<int> row;
        for (Fe x : rec.representative.basis_row(i)) row.push_back(int(x));
        rows.push_back(row);
    }
    return json{{"representative", rows},
                {"size", rec.size},
                {"stabilizer_order", rec.stabilizer_order.str()},
                {"jordan_types", rec.jordan_types}};
}

// --- subcommands ------------------------------------------------------------

int cmd_verify_springer(const Options& opt) {
    if (opt.trials == 0)
        std::cerr << "warning: --trials 0 makes the suite vacuous\n";
    FieldCtx F(unsigned(opt.p), unsigned(opt.d));
    AmbientAlgebra alg(family_from_string(opt.family), opt.n, F);
    SuiteReport rep = springer_identity_suite(alg, opt.trials, opt.seed);
    json body{{"family", opt.family}, {"n", opt.n},         {"p", opt.p},
              {"d", opt.d},           {"trials", rep.trials}, {"checks_run", rep.checks_run},
              {"failures", rep.failures}, {"seed", opt.seed}, {"all_passed", rep.all_passed()}};
    json wit = json::array();
    for (const SuiteFailure& w : rep.witnesses)
        wit.push_back(json{{"check", w.check}, {"witness", w.witness}});
    body["witnesses"] = wit;
    emit(opt, body.dump(2) + "\n");
    return rep.all_passed() ? kExitOk : kExitMathFailure;
}

PointSet enumerate_for(const AmbientAlgebra& alg, int r, const EnumBudget& budget) {
    // so_n has no triangular seeding; everything else takes the fast path
    if (alg.family() == Family::so) return enumerate_naive(alg, r, budget);
    return enumerate_seeded(alg, r, budget);
}

int cmd_enumerate(const Options& opt) {
    FieldCtx F(unsigned(opt.p), unsigned(opt.d));
    AmbientAlgebra alg(family_from_string(opt.family), opt.n, F);
    PointSet ps = enumerate_for(alg, opt.r, budget_of(opt));
    std::ostringstream os;
    write_pointset_jsonl(os, ps);
    emit(opt, os.str());
    std::cerr << ps.size() << " points\n";
    return kExitOk;
}

std::vector<OrbitRecord> records_from_file(const OrbitFileData& data) {
    FieldCtx F(unsigned(data.p), unsigned(data.d));
    std::vector<OrbitRecord> recs;
    for (const OrbitFileRecord& fr : data.records) {
        OrbitRecord rec;
        std::vector<std::vector<Fe>> rows;
        for (const auto& row : fr.representative) rows.emplace_back(row.begin(), row.end());
        int ambient = rows.empty() ? 0 : int(rows.front().size());
        rec.representative = Subspace::from_vectors(F, ambient, rows);
        rec.size = fr.size;
        rec.stabilizer_order = BigInt(fr.stabilizer_order);
        for (const auto& part : fr.jordan_types) rec.jordan_types.emplace_back(part.begin(), part.end());
        recs.push_back(std::move(rec));
    }
    return recs;
}

// Compute or load the orbit records for one (family, n, r, q).
OrbitFileData orbit_data_cached(const Options& opt, Family family, long long p,
                                const std::string& dir) {
    FieldCtx F(unsigned(p), unsigned(opt.d));
    fs::create_directories(dir);
    fs::path path = fs::path(dir) / orbit_cache_filename(family, opt.n, opt.r, F.q());
    if (!opt.force && fs::exists(path)) {
        OrbitFileData data = read_orbit_file(path.string());
        std::cerr << "cache hit: " << path.string() << "\n";
        return data;
    }
    AmbientAlgebra alg(family, opt.n, F);
    PointSet ps = enumerate_for(alg, opt.r, budget_of(opt));
    GroupGenerators gens =
        family == Family::u ? u_generators(opt.n, F) : gl_generators(opt.n, F);
    auto recs = orbit_partition(ps, gens, budget_of(opt));
    OrbitFileData data = make_orbit_file_data(family, opt.n, opt.r, F, recs, (long long)ps.size());
    write_orbit_file(path.string(), data);
    return data;
}

int cmd_orbits(const Options& opt) {
    Family family = family_from_string(opt.family);
    OrbitFileData data = orbit_data_cached(opt, family, opt.p, resolved_cache_dir(opt));
    json body{{"family", data.family}, {"n", data.n}, {"r", data.r},
              {"q", data.q},           {"point_count", data.point_count}};
    json recs = json::array();
    for (const OrbitFileRecord& fr : data.records)
        recs.push_back(json{{"representative", fr.representative},
                            {"size", fr.size},
                            {"stabilizer_order", fr.stabilizer_order},
                            {"jordan_types", fr.jordan_types}});
    body["orbits"] = recs;
    emit(opt, body.dump(2) + "\n");
    return kExitOk;
}

json census_to_json(const OrbitCensus& c) {
    json fams = json::array();
    for (const OrbitFamily& f : c.families) {
        json sizes = json::object();
        for (const auto& [p, s] : f.size_by_prime) sizes[std::to_string(p)] = s;
        fams.push_back(json{{"jordan_types", f.jordan_types},
                            {"size_by_prime", sizes},
                            {"polynomial", f.polynomial.degree() >= 0 ? f.polynomial.to_string()
                                                                      : std::string()},
                            {"fitted_degree", f.fitted_degree}});
    }
    json counts = json::object();
    for (const auto& [p, s] : c.point_count_by_prime) counts[std::to_string(p)] = s;
    return json{{"family", family_to_string(c.family)},
                {"n", c.n},
                {"r", c.r},
                {"primes", c.primes},
                {"point_count_by_prime", counts},
                {"matched", c.matched},
                {"match_failure", c.match_failure},
                {"orbit_families", fams}};
}

int cmd_census(const Options& opt) {
    if (opt.primes.empty()) {
        std::cerr << "census requires --primes\n";
        return kExitUsage;
    }
    Family family = family_from_string(opt.family);
    std::string dir = resolved_cache_dir(opt);
    std::map<long long, std::vector<OrbitRecord>> records;
    std::map<long long, long long> counts;
    for (long long p : opt.primes) {
        if (!FieldCtx::is_prime(unsigned(p)) || p < opt.n) {
            std::cerr << "bad prime " << p << " (need prime >= n)\n";
            return kExitUsage;
        }
        OrbitFileData data = orbit_data_cached(opt, family, p, dir);
        records[p] = records_from_file(data);
        counts[p] = data.point_count;
    }
    OrbitCensus c = census_from_records(family, opt.n, opt.r, opt.primes, std::move(records),
                                        std::move(counts));
    emit(opt, census_to_json(c).dump(2) + "\n");
    if (!c.matched) {
        std::cerr << "census matching failed: " << c.match_failure << "\n";
        return kExitMathFailure;
    }
    return kExitOk;
}

int cmd_bridge(const Options& opt) {
    FieldCtx F(unsigned(opt.p), unsigned(opt.d));
    AmbientAlgebra alg(family_from_string(opt.family), opt.n, F);
    BridgeCtx ctx(alg);
    PointSet ps = enumerate_for(alg, opt.r, budget_of(opt));
    std::unordered_set<std::string> images;
    long long roundtrip_failures = 0, linear = 0;
    for (const Subspace& s : ps.points) {
        ElemAbelianSubgroup E = bridge_forward(ctx, make_elem_subalgebra(alg, s));
        images.insert(E.log_space.key());
        linear += is_fq_linear(E);
        if (bridge_backward(ctx, E).space != s) ++roundtrip_failures;
    }
    bool injective = images.size() == ps.size();
    json body{{"family", opt.family},
              {"n", opt.n},
              {"r", opt.r},
              {"p", opt.p},
              {"d", opt.d},
              {"points", ps.size()},
              {"distinct_images", images.size()},
              {"fq_linear_images", linear},
              {"roundtrip_failures", roundtrip_failures},
              {"injective", injective}};
    emit(opt, body.dump(2) + "\n");
    return injective && roundtrip_failures == 0 ? kExitOk : kExitMathFailure;
}

int cmd_rmax(const Options& opt, const std::string& type) {
    long long value =
        type.empty() ? r_max(family_from_string(opt.family), opt.n) : r_max_for_type(type);
    emit(opt, std::to_string(value) + "\n");
    return kExitOk;
}

int cmd_report(const Options& opt) {
    std::string dir = resolved_cache_dir(opt);
    if (!fs::is_directory(dir)) {
        std::cerr << "cache directory " << dir << " does not exist\n";
        return kExitUsage;
    }
    // group cached orbit files by (family, n, r); only prime fields feed tables
    std::map<std::tuple<std::string, int, int>,
             std::map<long long, OrbitFileData>> groups;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        OrbitFileData data = read_orbit_file(entry.path().string());
        if (data.d != 1) continue;
        groups[{data.family, data.n, data.r}][data.p] = std::move(data);
    }
    if (groups.empty()) {
        std::cerr << "no cached censuses in " << dir << "\n";
        return kExitUsage;
    }
    std::vector<OrbitCensus> censuses;
    for (auto& [key, by_prime] : groups) {
        std::vector<long long> primes;
        std::map<long long, std::vector<OrbitRecord>> records;
        std::map<long long, long long> counts;
        for (auto& [p, data] : by_prime) {
            primes.push_back(p);
            records[p] = records_from_file(data);
            counts[p] = data.point_count;
        }
        censuses.push_back(census_from_records(family_from_string(std::get<0>(key)),
                                               std::get<1>(key), std::get<2>(key), primes,
                                               std::move(records), std::move(counts)));
    }
    TableReport rep = table_report(censuses);
    if (opt.format == "csv")
        emit(opt, report_csv(rep));
    else if (opt.format == "md")
        emit(opt, report_markdown(rep));
    else {
        json body = json::array();
        for (const OrbitCensus& c : censuses) body.push_back(census_to_json(c));
        emit(opt, body.dump(2) + "\n");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"elementary subalgebra varieties over finite fields"};
    app.require_subcommand(1);
    Options opt;
    std::string rmax_type;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", opt.family, "gl, sl, so, or u")->capture_default_str();
        sub->add_option("--n", opt.n, "matrix size")->capture_default_str();
        sub->add_option("--seed", opt.seed, "RNG seed");
        sub->add_option("--budget-lines", opt.budget_lines, "naive-enumeration line budget");
        sub->add_option("--budget-forms", opt.budget_forms, "canonical-form cap");
        sub->add_option("--cache-dir", opt.cache_dir,
                        "census cache directory (or ESUB_CACHE_DIR)");
        sub->add_option("--out", opt.out, "output file (default stdout)");
        sub->add_option("--format", opt.format, "json, csv, or md")
            ->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_flag("--force", opt.force, "recompute even on cache hit");
    };

    CLI::App* verify = app.add_subcommand("verify-springer", "run the exp/log identity suite");
    add_common(verify);
    verify->add_option("--p", opt.p, "field characteristic")->capture_default_str();
    verify->add_option("--d", opt.d, "extension degree")->capture_default_str();
    verify->add_option("--trials", opt.trials, "randomized trials")->capture_default_str();

    CLI::App* enumerate = app.add_subcommand("enumerate", "list variety points as JSON lines");
    add_common(enumerate);
    enumerate->add_option("--r", opt.r, "subalgebra rank")->capture_default_str();
    enumerate->add_option("--p", opt.p, "field characteristic")->capture_default_str();
    enumerate->add_option("--d", opt.d, "extension degree")->capture_default_str();

    CLI::App* orbits = app.add_subcommand("orbits", "orbit partition with cached results");
    add_common(orbits);
    orbits->add_option("--r", opt.r, "subalgebra rank")->capture_default_str();
    orbits->add_option("--p", opt.p, "field characteristic")->capture_default_str();
    orbits->add_option("--d", opt.d, "extension degree")->capture_default_str();

    CLI::App* census_cmd = app.add_subcommand("census", "multi-prime orbit census with fits");
    add_common(census_cmd);
    census_cmd->add_option("--r", opt.r, "subalgebra rank")->capture_default_str();
    census_cmd->add_option("--primes", opt.primes, "comma-separated primes")->delimiter(',');

    CLI::App* bridge = app.add_subcommand("bridge", "subalgebra <-> subgroup correspondence checks");
    add_common(bridge);
    bridge->add_option("--r", opt.r, "subalgebra rank")->capture_default_str();
    bridge->add_option("--p", opt.p, "field characteristic")->capture_default_str();
    bridge->add_option("--d", opt.d, "extension degree")->capture_default_str();

    CLI::App* rmax = app.add_subcommand("rmax", "largest r with a nonempty variety");
    add_common(rmax);
    rmax->add_option("--type", rmax_type, "root-system or matrix type, e.g. E8 or gl4");

    CLI::App* report = app.add_subcommand("report", "merge cached censuses into table analogs");
    add_common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify_springer(opt);
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (orbits->parsed()) return cmd_orbits(opt);
        if (census_cmd->parsed()) return cmd_census(opt);
        if (bridge->parsed()) return cmd_bridge(opt);
        if (rmax->parsed()) return cmd_rmax(opt, rmax_type);
        if (report->parsed()) return cmd_report(opt);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CacheError& e) {
        std::cerr << "cache error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
