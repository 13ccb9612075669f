#include "trop/census.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "trop/classify.hpp"
#include "trop/oracle.hpp"

namespace trop {

namespace {

// splitmix64; stable across platforms.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Stream {
    std::uint64_t state;
    std::uint64_t next() { return state = mix(state); }
};

constexpr std::array<std::array<int, 4>, 3> kAllowedPolygonVectors{
    {{0, 2, 8, 2}, {0, 3, 6, 3}, {0, 4, 4, 4}}};
constexpr std::array<std::array<int, 3>, 5> kAllowedTypeMultisets{
    {{2, 2, 2}, {3, 2, 1}, {3, 3, 0}, {4, 1, 1}, {4, 2, 0}}};

bool has_singular_3x3(const Matrix4& m) {
    for (int ro = 0; ro < 4; ++ro)
        for (int co = 0; co < 4; ++co) {
            std::vector<Rational> sub;
            sub.reserve(9);
            for (int i = 0; i < 4; ++i) {
                if (i == ro) continue;
                for (int j = 0; j < 4; ++j) {
                    if (j == co) continue;
                    sub.push_back(m.at(i, j));
                }
            }
            if (trop_det(sub, 3).attain_count > 1) return true;
        }
    return false;
}

Stream worker_stream(std::uint64_t seed, int worker) {
    return Stream{mix(seed ^ (0x517cc1b727220a95ULL * static_cast<std::uint64_t>(worker + 1)))};
}

Matrix4 draw_matrix(Stream& s, int range) {
    Matrix4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) {
                m.at(i, j) = Rational(0);
                continue;
            }
            std::uint64_t r = s.next();
            m.at(i, j) = Rational(-static_cast<std::int64_t>(r % static_cast<std::uint64_t>(range + 1)));
        }
    return m;
}

struct WorkerResult {
    int classified = 0;
    std::array<int, 6> class_counts{};
    std::map<std::array<int, 4>, int> polygon_vectors;
    std::map<std::array<int, 3>, int> type_multisets;
    int singular_3x3 = 0;
    std::vector<std::string> violations;
};

void run_worker(const CensusConfig& cfg, int worker, int count, WorkerResult& out) {
    Stream stream = worker_stream(cfg.seed, worker);
    for (int step = 0; step < count; ++step) {
        Matrix4 seed_matrix = draw_matrix(stream, cfg.range);
        KleeneMatrix a = kleene_closure(seed_matrix);

        auto describe = [&](const std::string& what) {
            std::ostringstream os;
            os << "worker " << worker << " step " << step << ": " << what;
            out.violations.push_back(os.str());
        };

        if (!check_hypothesis1(a).ok || !check_hypothesis2(a).ok) continue;
        ++out.classified;

        try {
            Polytrope body = build_polytrope(a);
            ClassVerdict v = classify(body);
            ++out.class_counts[static_cast<size_t>(v.class_id - 1)];
            ++out.polygon_vectors[v.polygon_vector];
            ++out.type_multisets[v.type_vector.sorted_desc()];

            if (body.f_vector != std::array<int, 3>{20, 30, 12}) describe("f-vector != (20,30,12)");
            if (v.polygon_vector[1] != v.polygon_vector[3]) describe("f4 != f6");
            if (std::find(kAllowedPolygonVectors.begin(), kAllowedPolygonVectors.end(), v.polygon_vector) ==
                kAllowedPolygonVectors.end())
                describe("polygon vector outside the admissible three");
            if (std::find(kAllowedTypeMultisets.begin(), kAllowedTypeMultisets.end(),
                          v.type_vector.sorted_desc()) == kAllowedTypeMultisets.end())
                describe("type-vector multiset outside the admissible five");
            // build_polytrope and classify already threw on trivalence, Euler,
            // handedness and class-consistency breaches; anything reaching
            // here passed them.
            out.singular_3x3 += has_singular_3x3(a.matrix());

            if (cfg.cross_validate) {
                auto cv = oracle::cross_validate(a);
                for (const auto& m : cv.mismatches) describe("oracle mismatch: " + m);
            }
        } catch (const std::exception& e) {
            describe(std::string("exception: ") + e.what());
        }
    }
}

} // namespace

Matrix4 census_sample(std::uint64_t seed, int worker, int step, int range) {
    Stream s = worker_stream(seed, worker);
    Matrix4 m = draw_matrix(s, range);
    for (int k = 0; k < step; ++k) m = draw_matrix(s, range);
    return m;
}

CensusReport run_census(const CensusConfig& cfg) {
    CensusReport report;
    report.config = cfg;
    int jobs = std::max(1, cfg.jobs);
    std::vector<WorkerResult> results(static_cast<size_t>(jobs));
    std::vector<std::thread> threads;
    int base = cfg.samples / jobs;
    int extra = cfg.samples % jobs;
    for (int w = 0; w < jobs; ++w) {
        int count = base + (w < extra ? 1 : 0);
        threads.emplace_back(run_worker, std::cref(cfg), w, count, std::ref(results[static_cast<size_t>(w)]));
    }
    for (auto& t : threads) t.join();

    for (const auto& r : results) {
        report.classified += r.classified;
        for (size_t c = 0; c < 6; ++c) report.class_counts[c] += r.class_counts[c];
        for (const auto& [k, v] : r.polygon_vectors) report.polygon_vectors[k] += v;
        for (const auto& [k, v] : r.type_multisets) report.type_multisets[k] += v;
        report.singular_3x3_under_hypotheses += r.singular_3x3;
        report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
    }
    return report;
}

std::string CensusReport::str() const {
    std::ostringstream os;
    os << "census: " << config.samples << " samples, entries in [-" << config.range << ",0], seed "
       << config.seed << ", jobs " << config.jobs << "\n";
    os << "classified (hypotheses 1 and 2 hold): " << classified << "\n";
    for (int c = 0; c < 6; ++c) os << "  class " << (c + 1) << ": " << class_counts[static_cast<size_t>(c)] << "\n";
    os << "polygon vectors:\n";
    for (const auto& [k, v] : polygon_vectors)
        os << "  (" << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << "): " << v << "\n";
    os << "type-vector multisets:\n";
    for (const auto& [k, v] : type_multisets)
        os << "  {" << k[0] << "," << k[1] << "," << k[2] << "}: " << v << "\n";
    os << "samples passing the hypotheses with a singular 3x3 tropical minor: "
       << singular_3x3_under_hypotheses << "\n";
    if (violations.empty()) {
        os << "invariant violations: none\n";
    } else {
        os << "invariant violations (" << violations.size() << "):\n";
        for (const auto& v : violations) os << "  " << v << "\n";
    }
    return os.str();
}

} // namespace trop
