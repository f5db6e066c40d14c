// Acceptance suite: one pass/fail line per criterion, each with its
// tolerance and runtime budget pinned in code. Exits with the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "octa/decompose.hpp"
#include "octa/geometry.hpp"
#include "octa/octahedral.hpp"
#include "octa/rng.hpp"
#include "octa/span_search.hpp"
#include "octa/verify.hpp"

using namespace octa;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
// Parity outcomes of every induced system produced by criteria 1-3.
long long parity_checked = 0;
long long parity_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, const std::string& label, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* format, double a, double b) {
    char buffer[128];
    std::snprintf(buffer, sizeof buffer, format, a, b);
    return buffer;
}

std::string fmt_seconds(double elapsed) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.1f s", elapsed);
    return buffer;
}

Point pt(std::initializer_list<long> coords) {
    Point p;
    for (long c : coords) p.push_back(Rational(c));
    return p;
}

void criterion_1() {
    const auto start = Clock::now();
    const ColourfulConfiguration config{1, {{pt({-1}), pt({1})}, {pt({-2}), pt({2})}}};
    const DepthReport result = induced_octahedral_system(config);
    const double elapsed = seconds_since(start);

    ++parity_checked;
    if (!is_octahedral(result.induced_system)) ++parity_failures;

    const bool pass = result.depth == 2 && elapsed < 0.1;
    report(1, "d=1 exact depth",  pass,
           "depth=" + std::to_string(result.depth) + " expected 2, " +
               fmt("%.4f s < %.1f s", elapsed, 0.1));
}

void criterion_2() {
    const auto start = Clock::now();
    bool pass = true;
    std::string detail;
    for (int d : {1, 2, 3}) {
        const verify::CheckReport check = verify::run_depth_floor(d, 500, kDefaultSeed);
        parity_checked += 500;
        long long floor_violations = 0;
        for (const auto& v : check.violations) {
            if (v.at("kind") == "below-floor") ++floor_violations;
            if (v.at("kind") == "induced-system-not-octahedral") ++parity_failures;
        }
        const long long min_depth = check.details.at("min_depth").get<long long>();
        const long long floor = check.details.at("floor").get<long long>();
        pass = pass && floor_violations == 0;
        if (!detail.empty()) detail += ", ";
        detail += "d=" + std::to_string(d) + " min=" + std::to_string(min_depth) +
                  " floor=" + std::to_string(floor) +
                  (floor_violations ? " VIOLATIONS=" + std::to_string(floor_violations) : "");
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 60.0;
    report(2, "depth floor, 500 configurations each for d in {1,2,3}", pass,
           detail + ", " + fmt("%.1f s < %.0f s", elapsed, 60.0));
}

void criterion_3() {
    const auto start = Clock::now();
    // Documented probe: seed 42, 10^4 proposals, pinned to reach exactly 5.
    const SearchResult result = minimize_depth_search(2, 10'000, kDefaultSeed);
    const double elapsed = seconds_since(start);

    const DepthReport induced = induced_octahedral_system(result.configuration);
    ++parity_checked;
    if (!is_octahedral(induced.induced_system)) ++parity_failures;

    const bool hard = result.depth >= 5;          // the proven floor
    const bool pinned = result.depth == 5;        // regression: seed 42 attains it
    report(3, "d=2 tightness probe (seed 42, 10^4 iterations)", hard && pinned,
           "depth=" + std::to_string(result.depth) + " expected 5, " +
               fmt_seconds(elapsed) + (hard ? "" : " BELOW FLOOR"));
}

void criterion_4() {
    const bool pass = parity_failures == 0 && parity_checked == 1502;
    report(4, "Octahedron Lemma on every induced system from criteria 1-3", pass,
           std::to_string(parity_checked - parity_failures) + "/" +
               std::to_string(parity_checked) + " octahedral");
}

void criterion_5() {
    const auto start = Clock::now();
    const verify::CheckReport check = verify::run_bound_check(2);
    const double elapsed = seconds_since(start);

    bool pass = check.ok() && elapsed < 1.0;
    pass = pass && check.details.at("rank") == 3;
    pass = pass && check.checked == 8;
    long long min1 = -1;
    long long min2 = -1;
    for (const auto& entry : check.details.at("per_k")) {
        if (entry.at("k") == 1) min1 = entry.at("min").get<long long>();
        if (entry.at("k") == 2) min2 = entry.at("min").get<long long>();
    }
    pass = pass && min1 == 2 && min2 == 2;
    report(5, "n=2 exhaustive span: rank 3, 8 systems, minima 2/2", pass,
           "rank=" + check.details.at("rank").dump() + " systems=" + std::to_string(check.checked) +
               " min(k=1)=" + std::to_string(min1) + " min(k=2)=" + std::to_string(min2) + ", " +
               fmt("%.3f s < %.0f s", elapsed, 1.0));
}

void criterion_6() {
    const auto start = Clock::now();
    const verify::CheckReport check =
        verify::run_bound_check(3, std::uint64_t{1} << 24, 1'000'000, kDefaultSeed);
    const double elapsed = seconds_since(start);

    bool pass = check.ok() && elapsed < 300.0;
    pass = pass && check.details.at("exhaustive") == true;  // 2^19 fits the 2^24 budget
    long long min3 = -1;
    for (const auto& entry : check.details.at("per_k"))
        if (entry.at("k") == 3) min3 = entry.at("min").get<long long>();
    pass = pass && min3 == 5;
    report(6, "n=3 span walk: no bound violations, min(k=3)=5", pass,
           "rank=" + check.details.at("rank").dump() + " visited=" + std::to_string(check.checked) +
               " min(k=3)=" + std::to_string(min3) + " violations=" +
               std::to_string(check.violations.size()) + ", " +
               fmt("%.1f s < %.0f s", elapsed, 300.0));
}

void criterion_7() {
    const auto start = Clock::now();
    bool pass = true;
    std::string detail;
    for (int n : {3, 4, 5}) {
        const verify::CheckReport check = verify::run_decomposition_roundtrip(n, 1000, kDefaultSeed);
        pass = pass && check.ok() && check.checked == 1000;
        if (!detail.empty()) detail += ", ";
        detail += "n=" + std::to_string(n) + " violations=" + std::to_string(check.violations.size());
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 120.0;
    report(7, "decomposition round-trip, 1000 combinations per n in {3,4,5}", pass,
           detail + ", " + fmt("%.1f s < %.0f s", elapsed, 120.0));
}

void criterion_8() {
    const auto start = Clock::now();
    const verify::CheckReport check = verify::run_span_equivalence(3, 2000, kDefaultSeed);
    const double elapsed = seconds_since(start);
    const bool pass = check.ok() && check.checked == 2000;
    report(8, "span/parity equivalence on 2000 n=3 cases", pass,
           "members=" + check.details.at("members").dump() + " nonmembers=" +
               check.details.at("nonmembers").dump() + " disagreements=" +
               std::to_string(check.violations.size()) + ", " + fmt_seconds(elapsed));
}

void criterion_9() {
    const auto start = Clock::now();
    const verify::CheckReport check = verify::run_predicate_crosscheck(4, 10'000, kDefaultSeed);
    const double elapsed = seconds_since(start);
    const bool pass = check.ok() && check.checked == 10'000;
    report(9, "predicate cross-validation on 10^4 simplices, d <= 4", pass,
           "cases=" + std::to_string(check.checked) + " violations=" +
               std::to_string(check.violations.size()) + ", " + fmt_seconds(elapsed));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%s: %d/9 criteria passed\n", failures == 0 ? "SUCCESS" : "FAILURE", 9 - failures);
    return failures;
}
