// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Criteria 6 and 7 are property-based over fixed-seed random
// instances; the rest replay the bundled reference data at pinned tolerances.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fewnomial/bounds.hpp"
#include "fewnomial/parse.hpp"
#include "fewnomial/reference_suite.hpp"
#include "fewnomial/solver.hpp"
#include "support/generators.hpp"

using namespace fewnomial;
using namespace testsupport;

namespace {

int g_failures = 0;

void verdict(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    g_failures += !pass;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FewnomialSystem pair_of(const char* a, const char* b) {
    return parse_system(std::string("#: vars 2\n") + a + "\n" + b + "\n").system;
}

// ---- criterion 1: the Haas counterexample ----------------------------------

void criterion1() {
    IsolationConfig cfg;
    auto t0 = std::chrono::steady_clock::now();
    PipelineReport rep = solve_trinomial_pair(haas_family(1), cfg);
    double dt = seconds_since(t0);
    auto [lo, hi] = rep.count_range();
    bool pass = lo == 5 && hi == 5 && rep.complete && dt < 30.0;
    std::ostringstream d;
    d << "haas pair count [" << lo << "," << hi << "] "
      << (rep.complete ? "COMPLETE" : "INCOMPLETE") << " in " << dt << " s (limit 30 s)";
    verdict(1, pass, d.str());
}

// ---- criterion 2: the published univariate example --------------------------

void criterion2() {
    IsolationConfig cfg;
    auto t0 = std::chrono::steady_clock::now();
    TOneMinusTForm f{{{-1.12, 0.5, 0.02}, {-0.71, -0.05, 1.8}}};
    Isolation1D iso = isolate_roots(f, cfg);
    double dt = seconds_since(t0);

    const double printed[5] = {0.00396494, 0.02986317, 0.4354707, 0.72522344, 0.99620026};
    bool pass = iso.certified_unique() == 5 && iso.complete && dt < 5.0;
    std::ostringstream d;
    d << iso.certified_unique() << " certified roots in " << dt << " s;";
    for (double p : printed) {
        bool matched = false;
        for (const auto& r : iso.roots)
            matched = matched || (r.t.width() <= 1e-5 && std::abs(r.t.mid() - p) < 1e-5);
        if (!matched) {
            pass = false;
            d << " " << p << " unmatched;";
        }
    }
    if (!pass) {
        d << " computed:";
        for (const auto& r : iso.roots) {
            char buf[24];
            std::snprintf(buf, sizeof buf, " %.8f", r.t.mid());
            d << buf;
        }
    }
    verdict(2, pass, d.str());
}

// ---- criterion 3: the per-class fixtures ------------------------------------

void criterion3() {
    IsolationConfig cfg;
    bool pass = true;
    std::ostringstream d;
    auto check_root = [&](const PipelineReport& rep, double x, double y) {
        for (const auto& rb : rep.roots) {
            bool in = rb.box[0].lo - 1e-8 <= x && x <= rb.box[0].hi + 1e-8 &&
                      rb.box[1].lo - 1e-8 <= y && y <= rb.box[1].hi + 1e-8;
            if (in && std::max(rb.box[0].width(), rb.box[1].width()) <= 1e-8) return true;
        }
        return false;
    };

    PipelineReport tri =
        solve_trinomial_pair(pair_of("1 x1^2 + 1 x2^2 - 25", "1 x1^1 + 1 x2^1 - 7"), cfg);
    if (!(tri.count_range() == std::pair<long long, long long>{2, 2} &&
          tri.classification == PolygonClass::Triangle && tri.bound_provenance == "COR_POLY" &&
          check_root(tri, 3, 4) && check_root(tri, 4, 3))) {
        pass = false;
        d << "triangle fixture failed; ";
    }

    PipelineReport quad =
        solve_trinomial_pair(pair_of("1 x1^2 - 3 x1^1 + 2", "1 x2^2 - 3 x2^1 + 2"), cfg);
    bool quad_ok = quad.count_range() == std::pair<long long, long long>{4, 4} &&
                   quad.classification == PolygonClass::Quadrilateral &&
                   quad.bound_provenance == "COR_POLY";
    for (double x : {1.0, 2.0})
        for (double y : {1.0, 2.0}) quad_ok = quad_ok && check_root(quad, x, y);
    if (!quad_ok) {
        pass = false;
        d << "quadrilateral fixture failed; ";
    }

    PipelineReport pent = solve_trinomial_pair(
        pair_of("1 x2^2 - 7 x2^1 + 12", "-1 + 1 x1^1 x2^1 - 1 x1^2"), cfg);
    const double s5 = std::sqrt(5.0), s3 = std::sqrt(3.0);
    bool pent_ok = pent.count_range() == std::pair<long long, long long>{4, 4} &&
                   pent.classification == PolygonClass::Pentagon &&
                   pent.bound_provenance == "COR_POLY" &&
                   check_root(pent, (3 + s5) / 2, 3) && check_root(pent, (3 - s5) / 2, 3) &&
                   check_root(pent, 2 + s3, 4) && check_root(pent, 2 - s3, 4);
    if (!pent_ok) {
        pass = false;
        d << "pentagon fixture failed; ";
    }
    if (pass) d << "triangle/quadrilateral/pentagon fixtures at 1e-8, COR_POLY engaged";
    verdict(3, pass, d.str());
}

// ---- criterion 4: the bound table --------------------------------------------

void criterion4() {
    bool pass = khovanski_bound(2, 5) == 248832 && khovanski_bound(2, 6) == 23887872 &&
                khovanski_bound(2, 7) == BigInt("4586471424") && trinomial_m_bound(3) == 5 &&
                trinomial_m_bound(4) == 14 && trinomial_m_bound(5) == 30 &&
                pyramidal_bound({2, 2, 21}) == 20;
    verdict(4, pass, "khovanski (248832, 23887872, 4586471424), pair caps (5, 14, 30), product 20");
}

// ---- criterion 5: the degenerate 25-root evaluation ---------------------------

void criterion5() {
    SystemFile sf = parse_system(fixtures::kDegenSystem);
    bool pass = sf.system.polys[2].term_count() == 21;
    std::ostringstream d;
    for (long long i = 1; i <= 5; ++i)
        for (long long j = 1; j <= 5; ++j)
            for (const auto& f : sf.system.polys)
                if (!fixtures::exact_integer_zero(f, {i, j, 1})) {
                    pass = false;
                    d << "(" << i << "," << j << ",1) not an exact root; ";
                }
    if (pass) d << "all 25 integral points are exact roots of the type-(2,2,21) system";
    verdict(5, pass, d.str());
}

// ---- criterion 6: random trinomial-pair properties -----------------------------

void criterion6() {
    const int trials = 10000;
    static const OracleGrid grid(1000000);
    std::atomic<int> bad_bound{0}, bad_class{0}, bad_boxes{0}, bad_oracle{0}, done{0};
    std::mutex note_mu;
    std::string note;

    auto work = [&](int lo, int hi) {
        IsolationConfig cfg;
        for (int trial = lo; trial < hi; ++trial) {
            auto rng = make_rng(0xC0FFEE ^ (0x9E3779B97F4A7C15ULL * trial));
            FewnomialSystem F = random_trinomial_pair(rng);
            PipelineReport rep;
            try {
                rep = solve_trinomial_pair(F, cfg);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> g(note_mu);
                note = std::string("exception at trial ") + std::to_string(trial) + ": " + e.what();
                ++bad_bound;
                continue;
            }
            int unique = rep.certified_unique();
            if (unique > 5 || rep.applied_bound > 5) ++bad_bound;
            if (unique > polygon_class_bound(rep.classification)) ++bad_class;
            for (const auto& rb : rep.roots) {
                if (!counts_as_unique(rb.status)) continue;
                for (const auto& f : F.polys)
                    if (!evaluate_interval(f, rb.box).contains_zero()) ++bad_boxes;
            }
            // oracle comparison on the reduced univariate form, COMPLETE runs only
            CanonicalizeResult canon = canonicalize_pair(F, cfg.tau_rank);
            if (canon.status == CanonicalizeStatus::Ok) {
                TOneMinusTForm form = reduce_pair(*canon.pair);
                if (form.k() >= 1) {
                    Isolation1D iso = isolate_roots(form, cfg);
                    if (iso.complete) {
                        int oracle = sampling_sign_changes(form, grid, densify_around(iso.roots));
                        if (oracle != iso.certified_unique()) {
                            ++bad_oracle;
                            std::lock_guard<std::mutex> g(note_mu);
                            note = "oracle mismatch at trial " + std::to_string(trial);
                        }
                    }
                }
            }
            ++done;
        }
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    int chunk = trials / static_cast<int>(hw);
    for (unsigned i = 0; i < hw; ++i) {
        int lo = static_cast<int>(i) * chunk;
        int hi = i + 1 == hw ? trials : lo + chunk;
        pool.emplace_back(work, lo, hi);
    }
    for (auto& t : pool) t.join();

    bool pass = bad_bound == 0 && bad_class == 0 && bad_boxes == 0 && bad_oracle == 0;
    std::ostringstream d;
    d << done.load() << " random pairs: bound violations " << bad_bound.load()
      << ", class violations " << bad_class.load() << ", box re-evaluation failures "
      << bad_boxes.load() << ", oracle mismatches " << bad_oracle.load();
    if (!note.empty()) d << " [" << note << "]";
    verdict(6, pass, d.str());
}

// ---- criterion 7: descartes / rolle soundness -----------------------------------

void criterion7() {
    const int trials = 10000;
    std::atomic<int> bad_descartes{0}, bad_rolle{0};

    auto work = [&](int lo, int hi) {
        IsolationConfig cfg;
        for (int trial = lo; trial < hi; ++trial) {
            auto rng = make_rng(0xABCD ^ (0x9E3779B97F4A7C15ULL * trial));
            RealExpPoly p = random_realexp(rng, 6);
            try {
                Isolation1D iso = isolate_positive_roots(p, cfg);
                if (iso.certified_unique() > descartes_bound(p)) ++bad_descartes;
            } catch (const std::logic_error&) {
                ++bad_descartes;
            }
            TOneMinusTForm f = random_form(rng, 4);
            try {
                Isolation1D iso = isolate_roots(f, cfg);
                if (iso.certified_unique() > rolle_root_bound(f.k())) ++bad_rolle;
            } catch (const std::logic_error&) {
                ++bad_rolle;
            }
        }
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    int chunk = trials / static_cast<int>(hw);
    for (unsigned i = 0; i < hw; ++i) {
        int lo = static_cast<int>(i) * chunk;
        int hi = i + 1 == hw ? trials : lo + chunk;
        pool.emplace_back(work, lo, hi);
    }
    for (auto& t : pool) t.join();

    bool pass = bad_descartes == 0 && bad_rolle == 0;
    std::ostringstream d;
    d << trials << " random instances each: descartes violations " << bad_descartes.load()
      << ", rolle violations " << bad_rolle.load();
    verdict(7, pass, d.str());
}

// ---- criterion 8: pyramidal product systems --------------------------------------

void criterion8() {
    IsolationConfig cfg;
    PyramidalResult r2 =
        solve_pyramidal(pair_of("1 x1^2 - 3 x1^1 + 2", "1 x2^2 - 3 x2^1 + 2"), cfg);
    SystemFile p3 = parse_system(
        "#: vars 3\n"
        "1 x1^2 - 3 x1^1 + 2\n"
        "1 x2^2 - 3 x2^1 + 2\n"
        "1 x3^2 - 3 x3^1 + 2\n");
    PyramidalResult r3 = solve_pyramidal(p3.system, cfg);
    int u2 = 0, u3 = 0;
    for (const auto& rb : r2.roots) u2 += counts_as_unique(rb.status);
    for (const auto& rb : r3.roots) u3 += counts_as_unique(rb.status);
    bool pass = u2 == 4 && r2.complete && u3 == 8 && r3.complete;
    std::ostringstream d;
    d << "product systems: n=2 certified " << u2 << " roots, n=3 certified " << u3;
    verdict(8, pass, d.str());
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%d/8 criteria passed in %.1f s\n", 8 - g_failures, seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
