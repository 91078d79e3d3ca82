// fnom: certified counting and isolation of positive roots of sparse
// real-exponent polynomial systems, plus the closed-form bound calculators.
//
// Subcommands: classify, count, isolate, bounds, paper-bench, plot.
// JSON report on stdout, human-readable summary on stderr.
// Exit codes: 0 ok, 2 incomplete certification, 3 fixture failure,
// 64 usage error, 65 parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fewnomial/bounds.hpp"
#include "fewnomial/curve.hpp"
#include "fewnomial/parse.hpp"
#include "fewnomial/reference_suite.hpp"
#include "fewnomial/solver.hpp"

using nlohmann::json;
using namespace fewnomial;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIncomplete = 2;
constexpr int kExitFixtureFailure = 3;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json box_to_json(const Box& b) {
    json j = json::array();
    for (const auto& s : b) j.push_back({s.lo, s.hi});
    return j;
}

json roots_to_json(const std::vector<RootBox>& roots) {
    json j = json::array();
    for (const auto& r : roots)
        j.push_back({{"box", box_to_json(r.box)}, {"status", to_string(r.status)}});
    return j;
}

void emit(const json& j, const std::string& human, bool json_out) {
    if (json_out) {
        std::cout << j.dump(2) << "\n";
        std::cerr << human << "\n";
    } else {
        std::cout << human << "\n";
    }
}

struct Options {
    IsolationConfig cfg;
    bool json_out = true;
    std::string precision = "double";

    void finalize() {
        if (precision == "extended") cfg.precision = PrecisionPolicy::Extended;
        else cfg.precision = PrecisionPolicy::DoubleWithEscalation;
        cfg.validate();
    }
};

int cmd_classify(const std::string& path, const Options& opt) {
    SystemFile sf = parse_system(read_input(path));
    const FewnomialSystem& F = sf.system;
    json j;
    std::string cls = "NONE";
    if (F.n == 2 && F.k() == 2) {
        cls = to_string(classify_pair(F));
        j["classification"] = cls;
    }
    bool pyr = false, mvz = false;
    if (F.k() == F.n) {
        pyr = is_pyramidal(F, opt.cfg.tau_rank);
        mvz = mixed_volume_zero(F, opt.cfg.tau_rank);
        j["pyramidal"] = pyr;
        j["mixed_volume_zero"] = mvz;
    }
    std::ostringstream human;
    human << "classification: " << cls << "; pyramidal: " << (pyr ? "yes" : "no")
          << "; mixed volume zero: " << (mvz ? "yes" : "no");
    emit(j, human.str(), opt.json_out);
    return kExitOk;
}

int cmd_count(const std::string& path, const Options& opt) {
    SystemFile sf = parse_system(read_input(path));
    CountReport cr = count_report(sf.system, opt.cfg);
    json j{{"certified_range", {cr.certified_min, cr.certified_max}},
           {"bound", cr.applied_bound},
           {"provenance", cr.bound_provenance},
           {"status", cr.complete ? "COMPLETE" : "INCOMPLETE"}};
    if (cr.pipeline) {
        j["classification"] = to_string(cr.pipeline->classification);
        j["roots"] = roots_to_json(cr.pipeline->roots);
        j["trace"] = cr.pipeline->trace;
    }
    std::ostringstream human;
    human << "certified roots: [" << cr.certified_min << "," << cr.certified_max << "]; bound "
          << cr.applied_bound << " (" << cr.bound_provenance << ")";
    if (!cr.complete) human << "; INCOMPLETE";
    emit(j, human.str(), opt.json_out);
    return cr.complete ? kExitOk : kExitIncomplete;
}

int cmd_isolate(const std::string& path, const Options& opt) {
    SystemFile sf = parse_system(read_input(path));
    const FewnomialSystem& F = sf.system;
    json j;
    Isolation1D iso;
    std::string domain;
    if (F.n == 1 && F.k() == 1) {
        std::vector<RealExpTerm> ts;
        for (const Term& t : F.polys[0].terms()) ts.push_back({t.coeff, t.exponent[0]});
        iso = isolate_positive_roots(RealExpPoly(std::move(ts)), opt.cfg);
        domain = "(0, inf)";
    } else if (F.n == 2 && F.k() == 2) {
        CanonicalizeResult canon = canonicalize_pair(F, opt.cfg.tau_rank);
        if (canon.status == CanonicalizeStatus::SignObstruction) {
            emit(json{{"roots", json::array()}, {"status", "COMPLETE"},
                      {"note", "sign obstruction: no positive roots"}},
                 "no roots: sign obstruction", opt.json_out);
            return kExitOk;
        }
        if (canon.status != CanonicalizeStatus::Ok)
            throw std::runtime_error(
                "isolate: first member must be a trinomial with 2-dimensional Newton polygon");
        iso = isolate_roots(reduce_pair(*canon.pair), opt.cfg);
        domain = "(0, 1)";
    } else {
        throw std::runtime_error("isolate: expects one univariate polynomial or a 2x2 pair");
    }
    json roots = json::array();
    for (const auto& r : iso.roots)
        roots.push_back({{"interval", {r.t.lo, r.t.hi}}, {"status", to_string(r.status)}});
    j["roots"] = roots;
    j["domain"] = domain;
    j["status"] = iso.complete ? "COMPLETE" : "INCOMPLETE";
    j["subdivisions"] = iso.subdivisions;
    std::ostringstream human;
    human << iso.certified_unique() << " certified root(s), " << iso.unresolved()
          << " undecided interval(s) on " << domain;
    for (const auto& r : iso.roots) {
        char buf[80];
        std::snprintf(buf, sizeof buf, "\n  [%.17g, %.17g] %s", r.t.lo, r.t.hi,
                      to_string(r.status));
        human << buf;
    }
    emit(j, human.str(), opt.json_out);
    return iso.complete ? kExitOk : kExitIncomplete;
}

int cmd_paper_bench(const Options& opt) {
    std::vector<FixtureResult> results = run_reference_suite(opt.cfg);
    json j = json::array();
    int failures = 0;
    for (const auto& r : results) {
        j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass && !r.detail.empty()) std::cerr << "  (" << r.detail << ")";
        std::cerr << "\n";
        failures += !r.pass;
    }
    if (opt.json_out) std::cout << j.dump(2) << "\n";
    std::cerr << results.size() - failures << "/" << results.size() << " fixtures passed\n";
    return failures == 0 ? kExitOk : kExitFixtureFailure;
}

int cmd_plot(const std::string& path, int poly_index, double x_lo, double x_hi, double y_lo,
             double y_hi, int grid, const Options& opt) {
    SystemFile sf = parse_system(read_input(path));
    if (poly_index < 0 || poly_index >= sf.system.k())
        throw std::runtime_error("plot: polynomial index out of range");
    const Fewnomial& f = sf.system.polys[poly_index];
    if (f.n() != 2) throw std::runtime_error("plot: only bivariate curves");
    if (!(x_lo > 0 && y_lo > 0 && x_hi > x_lo && y_hi > y_lo))
        throw std::runtime_error("plot: box must satisfy 0 < lo < hi");

    auto coord = [&](double lo, double hi, int i) {
        // geometric spacing keeps detail near the axes
        return lo * std::pow(hi / lo, static_cast<double>(i) / (grid - 1));
    };
    std::vector<std::vector<double>> v(grid, std::vector<double>(grid));
    for (int i = 0; i < grid; ++i)
        for (int k = 0; k < grid; ++k)
            v[i][k] = evaluate(f, {coord(x_lo, x_hi, i), coord(y_lo, y_hi, k)});
    std::cout << "x1,x2\n";
    long points = 0;
    for (int i = 0; i < grid; ++i)
        for (int k = 0; k < grid; ++k) {
            double x = coord(x_lo, x_hi, i), y = coord(y_lo, y_hi, k);
            if (i + 1 < grid && v[i][k] * v[i + 1][k] < 0) {
                double x2 = coord(x_lo, x_hi, i + 1);
                double a = v[i][k] / (v[i][k] - v[i + 1][k]);
                std::printf("%.12g,%.12g\n", x + a * (x2 - x), y);
                ++points;
            }
            if (k + 1 < grid && v[i][k] * v[i][k + 1] < 0) {
                double y2 = coord(y_lo, y_hi, k + 1);
                double a = v[i][k] / (v[i][k] - v[i][k + 1]);
                std::printf("%.12g,%.12g\n", x, y + a * (y2 - y));
                ++points;
            }
        }
    std::cerr << points << " curve sample(s) on a " << grid << "x" << grid << " grid\n";
    return kExitOk;
}

json bound_report_json(const BoundReport& r) {
    return {{"value", r.value.str()},
            {"finite", r.finite},
            {"exact", r.exact},
            {"formula", to_string(r.formula)},
            {"inputs", r.inputs}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified positive-root counting for sparse real-exponent systems"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--min-width", opt.cfg.min_width, "isolation floor width")
        ->capture_default_str();
    app.add_option("--max-subdiv", opt.cfg.max_subdivisions, "subdivision budget")
        ->capture_default_str();
    app.add_option("--threads", opt.cfg.threads, "worker threads for isolation")
        ->capture_default_str();
    app.add_option("--precision", opt.precision, "double | extended")
        ->check(CLI::IsMember({"double", "extended"}))
        ->capture_default_str();
    app.add_option("--tau-rank", opt.cfg.tau_rank, "relative singular-value threshold")
        ->capture_default_str();
    app.add_flag("--json,!--no-json", opt.json_out, "JSON report on stdout (default on)");

    std::string file;
    auto* c_classify = app.add_subcommand("classify", "polygon class and degeneracy flags");
    c_classify->add_option("file", file, "system file ('-' = stdin)")->required();
    auto* c_count = app.add_subcommand("count", "certified root count for a system");
    c_count->add_option("file", file, "system file ('-' = stdin)")->required();
    auto* c_isolate = app.add_subcommand("isolate", "certified root intervals");
    c_isolate->add_option("file", file, "system file ('-' = stdin)")->required();
    auto* c_bench = app.add_subcommand("paper-bench", "replay the bundled reference fixtures");

    auto* c_bounds = app.add_subcommand("bounds", "closed-form bound calculators");
    c_bounds->require_subcommand(1);
    long long arg_n = 2, arg_mu = 3, arg_m = 3;
    std::string arg_class = "TRIANGLE";
    std::vector<long long> arg_type;
    auto* b_kho = c_bounds->add_subcommand("khovanski", "(n+1)^mu 2^{mu(mu-1)/2}");
    b_kho->add_option("--n", arg_n)->required();
    b_kho->add_option("--mu", arg_mu)->required();
    auto* b_tri = c_bounds->add_subcommand("trinomial-m", "pair of a trinomial and an m-nomial");
    b_tri->add_option("--m", arg_m)->required();
    auto* b_cls = c_bounds->add_subcommand("polygon-class", "per-class trinomial pair bound");
    b_cls->add_option("--class", arg_class,
                      "SEGMENT|TRIANGLE|QUADRILATERAL|PENTAGON|HEXAGON_OR_MORE")
        ->required();
    auto* b_pyr = c_bounds->add_subcommand("pyramidal", "prod (m_i - 1)");
    b_pyr->add_option("--type", arg_type, "term counts m_1 m_2 ...")->required()->expected(-1);
    auto* b_comp = c_bounds->add_subcommand("components", "connected-component bounds");
    b_comp->add_option("--n", arg_n)->required();
    b_comp->add_option("--m", arg_m)->required();
    auto* b_expl = c_bounds->add_subcommand("explicit-components",
                                            "2^{(m-1)(m-2)/2} 2^{n-2} n (n+1)^{m-1}");
    b_expl->add_option("--n", arg_n)->required();
    b_expl->add_option("--m", arg_m)->required();
    auto* b_chain = c_bounds->add_subcommand("kho-chain", "best bound on K'(n,m)");
    b_chain->add_option("--n", arg_n)->required();
    b_chain->add_option("--m", arg_m)->required();

    int plot_grid = 512, plot_index = 0;
    double px0 = 0.01, px1 = 10, py0 = 0.01, py1 = 10;
    auto* c_plot = app.add_subcommand("plot", "CSV samples of a curve f = 0 in a box");
    c_plot->add_option("file", file, "system file ('-' = stdin)")->required();
    c_plot->add_option("--poly", plot_index, "polynomial index")->capture_default_str();
    c_plot->add_option("--x-lo", px0)->capture_default_str();
    c_plot->add_option("--x-hi", px1)->capture_default_str();
    c_plot->add_option("--y-lo", py0)->capture_default_str();
    c_plot->add_option("--y-hi", py1)->capture_default_str();
    c_plot->add_option("--grid", plot_grid, "grid resolution")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        opt.finalize();
        if (*c_classify) return cmd_classify(file, opt);
        if (*c_count) return cmd_count(file, opt);
        if (*c_isolate) return cmd_isolate(file, opt);
        if (*c_bench) return cmd_paper_bench(opt);
        if (*c_plot)
            return cmd_plot(file, plot_index, px0, px1, py0, py1, plot_grid, opt);
        if (*c_bounds) {
            json j;
            std::ostringstream human;
            if (*b_kho) {
                BigInt v = khovanski_bound(arg_n, arg_mu);
                j = {{"formula", "KHOVANSKI"}, {"value", v.str()}, {"exact", false},
                     {"inputs", "n=" + std::to_string(arg_n) + ", mu=" + std::to_string(arg_mu)}};
                human << "khovanski(" << arg_n << "," << arg_mu << ") = " << v.str();
            } else if (*b_tri) {
                BigInt v = trinomial_m_bound(static_cast<int>(arg_m));
                j = {{"formula", "THM_TRI3"}, {"value", v.str()}, {"exact", arg_m == 3},
                     {"inputs", "m=" + std::to_string(arg_m)}};
                human << "trinomial_m_bound(" << arg_m << ") = " << v.str();
            } else if (*b_cls) {
                PolygonClass c;
                if (arg_class == "POINT") c = PolygonClass::Point;
                else if (arg_class == "SEGMENT") c = PolygonClass::Segment;
                else if (arg_class == "TRIANGLE") c = PolygonClass::Triangle;
                else if (arg_class == "QUADRILATERAL") c = PolygonClass::Quadrilateral;
                else if (arg_class == "PENTAGON") c = PolygonClass::Pentagon;
                else if (arg_class == "HEXAGON_OR_MORE") c = PolygonClass::HexagonOrMore;
                else throw std::runtime_error("unknown polygon class " + arg_class);
                int v = polygon_class_bound(c);
                j = {{"formula", "COR_POLY"}, {"value", std::to_string(v)},
                     {"exact", true}, {"inputs", arg_class}};
                human << "polygon_class_bound(" << arg_class << ") = " << v;
            } else if (*b_pyr) {
                BigInt v = pyramidal_bound(arg_type);
                j = {{"formula", "THM_TRI1"}, {"value", v.str()}, {"exact", true}};
                human << "pyramidal_bound = " << v.str();
            } else if (*b_comp) {
                ComponentBounds cb = component_bounds(static_cast<int>(arg_n),
                                                      static_cast<int>(arg_m));
                j = {{"formula_compact", "THM_COOL_COMP"},
                     {"formula_non_compact", "THM_COOL_NONCOMP"},
                     {"compact", cb.compact.str()},
                     {"non_compact", cb.non_compact.str()},
                     {"compact_exact", cb.compact_exact},
                     {"non_compact_exact", cb.non_compact_exact},
                     {"kprime", cb.kprime_instantiation}};
                human << "components(n=" << arg_n << ", m=" << arg_m
                      << "): compact <= " << cb.compact.str() << ", non-compact <= "
                      << cb.non_compact.str();
            } else if (*b_expl) {
                BigInt v = explicit_component_bound(static_cast<int>(arg_n),
                                                    static_cast<int>(arg_m));
                j = {{"formula", "COROLLARY_COMPONENTS"}, {"value", v.str()}, {"exact", false}};
                human << "explicit_component_bound(" << arg_n << "," << arg_m
                      << ") = " << v.str();
            } else if (*b_chain) {
                BoundReport r = remark_kho_chain(static_cast<int>(arg_n),
                                                 static_cast<int>(arg_m));
                j = bound_report_json(r);
                human << "K'(" << arg_n << "," << arg_m << ") <= " << r.value.str() << " via "
                      << to_string(r.formula) << (r.exact ? " (exact)" : "");
            }
            emit(j, human.str(), opt.json_out);
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
