#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hypmetrics/hypmetrics.hpp>

namespace hm = hypmetrics;
using ordered_json = nlohmann::ordered_json;

namespace {

hm::Point parse_point(const std::string& text) {
    std::vector<double> coords;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            coords.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw hm::ConfigError("bad coordinate '" + token + "' in point '" + text + "'");
        }
    }
    if (coords.size() < 2) throw hm::ConfigError("points need at least 2 coordinates: '" + text + "'");
    return hm::Point(std::move(coords));
}

hm::Domain make_domain(const std::string& name, int dim) {
    if (name == "half") return hm::Domain::half_space(dim);
    if (name == "ball") return hm::Domain::unit_ball(dim);
    if (name == "punctured") return hm::Domain::punctured_space(dim);
    throw hm::ConfigError("unknown domain '" + name + "'");
}

hm::MetricKind parse_metric(const std::string& name) {
    if (name == "ctilde") return hm::MetricKind::CTilde;
    if (name == "s") return hm::MetricKind::S;
    if (name == "j") return hm::MetricKind::J;
    if (name == "jstar") return hm::MetricKind::JStar;
    if (name == "rho") return hm::MetricKind::Rho;
    if (name == "thrho") return hm::MetricKind::ThRhoHalf;
    throw hm::ConfigError("unknown metric '" + name + "'");
}

hm::FamilyId parse_family(const std::string& name) {
    if (name == "CS_HalfSpace") return hm::FamilyId::CS_HalfSpace;
    if (name == "CJ_Punctured") return hm::FamilyId::CJ_Punctured;
    if (name == "CTh_Ball_Collinear") return hm::FamilyId::CTh_Ball_Collinear;
    if (name == "CTh_Half_Vertical") return hm::FamilyId::CTh_Half_Vertical;
    throw hm::ConfigError("unknown family '" + name + "'");
}

ordered_json point_json(const hm::Point& p) {
    ordered_json a = ordered_json::array();
    for (double v : p.coords()) a.push_back(v);
    return a;
}

ordered_json finite_or_null(double v) {
    return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

constexpr std::size_t kViolationCap = 20;

ordered_json violations_json(const std::vector<hm::Violation>& vs) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < vs.size() && i < kViolationCap; ++i)
        arr.push_back({{"x", point_json(vs[i].x)},
                       {"y", point_json(vs[i].y)},
                       {"lhs", vs[i].lhs},
                       {"rhs", vs[i].rhs},
                       {"what", vs[i].what}});
    return arr;
}

void print_report(const std::string& command, ordered_json config, ordered_json results,
                  std::uint64_t seed) {
    ordered_json report;
    report["command"] = command;
    report["config"] = std::move(config);
    report["results"] = std::move(results);
    report["version"] = hm::kVersion;
    report["seed"] = seed;
    std::cout << report.dump(2) << "\n";
}

hm::EvalReport full_report(hm::MetricKind metric, const hm::Domain& g, const hm::Point& x,
                           const hm::Point& y) {
    if (metric == hm::MetricKind::S) return hm::s_metric(g, x, y);
    switch (g.kind()) {
        case hm::DomainKind::HalfSpace: return hm::ctilde_halfspace(x, y);
        case hm::DomainKind::UnitBall: return hm::ctilde_ball(x, y);
        case hm::DomainKind::PuncturedSpace: return hm::ctilde_punctured(x, y);
        default: throw hm::DomainError("no closed form in this domain");
    }
}

std::vector<std::pair<hm::Point, hm::Point>> sample_pairs(const hm::SampleConfig& cfg) {
    std::vector<std::pair<hm::Point, hm::Point>> pairs;
    pairs.reserve(static_cast<std::size_t>(cfg.pair_count));
    int done = 0;
    for (std::uint64_t batch = 0; done < cfg.pair_count; ++batch) {
        hm::Rng rng(hm::batch_seed(cfg.seed, batch));
        const int take = std::min(hm::kSampleBatch, cfg.pair_count - done);
        for (int i = 0; i < take; ++i) pairs.push_back(hm::sample_pair(cfg.domain, rng, cfg.margin));
        done += take;
    }
    return pairs;
}

std::vector<std::vector<double>> rotation_90(int dim) {
    std::vector<std::vector<double>> m(static_cast<std::size_t>(dim),
                                       std::vector<double>(static_cast<std::size_t>(dim), 0.0));
    for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    m[0][0] = 0.0;
    m[0][1] = -1.0;
    m[1][0] = 1.0;
    m[1][1] = 0.0;
    return m;
}

struct CheckOut {
    std::string name;
    double ratio_min = std::numeric_limits<double>::quiet_NaN();
    double ratio_max = std::numeric_limits<double>::quiet_NaN();
    std::vector<hm::Violation> violations;
    ordered_json extra = ordered_json::object();
};

std::string csv_text(const std::vector<hm::ContourPolyline>& loops) {
    std::ostringstream out;
    out << "loop_id,vertex_id,x,y\n";
    out << std::setprecision(17);
    for (std::size_t li = 0; li < loops.size(); ++li)
        for (std::size_t vi = 0; vi < loops[li].vertices.size(); ++vi)
            out << li << "," << vi << "," << loops[li].vertices[vi][0] << ","
                << loops[li].vertices[vi][1] << "\n";
    return out.str();
}

std::string svg_text(const std::vector<hm::ContourPolyline>& loops, const hm::Domain& g) {
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
    auto grow = [&](double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    for (const auto& loop : loops)
        for (const auto& v : loop.vertices) grow(v[0], v[1]);
    if (g.kind() == hm::DomainKind::UnitBall) {
        grow(-1.0, -1.0);
        grow(1.0, 1.0);
    }
    if (g.kind() == hm::DomainKind::HalfSpace) grow(0.0, 0.0);
    if (g.kind() == hm::DomainKind::PuncturedSpace) grow(0.0, 0.0);
    if (!std::isfinite(x0)) {
        grow(-1.0, -1.0);
        grow(1.0, 1.0);
    }
    const double pad = 0.1 * std::max({x1 - x0, y1 - y0, 0.1});
    x0 -= pad;
    x1 += pad;
    y0 -= pad;
    y1 += pad;
    // SVG y grows downward; reflect inside the box so the viewBox is unchanged.
    auto flip = [&](double y) { return y0 + y1 - y; };
    const double stroke = (x1 - x0) / 400.0;
    std::ostringstream out;
    out << std::setprecision(9);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" viewBox=\"" << x0 << " " << y0
        << " " << (x1 - x0) << " " << (y1 - y0) << "\">\n";
    if (g.kind() == hm::DomainKind::UnitBall)
        out << "  <circle cx=\"0\" cy=\"" << flip(0.0) << "\" r=\"1\" fill=\"none\" stroke=\"#888\""
            << " stroke-width=\"" << stroke << "\"/>\n";
    if (g.kind() == hm::DomainKind::HalfSpace)
        out << "  <line x1=\"" << x0 << "\" y1=\"" << flip(0.0) << "\" x2=\"" << x1 << "\" y2=\""
            << flip(0.0) << "\" stroke=\"#888\" stroke-width=\"" << stroke << "\"/>\n";
    if (g.kind() == hm::DomainKind::PuncturedSpace)
        out << "  <circle cx=\"0\" cy=\"" << flip(0.0) << "\" r=\"" << 2.0 * stroke
            << "\" fill=\"#888\"/>\n";
    for (const auto& loop : loops) {
        out << "  <path d=\"";
        for (std::size_t vi = 0; vi < loop.vertices.size(); ++vi)
            out << (vi == 0 ? "M " : " L ") << loop.vertices[vi][0] << " "
                << flip(loop.vertices[vi][1]);
        if (loop.closed) out << " Z";
        out << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" << stroke << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw hm::ConfigError("cannot open '" + path + "' for writing");
    out << text;
}

int emit_verify_report(const ordered_json& config, const std::vector<CheckOut>& checks,
                       std::uint64_t seed) {
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = -rmin;
    std::size_t total = 0;
    std::vector<hm::Violation> flat;
    ordered_json checksJson = ordered_json::array();
    for (const CheckOut& c : checks) {
        total += c.violations.size();
        for (const hm::Violation& v : c.violations) {
            if (flat.size() >= kViolationCap) break;
            hm::Violation tagged = v;
            tagged.what = "[" + c.name + "] " + v.what;
            flat.push_back(std::move(tagged));
        }
        if (std::isfinite(c.ratio_min)) rmin = std::min(rmin, c.ratio_min);
        if (std::isfinite(c.ratio_max)) rmax = std::max(rmax, c.ratio_max);
        ordered_json entry;
        entry["name"] = c.name;
        entry["ratio_min"] = finite_or_null(c.ratio_min);
        entry["ratio_max"] = finite_or_null(c.ratio_max);
        entry["violation_count"] = c.violations.size();
        entry.update(c.extra);
        checksJson.push_back(std::move(entry));
    }
    ordered_json results;
    results["ratio_min"] = finite_or_null(rmin);
    results["ratio_max"] = std::isfinite(rmax) ? ordered_json(rmax) : ordered_json(nullptr);
    results["violation_count"] = total;
    results["violations"] = violations_json(flat);
    results["checks"] = std::move(checksJson);
    print_report("verify", config, std::move(results), seed);
    return total == 0 ? 0 : 1;
}

int run_verify(const std::string& suite, const std::string& domainName, int dim, int pairs,
               std::uint64_t seed, const std::string& centerText, bool centerGiven, bool dimGiven,
               double level, double exponent) {
    hm::Point center;
    if (suite == "inclusion") {
        if (centerGiven) {
            center = parse_point(centerText);
            if (dimGiven && center.dim() != dim)
                throw hm::ConfigError("--dim conflicts with the dimension of --center");
            dim = center.dim();
        } else {
            center = hm::Point::zero(dim);
            if (domainName == "half") center[dim - 1] = 1.0;
            else center[0] = domainName == "ball" ? 0.3 : 1.0;
        }
    }
    const hm::Domain g = make_domain(domainName, dim);
    const hm::SampleConfig cfg{g, pairs, seed};
    std::vector<CheckOut> checks;

    if (suite == "ineq") {
        std::vector<std::pair<hm::MetricKind, hm::MetricKind>> sweeps = {
            {hm::MetricKind::CTilde, hm::MetricKind::S},
            {hm::MetricKind::CTilde, hm::MetricKind::JStar},
            {hm::MetricKind::S, hm::MetricKind::JStar}};
        if (g.kind() != hm::DomainKind::PuncturedSpace)
            sweeps.emplace_back(hm::MetricKind::CTilde, hm::MetricKind::ThRhoHalf);
        for (const auto& [num, den] : sweeps) {
            const hm::RatioSummary r = hm::sweep_ratio(num, den, cfg);
            CheckOut c;
            c.name = std::string(hm::to_string(num)) + "/" + hm::to_string(den);
            c.ratio_min = r.ratio_min;
            c.ratio_max = r.ratio_max;
            c.violations = r.violations;
            c.extra["pair_count"] = r.pair_count;
            checks.push_back(std::move(c));
        }
    } else if (suite == "triangle") {
        CheckOut c;
        c.name = "triangle(ctilde)";
        c.violations = hm::check_triangle(hm::MetricKind::CTilde, cfg);
        checks.push_back(std::move(c));
    } else if (suite == "inclusion") {
        const hm::InclusionReport rep = hm::check_ball_inclusions(center, level, cfg);
        CheckOut c;
        c.name = "inclusion(r=" + std::to_string(level) + ")";
        c.violations = rep.violations;
        c.extra["sample_count"] = rep.sample_count;
        c.extra["sup_s_inside"] = finite_or_null(rep.sup_s_inside);
        c.extra["inf_s_outside"] = finite_or_null(rep.inf_s_outside);
        c.extra["sup_rho_inside"] = finite_or_null(rep.sup_rho_inside);
        c.extra["inf_rho_outside"] = finite_or_null(rep.inf_rho_outside);
        checks.push_back(std::move(c));
    } else if (suite == "conformal") {
        std::vector<hm::MapSpec> maps;
        if (g.kind() == hm::DomainKind::HalfSpace) {
            maps.push_back(hm::ball_half_swap(dim));
            maps.push_back(hm::half_similarity(2.0, hm::Point::unit(dim, 0)));
        } else if (g.kind() == hm::DomainKind::UnitBall) {
            maps.push_back(hm::ball_half_swap(dim));
            maps.push_back(hm::ball_rotation(rotation_90(dim)));
        } else {
            throw hm::ConfigError("the conformal suite requires the half-space or the ball");
        }
        const auto pairsList = sample_pairs(cfg);
        for (const hm::MapSpec& m : maps) {
            const hm::RatioSummary d = hm::check_conformal_distortion(m, cfg);
            CheckOut c;
            c.name = std::string("distortion(") + hm::to_string(m.kind) + ")";
            c.ratio_min = d.ratio_min;
            c.ratio_max = d.ratio_max;
            c.violations = d.violations;
            c.extra["pair_count"] = d.pair_count;
            checks.push_back(std::move(c));
            const hm::RatioSummary inv = hm::check_hyperbolic_invariance(m, g, pairsList);
            CheckOut ci;
            ci.name = std::string("invariance(") + hm::to_string(m.kind) + ")";
            ci.ratio_min = inv.ratio_min;
            ci.ratio_max = inv.ratio_max;
            ci.violations = inv.violations;
            ci.extra["max_abs_deviation"] = finite_or_null(inv.ratio_max);
            checks.push_back(std::move(ci));
        }
    } else if (suite == "qr") {
        const hm::RatioSummary r = hm::check_quasiregular(exponent, cfg);
        CheckOut c;
        std::ostringstream name;
        name << "quasiregular(a=" << exponent << ")";
        c.name = name.str();
        c.ratio_min = r.ratio_min;
        c.ratio_max = r.ratio_max;
        c.violations = r.violations;
        c.extra["pair_count"] = r.pair_count;
        checks.push_back(std::move(c));
    } else {
        throw hm::ConfigError("unknown suite '" + suite + "'");
    }

    ordered_json config;
    config["suite"] = suite;
    config["domain"] = domainName;
    config["dim"] = dim;
    config["pairs"] = pairs;
    config["margin"] = cfg.margin;
    config["tol"] = cfg.tol;
    if (suite == "inclusion") {
        config["center"] = point_json(center);
        config["radius"] = level;
    }
    if (suite == "qr") config["exponent"] = exponent;
    return emit_verify_report(config, checks, seed);
}

int run_compare(int pairs, std::uint64_t seed) {
    struct Case {
        std::string name;
        hm::Domain g;
    };
    const std::vector<Case> cases = {{"half_2", hm::Domain::half_space(2)},
                                     {"half_3", hm::Domain::half_space(3)},
                                     {"ball_2", hm::Domain::unit_ball(2)},
                                     {"ball_3", hm::Domain::unit_ball(3)},
                                     {"punctured_2", hm::Domain::punctured_space(2)}};
    const hm::OracleConfig ocfg;
    const hm::SolverConfig scfg;
    double overall = 0.0;
    ordered_json per = ordered_json::object();
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        const hm::Domain& g = cases[ci].g;
        const bool naive = g.dim() == 2 && g.kind() != hm::DomainKind::PuncturedSpace;
        double devReduced = 0.0, devNaive = 0.0, devS = 0.0;
        hm::SampleConfig cfg{g, pairs, hm::batch_seed(seed, ci * 65536)};
        for (const auto& [x, y] : sample_pairs(cfg)) {
            const double c = hm::metric_value(hm::MetricKind::CTilde, g, x, y, scfg);
            devReduced = std::max(devReduced, std::abs(c - hm::ctilde_oracle_reduced(g, x, y, ocfg)));
            if (naive)
                devNaive = std::max(devNaive, std::abs(c - hm::ctilde_oracle_naive2d(g, x, y, ocfg)));
            const double s = hm::metric_value(hm::MetricKind::S, g, x, y, scfg);
            devS = std::max(devS, std::abs(s - hm::s_oracle(g, x, y, ocfg)));
        }
        ordered_json entry;
        entry["ctilde_reduced"] = devReduced;
        if (naive) entry["ctilde_naive"] = devNaive;
        entry["s"] = devS;
        per[cases[ci].name] = std::move(entry);
        overall = std::max({overall, devReduced, devS});
        if (naive) overall = std::max(overall, devNaive);
    }
    ordered_json config;
    config["pairs"] = pairs;
    ordered_json results;
    results["value"] = overall;
    results["threshold"] = 1e-6;
    results["per_domain"] = std::move(per);
    print_report("compare", config, std::move(results), seed);
    return overall <= 1e-6 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    // Point-valued options may start with a dash ("--y -1,0"); join them with
    // '=' so the parser never mistakes a coordinate list for an option.
    const std::vector<std::string> pointOpts = {"--x", "--y", "--center", "--shift"};
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (std::find(pointOpts.begin(), pointOpts.end(), a) != pointOpts.end() && i + 1 < argc) {
            a += "=";
            a += argv[++i];
        }
        args.push_back(std::move(a));
    }
    std::vector<const char*> argPtrs;
    argPtrs.push_back(argc > 0 ? argv[0] : "hypmetrics");
    for (const std::string& a : args) argPtrs.push_back(a.c_str());

    CLI::App app{"Hyperbolic-type metrics: evaluation, verification, and contours"};
    app.require_subcommand(1);

    std::string evalDomain, evalMetric, evalX, evalY;
    bool evalJson = false;
    CLI::App* evalCmd = app.add_subcommand("eval", "Evaluate a metric at an interior pair");
    evalCmd->add_option("--domain", evalDomain, "half | ball | punctured")
        ->required()
        ->check(CLI::IsMember({"half", "ball", "punctured"}));
    evalCmd->add_option("--metric", evalMetric, "ctilde | s | j | jstar | rho | thrho")
        ->required()
        ->check(CLI::IsMember({"ctilde", "s", "j", "jstar", "rho", "thrho"}));
    evalCmd->add_option("--x", evalX, "comma-separated coordinates")->required();
    evalCmd->add_option("--y", evalY, "comma-separated coordinates")->required();
    evalCmd->add_flag("--json", evalJson, "JSON report output (default)");

    std::string verifySuite, verifyDomain = "ball", verifyCenter;
    int verifyDim = 2, verifyPairs = 10000;
    std::uint64_t verifySeed = 0;
    double verifyLevel = 0.5, verifyExponent = 0.5;
    bool verifyJson = false;
    CLI::App* verifyCmd = app.add_subcommand("verify", "Run a verification suite");
    verifyCmd->add_option("--suite", verifySuite, "ineq | triangle | inclusion | conformal | qr")
        ->required()
        ->check(CLI::IsMember({"ineq", "triangle", "inclusion", "conformal", "qr"}));
    verifyCmd->add_option("--domain", verifyDomain, "half | ball | punctured")
        ->check(CLI::IsMember({"half", "ball", "punctured"}));
    CLI::Option* verifyDimOpt = verifyCmd->add_option("--dim", verifyDim, "ambient dimension")
                                    ->check(CLI::Range(2, 16));
    verifyCmd->add_option("--pairs", verifyPairs, "sample count")->check(CLI::Range(1, 100000000));
    verifyCmd->add_option("--seed", verifySeed, "RNG seed")->envname("HYPMETRICS_SEED");
    CLI::Option* verifyCenterOpt =
        verifyCmd->add_option("--center", verifyCenter, "inclusion ball center");
    verifyCmd->add_option("--level", verifyLevel, "inclusion radius r in (0,1)");
    verifyCmd->add_option("--exponent", verifyExponent, "radial stretch exponent in (0,1]");
    verifyCmd->add_flag("--json", verifyJson, "JSON report output (default)");

    std::string sharpFamily;
    int sharpSteps = 20;
    bool sharpJson = false;
    CLI::App* sharpCmd = app.add_subcommand("sharp", "Trace a sharp-constant family");
    sharpCmd
        ->add_option("--family", sharpFamily,
                     "CS_HalfSpace | CJ_Punctured | CTh_Ball_Collinear | CTh_Half_Vertical")
        ->required()
        ->check(CLI::IsMember(
            {"CS_HalfSpace", "CJ_Punctured", "CTh_Ball_Collinear", "CTh_Half_Vertical"}));
    sharpCmd->add_option("--steps", sharpSteps, "family steps")->check(CLI::Range(1, 25));
    sharpCmd->add_flag("--json", sharpJson, "JSON report instead of CSV");

    std::string ballDomain = "ball", ballMetric = "ctilde", ballCenter, ballCsv, ballSvg;
    double ballLevel = 0.0;
    int ballGrid = 256;
    bool ballJson = false;
    CLI::App* ballCmd = app.add_subcommand("ball", "Extract a metric-ball contour");
    ballCmd->add_option("--domain", ballDomain, "half | ball | punctured")
        ->check(CLI::IsMember({"half", "ball", "punctured"}));
    ballCmd->add_option("--metric", ballMetric, "ctilde | s | j | jstar | rho | thrho")
        ->check(CLI::IsMember({"ctilde", "s", "j", "jstar", "rho", "thrho"}));
    ballCmd->add_option("--center", ballCenter, "comma-separated coordinates")->required();
    ballCmd->add_option("--level", ballLevel, "contour level")->required();
    ballCmd->add_option("--grid", ballGrid, "cells per side")->check(CLI::Range(8, 4096));
    ballCmd->add_option("--csv", ballCsv, "write polyline CSV to this path");
    ballCmd->add_option("--svg", ballSvg, "write SVG rendering to this path");
    ballCmd->add_flag("--json", ballJson, "JSON summary to stdout");

    int comparePairs = 200;
    std::uint64_t compareSeed = 0;
    bool compareJson = false;
    CLI::App* compareCmd =
        app.add_subcommand("compare", "Closed forms vs oracles: max absolute deviation");
    compareCmd->add_option("--pairs", comparePairs, "pairs per domain")
        ->check(CLI::Range(1, 1000000));
    compareCmd->add_option("--seed", compareSeed, "RNG seed")->envname("HYPMETRICS_SEED");
    compareCmd->add_flag("--json", compareJson, "JSON report output (default)");

    try {
        app.parse(static_cast<int>(argPtrs.size()), argPtrs.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*evalCmd) {
            const hm::Point x = parse_point(evalX);
            const hm::Point y = parse_point(evalY);
            const hm::Domain g = make_domain(evalDomain, x.dim());
            const hm::MetricKind metric = parse_metric(evalMetric);
            ordered_json results;
            if (metric == hm::MetricKind::CTilde || metric == hm::MetricKind::S) {
                const hm::EvalReport rep = full_report(metric, g, x, y);
                results["value"] = rep.value;
                results["branch"] = hm::to_string(rep.branch);
                if (rep.minimizer) results["minimizer"] = point_json(*rep.minimizer);
                if (rep.residual) results["residual"] = *rep.residual;
            } else {
                results["value"] = hm::metric_value(metric, g, x, y);
            }
            ordered_json config;
            config["domain"] = evalDomain;
            config["metric"] = evalMetric;
            config["x"] = point_json(x);
            config["y"] = point_json(y);
            print_report("eval", std::move(config), std::move(results), 0);
            return 0;
        }
        if (*verifyCmd)
            return run_verify(verifySuite, verifyDomain, verifyDim, verifyPairs, verifySeed,
                              verifyCenter, verifyCenterOpt->count() > 0, verifyDimOpt->count() > 0,
                              verifyLevel, verifyExponent);
        if (*sharpCmd) {
            const hm::FamilyTrace tr = hm::sharpness_family(parse_family(sharpFamily), sharpSteps);
            if (sharpJson) {
                ordered_json points = ordered_json::array();
                for (const hm::FamilyPoint& p : tr.points)
                    points.push_back({{"parameter", p.parameter}, {"ratio", p.ratio}});
                ordered_json config;
                config["family"] = sharpFamily;
                config["steps"] = sharpSteps;
                ordered_json results;
                results["claimed_constant"] = tr.claimed_constant;
                results["final_gap"] = tr.final_gap;
                results["points"] = std::move(points);
                print_report("sharp", std::move(config), std::move(results), 0);
            } else {
                std::cout << "parameter,ratio\n" << std::setprecision(17);
                for (const hm::FamilyPoint& p : tr.points)
                    std::cout << p.parameter << "," << p.ratio << "\n";
            }
            return 0;
        }
        if (*ballCmd) {
            const hm::Point center = parse_point(ballCenter);
            const hm::Domain g = make_domain(ballDomain, center.dim());
            const hm::MetricKind metric = parse_metric(ballMetric);
            const auto loops = hm::metric_ball_contour(g, metric, center, ballLevel, ballGrid);
            if (!ballCsv.empty()) write_file(ballCsv, csv_text(loops));
            if (!ballSvg.empty()) write_file(ballSvg, svg_text(loops, g));
            if (ballJson) {
                std::size_t vertices = 0;
                bool allClosed = !loops.empty();
                for (const auto& loop : loops) {
                    vertices += loop.vertices.size();
                    allClosed = allClosed && loop.closed;
                }
                ordered_json config;
                config["domain"] = ballDomain;
                config["metric"] = ballMetric;
                config["center"] = point_json(center);
                config["level"] = ballLevel;
                config["grid"] = ballGrid;
                ordered_json results;
                results["loops"] = loops.size();
                results["vertices"] = vertices;
                results["all_closed"] = allClosed;
                print_report("ball", std::move(config), std::move(results), 0);
            } else if (ballCsv.empty() && ballSvg.empty()) {
                std::cout << csv_text(loops);
            }
            return 0;
        }
        if (*compareCmd) return run_compare(comparePairs, compareSeed);
    } catch (const hm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
