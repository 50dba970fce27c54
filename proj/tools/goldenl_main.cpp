#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "goldenl/constructions.hpp"
#include "goldenl/errors.hpp"
#include "goldenl/gamma_rho.hpp"
#include "goldenl/io.hpp"
#include "goldenl/orbit.hpp"

namespace {

using namespace golden;

// Exact rational from a CLI argument: "7", "7/2", "1.1", "-0.25".
Rat parse_rat_arg(const std::string& s, const std::string& flag) {
    auto bad = [&]() -> Rat {
        raise(ErrorCode::ConfigError, flag + " expects an integer, fraction, or decimal, got '" + s + "'");
        return Rat(0);
    };
    if (s.empty()) return bad();
    try {
        size_t slash = s.find('/');
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) return bad();
            return Rat(num, den);
        }
        size_t dot = s.find('.');
        if (dot == std::string::npos) return Rat(Int(s));
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        if (fp.empty() || fp.find_first_not_of("0123456789") != std::string::npos) return bad();
        bool neg = !ip.empty() && ip[0] == '-';
        Int whole = (ip.empty() || ip == "-" || ip == "+") ? Int(0) : Int(ip);
        Int den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rat frac(Int(fp), den);
        Rat r = Rat(whole) + (neg ? -frac : frac);
        return r;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        return bad();
    }
}

struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutStream(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        check(file.is_open(), ErrorCode::ConfigError, "cannot open output file '" + path + "'");
        os = &file;
    }
    std::ostream& get() { return *os; }
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const std::string& cmd) {
    for (const char* a : allowed)
        if (format == a) return;
    raise(ErrorCode::ConfigError, cmd + " does not support --format " + format);
}

int cmd_verify_prop1(long n_max, const std::string& format, const std::string& out) {
    check(n_max >= 4 && n_max % 2 == 0, ErrorCode::ConfigError,
          "verify-prop1 needs an even --n-max >= 4, got " + std::to_string(n_max));
    require_format(format, {"csv", "json"}, "verify-prop1");

    std::vector<Prop1Pair> rows;
    bool all_ok = true;
    double dist_lo = 0, dist_hi = 0, norm_lo = 0, norm_hi = 0;
    for (long n = 4; n <= n_max; n += 2) {
        rows.push_back(prop1_pair(n));
        const Prop1Pair& r = rows.back();
        all_ok = all_ok && r.p2.norm_sq() <= r.norm_bound_witness * r.norm_bound_witness;
        double ds = std::sqrt(to_double(r.dist_sq * phi_pow(2 * (n - 2))));
        double ns = std::sqrt(to_double(r.p2.norm_sq() * phi_pow(-4 * n)));
        if (n == 4) {
            dist_lo = dist_hi = ds;
            norm_lo = norm_hi = ns;
        } else {
            dist_lo = std::min(dist_lo, ds);
            dist_hi = std::max(dist_hi, ds);
            norm_lo = std::min(norm_lo, ns);
            norm_hi = std::max(norm_hi, ns);
        }
    }

    OutStream sink(out);
    if (format == "csv") write_prop1_csv(sink.get(), rows);
    else write_prop1_json(sink.get(), rows);

    std::cerr << "verify-prop1: " << rows.size() << " rows, exact bounds "
              << (all_ok ? "hold" : "FAIL") << "\n";
    std::cerr << "  dist*phi^(n-2) in [" << fmt_g(dist_lo) << ", " << fmt_g(dist_hi) << "]\n";
    std::cerr << "  norm/phi^(2n)  in [" << fmt_g(norm_lo) << ", " << fmt_g(norm_hi) << "]\n";
    return all_ok ? 0 : 1;
}

int cmd_verify_triples(long n_max, const std::string& format, const std::string& out) {
    require_format(format, {"csv", "json"}, "verify-triples");
    std::vector<long> ks = fib_k_sequence(n_max);

    std::vector<TripleReport> rows;
    rows.reserve(ks.size());
    for (long k : ks) rows.push_back(recover_triple(k));

    double ratio_lo = 0, ratio_hi = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        double ratio = norm_ratio_float(rows[i]);
        if (i == 0) ratio_lo = ratio_hi = ratio;
        ratio_lo = std::min(ratio_lo, ratio);
        ratio_hi = std::max(ratio_hi, ratio);
    }

    OutStream sink(out);
    if (format == "csv") write_triples_csv(sink.get(), rows);
    else write_triples_json(sink.get(), rows);

    std::cerr << "verify-triples: " << rows.size() << " rows, exact invariants hold\n";
    std::cerr << "  max_norm*phi^(4 j_k) in [" << fmt_g(ratio_lo) << ", " << fmt_g(ratio_hi)
              << "]\n";
    return 0;
}

int cmd_jk_table(long k_max, const std::string& format, const std::string& out) {
    check(k_max >= 2, ErrorCode::ConfigError,
          "jk-table needs --k-max >= 2, got " + std::to_string(k_max));
    require_format(format, {"csv", "json"}, "jk-table");

    JkTable table = jk_table(k_max);
    bool all_ok = true;
    for (const auto& r : table.rows) all_ok = all_ok && r.frac_bound_ok;

    OutStream sink(out);
    if (format == "csv") write_jk_csv(sink.get(), table);
    else write_jk_json(sink.get(), table);

    std::cerr << "jk-table: " << table.rows.size() << " rows, fractional-part bound "
              << (all_ok ? "holds" : "FAIL") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_gamma_rho(const std::string& rho_spec, long terms, bool terms_given, long trials,
                  uint64_t seed, const std::string& format, const std::string& out) {
    require_format(format, {"csv", "json"}, "gamma-rho");
    QuadraticScalar rho = parse_rho(rho_spec);

    if (rho.is_rational()) {
        Rat r = rho.as_rational();
        long max_len = terms_given ? terms : 12;
        ContainmentReport rep =
            rational_containment(numerator(r), denominator(r), trials, max_len, seed);

        OutStream sink(out);
        if (format == "csv") write_containment_csv(sink.get(), rep);
        else write_containment_json(sink.get(), rep);

        bool pass = rep.all_contained && rep.min_gap_ok;
        std::cerr << "gamma-rho (rational " << r << "): " << rep.num_points
                  << " distinct points from " << rep.trials << " words (len <= " << max_len
                  << ", seed " << seed << ")\n";
        if (!rep.all_contained)
            std::cerr << "  containment FAIL: " << rep.violations << " points outside (1/q)Z^2"
                      << ", first witness word " << rep.first_violation_word << " -> ("
                      << rep.first_violation_x << ", " << rep.first_violation_y << ")\n";
        if (!rep.min_gap_ok)
            std::cerr << "  min-gap FAIL: min gap below 1/q (min_gap_sq = " << rep.min_gap_sq
                      << ")\n";
        if (pass) std::cerr << "  containment and 1/q separation hold\n";
        return pass ? 0 : 1;
    }

    check(terms >= 1, ErrorCode::ConfigError,
          "gamma-rho needs --terms >= 1, got " + std::to_string(terms));
    std::vector<ConPair> rows;
    rows.reserve(static_cast<size_t>(terms));
    bool all_ok = true;
    for (long n = 0; n < terms; ++n) {
        rows.push_back(con_pair(rho, n));
        all_ok = all_ok && rows.back().dist_bound_ok && rows.back().norm_bound_ok;
    }

    OutStream sink(out);
    if (format == "csv") write_gamma_rho_csv(sink.get(), rows);
    else write_gamma_rho_json(sink.get(), rows);

    std::cerr << "gamma-rho (irrational " << to_string(rho) << "): " << rows.size()
              << " convergent pairs, bounds " << (all_ok ? "hold" : "FAIL") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_enumerate(const std::string& radius_arg, const std::string& format,
                  const std::string& out) {
    require_format(format, {"csv", "json", "svg"}, "enumerate");
    Rat radius = parse_rat_arg(radius_arg, "--radius");
    OrbitPointSet set = OrbitPointSet::enumerate(radius);

    OutStream sink(out);
    if (format == "csv") write_points_csv(sink.get(), set);
    else if (format == "json") write_points_json(sink.get(), set);
    else write_points_svg(sink.get(), set, {});

    std::cerr << "enumerate: " << set.size() << " points (|x|,|y| <= " << radius << ", "
              << set.tree_size() << " per quadrant class)\n";
    return 0;
}

int cmd_clusters(const std::string& radius_arg, const std::string& eps_arg, long m,
                 const std::string& format, const std::string& out) {
    require_format(format, {"csv", "json", "svg"}, "clusters");
    Rat radius = parse_rat_arg(radius_arg, "--radius");
    Rat eps = parse_rat_arg(eps_arg, "--eps");

    OrbitPointSet set = OrbitPointSet::enumerate(radius);
    ClusterQuery query;
    query.epsilon = eps;
    query.m = m;
    query.horizontal_only = true;
    std::vector<Cluster> clusters = find_clusters(set, query);

    OutStream sink(out);
    if (format == "csv") write_clusters_csv(sink.get(), clusters);
    else if (format == "json") write_clusters_json(sink.get(), clusters);
    else write_points_svg(sink.get(), set, clusters);

    std::cerr << "clusters: " << set.size() << " points scanned, " << clusters.size()
              << " horizontal " << m << "-clusters of spread < " << eps << "\n";
    return 0;
}

int cmd_empty_ball(const std::string& radius_arg, const std::string& step_arg,
                   const std::string& format, const std::string& out) {
    require_format(format, {"csv", "json"}, "empty-ball");
    Rat radius = parse_rat_arg(radius_arg, "--radius");
    Rat step = parse_rat_arg(step_arg, "--eps");
    check(step > 0, ErrorCode::ConfigError, "empty-ball needs a positive --eps grid step");
    double grid_step = rat_to_double(step);

    OrbitPointSet set = OrbitPointSet::enumerate(radius);
    EmptyBall ball = empty_ball_probe(set, grid_step);

    OutStream sink(out);
    if (format == "csv") write_empty_ball_csv(sink.get(), ball, radius, grid_step);
    else write_empty_ball_json(sink.get(), ball, radius, grid_step);

    std::cerr << "empty-ball: heuristic probe over " << ball.samples << " grid centers, best "
              << fmt_g(ball.radius) << " at (" << fmt_g(ball.cx) << ", " << fmt_g(ball.cy)
              << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact experiments on the golden-L Veech group orbit of (1, 0)"};
    app.require_subcommand(1);

    long n_max_prop1 = 60;
    long n_max_triples = 15;
    long k_max = 200;
    std::string radius;
    std::string eps;
    long m = 2;
    std::string rho_spec;
    long terms = 15;
    long trials = 10000;
    uint64_t seed = 12345;
    long jobs = 1;
    std::string format = "csv";
    std::string out;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: csv or json (svg for point sets)")
            ->capture_default_str();
        sub->add_option("--out", out, "write data to this file instead of stdout");
        sub->add_option("--jobs", jobs, "parallelism degree (reserved; runs single-threaded)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* p1 = app.add_subcommand(
        "verify-prop1", "Nearby-pair construction: exact distance and norm bounds for even n");
    p1->add_option("--n-max", n_max_prop1, "largest even n (>= 4)")->capture_default_str();
    add_common(p1);

    CLI::App* tr = app.add_subcommand(
        "verify-triples", "Collinear-triple construction at k = F_n - 2 for odd n");
    tr->add_option("--n-max", n_max_triples, "largest odd n (>= 5)")->capture_default_str();
    add_common(tr);

    CLI::App* jk = app.add_subcommand(
        "jk-table", "Table of spacing exponents j_k with the phi^3 fractional-part bound");
    jk->add_option("--k-max", k_max, "largest k (>= 2)")->capture_default_str();
    add_common(jk);

    CLI::App* gr = app.add_subcommand(
        "gamma-rho", "Perturbed-group experiments: convergent pairs (irrational rho) or "
                     "rational containment sampling");
    gr->add_option("--rho", rho_spec,
                   "rho as p/q, quadratic '(p+q*sqrt(d))/r', or continued fraction "
                   "'cf:[a0;a1,a2,...]' / '[a0;(b1,b2)]' with periodic tail")
        ->required();
    CLI::Option* terms_opt =
        gr->add_option("--terms", terms,
                       "irrational: number of convergent pairs; rational: max word length "
                       "(default 12)")
            ->capture_default_str();
    gr->add_option("--trials", trials, "rational mode: number of sampled words")
        ->capture_default_str();
    gr->add_option("--seed", seed, "rational mode: RNG seed")->capture_default_str();
    add_common(gr);

    CLI::App* en = app.add_subcommand(
        "enumerate", "All orbit points with |x|, |y| <= radius, with exact coordinates");
    en->add_option("--radius", radius, "sup-norm radius (integer, fraction, or decimal; >= 1)")
        ->required();
    add_common(en);

    CLI::App* cl = app.add_subcommand(
        "clusters", "Horizontal m-point clusters of spread < eps inside the enumerated set");
    cl->add_option("--radius", radius, "sup-norm radius (>= 1)")->required();
    cl->add_option("--eps", eps, "spread threshold (exact rational or decimal)")->required();
    cl->add_option("--m", m, "cluster size (>= 1)")->capture_default_str();
    add_common(cl);

    CLI::App* eb = app.add_subcommand(
        "empty-ball", "Heuristic largest empty ball inside the enumerated set");
    eb->add_option("--radius", radius, "sup-norm radius (>= 1)")->required();
    eb->add_option("--eps", eps, "grid step for candidate centers")->capture_default_str();
    add_common(eb);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (p1->parsed()) return cmd_verify_prop1(n_max_prop1, format, out);
        if (tr->parsed()) return cmd_verify_triples(n_max_triples, format, out);
        if (jk->parsed()) return cmd_jk_table(k_max, format, out);
        if (gr->parsed())
            return cmd_gamma_rho(rho_spec, terms, terms_opt->count() > 0, trials, seed, format,
                                 out);
        if (en->parsed()) return cmd_enumerate(radius, format, out);
        if (cl->parsed()) return cmd_clusters(radius, eps, m, format, out);
        if (eb->parsed()) {
            if (eps.empty()) eps = "1/8";
            return cmd_empty_ball(radius, eps, format, out);
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const golden::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
