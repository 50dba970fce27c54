#include "goldenl/io.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace golden {

namespace {

using njson = nlohmann::ordered_json;

constexpr double kPhiD = 1.6180339887498949;

double coeff_double(int64_t a, int64_t b) {
    return static_cast<double>(a) + static_cast<double>(b) * kPhiD;
}

double int_double(const Int& v) { return v.convert_to<double>(); }

std::string sqrt_string(const GoldenScalar& sq) { return "sqrt(" + to_string(sq) + ")"; }

std::string fmt3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Full-set rows for one tree point: the four quarter rotations of the
// first-quadrant representative, each carrying its itinerary.
struct FullRow {
    int64_t ax, bx, ay, by;
};

std::array<FullRow, 4> rotations(const CoeffPoint& p) {
    return {FullRow{p.ax, p.bx, p.ay, p.by}, FullRow{-p.ay, -p.by, p.ax, p.bx},
            FullRow{-p.ax, -p.bx, -p.ay, -p.by}, FullRow{p.ay, p.by, -p.ax, -p.bx}};
}

njson cluster_json(const Cluster& c) {
    njson points = njson::array();
    for (const auto& p : c.points) {
        points.push_back({{"x", to_string(p.x)},
                          {"y", to_string(p.y)},
                          {"x_float", to_double(p.x)},
                          {"y_float", to_double(p.y)}});
    }
    return {{"y", to_string(c.y)},       {"y_float", to_double(c.y)},
            {"size", c.points.size()},   {"spread", to_string(c.spread)},
            {"spread_float", c.spread_float}, {"diam_sq", to_string(c.diam_sq)},
            {"points", points}};
}

}  // namespace

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void write_prop1_csv(std::ostream& os, const std::vector<Prop1Pair>& rows) {
    os << "n,dist_float,dist_exact,norm_float,bound_ok\n";
    for (const auto& r : rows) {
        bool ok = r.p2.norm_sq() <= r.norm_bound_witness * r.norm_bound_witness;
        os << r.n << ',' << fmt_g(std::sqrt(to_double(r.dist_sq))) << ','
           << csv_field(sqrt_string(r.dist_sq)) << ','
           << fmt_g(std::sqrt(to_double(r.p2.norm_sq()))) << ',' << (ok ? 1 : 0) << '\n';
    }
}

void write_prop1_json(std::ostream& os, const std::vector<Prop1Pair>& rows) {
    njson arr = njson::array();
    for (const auto& r : rows) {
        GoldenScalar norm_sq = r.p2.norm_sq();
        bool ok = norm_sq <= r.norm_bound_witness * r.norm_bound_witness;
        // Normalized diagnostics: the distance scales like phi^{-(n-2)} and the
        // norm like phi^{2n}, so both products below stay bounded in n.
        double dist_scaled = std::sqrt(to_double(r.dist_sq * phi_pow(2 * (r.n - 2))));
        double norm_scaled = std::sqrt(to_double(norm_sq * phi_pow(-4 * r.n)));
        arr.push_back({{"n", r.n},
                       {"w1", r.w1.str()},
                       {"w2", r.w2.str()},
                       {"p1", to_string(r.p1)},
                       {"p2", to_string(r.p2)},
                       {"diff", to_string(r.diff)},
                       {"dist_float", std::sqrt(to_double(r.dist_sq))},
                       {"dist_exact", sqrt_string(r.dist_sq)},
                       {"norm_float", std::sqrt(to_double(norm_sq))},
                       {"bound_ok", ok},
                       {"dist_times_phi_pow_n_minus_2", dist_scaled},
                       {"norm_over_phi_pow_2n", norm_scaled}});
    }
    os << arr.dump(2) << '\n';
}

void write_triples_csv(std::ostream& os, const std::vector<TripleReport>& rows) {
    os << "k,j_k,spacing_float,height_float,max_norm_float,ratio_norm_to_eps4\n";
    for (const auto& r : rows) {
        double max_norm = std::sqrt(to_double(r.max_norm_sq));
        double ratio = norm_ratio_float(r);
        os << r.k << ',' << r.j_k << ',' << fmt_g(to_double(r.spacing)) << ','
           << fmt_g(to_double(r.height)) << ',' << fmt_g(max_norm) << ',' << fmt_g(ratio)
           << '\n';
    }
}

void write_triples_json(std::ostream& os, const std::vector<TripleReport>& rows) {
    njson arr = njson::array();
    for (const auto& r : rows) {
        njson rec = njson::array();
        for (const auto& v : r.recovered) rec.push_back(to_string(v));
        njson row = {{"k", r.k},
                     {"j_k", r.j_k},
                     {"word", r.word.str()},
                     {"u1", to_string(r.u1)},
                     {"u2", to_string(r.u2)},
                     {"u3", to_string(r.u3)},
                     {"d", to_string(r.d)},
                     {"recovered", rec},
                     {"spacing", to_string(r.spacing)},
                     {"spacing_float", to_double(r.spacing)},
                     {"height_float", to_double(r.height)},
                     {"max_norm_float", std::sqrt(to_double(r.max_norm_sq))},
                     {"ratio_norm_to_eps4", norm_ratio_float(r)},
                     {"normalized", r.normalized}};
        if (r.normalized) {
            row["sigma0_steps"] = r.sigma0_steps.str();
            njson recn = njson::array();
            for (const auto& v : r.recovered_normalized) recn.push_back(to_string(v));
            row["recovered_normalized"] = recn;
        }
        arr.push_back(row);
    }
    os << arr.dump(2) << '\n';
}

void write_jk_csv(std::ostream& os, const JkTable& table) {
    os << "k,j_k,phi_pow_float,word_len,frac_bound_ok\n";
    for (const auto& r : table.rows) {
        os << r.k << ',' << r.j << ',' << fmt_g(r.phi_pow) << ',' << r.word_len.str() << ','
           << (r.frac_bound_ok ? 1 : 0) << '\n';
    }
}

void write_jk_json(std::ostream& os, const JkTable& table) {
    njson arr = njson::array();
    for (const auto& r : table.rows) {
        arr.push_back({{"k", r.k},
                       {"j_k", r.j},
                       {"phi_pow_float", r.phi_pow},
                       {"word_len", r.word_len.str()},
                       {"frac_bound_ok", r.frac_bound_ok}});
    }
    njson hist = njson::object();
    for (const auto& [j, count] : table.histogram) hist[std::to_string(j)] = count;
    njson doc = {{"rows", arr}, {"histogram", hist}};
    os << doc.dump(2) << '\n';
}

void write_gamma_rho_csv(std::ostream& os, const std::vector<ConPair>& rows) {
    os << "n,p_n,q_n,psi_float,L,dist_float,dist_times_qn1,norm_float,norm_over_qnqn1\n";
    for (const auto& r : rows) {
        double dist = std::sqrt(to_double(r.dist_sq));
        double norm = std::sqrt(to_double(r.norm_sq));
        os << r.n << ',' << r.p_n.str() << ',' << r.q_n.str() << ','
           << fmt_g(to_double(r.psi_n)) << ',' << r.L.str() << ',' << fmt_g(dist) << ','
           << fmt_g(dist * int_double(r.q_n1)) << ',' << fmt_g(norm) << ','
           << fmt_g(norm / (int_double(r.q_n) * int_double(r.q_n1))) << '\n';
    }
}

void write_gamma_rho_json(std::ostream& os, const std::vector<ConPair>& rows) {
    njson arr = njson::array();
    for (const auto& r : rows) {
        double dist = std::sqrt(to_double(r.dist_sq));
        double norm = std::sqrt(to_double(r.norm_sq));
        arr.push_back({{"n", r.n},
                       {"p_n", r.p_n.str()},
                       {"q_n", r.q_n.str()},
                       {"q_n1", r.q_n1.str()},
                       {"psi", to_string(r.psi_n)},
                       {"psi_float", to_double(r.psi_n)},
                       {"L", r.L.str()},
                       {"g1", to_string(r.g1)},
                       {"g2", to_string(r.g2)},
                       {"dist_float", dist},
                       {"dist_times_qn1", dist * int_double(r.q_n1)},
                       {"norm_float", norm},
                       {"norm_over_qnqn1", norm / (int_double(r.q_n) * int_double(r.q_n1))},
                       {"dist_bound_ok", r.dist_bound_ok},
                       {"norm_bound_ok", r.norm_bound_ok}});
    }
    os << arr.dump(2) << '\n';
}

void write_containment_csv(std::ostream& os, const ContainmentReport& rep) {
    os << "key,value\n";
    os << "p," << rep.p.str() << '\n';
    os << "q," << rep.q.str() << '\n';
    os << "trials," << rep.trials << '\n';
    os << "max_len," << rep.max_len << '\n';
    os << "seed," << rep.seed << '\n';
    os << "num_points," << rep.num_points << '\n';
    os << "violations," << rep.violations << '\n';
    os << "all_contained," << (rep.all_contained ? 1 : 0) << '\n';
    if (rep.violations > 0) {
        os << "first_violation_word," << csv_field(rep.first_violation_word) << '\n';
        os << "first_violation_x," << rep.first_violation_x << '\n';
        os << "first_violation_y," << rep.first_violation_y << '\n';
    }
    os << "min_gap_sq," << rep.min_gap_sq << '\n';
    os << "min_gap_float," << fmt_g(std::sqrt(rat_to_double(rep.min_gap_sq))) << '\n';
    os << "min_gap_ok," << (rep.min_gap_ok ? 1 : 0) << '\n';
}

void write_containment_json(std::ostream& os, const ContainmentReport& rep) {
    std::ostringstream gap;
    gap << rep.min_gap_sq;
    njson doc = {{"p", rep.p.str()},
                 {"q", rep.q.str()},
                 {"trials", rep.trials},
                 {"max_len", rep.max_len},
                 {"seed", rep.seed},
                 {"num_points", rep.num_points},
                 {"violations", rep.violations},
                 {"all_contained", rep.all_contained}};
    if (rep.violations > 0) {
        std::ostringstream vx, vy;
        vx << rep.first_violation_x;
        vy << rep.first_violation_y;
        doc["first_violation_word"] = rep.first_violation_word;
        doc["first_violation_x"] = vx.str();
        doc["first_violation_y"] = vy.str();
    }
    doc["min_gap_sq"] = gap.str();
    doc["min_gap_float"] = std::sqrt(rat_to_double(rep.min_gap_sq));
    doc["min_gap_ok"] = rep.min_gap_ok;
    os << doc.dump(2) << '\n';
}

void write_points_csv(std::ostream& os, const OrbitPointSet& set) {
    os << "x_float,y_float,a_x,b_x,a_y,b_y,word\n";
    set.walk_words([&os](const CoeffPoint& p, const Word& w) {
        const std::string ws = w.str();
        for (const auto& r : rotations(p)) {
            os << fmt_g(coeff_double(r.ax, r.bx)) << ',' << fmt_g(coeff_double(r.ay, r.by))
               << ',' << r.ax << ',' << r.bx << ',' << r.ay << ',' << r.by << ','
               << csv_field(ws) << '\n';
        }
    });
}

void write_points_json(std::ostream& os, const OrbitPointSet& set) {
    os << '[';
    bool first = true;
    set.walk_words([&](const CoeffPoint& p, const Word& w) {
        const std::string ws = w.str();
        for (const auto& r : rotations(p)) {
            njson row = {{"x_float", coeff_double(r.ax, r.bx)},
                         {"y_float", coeff_double(r.ay, r.by)},
                         {"a_x", r.ax},
                         {"b_x", r.bx},
                         {"a_y", r.ay},
                         {"b_y", r.by},
                         {"word", ws}};
            os << (first ? "\n  " : ",\n  ") << row.dump();
            first = false;
        }
    });
    os << "\n]\n";
}

void write_clusters_csv(std::ostream& os, const std::vector<Cluster>& clusters) {
    os << "y,y_float,size,spread,spread_float,points\n";
    for (const auto& c : clusters) {
        std::string pts;
        for (size_t i = 0; i < c.points.size(); ++i) {
            if (i) pts += ';';
            pts += to_string(c.points[i]);
        }
        os << csv_field(to_string(c.y)) << ',' << fmt_g(to_double(c.y)) << ','
           << c.points.size() << ',' << csv_field(to_string(c.spread)) << ','
           << fmt_g(c.spread_float) << ',' << csv_field(pts) << '\n';
    }
}

void write_clusters_json(std::ostream& os, const std::vector<Cluster>& clusters) {
    njson arr = njson::array();
    for (const auto& c : clusters) arr.push_back(cluster_json(c));
    os << arr.dump(2) << '\n';
}

void write_empty_ball_csv(std::ostream& os, const EmptyBall& ball, const Rat& radius,
                          double grid_step) {
    os << "cx,cy,radius,samples,grid_step,set_radius,heuristic\n";
    os << fmt_g(ball.cx) << ',' << fmt_g(ball.cy) << ',' << fmt_g(ball.radius) << ','
       << ball.samples << ',' << fmt_g(grid_step) << ',' << fmt_g(rat_to_double(radius))
       << ",1\n";
}

void write_empty_ball_json(std::ostream& os, const EmptyBall& ball, const Rat& radius,
                           double grid_step) {
    njson doc = {{"cx", ball.cx},
                 {"cy", ball.cy},
                 {"radius", ball.radius},
                 {"samples", ball.samples},
                 {"grid_step", grid_step},
                 {"set_radius", rat_to_double(radius)},
                 {"heuristic", true}};
    os << doc.dump(2) << '\n';
}

void write_points_svg(std::ostream& os, const OrbitPointSet& set,
                      const std::vector<Cluster>& highlight) {
    const double r = rat_to_double(set.radius());
    const double size = 840.0, pad = 20.0, span = size - 2 * pad;
    auto sx = [&](double x) { return pad + (x + r) / (2 * r) * span; };
    auto sy = [&](double y) { return pad + (r - y) / (2 * r) * span; };

    double dot = 2.4;
    long n = set.size();
    if (n > 2000) dot = 1.6;
    if (n > 20000) dot = 1.0;
    if (n > 200000) dot = 0.6;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" height=\"840\" "
          "viewBox=\"0 0 840 840\">\n";
    os << "  <rect width=\"840\" height=\"840\" fill=\"#ffffff\"/>\n";
    os << "  <line x1=\"" << fmt3(sx(-r)) << "\" y1=\"" << fmt3(sy(0)) << "\" x2=\""
       << fmt3(sx(r)) << "\" y2=\"" << fmt3(sy(0)) << "\" stroke=\"#cccccc\"/>\n";
    os << "  <line x1=\"" << fmt3(sx(0)) << "\" y1=\"" << fmt3(sy(-r)) << "\" x2=\""
       << fmt3(sx(0)) << "\" y2=\"" << fmt3(sy(r)) << "\" stroke=\"#cccccc\"/>\n";
    set.for_each_full([&](const CoeffPoint& c) {
        double x = coeff_double(c.ax, c.bx);
        double y = coeff_double(c.ay, c.by);
        os << "  <circle cx=\"" << fmt3(sx(x)) << "\" cy=\"" << fmt3(sy(y)) << "\" r=\""
           << fmt3(dot) << "\" fill=\"#1f4e79\"/>\n";
    });
    for (const auto& c : highlight) {
        for (const auto& p : c.points) {
            double x = to_double(p.x);
            double y = to_double(p.y);
            os << "  <circle cx=\"" << fmt3(sx(x)) << "\" cy=\"" << fmt3(sy(y)) << "\" r=\""
               << fmt3(dot + 2.5) << "\" fill=\"none\" stroke=\"#c0392b\" "
                  "stroke-width=\"1.5\"/>\n";
        }
    }
    os << "</svg>\n";
}

}  // namespace golden
