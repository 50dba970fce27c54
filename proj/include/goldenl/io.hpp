#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "goldenl/constructions.hpp"
#include "goldenl/gamma_rho.hpp"
#include "goldenl/orbit.hpp"

namespace golden {

// Doubles in all tables: 17 significant digits ("%.17g"), reproducible
// byte-for-byte for identical configs.
std::string fmt_g(double v);

// RFC-4180-style quoting for fields that contain separators.
std::string csv_field(const std::string& s);

// Explicit-pair table: n, dist_float, dist_exact, norm_float, bound_ok.
// The exact distance is irrational outside Q(sqrt 5), so dist_exact encodes
// the squared distance as "sqrt(a+b*phi)".
void write_prop1_csv(std::ostream& os, const std::vector<Prop1Pair>& rows);
void write_prop1_json(std::ostream& os, const std::vector<Prop1Pair>& rows);

// Triple table: k, j_k, spacing_float, height_float, max_norm_float,
// ratio_norm_to_eps4 (max_norm * phi^{4 j_k}).
void write_triples_csv(std::ostream& os, const std::vector<TripleReport>& rows);
void write_triples_json(std::ostream& os, const std::vector<TripleReport>& rows);

// j_k table: k, j_k, phi_pow_float, word_len, frac_bound_ok.
void write_jk_csv(std::ostream& os, const JkTable& table);
void write_jk_json(std::ostream& os, const JkTable& table);

// Convergent pair table: n, p_n, q_n, psi_float, L, dist_float,
// dist_times_qn1, norm_float, norm_over_qnqn1.
void write_gamma_rho_csv(std::ostream& os, const std::vector<ConPair>& rows);
void write_gamma_rho_json(std::ostream& os, const std::vector<ConPair>& rows);

// Rational-rho containment report as key,value rows / one JSON object.
void write_containment_csv(std::ostream& os, const ContainmentReport& rep);
void write_containment_json(std::ostream& os, const ContainmentReport& rep);

// Full-set point dump: x_float, y_float, a_x, b_x, a_y, b_y, word.  Rows
// stream in depth-first word order, the four quarter-rotations of each tree
// point in sequence, all carrying the first-quadrant itinerary.
void write_points_csv(std::ostream& os, const OrbitPointSet& set);
void write_points_json(std::ostream& os, const OrbitPointSet& set);

void write_clusters_csv(std::ostream& os, const std::vector<Cluster>& clusters);
void write_clusters_json(std::ostream& os, const std::vector<Cluster>& clusters);

void write_empty_ball_csv(std::ostream& os, const EmptyBall& ball, const Rat& radius,
                          double grid_step);
void write_empty_ball_json(std::ostream& os, const EmptyBall& ball, const Rat& radius,
                           double grid_step);

// Static scatter figure of the full set, cluster points highlighted.
void write_points_svg(std::ostream& os, const OrbitPointSet& set,
                      const std::vector<Cluster>& highlight);

}  // namespace golden
