#pragma once

#include "ptpoly/marked_graph.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ptpoly {

/// Right-hand sides of the edge and mark inequalities. Missing entries are 0.
struct OffsetVector {
    std::map<Edge, Rational> edges;
    std::map<int, Rational> marks;

    Rational edge(Edge e) const;
    Rational mark(int v) const;
    /// Every mark offset is zero, so validity sums are rational.
    bool marks_zero() const;
};

/// f_ij = det(a, p_i, p_j) * det(b, p_i, p_j), f_0j = 0. With a = b = origin
/// this is the squared-determinant choice.
OffsetVector canonical_offsets(const PointSet& ps, const Point& a, const Point& b);

/// Coefficients w_ij on edges and alpha_j on marks making
///   sum w_ij (<p_i - p_j, v_i - v_j> - |p_i - p_j| (t_i + t_j)) + sum alpha_j t_j
/// vanish identically. Numeric values are always present; exact values are
/// kept when the construction is rational.
struct Stress {
    std::map<Edge, double> w;
    std::map<int, double> alpha;
    std::optional<std::map<Edge, Rational>> w_exact;
    std::optional<std::map<int, Rational>> alpha_exact;

    double edge(Edge e) const;
    double mark(int v) const;
    /// Elements with positive (sign > 0) or negative (sign < 0) coefficient.
    MarkedGraph part(int sign) const;
    MarkedGraph negative_part() const { return part(-1); }
    MarkedGraph positive_part() const { return part(1); }
};

/// Requires sum lambda_i p_i = 0 and sum lambda_i = 0 (checked exactly);
/// w_ij = lambda_i lambda_j, alpha_i = sum_j w_ij |p_i - p_j|.
/// Throws Error(not_a_dependence).
Stress stress_from_affine_dependence(const PointSet& ps, const std::map<int, Rational>& lambda);

/// w_ij = 1 / (det(p_i, p_j, p_k) det(p_i, p_j, p_l)) for {k, l} the other two
/// points. Throws Error(collinear4) if three of the four are collinear.
Stress four_point_stress(const PointSet& ps, std::array<int, 4> q);

/// (a, m, b) collinear with m strictly between: w_am = 1/|m-a|, w_ab = -1/|b-a|,
/// w_mb = 1/|b-m|, alpha_m = 2. Throws Error(not_collinear).
Stress collinear_triple_stress(const PointSet& ps, std::array<int, 3> t);

/// q[0..3] in cyclic order around q[4], which lies on both diagonals. The
/// four-point stress of the outer quadrilateral plus multiples of the two
/// triple stresses that cancel both diagonals. Scale is that of the four-point
/// stress. Throws Error(wrong_configuration).
Stress five_point_collinear_stress(const PointSet& ps, std::array<int, 5> q);

/// Value of the stress linear form at (v, t); v holds x,y per point.
double stress_form(const Stress& s, const PointSet& ps, const std::vector<double>& v, const std::vector<double>& t);

/// Velocity part of the linear form, exact. Requires exact w.
Rational stress_velocity_form(const Stress& s, const PointSet& ps, const std::vector<Rational>& v);

enum class ValidityMode { strict, weak };
enum class CheckStatus { pass, tight, fail, indeterminate };

std::string_view to_string(CheckStatus s);

struct ValidityCheck {
    enum class Kind { quadruple, triple, five_point };
    Kind kind = Kind::quadruple;
    std::vector<int> points;
    CheckStatus status = CheckStatus::pass;
    double value = 0;
    bool exact = false;
};

std::string_view to_string(ValidityCheck::Kind k);
std::string describe(const ValidityCheck& c);

struct ValidityReport {
    ValidityMode mode = ValidityMode::strict;
    int quadruples = 0;
    int triples = 0;
    int five_point = 0;
    int tight = 0;
    /// Checks that failed or could not be decided within tolerance.
    std::vector<ValidityCheck> failures;

    bool passed() const { return failures.empty(); }
};

struct ValidityOptions {
    ValidityMode mode = ValidityMode::strict;
    double tolerance = 1e-9;
    /// Working precision for sums involving lengths; above 53 uses MPFR.
    unsigned precision_bits = 53;
};

/// Sum of w f + alpha f0 over every general-position quadruple (must be > 0),
/// every collinear triple (>= 0 weak, > 0 strict; decided exactly), and every
/// interior point on two collinear triples (must be > 0).
ValidityReport check_validity(const PointSet& ps, const OffsetVector& f, const ValidityOptions& opt = {});

}  // namespace ptpoly
