#include "ptpoly/polytope.hpp"

#include "ptpoly/errors.hpp"
#include "ptpoly/numeric.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace ptpoly {

namespace {

template <class Real>
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Runs body(Real{}) in double or in MPFR at the requested precision.
template <class Body>
auto with_real(unsigned bits, Body&& body) {
    if (bits <= 53) return body(0.0);
    PrecisionScope scope(bits);
    return body(BigFloat(0));
}

template <class Real>
Real real_sqrt(const Rational& q) {
    using std::sqrt;
    return sqrt(to_real<Real>(q));
}

template <class Real>
struct Dense {
    Mat<Real> a;
    Vec<Real> b;
    std::vector<Real> norm;
};

template <class Real>
Dense<Real> assemble(const ConstraintSystem& cs) {
    const PointSet& ps = cs.points();
    const int m = cs.row_count(), d = cs.dimension();
    Dense<Real> out{Mat<Real>::Zero(m, d), Vec<Real>::Zero(m), {}};
    auto put = [&](int r, int col, const Real& x) {
        if (col >= 0) out.a(r, col) += x;
    };
    for (int r = 0; r < m; ++r) {
        const Element& el = cs.rows()[static_cast<std::size_t>(r)];
        if (el.is_mark()) {
            put(r, cs.t_column(el.vertex()), Real(1));
            out.b(r) = to_real<Real>(cs.offsets().mark(el.vertex()));
            continue;
        }
        const int i = el.a, j = el.b;
        const Rational dx = ps.point(i).x - ps.point(j).x;
        const Rational dy = ps.point(i).y - ps.point(j).y;
        put(r, cs.v_column(i, 0), to_real<Real>(dx));
        put(r, cs.v_column(i, 1), to_real<Real>(dy));
        put(r, cs.v_column(j, 0), -to_real<Real>(dx));
        put(r, cs.v_column(j, 1), -to_real<Real>(dy));
        const Real len = real_sqrt<Real>(ps.squared_length(i, j));
        put(r, cs.t_column(i), -len);
        put(r, cs.t_column(j), -len);
        out.b(r) = to_real<Real>(cs.offsets().edge(el.as_edge()));
    }
    out.norm.resize(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) out.norm[static_cast<std::size_t>(r)] = out.a.row(r).norm();
    return out;
}

template <class Real>
Vec<Real> to_vec(const std::vector<double>& x) {
    Vec<Real> v(static_cast<Eigen::Index>(x.size()));
    for (std::size_t k = 0; k < x.size(); ++k) v(static_cast<Eigen::Index>(k)) = Real(x[k]);
    return v;
}

template <class Real>
std::vector<double> to_std(const Vec<Real>& v) {
    std::vector<double> x(static_cast<std::size_t>(v.size()));
    for (Eigen::Index k = 0; k < v.size(); ++k) x[static_cast<std::size_t>(k)] = to_double(v(k));
    return x;
}

template <class Real>
std::vector<double> slacks_of(const Dense<Real>& D, const Vec<Real>& x) {
    using std::abs;
    const Vec<Real> s = D.a * x - D.b;
    const Real xn = std::max(Real(1), Real(x.norm()));
    std::vector<double> rel(static_cast<std::size_t>(s.size()));
    for (Eigen::Index r = 0; r < s.size(); ++r) {
        const Real scale = D.norm[static_cast<std::size_t>(r)] * xn + abs(D.b(r));
        rel[static_cast<std::size_t>(r)] = to_double(Real(s(r) / scale));
    }
    return rel;
}

template <class Real>
Mat<Real> select_rows(const Dense<Real>& D, const std::vector<int>& rows) {
    Mat<Real> m(static_cast<Eigen::Index>(rows.size()), D.a.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) m.row(static_cast<Eigen::Index>(k)) = D.a.row(rows[k]);
    return m;
}

template <class Real>
Vec<Real> select_rhs(const Dense<Real>& D, const std::vector<int>& rows) {
    Vec<Real> v(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) v(static_cast<Eigen::Index>(k)) = D.b(rows[k]);
    return v;
}

template <class Real>
int rank_of(const Mat<Real>& m, double tolerance) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::FullPivLU<Mat<Real>> lu(m);
    lu.setThreshold(Real(tolerance));
    return static_cast<int>(lu.rank());
}

MarkedGraph graph_of(const ConstraintSystem& cs, const std::vector<int>& rows) {
    std::vector<Edge> edges;
    std::vector<int> marks;
    for (int r : rows) {
        const Element& el = cs.rows()[static_cast<std::size_t>(r)];
        if (el.is_edge()) edges.push_back(el.as_edge());
        else marks.push_back(el.vertex());
    }
    return MarkedGraph(std::move(edges), std::move(marks));
}

// Tight rows that a dependency among the tight rows expresses as a
// nonnegative combination of the others.
template <class Real>
std::set<int> implied_rows(const Dense<Real>& D, const std::vector<int>& tight, double tolerance) {
    std::set<int> implied;
    if (static_cast<int>(tight.size()) <= D.a.cols()) return implied;
    const Mat<Real> t = select_rows(D, tight);
    Eigen::FullPivLU<Mat<Real>> lu(t.transpose());
    lu.setThreshold(Real(tolerance));
    const Mat<Real> ker = lu.kernel();
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        using std::abs;
        Real big = 0;
        for (Eigen::Index k = 0; k < ker.rows(); ++k) big = std::max(big, Real(abs(ker(k, c))));
        if (big == 0) continue;
        for (int sign : {1, -1}) {
            int negative = -1, count = 0;
            for (Eigen::Index k = 0; k < ker.rows(); ++k) {
                const double y = sign * to_double(Real(ker(k, c) / big));
                if (y < -1e-7) {
                    negative = static_cast<int>(k);
                    ++count;
                }
            }
            if (count == 1) implied.insert(tight[static_cast<std::size_t>(negative)]);
        }
    }
    return implied;
}

template <class Real>
PolytopeVertex classify_point(const ConstraintSystem& cs, const Dense<Real>& D, const Vec<Real>& x,
                              const PolytopeOptions& opt) {
    PolytopeVertex v;
    v.coords = to_std(x);
    const auto rel = slacks_of(D, x);
    std::vector<int> tight;
    v.min_slack = 1e300;
    for (int r = 0; r < cs.row_count(); ++r) {
        const double s = rel[static_cast<std::size_t>(r)];
        if (std::abs(s) <= opt.tolerance) tight.push_back(r);
        else v.min_slack = std::min(v.min_slack, s);
    }
    v.tight_strict = graph_of(cs, tight);
    const auto implied = implied_rows(D, tight, opt.tolerance);
    std::vector<int> weak;
    for (int r : tight)
        if (!implied.count(r)) weak.push_back(r);
    v.tight_weak = graph_of(cs, weak);
    return v;
}

std::vector<int> rows_of(const ConstraintSystem& cs, const MarkedGraph& g) {
    std::vector<int> rows;
    for (const Element& el : g.elements()) rows.push_back(cs.row_of(el));
    return rows;
}

template <class Real>
PolytopeVertex solve_vertex(const ConstraintSystem& cs, const Dense<Real>& D, const MarkedGraph& t,
                            const PolytopeOptions& opt) {
    const auto rows = rows_of(cs, t);
    if (static_cast<int>(rows.size()) != cs.dimension())
        throw Error(ErrorKind::singular_system, std::to_string(rows.size()) + " rows for dimension " +
                                                    std::to_string(cs.dimension()) + " in " + to_string(t));
    Eigen::FullPivLU<Mat<Real>> lu(select_rows(D, rows));
    lu.setThreshold(Real(opt.tolerance));
    if (lu.rank() < cs.dimension()) throw Error(ErrorKind::singular_system, to_string(t));
    const Vec<Real> x = lu.solve(select_rhs(D, rows));
    PolytopeVertex v = classify_point(cs, D, x, opt);
    const auto rel = slacks_of(D, x);
    for (int r = 0; r < cs.row_count(); ++r)
        if (rel[static_cast<std::size_t>(r)] < -opt.tolerance)
            throw Error(ErrorKind::infeasible_vertex, to_string(cs.rows()[static_cast<std::size_t>(r)]) + " violated at " +
                                                          to_string(t));
    return v;
}

// Kernel vector of the given rows (expected one-dimensional), oriented so
// that row `positive` increases along it. Empty when the kernel is not a line.
template <class Real>
std::vector<double> line_direction(const Dense<Real>& D, const std::vector<int>& rows, int positive,
                                   const PolytopeOptions& opt) {
    Eigen::FullPivLU<Mat<Real>> lu(select_rows(D, rows));
    lu.setThreshold(Real(opt.tolerance));
    const Mat<Real> ker = lu.kernel();
    if (ker.cols() != 1) return {};
    Vec<Real> d = ker.col(0);
    d /= d.norm();
    if (Real(D.a.row(positive).dot(d)) < 0) d = -d;
    return to_std(d);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::vector<double> minus(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
    return c;
}

bool same_point(const std::vector<double>& a, const std::vector<double>& b, double tolerance) {
    const double scale = std::max({1.0, norm(a), norm(b)});
    for (std::size_t k = 0; k < a.size(); ++k)
        if (std::abs(a[k] - b[k]) > tolerance * scale) return false;
    return true;
}

bool is_hull_element(const PointSet& ps, const Element& el) {
    return el.is_edge() ? ps.is_hull_edge(el.as_edge()) : ps.is_extremal(el.vertex());
}

}  // namespace

ConstraintSystem::ConstraintSystem(PointSet ps, OffsetVector f, std::pair<int, int> pin)
    : ps_(std::move(ps)), f_(std::move(f)), pin_(pin) {
    if (pin.first == pin.second || ps_.point(pin.first).y == ps_.point(pin.second).y)
        throw Error(ErrorKind::degenerate_input, "normalization pair shares a y-coordinate");
    const int n = ps_.size();
    v_col_.assign(static_cast<std::size_t>(2 * n), -1);
    int col = 0;
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 2; ++c) {
            const bool pinned = i == pin.first || (i == pin.second && c == 0);
            if (!pinned) v_col_[static_cast<std::size_t>(2 * i + c)] = col++;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rows_.push_back(Element::edge(i, j));
    for (int i = 0; i < n; ++i) rows_.push_back(Element::mark(i));
}

int ConstraintSystem::row_of(const Element& el) const {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), el);
    if (it == rows_.end() || !(*it == el)) throw Error(ErrorKind::not_fmpt, "no row for " + to_string(el));
    return static_cast<int>(it - rows_.begin());
}

std::vector<double> ConstraintSystem::velocities(const std::vector<double>& x) const {
    std::vector<double> v(static_cast<std::size_t>(2 * ps_.size()), 0.0);
    for (int k = 0; k < 2 * ps_.size(); ++k) {
        const int c = v_col_[static_cast<std::size_t>(k)];
        if (c >= 0) v[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(c)];
    }
    return v;
}

std::vector<double> ConstraintSystem::times(const std::vector<double>& x) const {
    return {x.begin() + t_column(0), x.begin() + t_column(0) + ps_.size()};
}

ConstraintSystem build_system(const PointSet& ps, const OffsetVector& f) {
    return build_system(ps, f, ps.normalization_pair());
}

ConstraintSystem build_system(const PointSet& ps, const OffsetVector& f, std::pair<int, int> pin) {
    return ConstraintSystem(ps, f, pin);
}

PolytopeVertex vertex_from_fmpt(const ConstraintSystem& cs, const MarkedGraph& t, const PolytopeOptions& opt) {
    return with_real(opt.precision_bits, [&](auto zero) {
        using Real = decltype(zero);
        return solve_vertex(cs, assemble<Real>(cs), t, opt);
    });
}

std::vector<double> relative_slacks(const ConstraintSystem& cs, const std::vector<double>& x,
                                    const PolytopeOptions& opt) {
    return with_real(opt.precision_bits, [&](auto zero) {
        using Real = decltype(zero);
        return slacks_of(assemble<Real>(cs), to_vec<Real>(x));
    });
}

int row_rank(const ConstraintSystem& cs, const std::vector<Element>& rows, const PolytopeOptions& opt) {
    std::vector<int> idx;
    for (const Element& el : rows) idx.push_back(cs.row_of(el));
    return with_real(opt.precision_bits, [&](auto zero) {
        using Real = decltype(zero);
        return rank_of(select_rows(assemble<Real>(cs), idx), opt.tolerance);
    });
}

int vector_rank(const std::vector<std::vector<double>>& vs, double tolerance) {
    if (vs.empty()) return 0;
    Mat<double> m(static_cast<Eigen::Index>(vs.size()), static_cast<Eigen::Index>(vs.front().size()));
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t c = 0; c < vs[r].size(); ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = vs[r][c];
    return rank_of(m, tolerance);
}

SkeletonReport skeleton(const ConstraintSystem& cs, const FlipGraph& g, const PolytopeOptions& opt) {
    return with_real(opt.precision_bits, [&](auto zero) {
        using Real = decltype(zero);
        const Dense<Real> D = assemble<Real>(cs);
        const PointSet& ps = cs.points();
        const int dim = cs.dimension();
        SkeletonReport rep;
        rep.dimension = dim;

        for (std::size_t k = 0; k < g.size(); ++k) {
            PolytopeVertex v = solve_vertex(cs, D, g.nodes[k], opt);
            v.source = static_cast<int>(k);
            if (static_cast<int>(v.tight_weak.element_count()) != dim) rep.simple = false;
            if (!(v.tight_weak == g.nodes[k])) {
                rep.bijective = false;
                rep.problems.push_back("vertex " + std::to_string(k) + " supports " + to_string(v.tight_weak));
            }
            rep.vertices.push_back(std::move(v));
        }
        for (std::size_t u = 0; u < rep.vertices.size(); ++u)
            for (std::size_t w = u + 1; w < rep.vertices.size(); ++w)
                if (same_point(rep.vertices[u].coords, rep.vertices[w].coords, 1e-7)) {
                    rep.bijective = false;
                    rep.problems.push_back("vertices " + std::to_string(u) + " and " + std::to_string(w) + " coincide");
                }

        for (std::size_t u = 0; u < g.size(); ++u) {
            const MarkedGraph& node = g.nodes[u];
            for (const FlipEdge& fe : g.adjacency[u]) {
                const int w = fe.target;
                if (w < static_cast<int>(u)) continue;
                const auto mismatch = [&](const std::string& why) {
                    return Error(ErrorKind::skeleton_mismatch, "flip " + std::to_string(u) + " - " + std::to_string(w) +
                                                                   ": " + why);
                };
                const MarkedGraph shared = node.without(fe.flip.removed);
                if (!g.nodes[static_cast<std::size_t>(w)].contains(shared)) throw mismatch("fewer than dim-1 shared rows");
                const auto d = line_direction(D, rows_of(cs, shared), cs.row_of(fe.flip.removed), opt);
                if (d.empty()) throw mismatch("shared rows do not define a line");
                const auto& xu = rep.vertices[u].coords;
                const auto& xw = rep.vertices[static_cast<std::size_t>(w)].coords;
                const auto diff = minus(xw, xu);
                if (dot(d, diff) < (1 - 1e-7) * norm(diff)) throw mismatch("vertices not joined by the shared line");
                std::vector<double> mid(xu.size());
                for (std::size_t k = 0; k < mid.size(); ++k) mid[k] = 0.5 * (xu[k] + xw[k]);
                const auto rel = slacks_of(D, to_vec<Real>(mid));
                std::vector<int> tight;
                for (int r = 0; r < cs.row_count(); ++r) {
                    if (rel[static_cast<std::size_t>(r)] < -opt.tolerance) throw mismatch("midpoint infeasible");
                    if (std::abs(rel[static_cast<std::size_t>(r)]) <= opt.tolerance) tight.push_back(r);
                }
                if (rank_of(select_rows(D, tight), opt.tolerance) != dim - 1) throw mismatch("midpoint not on an edge");
                rep.bounded_edges.push_back({static_cast<int>(u), w, fe.flip});
            }
        }

        for (std::size_t u = 0; u < g.size(); ++u) {
            const MarkedGraph& node = g.nodes[u];
            for (const Element& el : node.elements()) {
                if (!is_hull_element(ps, el)) continue;
                const int dropped = cs.row_of(el);
                auto d = line_direction(D, rows_of(cs, node.without(el)), dropped, opt);
                if (d.empty()) {
                    rep.rays_complete = false;
                    rep.problems.push_back("no line after dropping " + to_string(el) + " at vertex " + std::to_string(u));
                    continue;
                }
                const Vec<Real> dv = to_vec<Real>(d);
                const Vec<Real> ad = D.a * dv;
                bool recession = true, hull_positive = false;
                for (int r = 0; r < cs.row_count(); ++r) {
                    const double s = to_double(Real(ad(r) / D.norm[static_cast<std::size_t>(r)]));
                    if (s < -opt.tolerance) recession = false;
                    if (s > opt.tolerance && is_hull_element(ps, cs.rows()[static_cast<std::size_t>(r)]))
                        hull_positive = true;
                }
                if (!recession) {
                    rep.rays_complete = false;
                    rep.problems.push_back("dropping " + to_string(el) + " at vertex " + std::to_string(u) +
                                           " is not a recession direction");
                    continue;
                }
                if (!hull_positive) rep.yf_bounded = false;
                rep.rays.push_back({static_cast<int>(u), el, std::move(d)});
            }
        }

        std::vector<std::vector<double>> diffs;
        for (const auto& v : rep.vertices) diffs.push_back(minus(v.coords, rep.vertices.front().coords));
        rep.dim_yf = vector_rank(diffs, 1e-7);
        for (std::size_t u = 0; u < g.size(); ++u)
            if (static_cast<int>(g.nodes[u].marks().size()) == ps.size()) rep.f_vertices.push_back(static_cast<int>(u));
        diffs.clear();
        for (int u : rep.f_vertices)
            diffs.push_back(minus(rep.vertices[static_cast<std::size_t>(u)].coords,
                                  rep.vertices[static_cast<std::size_t>(rep.f_vertices.front())].coords));
        rep.dim_f = vector_rank(diffs, 1e-7);
        for (const auto& e : rep.bounded_edges) {
            const bool in_u = std::count(rep.f_vertices.begin(), rep.f_vertices.end(), e.u) > 0;
            const bool in_w = std::count(rep.f_vertices.begin(), rep.f_vertices.end(), e.w) > 0;
            if (in_u && in_w) ++rep.f_edges;
        }
        return rep;
    });
}

std::vector<PolytopeVertex> brute_force_vertex_enumeration(const ConstraintSystem& cs, const PolytopeOptions& opt) {
    if (cs.points().size() > 5)
        throw Error(ErrorKind::too_large, "basis enumeration is limited to five points");
    return with_real(opt.precision_bits, [&](auto zero) {
        using Real = decltype(zero);
        const Dense<Real> D = assemble<Real>(cs);
        const int m = cs.row_count(), dim = cs.dimension();
        std::vector<PolytopeVertex> found;
        std::vector<int> pick(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) pick[static_cast<std::size_t>(k)] = k;
        while (true) {
            Eigen::FullPivLU<Mat<Real>> lu(select_rows(D, pick));
            lu.setThreshold(Real(opt.tolerance));
            if (lu.rank() == dim) {
                const Vec<Real> x = lu.solve(select_rhs(D, pick));
                const auto rel = slacks_of(D, x);
                if (std::all_of(rel.begin(), rel.end(), [&](double s) { return s >= -opt.tolerance; })) {
                    const auto coords = to_std(x);
                    const bool seen = std::any_of(found.begin(), found.end(), [&](const PolytopeVertex& v) {
                        return same_point(v.coords, coords, 1e-7);
                    });
                    if (!seen) found.push_back(classify_point(cs, D, x, opt));
                }
            }
            int k = dim - 1;
            while (k >= 0 && pick[static_cast<std::size_t>(k)] == m - dim + k) --k;
            if (k < 0) break;
            ++pick[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < dim; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
        std::sort(found.begin(), found.end(),
                  [](const PolytopeVertex& a, const PolytopeVertex& b) { return a.coords < b.coords; });
        return found;
    });
}

namespace {

bool acceptable_extension(const std::vector<Point>& pts, const PointSet& original, int added) {
    const Point& q = pts[static_cast<std::size_t>(added)];
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (static_cast<int>(i) == added || static_cast<int>(j) == added) continue;
            if (orientation(pts[i], pts[j], q) == 0) return false;
        }
    std::vector<Point> copy = pts;
    const PointSet ext = PointSet::classify(std::move(copy));
    if (!ext.is_extremal(added)) return false;
    for (int i = 0; i < original.size(); ++i)
        if (original.is_extremal(i) && !ext.is_extremal(i)) return false;
    return true;
}

}  // namespace

Extension extend_for_boundary_collinearities(const PointSet& ps) {
    if (!ps.has_boundary_collinearities())
        throw Error(ErrorKind::no_boundary_collinearity, "no hull edge carries a semi-interior point");

    Point centroid{0, 0};
    for (const Point& p : ps.points()) {
        centroid.x += p.x;
        centroid.y += p.y;
    }
    centroid.x /= ps.size();
    centroid.y /= ps.size();

    const auto& cycle = ps.boundary_cycle();
    std::size_t start = 0;
    while (!ps.is_extremal(cycle[start])) ++start;
    std::vector<std::vector<int>> sides(1, {cycle[start]});
    for (std::size_t k = 1; k <= cycle.size(); ++k) {
        const int v = cycle[(start + k) % cycle.size()];
        sides.back().push_back(v);
        if (ps.is_extremal(v) && k < cycle.size()) sides.push_back({v});
    }

    std::vector<Point> pts = ps.points();
    Extension ext{ps, {}, {}, {}};
    std::vector<Edge> forced_edges;
    std::vector<int> forced_marks;
    for (const auto& side : sides) {
        if (side.size() < 3) continue;
        const Point& a = ps.point(side.front());
        const Point& b = ps.point(side.back());
        const Rational nx = b.y - a.y, ny = a.x - b.x;  // outward for a counterclockwise boundary
        const Rational along = ((centroid.x - a.x) * nx + (centroid.y - a.y) * ny) / (nx * nx + ny * ny);
        const Point mirror{centroid.x - 2 * along * nx, centroid.y - 2 * along * ny};
        const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};

        pts.push_back(mirror);
        const int added = static_cast<int>(pts.size()) - 1;
        bool placed = false;
        const Rational shifts[] = {Rational(0), Rational(1, 7), Rational(-1, 11), Rational(1, 13)};
        Rational scale = 1;
        for (int halving = 0; halving < 60 && !placed; ++halving, scale /= 2) {
            for (const Rational& s : shifts) {
                Point q{mid.x + (mirror.x - mid.x) * scale + s * (b.x - a.x) * scale,
                        mid.y + (mirror.y - mid.y) * scale + s * (b.y - a.y) * scale};
                pts.back() = q;
                if (acceptable_extension(pts, ps, added)) {
                    placed = true;
                    break;
                }
            }
        }
        if (!placed) throw Error(ErrorKind::degenerate_input, "could not place a point beyond a hull edge");
        ext.added.push_back(added);
        ext.carried.push_back(side);
        forced_marks.push_back(added);
        for (int v : side) forced_edges.emplace_back(added, v);
    }
    ext.extended = PointSet::classify(std::move(pts));
    ext.forced = MarkedGraph(std::move(forced_edges), std::move(forced_marks));
    return ext;
}

MarkedGraph extend_graph(const Extension& ext, const MarkedGraph& g) {
    std::vector<Edge> edges = g.edges();
    std::vector<int> marks = g.marks();
    edges.insert(edges.end(), ext.forced.edges().begin(), ext.forced.edges().end());
    marks.insert(marks.end(), ext.forced.marks().begin(), ext.forced.marks().end());
    return MarkedGraph(std::move(edges), std::move(marks));
}

FaceReport forced_face(const Extension& ext, const OffsetVector& f, const PolytopeOptions& opt) {
    const PointSet& ps = ext.extended;
    const ConstraintSystem cs = build_system(ps, f);
    FaceReport rep;
    rep.ambient_dimension = cs.dimension();
    rep.forced_rank = row_rank(cs, ext.forced.elements(), opt);
    rep.dimension = rep.ambient_dimension - rep.forced_rank;

    const MarkedGraph seed = complete_to_fmpt(ps, extend_graph(ext, hull_graph(ps)));
    rep.vertex = vertex_from_fmpt(cs, seed, opt);
    rep.vertex.source = 0;
    rep.dimension_at_vertex = with_real(opt.precision_bits, [&](auto zero) {
        using Real = decltype(zero);
        const Dense<Real> D = assemble<Real>(cs);
        std::vector<std::vector<double>> dirs;
        for (const Element& el : seed.elements()) {
            if (ext.forced.contains(el)) continue;
            auto d = line_direction(D, rows_of(cs, seed.without(el)), cs.row_of(el), opt);
            if (!d.empty()) dirs.push_back(std::move(d));
        }
        return vector_rank(dirs, 1e-7);
    });
    return rep;
}

}  // namespace ptpoly
