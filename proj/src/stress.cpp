#include "ptpoly/stress.hpp"

#include "ptpoly/errors.hpp"
#include "ptpoly/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ptpoly {

Rational OffsetVector::edge(Edge e) const {
    auto it = edges.find(e);
    return it == edges.end() ? Rational(0) : it->second;
}

Rational OffsetVector::mark(int v) const {
    auto it = marks.find(v);
    return it == marks.end() ? Rational(0) : it->second;
}

bool OffsetVector::marks_zero() const {
    return std::all_of(marks.begin(), marks.end(), [](const auto& kv) { return kv.second == 0; });
}

OffsetVector canonical_offsets(const PointSet& ps, const Point& a, const Point& b) {
    OffsetVector f;
    for (int i = 0; i < ps.size(); ++i)
        for (int j = i + 1; j < ps.size(); ++j)
            f.edges[Edge(i, j)] = det3(a, ps.point(i), ps.point(j)) * det3(b, ps.point(i), ps.point(j));
    return f;
}

double Stress::edge(Edge e) const {
    auto it = w.find(e);
    return it == w.end() ? 0.0 : it->second;
}

double Stress::mark(int v) const {
    auto it = alpha.find(v);
    return it == alpha.end() ? 0.0 : it->second;
}

MarkedGraph Stress::part(int sign) const {
    std::vector<Edge> edges;
    std::vector<int> marks;
    if (w_exact) {
        for (const auto& [e, x] : *w_exact)
            if (sgn(x) == sign) edges.push_back(e);
    } else {
        for (const auto& [e, x] : w)
            if ((x > 0 ? 1 : x < 0 ? -1 : 0) == sign) edges.push_back(e);
    }
    if (alpha_exact) {
        for (const auto& [v, x] : *alpha_exact)
            if (sgn(x) == sign) marks.push_back(v);
    } else {
        for (const auto& [v, x] : alpha)
            if ((x > 0 ? 1 : x < 0 ? -1 : 0) == sign) marks.push_back(v);
    }
    return MarkedGraph(std::move(edges), std::move(marks));
}

namespace {

double length(const PointSet& ps, int i, int j) { return std::sqrt(ps.squared_length(i, j).get_d()); }

void fill_numeric_w(Stress& s) {
    s.w.clear();
    for (const auto& [e, x] : *s.w_exact) s.w[e] = x.get_d();
}

void fill_alpha_from_w(Stress& s, const PointSet& ps) {
    s.alpha.clear();
    for (const auto& [e, x] : s.w) {
        const double term = x * length(ps, e.a, e.b);
        s.alpha[e.a] += term;
        s.alpha[e.b] += term;
    }
}

}  // namespace

Stress stress_from_affine_dependence(const PointSet& ps, const std::map<int, Rational>& lambda) {
    Rational sx = 0, sy = 0, s = 0;
    for (const auto& [i, l] : lambda) {
        if (i < 0 || i >= ps.size()) throw Error(ErrorKind::not_a_dependence, "index out of range");
        sx += l * ps.point(i).x;
        sy += l * ps.point(i).y;
        s += l;
    }
    if (sx != 0 || sy != 0 || s != 0) throw Error(ErrorKind::not_a_dependence, "coefficients are not an affine dependence");

    Stress out;
    out.w_exact.emplace();
    std::vector<int> support;
    for (const auto& [i, l] : lambda)
        if (l != 0) support.push_back(i);
    for (std::size_t a = 0; a < support.size(); ++a)
        for (std::size_t b = a + 1; b < support.size(); ++b) {
            const int i = support[a], j = support[b];
            (*out.w_exact)[Edge(i, j)] = lambda.at(i) * lambda.at(j);
        }
    fill_numeric_w(out);
    fill_alpha_from_w(out, ps);
    return out;
}

Stress four_point_stress(const PointSet& ps, std::array<int, 4> q) {
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c)
                if (q[a] == q[b] || q[b] == q[c] || q[a] == q[c] || ps.orientation(q[a], q[b], q[c]) == 0)
                    throw Error(ErrorKind::collinear4, "points " + std::to_string(q[a]) + ", " + std::to_string(q[b]) +
                                                           ", " + std::to_string(q[c]) + " are collinear");
    Stress out;
    out.w_exact.emplace();
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            int others[2], k = 0;
            for (int c = 0; c < 4; ++c)
                if (c != a && c != b) others[k++] = q[c];
            const Point& pi = ps.point(q[a]);
            const Point& pj = ps.point(q[b]);
            const Rational d = det3(pi, pj, ps.point(others[0])) * det3(pi, pj, ps.point(others[1]));
            (*out.w_exact)[Edge(q[a], q[b])] = 1 / d;
        }
    fill_numeric_w(out);
    fill_alpha_from_w(out, ps);
    return out;
}

Stress collinear_triple_stress(const PointSet& ps, std::array<int, 3> t) {
    const auto [a, m, b] = t;
    if (a == m || m == b || a == b || !ps.between(a, m, b))
        throw Error(ErrorKind::not_collinear, "point " + std::to_string(m) + " is not strictly between " +
                                                  std::to_string(a) + " and " + std::to_string(b));
    Stress out;
    out.w[Edge(a, m)] = 1 / length(ps, a, m);
    out.w[Edge(a, b)] = -1 / length(ps, a, b);
    out.w[Edge(m, b)] = 1 / length(ps, m, b);
    out.alpha_exact.emplace();
    (*out.alpha_exact)[a] = 0;
    (*out.alpha_exact)[m] = 2;
    (*out.alpha_exact)[b] = 0;
    for (const auto& [v, x] : *out.alpha_exact) out.alpha[v] = x.get_d();
    return out;
}

Stress five_point_collinear_stress(const PointSet& ps, std::array<int, 5> q) {
    const int c = q[4];
    if (!ps.is_interior(c) || !ps.between(q[0], c, q[2]) || !ps.between(q[1], c, q[3]))
        throw Error(ErrorKind::wrong_configuration,
                    "point " + std::to_string(c) + " must be interior and on both diagonals of the quadrilateral");
    Stress quad;
    try {
        quad = four_point_stress(ps, {q[0], q[1], q[2], q[3]});
    } catch (const Error& e) {
        throw Error(ErrorKind::wrong_configuration, e.what());
    }
    const Edge d1(q[0], q[2]), d2(q[1], q[3]);
    const double mu1 = quad.edge(d1) * length(ps, d1.a, d1.b);
    const double mu2 = quad.edge(d2) * length(ps, d2.a, d2.b);
    const Stress t1 = collinear_triple_stress(ps, {q[0], c, q[2]});
    const Stress t2 = collinear_triple_stress(ps, {q[1], c, q[3]});

    Stress out;
    out.w = quad.w;
    out.alpha = quad.alpha;
    for (const auto& [e, x] : t1.w) out.w[e] += mu1 * x;
    for (const auto& [e, x] : t2.w) out.w[e] += mu2 * x;
    for (const auto& [v, x] : t1.alpha) out.alpha[v] += mu1 * x;
    for (const auto& [v, x] : t2.alpha) out.alpha[v] += mu2 * x;
    out.w.erase(d1);
    out.w.erase(d2);
    return out;
}

double stress_form(const Stress& s, const PointSet& ps, const std::vector<double>& v, const std::vector<double>& t) {
    double total = 0;
    for (const auto& [e, x] : s.w) {
        const Point& pi = ps.point(e.a);
        const Point& pj = ps.point(e.b);
        const double dx = Rational(pi.x - pj.x).get_d(), dy = Rational(pi.y - pj.y).get_d();
        const double dot = dx * (v[2 * e.a] - v[2 * e.b]) + dy * (v[2 * e.a + 1] - v[2 * e.b + 1]);
        total += x * (dot - length(ps, e.a, e.b) * (t[e.a] + t[e.b]));
    }
    for (const auto& [j, x] : s.alpha) total += x * t[j];
    return total;
}

Rational stress_velocity_form(const Stress& s, const PointSet& ps, const std::vector<Rational>& v) {
    if (!s.w_exact) throw std::logic_error("stress has no exact edge coefficients");
    Rational total = 0;
    for (const auto& [e, x] : *s.w_exact) {
        const Point& pi = ps.point(e.a);
        const Point& pj = ps.point(e.b);
        total += x * ((pi.x - pj.x) * (v[2 * e.a] - v[2 * e.b]) + (pi.y - pj.y) * (v[2 * e.a + 1] - v[2 * e.b + 1]));
    }
    return total;
}

std::string_view to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::tight: return "tight";
    case CheckStatus::fail: return "fail";
    case CheckStatus::indeterminate: return "indeterminate";
    }
    return "?";
}

std::string_view to_string(ValidityCheck::Kind k) {
    switch (k) {
    case ValidityCheck::Kind::quadruple: return "quadruple";
    case ValidityCheck::Kind::triple: return "collinear triple";
    case ValidityCheck::Kind::five_point: return "five-point configuration";
    }
    return "?";
}

std::string describe(const ValidityCheck& c) {
    std::ostringstream s;
    s << to_string(c.kind) << " (";
    for (std::size_t k = 0; k < c.points.size(); ++k) s << (k ? "," : "") << c.points[k];
    s << ")";
    return s.str();
}

namespace {

template <class Real>
class Evaluator {
public:
    Evaluator(const PointSet& ps, const OffsetVector& f, const ValidityOptions& opt) : ps_(ps), f_(f), opt_(opt) {}

    ValidityCheck quadruple(std::array<int, 4> q) const {
        ValidityCheck c{ValidityCheck::Kind::quadruple, {q.begin(), q.end()}};
        const Stress s = four_point_stress(ps_, q);
        Rational exact = 0;
        for (const auto& [e, w] : *s.w_exact) exact += w * f_.edge(e);
        const bool rational = std::all_of(q.begin(), q.end(), [&](int v) { return f_.mark(v) == 0; });
        if (rational) {
            c.exact = true;
            c.value = exact.get_d();
            c.status = sgn(exact) > 0 ? CheckStatus::pass : CheckStatus::fail;
            return c;
        }
        Real total = to_real<Real>(exact);
        Real scale = 0;
        for (const auto& [e, w] : *s.w_exact) scale += abs(to_real<Real>(w * f_.edge(e)));
        for (int j : q) {
            Real alpha = 0;
            for (const auto& [e, w] : *s.w_exact)
                if (e.touches(j)) alpha += to_real<Real>(w) * len(e);
            const Real term = alpha * to_real<Real>(f_.mark(j));
            total += term;
            scale += abs(term);
        }
        return numeric(std::move(c), total, scale);
    }

    ValidityCheck triple(std::array<int, 3> t) const {
        ValidityCheck c{ValidityCheck::Kind::triple, {t.begin(), t.end()}};
        c.exact = true;
        const auto [a, m, b] = t;
        // Parametrise the line by p_a + s (p_b - p_a); lengths become s sqrt(D).
        const Point& pa = ps_.point(a);
        const Point& pb = ps_.point(b);
        const Point& pm = ps_.point(m);
        const Rational dx = pb.x - pa.x, dy = pb.y - pa.y;
        const Rational D = dx * dx + dy * dy;
        const Rational s = ((pm.x - pa.x) * dx + (pm.y - pa.y) * dy) / D;
        const Rational A = f_.edge(Edge(a, m)) / s - f_.edge(Edge(a, b)) + f_.edge(Edge(m, b)) / (1 - s);
        const Rational B = 2 * f_.mark(m);
        const int sign = sign_of_sum_with_sqrt(B, A / D, D);
        c.value = B.get_d() + A.get_d() / std::sqrt(D.get_d());
        if (sign > 0) c.status = CheckStatus::pass;
        else if (sign == 0 && opt_.mode == ValidityMode::weak) c.status = CheckStatus::tight;
        else c.status = CheckStatus::fail;
        return c;
    }

    ValidityCheck five_point(std::array<int, 5> q) const {
        ValidityCheck c{ValidityCheck::Kind::five_point, {q.begin(), q.end()}};
        // Same construction as five_point_collinear_stress, in working precision.
        const Stress quad = four_point_stress(ps_, {q[0], q[1], q[2], q[3]});
        const Edge d1(q[0], q[2]), d2(q[1], q[3]);
        std::map<Edge, Real> w;
        for (const auto& [e, x] : *quad.w_exact) w[e] = to_real<Real>(x);
        const Real mu1 = w[d1] * len(d1);
        const Real mu2 = w[d2] * len(d2);
        auto add_triple = [&](int a, int m, int b, const Real& mu) {
            w[Edge(a, m)] += mu / len(Edge(a, m));
            w[Edge(m, b)] += mu / len(Edge(m, b));
        };
        add_triple(q[0], q[4], q[2], mu1);
        add_triple(q[1], q[4], q[3], mu2);
        w.erase(d1);
        w.erase(d2);
        // The t-coefficients of any stress vanish, which fixes alpha.
        std::map<int, Real> alpha;
        for (const auto& [e, x] : w) {
            alpha[e.a] += x * len(e);
            alpha[e.b] += x * len(e);
        }

        Real total = 0, scale = 0;
        for (const auto& [e, x] : w) {
            const Real term = x * to_real<Real>(f_.edge(e));
            total += term;
            scale += abs(term);
        }
        for (const auto& [v, x] : alpha) {
            const Real term = x * to_real<Real>(f_.mark(v));
            total += term;
            scale += abs(term);
        }
        return numeric(std::move(c), total, scale);
    }

private:
    Real len(Edge e) const { return sqrt(to_real<Real>(ps_.squared_length(e.a, e.b))); }

    ValidityCheck numeric(ValidityCheck c, const Real& total, const Real& scale) const {
        c.value = to_double(total);
        if (scale == 0) c.status = CheckStatus::fail;
        else if (abs(total) <= Real(opt_.tolerance) * scale) c.status = CheckStatus::indeterminate;
        else c.status = total > 0 ? CheckStatus::pass : CheckStatus::fail;
        return c;
    }

    const PointSet& ps_;
    const OffsetVector& f_;
    const ValidityOptions& opt_;
};

template <class Real>
ValidityReport run_checks(const PointSet& ps, const OffsetVector& f, const ValidityOptions& opt) {
    ValidityReport report;
    report.mode = opt.mode;
    const Evaluator<Real> eval(ps, f, opt);
    auto record = [&](ValidityCheck c) {
        if (c.status == CheckStatus::tight) ++report.tight;
        if (c.status == CheckStatus::fail || c.status == CheckStatus::indeterminate)
            report.failures.push_back(std::move(c));
    };

    const int n = ps.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (ps.orientation(a, b, c) == 0) continue;
                for (int d = c + 1; d < n; ++d) {
                    if (ps.orientation(a, b, d) == 0 || ps.orientation(a, c, d) == 0 || ps.orientation(b, c, d) == 0)
                        continue;
                    ++report.quadruples;
                    record(eval.quadruple({a, b, c, d}));
                }
            }

    const auto& triples = ps.collinear_triples();
    for (const auto& t : triples) {
        ++report.triples;
        record(eval.triple(t));
    }

    // Interior points lying on two collinear triples along different lines.
    for (std::size_t x = 0; x < triples.size(); ++x)
        for (std::size_t y = x + 1; y < triples.size(); ++y) {
            const auto& s = triples[x];
            const auto& t = triples[y];
            if (s[1] != t[1] || !ps.is_interior(s[1])) continue;
            if (ps.orientation(s[0], s[2], t[0]) == 0) continue;
            const int a = s[0], b = s[2], c = t[0], d = t[2];
            if (ps.orientation(a, c, b) == 0 || ps.orientation(a, d, b) == 0 || ps.orientation(a, c, d) == 0 ||
                ps.orientation(b, c, d) == 0)
                continue;
            ++report.five_point;
            record(eval.five_point({a, c, b, d, s[1]}));
        }
    return report;
}

}  // namespace

ValidityReport check_validity(const PointSet& ps, const OffsetVector& f, const ValidityOptions& opt) {
    if (opt.precision_bits <= 53) return run_checks<double>(ps, f, opt);
    PrecisionScope scope(opt.precision_bits);
    return run_checks<BigFloat>(ps, f, opt);
}

}  // namespace ptpoly
