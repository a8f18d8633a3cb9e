#include "panel_integrals.hpp"
#include "helmbem/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace helmbem::detail {

namespace {

constexpr double two_pi = 2.0 * M_PI;

double sinc(double x) // sin(x)/x
{
    return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
}

// local basis family: 0 -> 1; 1..3 -> S2 {1-t, t, 4t(1-t)};
// 4..6 -> dS2/dt; 7..8 -> P1 {1, 2t-1}
inline double fam_eval(int fam, double t)
{
    switch (fam) {
    case 0: return 1.0;
    case 1: return 1.0 - t;
    case 2: return t;
    case 3: return 4.0 * t * (1.0 - t);
    case 4: return -1.0;
    case 5: return 1.0;
    case 6: return 4.0 - 8.0 * t;
    case 7: return 1.0;
    default: return 2.0 * t - 1.0;
    }
}

struct SplitVals {
    Complex A{}, B{}; // kernel(v) = log(v) * A + B
};

// Single-layer kernel G_k(chord(v)) split into exact log part and remainder.
SplitVals split_V(double k, const Panel& p, double v)
{
    SplitVals s;
    if (k == 0.0) {
        s.A = -1.0 / two_pi;
        // chord/v -> 1; for lines it is exactly 1.
        const double ratio = p.arc ? sinc(v / (2.0 * p.radius)) : 1.0;
        s.B = -std::log(ratio) / two_pi;
        return s;
    }
    const double r = chart_chord(p, v);
    const double w = k * r;
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(w, j0, y0, j1, y1);
    (void)y0;
    (void)y1;
    const double y0r = bessel_y0_regular(w);
    const double ratio = p.arc ? sinc(v / (2.0 * p.radius)) : 1.0;
    s.A = -j0 / two_pi;
    s.B = Complex(-std::log(ratio) * j0 / two_pi - std::log(k / 2.0) * j0 / two_pi - 0.25 * y0r,
                  0.25 * j0);
    return s;
}

// Double-layer kernel (= adjoint double layer on the same chart) split.
// Lines: identically zero. Arcs: smooth with a v^2 log v component and the
// constant curvature limit -1/(4 pi R).
SplitVals split_K(double k, const Panel& p, double v)
{
    SplitVals s;
    if (!p.arc) return s;
    const double R = p.radius;
    if (k == 0.0) {
        s.B = -1.0 / (4.0 * M_PI * R);
        return s;
    }
    const double r = chart_chord(p, v);
    const double w = k * r;
    const double st = r / (2.0 * R); // |sin(v / 2R)|
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(w, j0, y0, j1, y1);
    (void)j0;
    (void)y0;
    (void)y1;
    const double y1r = bessel_y1_regular(w);
    const double ratio = p.arc ? sinc(v / (2.0 * R)) : 1.0;
    // log(w/(2v)) = log(k/2) + log(chord/v)
    const double logw2v = std::log(k / 2.0) + std::log(ratio);
    s.A = (k / two_pi) * j1 * st;
    s.B = Complex((k / two_pi) * logw2v * j1 * st + 0.25 * k * y1r * st - 1.0 / (4.0 * M_PI * R),
                  -0.25 * k * j1 * st);
    return s;
}

Complex plain_V(double k, const Panel& p, double v)
{
    const double r = chart_chord(p, v);
    if (k == 0.0) return Complex(-std::log(r) / two_pi, 0.0);
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(k * r, j0, y0, j1, y1);
    (void)j1;
    (void)y1;
    return Complex(-0.25 * y0, 0.25 * j0);
}

Complex plain_K(double k, const Panel& p, double v)
{
    if (!p.arc) return {};
    const double r = chart_chord(p, v);
    const double st = r / (2.0 * p.radius);
    if (k == 0.0) return Complex(-1.0 / (4.0 * M_PI * p.radius), 0.0);
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(k * r, j0, y0, j1, y1);
    (void)j0;
    (void)y0;
    // -(i k / 4) H1(w) * st
    return Complex(0.25 * k * y1 * st, -0.25 * k * j1 * st);
}

struct UNode {
    double v;
    Complex kV, kK; // integration weight folded in
    double nu;      // nu(x).nu(y) factor
};

struct SameChartWorkspace {
    std::vector<UNode> nodes;
};

} // namespace

Panel make_panel(const Mesh& mesh, int e)
{
    const Element& el = mesh.element(e);
    const GeometrySegment& seg = mesh.geometry().segments[el.segment];
    Panel p;
    p.elem = e;
    p.chart = seg.chart;
    p.h = el.length;
    if (seg.kind == GeometrySegment::Kind::arc) {
        p.arc = true;
        p.radius = seg.radius;
        const double th0 = seg.theta0 + el.a * (seg.theta1 - seg.theta0);
        p.c0 = seg.radius * th0;
        p.c1 = p.c0 + el.length;
    } else {
        p.arc = false;
        p.c0 = el.a * seg.length;
        p.c1 = el.b * seg.length;
    }
    return p;
}

double chart_chord(const Panel& p, double du)
{
    if (!p.arc) return std::abs(du);
    return 2.0 * p.radius * std::abs(std::sin(du / (2.0 * p.radius)));
}

RuleCache::RuleCache(const AssemblyConfig& cfg)
    : gauss(gauss_legendre(cfg.gauss_n)),
      logg(log_gauss(cfg.log_n)),
      corr(gauss_legendre(5)),
      graded(graded_composite(gauss_legendre(cfg.graded_base), cfg.graded_layers,
                              cfg.graded_ratio))
{
}

const RuleCache& rules_for(const AssemblyConfig& cfg)
{
    static std::mutex mtx;
    static std::map<std::tuple<int, int, int, int, double>, RuleCache> cache;
    std::lock_guard<std::mutex> lock(mtx);
    const auto key = std::make_tuple(cfg.gauss_n, cfg.log_n, cfg.graded_base,
                                     cfg.graded_layers, cfg.graded_ratio);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, RuleCache(cfg)).first;
    return it->second;
}

PairVals pair_vals(const SurfacePoint& x, const SurfacePoint& y)
{
    PairVals v{};
    if (x.chart == y.chart && x.curvature > 0.0) {
        // same circle: everything from the angle difference
        const double R = 1.0 / x.curvature;
        const double d = (x.chart_pos - y.chart_pos) / R; // angle difference
        const double sh = std::sin(0.5 * d);
        v.r = 2.0 * R * std::abs(sh);
        v.z_dot_ny = -2.0 * R * sh * sh;
        v.z_dot_nx = 2.0 * R * sh * sh;
        v.z_dot_tx = R * std::sin(d);
        v.nx_dot_ny = std::cos(d);
        v.nx_dot_ty = std::sin(d);
        return v;
    }
    if (x.chart == y.chart) {
        // same straight line
        const double d = x.chart_pos - y.chart_pos;
        v.r = std::abs(d);
        v.z_dot_ny = 0.0;
        v.z_dot_nx = 0.0;
        v.z_dot_tx = d;
        v.nx_dot_ny = 1.0;
        v.nx_dot_ty = 0.0;
        return v;
    }
    const Point2 z = x.x - y.x;
    v.r = norm(z);
    v.z_dot_ny = dot(z, y.normal);
    v.z_dot_nx = dot(z, x.normal);
    v.z_dot_tx = dot(z, x.tangent);
    v.nx_dot_ny = dot(x.normal, y.normal);
    v.nx_dot_ty = dot(x.normal, y.tangent);
    return v;
}

Complex kernel_V_pv(double k, const PairVals& v)
{
    if (k == 0.0) return Complex(-std::log(v.r) / two_pi, 0.0);
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(k * v.r, j0, y0, j1, y1);
    (void)j1;
    (void)y1;
    return Complex(-0.25 * y0, 0.25 * j0);
}

Complex kernel_K_pv(double k, const PairVals& v)
{
    const double q = v.z_dot_ny / v.r;
    if (k == 0.0) return Complex(q / (two_pi * v.r), 0.0);
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(k * v.r, j0, y0, j1, y1);
    return Complex(-0.25 * k * y1 * q, 0.25 * k * j1 * q);
}

Complex kernel_Kp_pv(double k, const PairVals& v)
{
    const double q = v.z_dot_nx / v.r;
    if (k == 0.0) return Complex(-q / (two_pi * v.r), 0.0);
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(k * v.r, j0, y0, j1, y1);
    return Complex(0.25 * k * y1 * q, -0.25 * k * j1 * q);
}

Complex kernel_dsx_pv(double k, const PairVals& v)
{
    const double q = v.z_dot_tx / v.r;
    if (k == 0.0) return Complex(-q / (two_pi * v.r), 0.0);
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(k * v.r, j0, y0, j1, y1);
    return Complex(0.25 * k * y1 * q, -0.25 * k * j1 * q);
}

namespace {

// ---------- same-chart reduced path ----------

void build_nodes(const Panel& row, const Panel& col, double k, const RuleCache& rules,
                 bool need_K, double umin, double umax, SameChartWorkspace& ws)
{
    ws.nodes.clear();
    // |u| breakpoints
    double vlo, vhi = std::max(std::abs(umin), std::abs(umax));
    if (umin >= 0.0)
        vlo = umin;
    else if (umax <= 0.0)
        vlo = -umax;
    else
        vlo = 0.0;
    std::vector<double> brk = {vlo, vhi, std::abs(umin), std::abs(umax)};
    for (double c : {row.c0 - col.c0, row.c1 - col.c1}) {
        const double a = std::abs(c);
        if (a > vlo && a < vhi) brk.push_back(a);
    }
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end(),
                          [&](double a, double b) { return b - a < 1e-15 * vhi; }),
              brk.end());

    for (size_t i = 0; i + 1 < brk.size(); ++i) {
        const double p = brk[i], q = brk[i + 1];
        if (q <= vlo || q - p < 1e-15 * vhi) continue;
        const bool singular_piece = (p <= 1e-14 * vhi);
        if (singular_piece) {
            // int_0^q kernel(v) F(v) dv with kernel = log(v) A(v) + B(v):
            // Gauss nodes carry weight q*w*(log q * A + B), log-Gauss nodes
            // carry -q*w*A.
            const double lq = std::log(q);
            for (int g = 0; g < rules.gauss.size(); ++g) {
                UNode n;
                n.v = q * rules.gauss.nodes[g];
                const double w = q * rules.gauss.weights[g];
                const SplitVals sv = split_V(k, row, n.v);
                n.kV = w * (lq * sv.A + sv.B);
                if (need_K) {
                    const SplitVals sk = split_K(k, row, n.v);
                    n.kK = w * (lq * sk.A + sk.B);
                }
                n.nu = row.arc ? std::cos(n.v / row.radius) : 1.0;
                ws.nodes.push_back(n);
            }
            for (int g = 0; g < rules.logg.size(); ++g) {
                UNode n;
                n.v = q * rules.logg.nodes[g];
                const double w = -q * rules.logg.weights[g];
                const SplitVals sv = split_V(k, row, n.v);
                n.kV = w * sv.A;
                if (need_K) {
                    const SplitVals sk = split_K(k, row, n.v);
                    n.kK = w * sk.A;
                }
                n.nu = row.arc ? std::cos(n.v / row.radius) : 1.0;
                ws.nodes.push_back(n);
            }
        } else {
            for (int g = 0; g < rules.gauss.size(); ++g) {
                UNode n;
                n.v = p + (q - p) * rules.gauss.nodes[g];
                const double w = (q - p) * rules.gauss.weights[g];
                n.kV = w * plain_V(k, row, n.v);
                if (need_K) n.kK = w * plain_K(k, row, n.v);
                n.nu = row.arc ? std::cos(n.v / row.radius) : 1.0;
                ws.nodes.push_back(n);
            }
        }
    }
}

void integrate_same_chart(const Panel& row, const Panel& col_in, double k,
                          const AssemblyConfig& cfg, const PairRequest& req,
                          PairOutput& out)
{
    Panel col = col_in;
    if (row.arc) {
        // canonicalize the column interval to the nearest periodic image
        const double L = two_pi * row.radius;
        const double shift =
            std::round((0.5 * (row.c0 + row.c1) - 0.5 * (col.c0 + col.c1)) / L) * L;
        col.c0 += shift;
        col.c1 += shift;
    }
    const double umin = row.c0 - col.c1;
    const double umax = row.c1 - col.c0;
    const RuleCache& rules = rules_for(cfg);
    const bool need_K = req.K || req.Kp;

    thread_local SameChartWorkspace ws;
    build_nodes(row, col, k, rules, need_K, umin, umax, ws);

    const double inv_ha = 1.0 / row.h, inv_hb = 1.0 / col.h;
    const double wscale1 = inv_ha * inv_hb; // for the W gradient part
    const double k2 = k * k;

    for (const UNode& n : ws.nodes) {
        for (double sign : {1.0, -1.0}) {
            const double u = sign * n.v;
            if (u < umin - 1e-15 * row.h || u > umax + 1e-15 * row.h) continue;
            if (sign < 0.0 && n.v == 0.0) continue;
            const double lo = std::max(row.c0, col.c0 + u);
            const double hi = std::min(row.c1, col.c1 + u);
            const double len = hi - lo;
            if (len <= 0.0) continue;
            // correlation values of the required basis products
            double fr[9][8], fc[9][8];
            const int nq = rules.corr.size();
            for (int q = 0; q < nq; ++q) {
                const double s = lo + len * rules.corr.nodes[q];
                const double ts = (s - row.c0) * inv_ha;
                const double tt = (s - u - col.c0) * inv_hb;
                const double w = len * rules.corr.weights[q];
                for (int f = 0; f < 9; ++f) {
                    fr[f][q] = fam_eval(f, ts) * w;
                    fc[f][q] = fam_eval(f, tt);
                }
            }
            auto corr = [&](int a, int b) {
                double s = 0.0;
                for (int q = 0; q < nq; ++q) s += fr[a][q] * fc[b][q];
                return s;
            };
            if (req.V) out.V += n.kV * corr(0, 0);
            if (req.K)
                for (int j = 0; j < 3; ++j) out.K[j] += n.kK * corr(0, 1 + j);
            if (req.Kp)
                for (int i = 0; i < 3; ++i) out.Kp[i] += n.kK * corr(1 + i, 0);
            if (req.W) {
                const Complex kV_nu = n.kV * n.nu;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        out.W[i][j] += n.kV * (wscale1 * corr(4 + i, 4 + j)) -
                                       k2 * kV_nu * corr(1 + i, 1 + j);
            }
            if (req.V_P1)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) out.VP1[i][j] += n.kV * corr(7 + i, 7 + j);
        }
    }
}

// ---------- cross-chart tensor path ----------

struct SampledPanel {
    std::vector<SurfacePoint> pts;
    std::vector<double> w;      // arclength weights
    std::vector<double> t;      // local parameters
    std::vector<double> d_corner; // arclength distance to the shared corner (adjacent)
};

void sample_panel(const Mesh& mesh, int e, const QuadratureRule& rule, bool reverse,
                  SampledPanel& sp)
{
    const double h = mesh.element(e).length;
    const int n = rule.size();
    sp.pts.resize(n);
    sp.w.resize(n);
    sp.t.resize(n);
    sp.d_corner.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double t = reverse ? 1.0 - rule.nodes[i] : rule.nodes[i];
        sp.t[i] = t;
        sp.pts[i] = mesh.point_on(e, t);
        sp.w[i] = h * rule.weights[i];
        sp.d_corner[i] = h * rule.nodes[i];
    }
}

void integrate_cross(const Mesh& mesh, const Panel& row, const Panel& col, double k,
                     const AssemblyConfig& cfg, const PairRequest& req, PairOutput& out)
{
    const RuleCache& rules = rules_for(cfg);
    const Element& ea = mesh.element(row.elem);
    const Element& eb = mesh.element(col.elem);

    // shared corner (if adjacent)
    int corner = -1;
    bool a_starts_at_corner = false, b_starts_at_corner = false;
    if (ea.node_end == eb.node_start) {
        corner = ea.node_end;
        a_starts_at_corner = false;
        b_starts_at_corner = true;
    } else if (eb.node_end == ea.node_start) {
        corner = ea.node_start;
        a_starts_at_corner = true;
        b_starts_at_corner = false;
    }

    thread_local SampledPanel sa, sb;
    if (corner >= 0) {
        sample_panel(mesh, row.elem, rules.graded, !a_starts_at_corner, sa);
        sample_panel(mesh, col.elem, rules.graded, !b_starts_at_corner, sb);
    } else {
        sample_panel(mesh, row.elem, rules.gauss, false, sa);
        sample_panel(mesh, col.elem, rules.gauss, false, sb);
        for (size_t i = 0; i < sa.pts.size(); ++i) sa.d_corner[i] = 0.0;
    }

    // corner-relative directions for a cancellation-free z near the corner
    Point2 dir_a{}, dir_b{};
    if (corner >= 0) {
        const SurfacePoint pa = mesh.point_on(row.elem, 0.5);
        const SurfacePoint pb = mesh.point_on(col.elem, 0.5);
        dir_a = a_starts_at_corner ? pa.tangent : -1.0 * pa.tangent;
        dir_b = b_starts_at_corner ? pb.tangent : -1.0 * pb.tangent;
    }

    const double inv_ha = 1.0 / row.h, inv_hb = 1.0 / col.h;
    const double k2 = k * k;

    const int na = static_cast<int>(sa.pts.size());
    const int nb = static_cast<int>(sb.pts.size());
    for (int i = 0; i < na; ++i) {
        const SurfacePoint& x = sa.pts[i];
        double fr[9];
        for (int f = 0; f < 9; ++f) fr[f] = fam_eval(f, sa.t[i]) * sa.w[i];
        for (int j = 0; j < nb; ++j) {
            const SurfacePoint& y = sb.pts[j];
            PairVals pv;
            if (corner >= 0) {
                const double da = sa.d_corner[i], db = sb.d_corner[j];
                const Point2 z = da * dir_a - db * dir_b;
                pv.r = norm(z);
                pv.z_dot_ny = dot(z, y.normal);
                pv.z_dot_nx = dot(z, x.normal);
                pv.z_dot_tx = dot(z, x.tangent);
                pv.nx_dot_ny = dot(x.normal, y.normal);
                pv.nx_dot_ty = dot(x.normal, y.tangent);
            } else {
                pv = pair_vals(x, y);
            }
            const Complex kV = kernel_V_pv(k, pv);
            Complex kK{}, kKp{};
            if (req.K) kK = kernel_K_pv(k, pv);
            if (req.Kp) kKp = kernel_Kp_pv(k, pv);
            const double wj = sb.w[j];
            double fcv[9];
            for (int f = 0; f < 9; ++f) fcv[f] = fam_eval(f, sb.t[j]) * wj;
            if (req.V) out.V += kV * (fr[0] * fcv[0]);
            if (req.K)
                for (int c = 0; c < 3; ++c) out.K[c] += kK * (fr[0] * fcv[1 + c]);
            if (req.Kp)
                for (int c = 0; c < 3; ++c) out.Kp[c] += kKp * (fr[1 + c] * fcv[0]);
            if (req.W) {
                const Complex kV_nu = kV * pv.nx_dot_ny;
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        out.W[a][b] += kV * (inv_ha * inv_hb * fr[4 + a] * fcv[4 + b]) -
                                       k2 * kV_nu * (fr[1 + a] * fcv[1 + b]);
            }
            if (req.V_P1)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) out.VP1[a][b] += kV * (fr[7 + a] * fcv[7 + b]);
        }
    }
}

} // namespace

void integrate_pair(const Mesh& mesh, const Panel& row, const Panel& col, double k,
                    const AssemblyConfig& cfg, const PairRequest& req, PairOutput& out)
{
    out = PairOutput{};
    if (row.chart == col.chart)
        integrate_same_chart(row, col, k, cfg, req, out);
    else
        integrate_cross(mesh, row, col, k, cfg, req, out);
}

} // namespace helmbem::detail
