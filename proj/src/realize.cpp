#include "striphom/realize.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace striphom {

namespace {

bool is_e_square(const StripPoint& p, RegionClass::Shape& shape) {
    if (p.k1() == -1 && p.k2() == 0) { shape = RegionClass::E1; return true; }
    if (p.k1() == 0 && p.k2() == 1) { shape = RegionClass::E2; return true; }
    return false;
}

int retraction_value(const RegionClass& rc, int n, int k, int l) {
    switch (rc.kind) {
        case RegionClass::OnBoundary:
            return 0;  // both endpoint values coincide
        case RegionClass::InR:
            return l;
        case RegionClass::Lift:
            if (rc.shape == RegionClass::E1) return k == n + 1 ? 1 : 0;
            if (rc.shape == RegionClass::E2) return k == 0 ? 0 : 1;
            if (rc.e3_variant == RegionClass::LeqDiag) return k == n + 1 ? 1 : 0;
            return l;  // E3, first coordinate above the diagonal
        default:
            throw std::invalid_argument("retraction undefined outside the down-set region");
    }
}

std::pair<Rat, Rat> b_values(const StripPoint& u) {
    Rat f1 = fauxtan(u.k1(), u.c1());
    Rat f2 = fauxtan(u.k2(), u.c2());
    return {std::min(f1, f2), std::max(f1, f2)};
}

}  // namespace

LiftGadget lift_point(const StripPoint& u) {
    RegionClass rc = region_classify(u);
    if (rc.kind == RegionClass::OutsideS)
        throw std::invalid_argument("lift_point: point outside the down-set region");

    LiftGadget g;
    g.region = rc;
    std::tie(g.b0, g.b1) = b_values(u);

    if (rc.kind == RegionClass::InR) {
        g.complex = Complex::from_maximal({make_simplex({"0", "1"})});
        g.sub = g.complex;
        g.j.vertex_map = {{"0", "0"}, {"1", "1"}};
        g.r.vertex_map = {{"0", "0"}, {"1", "1"}};
        g.coords = {{"0", {-1, 0}}, {"1", {-1, 1}}};
        g.n = 0;
        return g;
    }

    int n = 0;
    RegionClass::Shape shape = RegionClass::E1;
    RegionClass::E3Variant var = RegionClass::LeqDiag;
    if (rc.kind == RegionClass::Lift) {
        n = rc.n;
        shape = rc.shape;
        var = rc.e3_variant;
    } else {  // boundary point: shape of the surrounding square
        long bound = std::abs(u.k1()) + std::abs(u.k2()) + 2;
        n = -1;
        for (long t = 1; t <= bound; ++t)
            if (is_e_square(apply_T(u, t), shape)) { n = (int)t; break; }
        if (n < 0) throw std::logic_error("lift_point: no suspension count for boundary point");
    }
    g.n = n;

    if (shape == RegionClass::E1 || shape == RegionClass::E2) {
        g.complex = gadget_horn(n + 1, shape == RegionClass::E1 ? HornKind::Top
                                                                : HornKind::Bottom);
        g.j.vertex_map = {{"0", "0"}, {"1", std::to_string(n + 1)}};
        for (int k = 0; k <= n + 1; ++k) {
            VertexId v = std::to_string(k);
            g.coords[v] = {k, -1};
            int r = shape == RegionClass::E1 ? (k == n + 1 ? 1 : 0) : (k == 0 ? 0 : 1);
            g.r.vertex_map[v] = r ? "1" : "0";
        }
    } else {
        g.complex = gadget_sphere_cylinder(n);
        g.j.vertex_map = {{"0", cylinder_vertex(0, 0)}, {"1", cylinder_vertex(n + 1, 1)}};
        for (int k = 0; k <= n + 1; ++k)
            for (int l = 0; l <= 1; ++l) {
                VertexId v = cylinder_vertex(k, l);
                g.coords[v] = {k, l};
                int r = var == RegionClass::LeqDiag ? (k == n + 1 ? 1 : 0) : l;
                g.r.vertex_map[v] = r ? "1" : "0";
            }
    }
    g.sub = Complex::from_maximal(
        {make_simplex({g.j.vertex_map.at("0"), g.j.vertex_map.at("1")})});
    return g;
}

Representation represent(const Diagram& d) {
    Admissibility a = check_admissible(d);
    if (!a.ok) throw std::invalid_argument("represent: " + a.reason);
    Representation w;
    for (const auto& [p, m] : d)
        for (long i = 0; i < m; ++i) {
            if (p == *a.r_point) w.s0 = w.points.size();
            w.points.push_back(p);
        }
    return w;
}

Booklet build_booklet(const Representation& w) {
    Diagram dg;
    for (const auto& p : w.points) dg[p] += 1;
    Admissibility adm = check_admissible(dg);
    if (!adm.ok) throw std::invalid_argument("build_booklet: " + adm.reason);
    if (w.s0 >= w.points.size() || !(w.points[w.s0] == *adm.r_point))
        throw std::invalid_argument("build_booklet: s0 does not name the base point");
    Rat a1 = adm.r_point->c1(), a2 = adm.r_point->c2();

    std::vector<std::string> ids;
    for (std::size_t s = 0; s < w.points.size(); ++s)
        if (s != w.s0) ids.push_back("p" + std::to_string(s));
    BookletSkeleton sk = booklet_skeleton(ids);

    Booklet b;
    b.rep = w;
    b.pages.assign(w.points.size(), Booklet::Page{w.points[w.s0], 0, {}});
    Complex cx = sk.complex;
    std::map<VertexId, Rat> values{{sk.spine0, a2}, {sk.spine1, a1}};
    b.pages[w.s0] = {w.points[w.s0], 0, {{sk.spine0, {-1, 0}}, {sk.spine1, {-1, 1}}}};

    for (std::size_t s = 0; s < w.points.size(); ++s) {
        if (s == w.s0) continue;
        LiftGadget g = lift_point(w.points[s]);
        auto [f0, f1] = sk.fore_edges.at("p" + std::to_string(s));
        GlueResult gr = glue_along_edge(cx, f0, f1, g.complex, g.j,
                                        "g" + std::to_string(s) + "_");
        cx = gr.complex;
        Booklet::Page pg{w.points[s], g.n, {}};
        for (const auto& [gv, glued] : gr.gadget_to_glued) {
            pg.coords[glued] = g.coords.at(gv);
            values[glued] = g.r.vertex_map.at(gv) == "0" ? g.b0 : g.b1;
        }
        b.pages[s] = std::move(pg);
    }
    b.pair = PLPair{cx, Complex{}, values};
    b.pair.validate();
    return b;
}

std::map<VertexId, Rat> transport_function(const Booklet& built, const Representation& w2,
                                           const std::vector<std::size_t>& phi) {
    std::size_t nn = built.rep.points.size();
    if (phi.size() != nn || w2.points.size() != nn)
        throw std::invalid_argument("transport_function: index sets differ in size");
    {
        std::vector<char> seen(nn, 0);
        for (std::size_t t : phi) {
            if (t >= nn || seen[t])
                throw std::invalid_argument("transport_function: phi is not a bijection");
            seen[t] = 1;
        }
    }
    std::map<VertexId, Rat> g;
    for (std::size_t s = 0; s < nn; ++s) {
        const StripPoint& u = built.rep.points[s];
        const StripPoint& v = w2.points[phi[s]];
        if (!dist(u, v))
            throw std::invalid_argument("transport_function: matched points at infinite distance");
        auto [b0, b1] = b_values(v);
        RegionClass rc = region_classify(v);
        const Booklet::Page& pg = built.pages[s];
        for (const auto& [vid, kl] : pg.coords)
            g[vid] = retraction_value(rc, pg.n, kl.first, kl.second) ? b1 : b0;
    }
    return g;
}

Rat sup_norm_diff(const std::map<VertexId, Rat>& f, const std::map<VertexId, Rat>& g) {
    if (f.size() != g.size())
        throw std::invalid_argument("sup_norm_diff: different vertex sets");
    Rat best(0);
    for (const auto& [v, fv] : f) {
        auto it = g.find(v);
        if (it == g.end()) throw std::invalid_argument("sup_norm_diff: different vertex sets");
        Rat d = fv - it->second;
        if (d < 0) d = -d;
        best = std::max(best, d);
    }
    return best;
}

RealizeResult realize_matching(const Diagram& mu, const Diagram& nu) {
    if (!check_admissible(mu).ok || !check_admissible(nu).ok)
        throw std::invalid_argument("realize_matching: diagrams not admissible");
    BottleneckResult bd = bottleneck_distance(mu, nu);
    if (!bd.value || !bd.matching)
        throw std::invalid_argument("realize_matching: infinite bottleneck distance");
    Matching m = repair_matching(*bd.matching, mu, nu);

    Representation w1, w2;
    bool found_base = false;
    for (const auto& e : m.entries)
        for (long c = 0; c < e.mult; ++c) {
            if (!e.left.boundary && e.left.point.k1() == 0 && e.left.point.k2() == 0) {
                w1.s0 = w2.s0 = w1.points.size();
                found_base = true;
            }
            w1.points.push_back(e.left.point);
            w2.points.push_back(e.right.point);
        }
    if (!found_base) throw std::logic_error("realize_matching: base points not matched");

    Booklet b = build_booklet(w1);
    std::vector<std::size_t> phi(w1.points.size());
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = i;
    std::map<VertexId, Rat> g = transport_function(b, w2, phi);

    RealizeResult res;
    res.complex = b.pair.complex;
    res.f = b.pair.values;
    res.g = g;
    res.d_bottleneck = *bd.value;
    res.norm_fg = sup_norm_diff(res.f, res.g);
    res.dgm_f = extract_diagram(build_context(b.pair));
    res.dgm_g = extract_diagram(build_context(PLPair{res.complex, Complex{}, g}));
    res.certified = res.norm_fg == res.d_bottleneck && res.dgm_f == mu && res.dgm_g == nu;
    return res;
}

std::string RoundtripReport::summary() const {
    std::ostringstream os;
    os << (diagrams_equal ? "pass" : "FAIL") << "  diagram reproduced\n"
       << (connected ? "pass" : "FAIL") << "  realization connected\n";
    return os.str();
}

RoundtripReport verify_roundtrip(const Diagram& d) {
    Booklet b = build_booklet(represent(d));
    RoundtripReport rep;
    rep.recomputed = extract_diagram(build_context(b.pair));
    Diagram expect;
    for (const auto& [p, m] : d)
        if (!p.on_boundary()) expect[p] += m;
    rep.diagrams_equal = rep.recomputed == expect;
    AmbientComplex amb(b.pair.complex);
    rep.connected = homology_of_pair(amb, b.pair.complex, Complex{}, 0, 2).dim() == 1;
    return rep;
}

}  // namespace striphom
