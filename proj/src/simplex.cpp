#include "striphom/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace striphom {

Simplex make_simplex(std::vector<VertexId> verts) {
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("simplex with repeated vertex");
    if (verts.empty()) throw std::invalid_argument("empty simplex");
    return verts;
}

Complex Complex::from_maximal(const std::vector<Simplex>& maximal) {
    Complex c;
    for (const auto& s : maximal) c.add_closed(make_simplex(s));
    return c;
}

void Complex::add_closed(const Simplex& s) {
    if (s.empty()) throw std::invalid_argument("empty simplex");
    if (!simplices_.insert(s).second) return;
    if (s.size() == 1) return;
    Simplex face;
    face.reserve(s.size() - 1);
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
        face.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != skip) face.push_back(s[i]);
        add_closed(face);
    }
}

std::vector<VertexId> Complex::vertices() const {
    std::vector<VertexId> out;
    for (const auto& s : simplices_)
        if (s.size() == 1) out.push_back(s[0]);
    return out;  // sorted: set iteration order sorts size-1 simplices lexicographically
}

int Complex::dim() const {
    int d = -1;
    for (const auto& s : simplices_) d = std::max<int>(d, (int)s.size() - 1);
    return d;
}

long Complex::euler_characteristic() const {
    long chi = 0;
    for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

bool Complex::subcomplex_of(const Complex& other) const {
    return std::all_of(simplices_.begin(), simplices_.end(),
                       [&](const Simplex& s) { return other.contains(s); });
}

Complex Complex::intersection(const Complex& a, const Complex& b) {
    Complex c;
    for (const auto& s : a.simplices_)
        if (b.contains(s)) c.simplices_.insert(s);
    return c;
}

Complex Complex::union_of(const Complex& a, const Complex& b) {
    Complex c = a;
    c.simplices_.insert(b.simplices_.begin(), b.simplices_.end());
    return c;
}

void PLPair::validate() const {
    if (!sub.subcomplex_of(complex))
        throw std::invalid_argument("PLPair: sub is not a subcomplex");
    for (const auto& v : complex.vertices())
        if (!values.count(v))
            throw std::invalid_argument("PLPair: missing value for vertex " + v);
}

Simplex SimplicialMap::apply(const Simplex& s) const {
    std::vector<VertexId> img;
    img.reserve(s.size());
    for (const auto& v : s) {
        auto it = vertex_map.find(v);
        if (it == vertex_map.end())
            throw std::invalid_argument("SimplicialMap: unmapped vertex " + v);
        img.push_back(it->second);
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

PLPair build_complex(const std::vector<std::pair<VertexId, Rat>>& vertex_values,
                     const std::vector<Simplex>& maximal_simplices) {
    PLPair p;
    for (const auto& [v, val] : vertex_values) {
        if (p.values.count(v)) throw std::invalid_argument("duplicate vertex " + v);
        p.values[v] = val;
        p.complex.add_closed({v});
    }
    for (const auto& s : maximal_simplices) {
        Simplex ms = make_simplex(s);
        for (const auto& v : ms)
            if (!p.values.count(v))
                throw std::invalid_argument("simplex references unknown vertex " + v);
        p.complex.add_closed(ms);
    }
    return p;
}

std::pair<Complex, Complex> pair_intersect(const std::pair<Complex, Complex>& p,
                                           const std::pair<Complex, Complex>& q) {
    Complex first = Complex::intersection(p.first, q.first);
    Complex second = Complex::union_of(Complex::intersection(p.second, q.first),
                                       Complex::intersection(p.first, q.second));
    return {first, second};
}

namespace {

// Replace every simplex containing the edge {a,b} by the two halves obtained
// from the cut vertex m.
Complex stellar_edge_subdivide(const Complex& K, const VertexId& a, const VertexId& b,
                               const VertexId& m) {
    Complex out;
    for (const auto& s : K.simplices()) {
        bool has_a = std::binary_search(s.begin(), s.end(), a);
        bool has_b = std::binary_search(s.begin(), s.end(), b);
        if (!(has_a && has_b)) {
            out.add_closed(s);
            continue;
        }
        Simplex half;
        for (const auto& drop : {a, b}) {
            half.clear();
            for (const auto& v : s)
                if (v != drop) half.push_back(v);
            half.push_back(m);
            out.add_closed(make_simplex(half));
        }
    }
    return out;
}

}  // namespace

SubdivisionResult level_subdivision_multi(const Complex& complex,
                                          const std::vector<Complex>& subs,
                                          const std::map<VertexId, Rat>& values,
                                          std::vector<Rat> levels) {
    SubdivisionResult r{complex, subs, values};
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (const Rat& lv : levels) {
        for (;;) {
            // lexicographically least crossing edge
            const Simplex* edge = nullptr;
            for (const auto& s : r.complex.simplices()) {
                if (s.size() != 2) continue;
                const Rat& fa = r.values.at(s[0]);
                const Rat& fb = r.values.at(s[1]);
                if (std::min(fa, fb) < lv && lv < std::max(fa, fb)) {
                    edge = &s;
                    break;
                }
            }
            if (!edge) break;
            VertexId a = (*edge)[0], b = (*edge)[1];
            VertexId m = a + "~" + b + "@" + rat_to_string(lv);
            if (r.values.count(m))
                throw std::logic_error("subdivision vertex name collision: " + m);
            r.complex = stellar_edge_subdivide(r.complex, a, b, m);
            for (auto& sc : r.subs) sc = stellar_edge_subdivide(sc, a, b, m);
            r.values[m] = lv;
        }
    }
    return r;
}

PLPair level_subdivision(const PLPair& p, const std::vector<Rat>& levels) {
    SubdivisionResult r = level_subdivision_multi(p.complex, {p.sub}, p.values, levels);
    return PLPair{std::move(r.complex), std::move(r.subs[0]), std::move(r.values)};
}

std::pair<Complex, Complex> preimage_pair(const Complex& K, const Complex& L,
                                          const std::map<VertexId, Rat>& values,
                                          const PairDescriptor& d) {
    PLPair view{K, L, values};
    return preimage_pair(view, d);
}

std::pair<Complex, Complex> preimage_pair(const PLPair& p, const PairDescriptor& d) {
    // the precondition: no edge crosses a finite endpoint of d strictly
    std::vector<Rat> endpoints;
    auto note = [&](const ExtRat& e) { if (e.finite()) endpoints.push_back(e.value()); };
    note(d.i_lo);
    note(d.i_hi);
    if (d.c_gap) { note(d.c_gap->first); note(d.c_gap->second); }
    for (const auto& s : p.complex.simplices()) {
        if (s.size() != 2) continue;
        Rat lo = std::min(p.values.at(s[0]), p.values.at(s[1]));
        Rat hi = std::max(p.values.at(s[0]), p.values.at(s[1]));
        for (const Rat& e : endpoints)
            if (lo < e && e < hi)
                throw std::invalid_argument("preimage_pair: complex not subdivided at " +
                                            rat_to_string(e));
    }

    auto span_of = [&](const Simplex& s) {
        Rat lo = p.values.at(s[0]), hi = lo;
        for (const auto& v : s) {
            const Rat& x = p.values.at(v);
            if (x < lo) lo = x;
            if (x > hi) hi = x;
        }
        return std::make_pair(lo, hi);
    };
    auto in_I = [&](const Rat& lo, const Rat& hi) {
        return d.i_lo <= ExtRat(lo) && ExtRat(hi) <= d.i_hi;
    };
    auto in_C = [&](const Rat& lo, const Rat& hi) {
        if (!d.c_gap) return false;
        const ExtRat& a = d.c_gap->first;
        const ExtRat& b = d.c_gap->second;
        if (a == b) return true;  // empty gap: C is everything
        bool left = !a.is_neg_inf() && ExtRat(hi) <= a;
        bool right = !b.is_pos_inf() && ExtRat(lo) >= b;
        return left || right;
    };

    Complex K_I, K_rel;
    for (const auto& s : p.complex.simplices()) {
        auto [lo, hi] = span_of(s);
        if (in_I(lo, hi)) {
            K_I.add_closed(s);
            if (p.sub.contains(s)) K_rel.add_closed(s);
        }
        if (in_C(lo, hi)) K_rel.add_closed(s);
    }
    return {K_I, K_rel};
}

Complex gadget_horn(int m, HornKind which) {
    if (m < 1) throw std::invalid_argument("gadget_horn: m must be >= 1");
    std::vector<VertexId> verts;
    for (int i = 0; i <= m; ++i) verts.push_back(std::to_string(i));
    int removed = which == HornKind::Top ? m : 0;  // facet opposite this vertex
    Complex c;
    for (int skip = 0; skip <= m; ++skip) {
        if (skip == removed) {
            // keep the proper faces of the removed facet
            for (int also = 0; also <= m && m >= 2; ++also) {
                if (also == skip) continue;
                Simplex face;
                for (int i = 0; i <= m; ++i)
                    if (i != skip && i != also) face.push_back(verts[i]);
                c.add_closed(make_simplex(face));
            }
            continue;
        }
        Simplex facet;
        for (int i = 0; i <= m; ++i)
            if (i != skip) facet.push_back(verts[i]);
        c.add_closed(make_simplex(facet));
    }
    return c;
}

VertexId cylinder_vertex(int i, int e) {
    return std::to_string(i) + "x" + std::to_string(e);
}

Complex gadget_sphere_cylinder(int n) {
    if (n < 1) throw std::invalid_argument("gadget_sphere_cylinder: n must be >= 1");
    // vertices (i, e), i in 0..n+1, e in {0,1}, ordered componentwise; a set
    // spans a simplex iff it is a chain whose i-projection misses some i.
    struct V { int i, e; };
    std::vector<V> vs;
    for (int i = 0; i <= n + 1; ++i)
        for (int e = 0; e <= 1; ++e) vs.push_back({i, e});
    int nv = (int)vs.size();
    Complex c;
    for (unsigned mask = 1; mask < (1u << nv); ++mask) {
        std::vector<V> chain;
        for (int t = 0; t < nv; ++t)
            if (mask & (1u << t)) chain.push_back(vs[t]);
        bool ok = true;
        std::set<int> proj;
        for (std::size_t t = 0; ok && t < chain.size(); ++t) {
            proj.insert(chain[t].i);
            if (t + 1 < chain.size()) {
                // componentwise comparability of consecutive elements (vs is
                // sorted by (i, e), so a chain must be monotone in both)
                ok = chain[t].i <= chain[t + 1].i && chain[t].e <= chain[t + 1].e;
            }
        }
        if (!ok || (int)proj.size() == n + 2) continue;
        Simplex s;
        for (const auto& v : chain) s.push_back(cylinder_vertex(v.i, v.e));
        c.add_closed(make_simplex(s));
    }
    return c;
}

BookletSkeleton booklet_skeleton(const std::vector<std::string>& page_ids) {
    {
        std::set<std::string> uniq(page_ids.begin(), page_ids.end());
        if (uniq.size() != page_ids.size())
            throw std::invalid_argument("booklet_skeleton: duplicate page id");
    }
    BookletSkeleton b;
    b.spine0 = "s0";
    b.spine1 = "s1";
    b.complex.add_closed(make_simplex({b.spine0, b.spine1}));
    for (const auto& p : page_ids) {
        VertexId f0 = "f0_" + p, f1 = "f1_" + p;
        b.complex.add_closed(make_simplex({b.spine0, b.spine1, f1}));
        b.complex.add_closed(make_simplex({b.spine0, f0, f1}));
        b.fore_edges[p] = {f0, f1};
    }
    return b;
}

GlueResult glue_along_edge(const Complex& base, const VertexId& v0, const VertexId& v1,
                           const Complex& gadget, const SimplicialMap& j,
                           const std::string& prefix) {
    if (!base.contains(make_simplex({v0, v1})))
        throw std::invalid_argument("glue_along_edge: target edge not in base");
    VertexId g0 = j.vertex_map.at("0"), g1 = j.vertex_map.at("1");
    if (!gadget.contains(make_simplex({g0, g1})))
        throw std::invalid_argument("glue_along_edge: j image is not an edge of the gadget");
    GlueResult r;
    r.complex = base;
    std::set<VertexId> base_verts;
    for (const auto& v : base.vertices()) base_verts.insert(v);
    for (const auto& v : gadget.vertices()) {
        if (v == g0) r.gadget_to_glued[v] = v0;
        else if (v == g1) r.gadget_to_glued[v] = v1;
        else {
            VertexId fresh = prefix + v;
            if (base_verts.count(fresh))
                throw std::invalid_argument("glue_along_edge: name collision " + fresh);
            r.gadget_to_glued[v] = fresh;
        }
    }
    SimplicialMap rename{r.gadget_to_glued};
    for (const auto& s : gadget.simplices()) r.complex.add_closed(rename.apply(s));
    return r;
}

}  // namespace striphom
