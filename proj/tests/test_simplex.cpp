#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "striphom/simplex.hpp"
#include "oracle.hpp"
#include "util.hpp"

#include <random>

using namespace striphom;

TEST_CASE("build_complex basics") {
    PLPair edge = build_complex({{"a", Rat(0)}, {"b", Rat(1)}}, {{"a", "b"}});
    CHECK(edge.complex.size() == 3);  // two vertices + one edge
    CHECK(edge.complex.dim() == 1);

    PLPair tri_bd = build_complex({{"a", Rat(0)}, {"b", Rat(0)}, {"c", Rat(0)}},
                                  {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(tri_bd.complex.dim() == 1);
    CHECK(tri_bd.complex.size() == 6);

    PLPair tri = build_complex({{"a", Rat(0)}, {"b", Rat(0)}, {"c", Rat(0)}},
                               {{"a", "b", "c"}});
    CHECK(tri.complex.size() == 7);  // closure adds 3 edges and 3 vertices

    CHECK_THROWS(build_complex({{"a", Rat(0)}, {"a", Rat(1)}}, {}));
    CHECK_THROWS(build_complex({{"a", Rat(0)}}, {{"a", "zz"}}));
}

TEST_CASE("pair_intersect") {
    std::mt19937 gen(7);
    Complex X = testutil::random_complex(gen, 6, 2, 8);
    Complex A = testutil::random_subcomplex(gen, X, 0.5);
    Complex Y = testutil::random_subcomplex(gen, X, 0.7);
    Complex B = testutil::random_subcomplex(gen, Y, 0.5);

    auto [f1, s1] = pair_intersect({X, Complex{}}, {Y, B});
    CHECK(f1 == Complex::intersection(X, Y));
    CHECK(s1 == Complex::intersection(X, B));

    auto [f2, s2] = pair_intersect({X, A}, {X, Complex{}});
    CHECK(f2 == X);
    CHECK(s2 == A);

    // commutativity and distributivity over componentwise unions
    for (int t = 0; t < 10; ++t) {
        Complex Y1 = testutil::random_subcomplex(gen, X, 0.6);
        Complex B1 = testutil::random_subcomplex(gen, Y1, 0.4);
        Complex Y2 = testutil::random_subcomplex(gen, X, 0.6);
        Complex B2 = testutil::random_subcomplex(gen, Y2, 0.4);
        auto ab = pair_intersect({X, A}, {Y1, B1});
        auto ba = pair_intersect({Y1, B1}, {X, A});
        CHECK(ab.first == ba.first);
        CHECK(ab.second == ba.second);

        auto uni = std::make_pair(Complex::union_of(Y1, Y2), Complex::union_of(B1, B2));
        auto lhs = pair_intersect({X, A}, uni);
        auto r1 = pair_intersect({X, A}, {Y1, B1});
        auto r2 = pair_intersect({X, A}, {Y2, B2});
        CHECK(lhs.first == Complex::union_of(r1.first, r2.first));
        CHECK(lhs.second == Complex::union_of(r1.second, r2.second));
    }
}

TEST_CASE("level subdivision") {
    PLPair edge = build_complex({{"a", Rat(0)}, {"b", Rat(2)}}, {{"a", "b"}});
    PLPair cut = level_subdivision(edge, {Rat(1)});
    CHECK(cut.complex.vertices().size() == 3);
    int n_edges = 0;
    for (const auto& s : cut.complex.simplices())
        if (s.size() == 2) ++n_edges;
    CHECK(n_edges == 2);
    bool found_mid = false;
    for (const auto& [v, val] : cut.values)
        if (val == Rat(1) && v != "a" && v != "b") found_mid = true;
    CHECK(found_mid);

    PLPair tri = build_complex({{"a", Rat(0)}, {"b", Rat(0)}, {"c", Rat(2)}},
                               {{"a", "b", "c"}});
    PLPair tcut = level_subdivision(tri, {Rat(1)});
    int n_tris = 0;
    for (const auto& s : tcut.complex.simplices())
        if (s.size() == 3) ++n_tris;
    CHECK(n_tris == 3);
    CHECK(tcut.complex.euler_characteristic() == 1);
    CHECK(oracle::betti(tcut.complex, Complex{}, 0, 2) == 1);
    CHECK(oracle::betti(tcut.complex, Complex{}, 1, 2) == 0);

    PLPair same = level_subdivision(edge, {Rat(5), Rat(-3)});
    CHECK(same.complex == edge.complex);
}

TEST_CASE("level subdivision preserves Betti numbers") {
    std::mt19937 gen(19);
    std::uniform_int_distribution<int> lv(-3, 3);
    for (int t = 0; t < 12; ++t) {
        PLPair p = testutil::random_plpair(gen, 3 + t % 6, 2, 7, 3, true);
        std::vector<Rat> levels;
        for (int i = 0; i < 3; ++i) levels.push_back(Rat(2 * lv(gen) + 1, 2));
        PLPair s = level_subdivision(p, levels);
        s.validate();
        for (unsigned q : {2u, 3u})
            for (int d = 0; d <= 3; ++d) {
                CHECK(oracle::betti(p.complex, p.sub, d, q) ==
                      oracle::betti(s.complex, s.sub, d, q));
                CHECK(oracle::betti(p.complex, Complex{}, d, q) ==
                      oracle::betti(s.complex, Complex{}, d, q));
            }
    }
}

TEST_CASE("preimage pairs") {
    PLPair edge = build_complex({{"a", Rat(0)}, {"b", Rat(2)}}, {{"a", "b"}});
    PLPair cut = level_subdivision(edge, {Rat(1)});

    PairDescriptor lower;
    lower.i_lo = ExtRat(Rat(0));
    lower.i_hi = ExtRat(Rat(1));
    auto [kI, kRel] = preimage_pair(cut, lower);
    CHECK(kI.vertices().size() == 2);
    CHECK(kI.dim() == 1);
    CHECK(kRel.empty());

    PairDescriptor gap;  // I full, C the complement of (0, 2)
    gap.i_lo = ExtRat::neg_inf();
    gap.i_hi = ExtRat::pos_inf();
    gap.c_gap = {ExtRat(Rat(0)), ExtRat(Rat(2))};
    auto [gI, gRel] = preimage_pair(edge, gap);
    CHECK(gI == edge.complex);
    CHECK(gRel.vertices().size() == 2);
    CHECK(gRel.dim() == 0);

    PairDescriptor far;
    far.i_lo = ExtRat(Rat(5));
    far.i_hi = ExtRat(Rat(6));
    auto [fI, fRel] = preimage_pair(edge, far);
    CHECK(fI.empty());
    CHECK(fRel.empty());

    // unsampled endpoint rejected
    PairDescriptor bad;
    bad.i_lo = ExtRat(Rat(1, 3));
    bad.i_hi = ExtRat(Rat(7));
    CHECK_THROWS_AS((void)preimage_pair(edge, bad), std::invalid_argument);
}

TEST_CASE("preimage monotone in the descriptor") {
    std::mt19937 gen(23);
    for (int t = 0; t < 8; ++t) {
        PLPair p = testutil::random_plpair(gen, 5, 2, 6, 2, true);
        std::vector<Rat> levels;
        for (int v = -2; v <= 2; ++v) levels.push_back(Rat(v));
        PLPair s = level_subdivision(p, levels);
        PairDescriptor small, big;
        small.i_lo = ExtRat(Rat(-1));
        small.i_hi = ExtRat(Rat(1));
        small.c_gap = {ExtRat(Rat(-1)), ExtRat::pos_inf()};
        big.i_lo = ExtRat(Rat(-2));
        big.i_hi = ExtRat(Rat(2));
        big.c_gap = {ExtRat(Rat(0)), ExtRat::pos_inf()};
        auto a = preimage_pair(s, small);
        auto b = preimage_pair(s, big);
        CHECK(a.first.subcomplex_of(b.first));
        CHECK(a.second.subcomplex_of(b.second));
    }
}

TEST_CASE("horn gadgets") {
    Complex h2 = gadget_horn(2, HornKind::Top);
    CHECK(h2.contains(make_simplex({"0", "2"})));
    CHECK(h2.contains(make_simplex({"1", "2"})));
    CHECK(!h2.contains(make_simplex({"0", "1"})));

    Complex b3 = gadget_horn(3, HornKind::Bottom);
    CHECK(b3.contains(make_simplex({"0", "1", "2"})));
    CHECK(b3.contains(make_simplex({"0", "1", "3"})));
    CHECK(b3.contains(make_simplex({"0", "2", "3"})));
    CHECK(!b3.contains(make_simplex({"1", "2", "3"})));
    CHECK(b3.contains(make_simplex({"1", "2"})));  // proper faces kept

    for (int m : {2, 3, 4})
        for (HornKind k : {HornKind::Top, HornKind::Bottom}) {
            Complex h = gadget_horn(m, k);
            CHECK(oracle::betti(h, Complex{}, 0, 2) == 1);
            for (int d = 1; d <= m; ++d) CHECK(oracle::betti(h, Complex{}, d, 2) == 0);
        }
    CHECK_THROWS(gadget_horn(0, HornKind::Top));
}

TEST_CASE("sphere cylinder gadget") {
    Complex c1 = gadget_sphere_cylinder(1);
    int nv = 0, ne = 0, nt = 0;
    for (const auto& s : c1.simplices()) {
        if (s.size() == 1) ++nv;
        if (s.size() == 2) ++ne;
        if (s.size() == 3) ++nt;
    }
    CHECK(nv == 6);
    CHECK(ne == 12);
    CHECK(nt == 6);
    CHECK(c1.euler_characteristic() == 0);
    CHECK(oracle::betti(c1, Complex{}, 1, 2) == 1);

    for (int n : {1, 2}) {
        Complex c = gadget_sphere_cylinder(n);
        CHECK(oracle::betti(c, Complex{}, 0, 2) == 1);
        CHECK(oracle::betti(c, Complex{}, n, 2) == 1);
        for (int d = 1; d <= n + 1; ++d)
            if (d != n) CHECK(oracle::betti(c, Complex{}, d, 2) == 0);
        CHECK(c.contains(make_simplex({cylinder_vertex(0, 0), cylinder_vertex(n + 1, 1)})));
    }
}

TEST_CASE("booklet skeleton") {
    BookletSkeleton none = booklet_skeleton({});
    CHECK(none.complex.size() == 3);  // spine edge and its two vertices
    CHECK(none.complex.dim() == 1);

    BookletSkeleton b = booklet_skeleton({"p0", "p1", "p2"});
    CHECK(b.complex.vertices().size() == 8);
    CHECK(b.complex.euler_characteristic() == 1);
    CHECK(oracle::betti(b.complex, Complex{}, 0, 2) == 1);
    CHECK(oracle::betti(b.complex, Complex{}, 1, 2) == 0);
    for (const auto& [p, fe] : b.fore_edges)
        CHECK(b.complex.contains(make_simplex({fe.first, fe.second})));
    CHECK_THROWS(booklet_skeleton({"x", "x"}));
}

TEST_CASE("gluing along an edge") {
    BookletSkeleton b = booklet_skeleton({"p0"});
    auto [f0, f1] = b.fore_edges.at("p0");

    // gluing a bare edge changes nothing
    Complex seg = Complex::from_maximal({make_simplex({"0", "1"})});
    SimplicialMap jid{{{"0", "0"}, {"1", "1"}}};
    GlueResult same = glue_along_edge(b.complex, f0, f1, seg, jid, "g_");
    CHECK(same.complex == b.complex);

    // gluing the n=1 cylinder raises beta_1 by one and keeps beta_0
    Complex cyl = gadget_sphere_cylinder(1);
    SimplicialMap j{{{"0", cylinder_vertex(0, 0)}, {"1", cylinder_vertex(2, 1)}}};
    GlueResult glued = glue_along_edge(b.complex, f0, f1, cyl, j, "g_");
    CHECK(oracle::betti(glued.complex, Complex{}, 0, 2) ==
          oracle::betti(b.complex, Complex{}, 0, 2));
    CHECK(oracle::betti(glued.complex, Complex{}, 1, 2) ==
          oracle::betti(b.complex, Complex{}, 1, 2) + 1);

    // gluing to the two fore edges of a two-page skeleton commutes
    BookletSkeleton b2 = booklet_skeleton({"p0", "p1"});
    auto e0 = b2.fore_edges.at("p0");
    auto e1 = b2.fore_edges.at("p1");
    GlueResult g01 = glue_along_edge(
        glue_along_edge(b2.complex, e0.first, e0.second, cyl, j, "a_").complex,
        e1.first, e1.second, cyl, j, "b_");
    GlueResult g10 = glue_along_edge(
        glue_along_edge(b2.complex, e1.first, e1.second, cyl, j, "b_").complex,
        e0.first, e0.second, cyl, j, "a_");
    CHECK(g01.complex == g10.complex);
}
