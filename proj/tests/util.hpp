// Shared randomized-input helpers for the test binaries.
#ifndef STRIPHOM_TESTS_UTIL_HPP
#define STRIPHOM_TESTS_UTIL_HPP

#include "striphom/simplex.hpp"

#include <random>
#include <string>
#include <vector>

namespace testutil {

using striphom::Complex;
using striphom::PLPair;
using striphom::Rat;
using striphom::Simplex;
using striphom::VertexId;

inline std::vector<VertexId> vertex_names(int n) {
    std::vector<VertexId> out;
    for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(100 + i));
    return out;
}

/// Random complex of dimension <= max_dim on <= n_verts vertices.
inline Complex random_complex(std::mt19937& gen, int n_verts, int max_dim,
                              int n_maximal) {
    auto names = vertex_names(n_verts);
    std::uniform_int_distribution<int> vd(0, n_verts - 1);
    std::uniform_int_distribution<int> dd(0, max_dim);
    std::vector<Simplex> maximal;
    for (const auto& v : names) maximal.push_back({v});
    for (int t = 0; t < n_maximal; ++t) {
        int d = dd(gen);
        std::vector<VertexId> vs;
        while ((int)vs.size() < d + 1) {
            VertexId v = names[vd(gen)];
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        }
        maximal.push_back(striphom::make_simplex(vs));
    }
    return Complex::from_maximal(maximal);
}

/// Random subcomplex: closure of a random subset of the simplices.
inline Complex random_subcomplex(std::mt19937& gen, const Complex& c, double keep) {
    std::bernoulli_distribution bd(keep);
    std::vector<Simplex> chosen;
    for (const auto& s : c.simplices())
        if (bd(gen)) chosen.push_back(s);
    Complex out;
    for (const auto& s : chosen) out.add_closed(s);
    return out;
}

/// Random PL pair on a random complex, with small integer vertex values.
inline PLPair random_plpair(std::mt19937& gen, int n_verts, int max_dim, int n_maximal,
                            int value_range, bool with_sub = false) {
    PLPair p;
    p.complex = random_complex(gen, n_verts, max_dim, n_maximal);
    std::uniform_int_distribution<int> vald(-value_range, value_range);
    for (const auto& v : p.complex.vertices()) p.values[v] = Rat(vald(gen));
    if (with_sub) p.sub = random_subcomplex(gen, p.complex, 0.4);
    p.validate();
    return p;
}

}  // namespace testutil

#endif
