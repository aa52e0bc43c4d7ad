#include "striphom/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace striphom {

namespace {

unsigned norm_mod(long long v, unsigned q) {
    long long r = v % (long long)q;
    if (r < 0) r += q;
    return (unsigned)r;
}

unsigned mulq(unsigned a, unsigned b, unsigned q) { return (unsigned)(((unsigned long long)a * b) % q); }

unsigned invq(unsigned a, unsigned q) {
    // q is a small prime; Fermat
    unsigned r = 1, e = q - 2, base = a % q;
    while (e) {
        if (e & 1) r = mulq(r, base, q);
        base = mulq(base, base, q);
        e >>= 1;
    }
    return r;
}

using Row = std::vector<unsigned>;

// Incremental row-echelon structure over F_q for independence testing.
struct Echelon {
    unsigned q;
    std::vector<Row> rows;       // reduced rows
    std::vector<int> pivots;     // pivot index per row

    // Reduce v against the rows; returns true (and inserts) if independent.
    bool add(Row v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            unsigned c = v[pivots[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = norm_mod((long long)v[j] - (long long)mulq(c, rows[r][j], q), q);
        }
        int piv = -1;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { piv = (int)j; break; }
        if (piv < 0) return false;
        unsigned inv = invq(v[piv], q);
        for (auto& x : v) x = mulq(x, inv, q);
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }
};

// Dense matrix stored column-wise would suit rank queries, but row-major with
// explicit elimination keeps the solver simple.
struct Dense {
    int rows = 0, cols = 0;
    std::vector<Row> a;  // a[r] is a row

    Dense(int r, int c) : rows(r), cols(c), a(r, Row(c, 0)) {}
};

// Bring to reduced row echelon form considering only the first `limit`
// columns as pivot candidates.  Returns pivot column per pivot row.
std::vector<int> rref(Dense& M, unsigned q, int limit) {
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < limit && r < M.rows; ++c) {
        int sel = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.a[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(M.a[sel], M.a[r]);
        unsigned inv = invq(M.a[r][c], q);
        for (int j = 0; j < M.cols; ++j) M.a[r][j] = mulq(M.a[r][j], inv, q);
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || M.a[i][c] == 0) continue;
            unsigned f = M.a[i][c];
            for (int j = 0; j < M.cols; ++j)
                M.a[i][j] = norm_mod((long long)M.a[i][j] - (long long)mulq(f, M.a[r][j], q), q);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

// Column indexing of the p-simplices of K \ L.
struct PairCols {
    std::vector<int> ids;          // ambient ids, ascending
    std::map<int, int> index_of;   // ambient id -> column
};

PairCols pair_cols(const AmbientComplex& amb, const Complex& K, const Complex& L, int p) {
    PairCols pc;
    for (int id = 0; id < amb.count(p); ++id) {
        const Simplex& s = amb.simplex(p, id);
        if (K.contains(s) && !L.contains(s)) {
            pc.index_of[id] = (int)pc.ids.size();
            pc.ids.push_back(id);
        }
    }
    return pc;
}

// Relative boundary column of the p-simplex with ambient id `id`, in the
// coordinates of `rows` (the (p-1)-columns of the pair).
Row rel_boundary_column(const AmbientComplex& amb, int p, int id, const PairCols& rows,
                        unsigned q) {
    Row col(rows.ids.size(), 0);
    for (const auto& [fid, sign] : amb.boundary(p, id)) {
        auto it = rows.index_of.find(fid);
        if (it == rows.index_of.end()) continue;  // face in L, dropped
        col[it->second] = norm_mod(sign, q);
    }
    return col;
}

Row restrict_chain(const AmbientComplex& amb, int p, const Chain& z, const Complex& K,
                   const Complex& L, const PairCols& cols) {
    Row v(cols.ids.size(), 0);
    for (const auto& [id, co] : z) {
        const Simplex& s = amb.simplex(p, id);
        if (L.contains(s)) continue;
        if (!K.contains(s))
            throw std::invalid_argument("chain not supported in the target complex");
        v[cols.index_of.at(id)] = co;
    }
    return v;
}

}  // namespace

AmbientComplex::AmbientComplex(const Complex& c) : complex_(c) {
    int d = c.dim();
    by_dim_.resize(std::max(d + 1, 0));
    for (const auto& s : c.simplices()) {
        int p = (int)s.size() - 1;
        ids_[s] = (int)by_dim_[p].size();
        by_dim_[p].push_back(s);  // set iteration is sorted, so ids are canonical
    }
    bnd_.resize(by_dim_.size());
    for (int p = 1; p <= d; ++p) {
        bnd_[p].resize(by_dim_[p].size());
        for (std::size_t id = 0; id < by_dim_[p].size(); ++id) {
            const Simplex& s = by_dim_[p][id];
            Simplex face;
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                face.clear();
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != skip) face.push_back(s[i]);
                int sign = (skip % 2 == 0) ? 1 : -1;
                bnd_[p][id].push_back({ids_.at(face), sign});
            }
        }
    }
    if (!bnd_.empty()) bnd_[0].resize(by_dim_[0].size());
}

int AmbientComplex::id_of(const Simplex& s) const {
    auto it = ids_.find(s);
    if (it == ids_.end()) throw std::invalid_argument("simplex not in ambient complex");
    return it->second;
}

bool LinearMap::is_zero() const {
    for (const auto& r : m)
        for (unsigned v : r)
            if (v) return false;
    return true;
}

LinearMap compose(const LinearMap& a, const LinearMap& b, unsigned q) {
    if (a.cols != b.rows) throw std::invalid_argument("compose: dimension mismatch");
    LinearMap c = LinearMap::zero(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.m[i][k] == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                c.m[i][j] = norm_mod((long long)c.m[i][j] + (long long)mulq(a.m[i][k], b.m[k][j], q), q);
        }
    return c;
}

int rank_of(const LinearMap& a, unsigned q) {
    Echelon e{q};
    int rank = 0;
    for (int j = 0; j < a.cols; ++j) {
        Row col(a.rows);
        for (int i = 0; i < a.rows; ++i) col[i] = a.m[i][j];
        if (e.add(std::move(col))) ++rank;
    }
    return rank;
}

int rank_of_image_sum(const std::vector<LinearMap>& maps, unsigned q) {
    if (maps.empty()) return 0;
    int rows = maps[0].rows;
    Echelon e{q};
    int rank = 0;
    for (const auto& m : maps) {
        if (m.rows != rows) throw std::invalid_argument("rank_of_image_sum: mixed targets");
        for (int j = 0; j < m.cols; ++j) {
            Row col(rows);
            for (int i = 0; i < rows; ++i) col[i] = m.m[i][j];
            if (e.add(std::move(col))) ++rank;
        }
    }
    return rank;
}

Chain chain_add(const Chain& a, const Chain& b, unsigned q) {
    Chain out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            unsigned c = norm_mod((long long)a[i].second + b[j].second, q);
            if (c) out.push_back({a[i].first, c});
            ++i; ++j;
        }
    }
    return out;
}

Chain chain_scale(const Chain& a, unsigned s, unsigned q) {
    Chain out;
    s %= q;
    for (const auto& [id, co] : a) {
        unsigned c = mulq(co, s, q);
        if (c) out.push_back({id, c});
    }
    return out;
}

Chain boundary_chain(const AmbientComplex& amb, int p, const Chain& z, unsigned q) {
    std::map<int, unsigned> acc;
    for (const auto& [id, co] : z)
        for (const auto& [fid, sign] : amb.boundary(p, id))
            acc[fid] = norm_mod((long long)acc[fid] + (long long)co * sign, q);
    Chain out;
    for (const auto& [id, co] : acc)
        if (co) out.push_back({id, co});
    return out;
}

HomologySpace homology_of_pair(const AmbientComplex& amb, const Complex& K,
                               const Complex& L, int p, unsigned q) {
    if (!L.subcomplex_of(K) || !K.subcomplex_of(amb.complex()))
        throw std::invalid_argument("homology_of_pair: not nested subcomplexes");
    HomologySpace h;
    h.degree = p;
    if (p < 0) return h;
    PairCols cp = pair_cols(amb, K, L, p);
    if (cp.ids.empty()) return h;
    PairCols cpm1 = pair_cols(amb, K, L, p - 1);

    // kernel of the relative boundary in degree p
    int n = (int)cp.ids.size();
    Dense D((int)cpm1.ids.size(), n);
    for (int j = 0; j < n; ++j) {
        if (p == 0) break;
        Row col = rel_boundary_column(amb, p, cp.ids[j], cpm1, q);
        for (int i = 0; i < D.rows; ++i) D.a[i][j] = col[i];
    }
    std::vector<int> pivots = rref(D, q, n);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Row> kernel;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Row v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = norm_mod(-(long long)D.a[r][c], q);
        kernel.push_back(std::move(v));
    }

    // quotient by boundaries from degree p+1
    Echelon ech{q};
    for (int id = 0; id < amb.count(p + 1); ++id) {
        const Simplex& s = amb.simplex(p + 1, id);
        if (!K.contains(s) || L.contains(s)) continue;
        ech.add(rel_boundary_column(amb, p + 1, id, cp, q));
    }
    for (const auto& kv : kernel) {
        if (!ech.add(kv)) continue;
        Chain z;
        for (int c = 0; c < n; ++c)
            if (kv[c]) z.push_back({cp.ids[c], kv[c]});
        h.basis.push_back(std::move(z));
    }
    return h;
}

LinearMap express_in_basis(const AmbientComplex& amb, const Complex& K, const Complex& L,
                           const HomologySpace& space, const std::vector<Chain>& chains,
                           unsigned q) {
    int p = space.degree;
    PairCols cp = pair_cols(amb, K, L, p);
    int dim = space.dim();

    std::vector<Row> columns;
    for (const auto& z : space.basis)
        columns.push_back(restrict_chain(amb, p, z, K, L, cp));
    for (int id = 0; id < amb.count(p + 1); ++id) {
        const Simplex& s = amb.simplex(p + 1, id);
        if (!K.contains(s) || L.contains(s)) continue;
        columns.push_back(rel_boundary_column(amb, p + 1, id, cp, q));
    }

    int ncols = (int)columns.size();
    int nrhs = (int)chains.size();
    Dense M((int)cp.ids.size(), ncols + nrhs);
    for (int j = 0; j < ncols; ++j)
        for (int i = 0; i < M.rows; ++i) M.a[i][j] = columns[j][i];
    for (int j = 0; j < nrhs; ++j) {
        Row b = restrict_chain(amb, p, chains[j], K, L, cp);
        for (int i = 0; i < M.rows; ++i) M.a[i][ncols + j] = b[i];
    }

    std::vector<int> pivots = rref(M, q, ncols);
    // consistency: rows without a pivot must have zero right-hand side
    for (int r = (int)pivots.size(); r < M.rows; ++r)
        for (int j = 0; j < nrhs; ++j)
            if (M.a[r][ncols + j] != 0)
                throw std::logic_error("express_in_basis: chain not in the span");

    LinearMap out = LinearMap::zero(dim, nrhs);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= dim) continue;  // coefficient of a boundary column
        for (int j = 0; j < nrhs; ++j) out.m[pivots[r]][j] = M.a[r][ncols + j];
    }
    return out;
}

LinearMap induced_inclusion(const AmbientComplex& amb,
                            const Complex& K, const Complex& L, const HomologySpace& src,
                            const Complex& K2, const Complex& L2, const HomologySpace& dst,
                            unsigned q) {
    if (!K.subcomplex_of(K2) || !L.subcomplex_of(L2))
        throw std::invalid_argument("induced_inclusion: pairs not nested");
    if (src.degree != dst.degree)
        throw std::invalid_argument("induced_inclusion: degree mismatch");
    return express_in_basis(amb, K2, L2, dst, src.basis, q);
}

LinearMap mv_boundary(const AmbientComplex& amb,
                      const Complex& K, const Complex& L, const HomologySpace& whole,
                      const Complex& K0, const Complex& L0,
                      const Complex& K1, const Complex& L1,
                      const HomologySpace& inter_space, unsigned q) {
    if (!(Complex::union_of(K0, K1) == K) || !(Complex::union_of(L0, L1) == L))
        throw std::invalid_argument("mv_boundary: pieces do not cover the pair");
    int p = whole.degree;
    if (inter_space.degree != p - 1)
        throw std::invalid_argument("mv_boundary: target degree must be p-1");
    Complex Ki = Complex::intersection(K0, K1);
    Complex Li = Complex::intersection(L0, L1);

    std::vector<Chain> connecting;
    for (const Chain& z : whole.basis) {
        Chain z0;
        for (const auto& [id, co] : z) {
            const Simplex& s = amb.simplex(p, id);
            if (K0.contains(s)) z0.push_back({id, co});
            else if (!K1.contains(s))
                throw std::logic_error("mv_boundary: cycle escapes both pieces");
        }
        Chain dz = boundary_chain(amb, p, z, q);
        Chain w0;
        for (const auto& [id, co] : dz) {
            const Simplex& s = amb.simplex(p - 1, id);
            if (L0.contains(s)) w0.push_back({id, co});
            else if (!L1.contains(s))
                throw std::logic_error("mv_boundary: relative cycle boundary escapes L");
        }
        Chain dz0 = boundary_chain(amb, p, z0, q);
        Chain c = chain_add(dz0, chain_scale(w0, q - 1, q), q);
        connecting.push_back(std::move(c));
    }
    return express_in_basis(amb, Ki, Li, inter_space, connecting, q);
}

}  // namespace striphom
