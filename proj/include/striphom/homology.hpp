#ifndef STRIPHOM_HOMOLOGY_HPP
#define STRIPHOM_HOMOLOGY_HPP

#include "striphom/simplex.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace striphom {

/// Sparse chain in a fixed dimension: sorted (ambient simplex id, nonzero
/// coefficient) pairs.
using Chain = std::vector<std::pair<int, unsigned>>;

/// Indexes the simplices of one fixed ambient complex per dimension and
/// precomputes boundaries with signs from the lexicographic vertex order.
class AmbientComplex {
public:
    explicit AmbientComplex(const Complex& c);

    const Complex& complex() const { return complex_; }
    int dim() const { return (int)by_dim_.size() - 1; }
    int count(int p) const {
        return p >= 0 && p <= dim() ? (int)by_dim_[p].size() : 0;
    }
    int id_of(const Simplex& s) const;
    const Simplex& simplex(int p, int id) const { return by_dim_[p][id]; }
    /// boundary faces of p-simplex id as ((p-1)-simplex id, sign in {+1,-1})
    const std::vector<std::pair<int, int>>& boundary(int p, int id) const {
        return bnd_[p][id];
    }

private:
    Complex complex_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::map<Simplex, int> ids_;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> bnd_;
};

struct HomologySpace {
    int degree = 0;
    std::vector<Chain> basis;  // relative cycle representatives, ambient coords
    int dim() const { return (int)basis.size(); }
};

struct LinearMap {
    int rows = 0, cols = 0;
    std::vector<std::vector<unsigned>> m;  // m[r][c]

    static LinearMap zero(int rows, int cols) {
        return {rows, cols, std::vector<std::vector<unsigned>>(rows, std::vector<unsigned>(cols, 0))};
    }
    static LinearMap identity(int n) {
        LinearMap a = zero(n, n);
        for (int i = 0; i < n; ++i) a.m[i][i] = 1;
        return a;
    }
    bool is_zero() const;
    bool operator==(const LinearMap& o) const { return rows == o.rows && cols == o.cols && m == o.m; }
};

LinearMap compose(const LinearMap& a, const LinearMap& b, unsigned q);  // a after b
int rank_of(const LinearMap& a, unsigned q);
int rank_of_image_sum(const std::vector<LinearMap>& maps, unsigned q);

Chain chain_add(const Chain& a, const Chain& b, unsigned q);
Chain chain_scale(const Chain& a, unsigned s, unsigned q);
Chain boundary_chain(const AmbientComplex& amb, int p, const Chain& z, unsigned q);

HomologySpace homology_of_pair(const AmbientComplex& amb, const Complex& K,
                               const Complex& L, int p, unsigned q);

LinearMap induced_inclusion(const AmbientComplex& amb,
                            const Complex& K, const Complex& L, const HomologySpace& src,
                            const Complex& K2, const Complex& L2, const HomologySpace& dst,
                            unsigned q);

/// Connecting homomorphism of the triad (K,L) = (K0 u K1, L0 u L1): from the
/// homology of the whole pair in degree p to the homology of the
/// intersection pair (K0 n K1, L0 n L1) in degree p-1.
LinearMap mv_boundary(const AmbientComplex& amb,
                      const Complex& K, const Complex& L, const HomologySpace& whole,
                      const Complex& K0, const Complex& L0,
                      const Complex& K1, const Complex& L1,
                      const HomologySpace& inter_space, unsigned q);

/// Express arbitrary relative cycles of (K,L) in degree `space.degree` in the
/// given homology basis of that pair.  Throws if a chain is not a relative
/// cycle or not expressible.
LinearMap express_in_basis(const AmbientComplex& amb, const Complex& K, const Complex& L,
                           const HomologySpace& space, const std::vector<Chain>& chains,
                           unsigned q);

}  // namespace striphom

#endif
