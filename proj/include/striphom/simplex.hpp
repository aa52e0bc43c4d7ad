#ifndef STRIPHOM_SIMPLEX_HPP
#define STRIPHOM_SIMPLEX_HPP

#include "striphom/strip.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace striphom {

using VertexId = std::string;
/// A simplex is a sorted list of distinct vertex ids.
using Simplex = std::vector<VertexId>;

Simplex make_simplex(std::vector<VertexId> verts);

/// A finite simplicial complex: a set of nonempty simplices closed under
/// taking faces.  Vertex order (used for orientation signs) is the
/// lexicographic order on ids.
class Complex {
public:
    Complex() = default;
    static Complex from_maximal(const std::vector<Simplex>& maximal);

    void add_closed(const Simplex& s);  // insert s and all its faces
    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }
    const std::set<Simplex>& simplices() const { return simplices_; }

    std::vector<VertexId> vertices() const;
    int dim() const;  // -1 for the empty complex
    long euler_characteristic() const;
    bool subcomplex_of(const Complex& other) const;

    static Complex intersection(const Complex& a, const Complex& b);
    static Complex union_of(const Complex& a, const Complex& b);

    bool operator==(const Complex& o) const { return simplices_ == o.simplices_; }

private:
    std::set<Simplex> simplices_;
};

/// A complex with a distinguished subcomplex and rational vertex values
/// determining a piecewise linear function.
struct PLPair {
    Complex complex;
    Complex sub;
    std::map<VertexId, Rat> values;

    void validate() const;  // throws on violated invariants
};

struct SimplicialMap {
    std::map<VertexId, VertexId> vertex_map;
    Simplex apply(const Simplex& s) const;
};

PLPair build_complex(const std::vector<std::pair<VertexId, Rat>>& vertex_values,
                     const std::vector<Simplex>& maximal_simplices);

/// (X,A) ⊓ (Y,B) = (X ∩ Y, A ∩ Y ∪ X ∩ B).
std::pair<Complex, Complex> pair_intersect(const std::pair<Complex, Complex>& p,
                                           const std::pair<Complex, Complex>& q);

/// Subdivide so that no simplex spans any of the given levels in its
/// interior.  Applies the same edge cuts to every tracked subcomplex.
struct SubdivisionResult {
    Complex complex;
    std::vector<Complex> subs;
    std::map<VertexId, Rat> values;
};
SubdivisionResult level_subdivision_multi(const Complex& complex,
                                          const std::vector<Complex>& subs,
                                          const std::map<VertexId, Rat>& values,
                                          std::vector<Rat> levels);
PLPair level_subdivision(const PLPair& p, const std::vector<Rat>& levels);

/// Relative preimage pair (K_I, K_rel) of a pair descriptor; requires the
/// input to be subdivided at every finite endpoint of d.
std::pair<Complex, Complex> preimage_pair(const Complex& K, const Complex& L,
                                          const std::map<VertexId, Rat>& values,
                                          const PairDescriptor& d);
std::pair<Complex, Complex> preimage_pair(const PLPair& p, const PairDescriptor& d);

enum class HornKind { Top, Bottom };  // facet opposite the last / the 0th vertex removed
Complex gadget_horn(int m, HornKind which);
Complex gadget_sphere_cylinder(int n);

/// Cylinder gadget vertex name for (i, e), e in {0,1}.
VertexId cylinder_vertex(int i, int e);

struct BookletSkeleton {
    Complex complex;
    VertexId spine0, spine1;                       // spine edge, f-values (a2, a1)
    std::map<std::string, std::pair<VertexId, VertexId>> fore_edges;  // page -> (v0, v1)
};
BookletSkeleton booklet_skeleton(const std::vector<std::string>& page_ids);

struct GlueResult {
    Complex complex;
    std::map<VertexId, VertexId> gadget_to_glued;
};
/// Pushout of base and gadget identifying j(0) with v0 and j(1) with v1;
/// remaining gadget vertices get fresh ids prefixed by `prefix`.
GlueResult glue_along_edge(const Complex& base, const VertexId& v0, const VertexId& v1,
                           const Complex& gadget, const SimplicialMap& j,
                           const std::string& prefix);

}  // namespace striphom

#endif
