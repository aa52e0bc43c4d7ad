#ifndef STRIPHOM_RISH_HPP
#define STRIPHOM_RISH_HPP

#include "striphom/homology.hpp"
#include "striphom/simplex.hpp"
#include "striphom/strip.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace striphom {

/// Finite multiset of strip points with positive multiplicities.
using Diagram = std::map<StripPoint, long>;

Diagram diagram_sum(const Diagram& a, const Diagram& b);

/// Evaluates the interlevel-set homology functor of one pair (K, L) with a
/// fixed value function, all homology taken against one shared ambient
/// subdivided complex.  Spaces are cached by (descriptor, degree); the cache
/// is what keeps bases consistent between space and map queries.  Thread-safe.
class StripEvaluator {
public:
    StripEvaluator(std::shared_ptr<const AmbientComplex> amb, Complex K, Complex L,
                   std::shared_ptr<const std::map<VertexId, Rat>> values, unsigned q);

    const Complex& K() const { return K_; }
    const Complex& L() const { return L_; }
    unsigned field() const { return q_; }
    const AmbientComplex& ambient() const { return *amb_; }

    std::pair<Complex, Complex> preimage(const PairDescriptor& d) const;
    HomologySpace space_at(const PairDescriptor& d, int degree) const;
    HomologySpace space(const StripPoint& u) const;  // zero on the boundary
    LinearMap map(const StripPoint& u, const StripPoint& v) const;

private:
    std::shared_ptr<const AmbientComplex> amb_;
    Complex K_, L_;
    std::shared_ptr<const std::map<VertexId, Rat>> values_;
    unsigned q_;
    mutable std::mutex mtx_;
    mutable std::map<std::string, HomologySpace> cache_;
};

/// Whether the order rectangle [u, v] meets the boundary of the strip.
bool interval_meets_boundary(const StripPoint& u, const StripPoint& v);

struct RishContext {
    PLPair original;
    PLPair subdivided;
    std::shared_ptr<const AmbientComplex> amb;
    std::shared_ptr<const std::map<VertexId, Rat>> values;
    std::shared_ptr<StripEvaluator> eval;
    std::vector<Rat> criticals;      // distinct input vertex values
    std::vector<Rat> criticals_sym;  // closed under negation
    std::vector<Rat> ladder;         // symmetric sample ladder
    int n_max = 0;
    unsigned q = 2;
};

/// extra_levels: additional sample values (closed under negation internally)
/// merged into the ladder; the diagram must not depend on them.
RishContext build_context(const PLPair& p, unsigned q = 2,
                          const std::vector<Rat>& extra_levels = {});

HomologySpace evaluate_space(const RishContext& ctx, const StripPoint& u);
LinearMap evaluate_map(const RishContext& ctx, const StripPoint& u, const StripPoint& v);

std::vector<StripPoint> diagram_candidates(const RishContext& ctx);
long multiplicity_at(const RishContext& ctx, const StripPoint& v);

Diagram extract_diagram(const RishContext& ctx);         // parallel over candidates
Diagram extract_diagram_serial(const RishContext& ctx);  // reference implementation

/// Input for the axiom suite: a pair with a subcomplex cover X = X0 u X1,
/// A = A0 u A1 (Ai inside Xi), and optionally a value-preserving retraction
/// X -> A fixing A for the splitting check.
struct AxiomInput {
    PLPair pair;
    Complex X0, X1, A0, A1;
    std::optional<SimplicialMap> retraction;
};

struct AxiomReport {
    struct Item {
        std::string axiom;
        std::string detail;
        bool pass;
    };
    std::vector<Item> items;
    bool all_pass() const;
    std::string summary() const;
};

AxiomReport axiom_suite(const AxiomInput& input, unsigned q = 2, int grid_stride = 1);

}  // namespace striphom

#endif
