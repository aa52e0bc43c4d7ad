#ifndef STRIPHOM_REALIZE_HPP
#define STRIPHOM_REALIZE_HPP

#include "striphom/matching.hpp"
#include "striphom/rish.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace striphom {

/// One-point lift: a pair (X_u, A_u) whose diagram is the single point u,
/// together with the edge inclusion j, the retraction r onto the edge and the
/// two function values b0 <= b1 carried by the edge.
struct LiftGadget {
    Complex complex;   // X_u
    Complex sub;       // A_u, the distinguished edge
    SimplicialMap j;   // "0", "1" (edge) -> vertices of X_u
    SimplicialMap r;   // vertices of X_u -> "0" / "1"
    Rat b0, b1;
    int n = 0;                                        // suspension count
    RegionClass region;
    std::map<VertexId, std::pair<int, int>> coords;   // (k, l) grid position
};

LiftGadget lift_point(const StripPoint& u);

/// Indexed multiset of strip points; s0 names the base-square point.
struct Representation {
    std::vector<StripPoint> points;
    std::size_t s0 = 0;
};

Representation represent(const Diagram& d);

/// Assembled booklet: spine edge plus one glued gadget page per non-base
/// index; pair.values is the realized function.
struct Booklet {
    struct Page {
        StripPoint point;
        int n = 0;
        std::map<VertexId, std::pair<int, int>> coords;
    };
    PLPair pair;               // sub is empty
    Representation rep;
    std::vector<Page> pages;   // aligned with rep.points; pages[s0] = spine
};

Booklet build_booklet(const Representation& w);

/// Values the same booklet complex would receive from the second
/// representation under the index bijection phi (phi[s] indexes w2).
std::map<VertexId, Rat> transport_function(const Booklet& built, const Representation& w2,
                                           const std::vector<std::size_t>& phi);

Rat sup_norm_diff(const std::map<VertexId, Rat>& f, const std::map<VertexId, Rat>& g);

struct RealizeResult {
    Complex complex;
    std::map<VertexId, Rat> f, g;
    Rat d_bottleneck{0};
    Rat norm_fg{0};
    Diagram dgm_f, dgm_g;
    bool certified = false;  // norm_fg == d_bottleneck and diagrams reproduced
};

/// Theorem realization: functions f, g on one complex with Dgm f = mu,
/// Dgm g = nu and ||f-g||_inf equal to the bottleneck distance.
RealizeResult realize_matching(const Diagram& mu, const Diagram& nu);

struct RoundtripReport {
    bool diagrams_equal = false;
    bool connected = false;
    Diagram recomputed;
    bool pass() const { return diagrams_equal && connected; }
    std::string summary() const;
};

RoundtripReport verify_roundtrip(const Diagram& d);

}  // namespace striphom

#endif
