#ifndef STRIPHOM_MATCHING_HPP
#define STRIPHOM_MATCHING_HPP

#include "striphom/rish.hpp"

#include <optional>
#include <string>
#include <vector>

namespace striphom {

struct MatchEndpoint {
    StripPoint point;
    bool boundary = false;  // true: explicit partner on the strip boundary

    bool operator==(const MatchEndpoint& o) const {
        return point == o.point && boundary == o.boundary;
    }
};

struct MatchEntry {
    MatchEndpoint left, right;
    long mult = 1;
};

/// Partial matching between two diagrams; unmatched copies are paired with
/// explicit boundary points.  Boundary-boundary entries are not allowed.
struct Matching {
    std::vector<MatchEntry> entries;
};

struct Admissibility {
    bool ok = false;
    std::string reason;
    std::optional<StripPoint> witness;  // violating point, if any
    std::optional<StripPoint> r_point;  // the unique base-square point when ok
};

/// A diagram is admissible when it has exactly one support point in the base
/// square (the window point (a1, a2)) and every other support point lies in
/// the down-set region with both fauxtan coordinates inside [a2, a1].
Admissibility check_admissible(const Diagram& d);

/// Largest entry distance; nullopt encodes infinity.  Empty matching: 0.
std::optional<Rat> matching_norm(const Matching& m);

/// Whether the interior projections of m reproduce mu and nu exactly.
bool matching_between(const Matching& m, const Diagram& mu, const Diagram& nu);

struct BottleneckResult {
    std::optional<Rat> value;          // nullopt = infinity
    std::optional<Matching> matching;  // absent when the distance is infinite
};

/// Exact bottleneck distance with an optimal matching, via a sweep over the
/// finitely many candidate radii with bipartite feasibility tests.
BottleneckResult bottleneck_distance(const Diagram& mu, const Diagram& nu);

/// Exhaustive oracle; requires at most 7 copies per side.
std::optional<Rat> brute_force_bottleneck(const Diagram& mu, const Diagram& nu);

/// Move every boundary endpoint violating the target diagram's window to the
/// nearest admissible boundary point.  Never increases the norm.
Matching repair_matching(const Matching& m, const Diagram& mu, const Diagram& nu);

}  // namespace striphom

#endif
