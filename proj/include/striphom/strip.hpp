#ifndef STRIPHOM_STRIP_HPP
#define STRIPHOM_STRIP_HPP

#include "striphom/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>

namespace striphom {

/// A point of the strip M in exact chart coordinates.  The represented point
/// is (k1*pi + arctan(c1), k2*pi + arctan(c2)).  The strip is the convex hull
/// of the two slope -1 lines through -pi and pi; in chart terms k1+k2 must be
/// -1, 0 or 1 and the chart sum is sign-constrained on the odd squares.
///
/// Order convention: u <= v  iff  u1 >= v1 (first coordinate reversed) and
/// u2 <= v2.
class StripPoint {
public:
    StripPoint(long k1, long k2, Rat c1, Rat c2);

    long k1() const { return k1_; }
    long k2() const { return k2_; }
    const Rat& c1() const { return c1_; }
    const Rat& c2() const { return c2_; }

    bool on_boundary() const;

    friend bool operator==(const StripPoint& a, const StripPoint& b) {
        return a.k1_ == b.k1_ && a.k2_ == b.k2_ && a.c1_ == b.c1_ && a.c2_ == b.c2_;
    }
    friend bool operator!=(const StripPoint& a, const StripPoint& b) { return !(a == b); }
    /// Lexicographic order by (k1, k2, c1, c2); used for canonical sorting
    /// and as map key, unrelated to the poset order.
    friend bool operator<(const StripPoint& a, const StripPoint& b) {
        if (a.k1_ != b.k1_) return a.k1_ < b.k1_;
        if (a.k2_ != b.k2_) return a.k2_ < b.k2_;
        if (a.c1_ != b.c1_) return a.c1_ < b.c1_;
        return a.c2_ < b.c2_;
    }

    std::string to_string() const;

private:
    long k1_, k2_;
    Rat c1_, c2_;
};

/// The value of rho: a pair (I, C) of closed subsets of the extended reals.
/// I = [i_lo, i_hi]; C = complement of the open interval (c_gap.first,
/// c_gap.second), or the empty set when c_gap is absent.
struct PairDescriptor {
    ExtRat i_lo, i_hi;
    std::optional<std::pair<ExtRat, ExtRat>> c_gap;

    bool operator==(const PairDescriptor& o) const {
        return i_lo == o.i_lo && i_hi == o.i_hi && c_gap == o.c_gap;
    }
    std::string to_string() const;
};

/// Classification of points of the lift domain S.
struct RegionClass {
    enum Kind { InR, Lift, OnBoundary, OutsideS };
    enum Shape { E1, E2, E3 };
    enum E3Variant { LeqDiag, GtDiag };

    Kind kind;
    int n = 0;                      // Lift only, >= 1
    Shape shape = E1;               // Lift only
    E3Variant e3_variant = LeqDiag; // Lift with shape E3 only

    bool operator==(const RegionClass& o) const {
        if (kind != o.kind) return false;
        if (kind != Lift) return true;
        if (n != o.n || shape != o.shape) return false;
        return shape != E3 || e3_variant == o.e3_variant;
    }
};

bool poset_leq(const StripPoint& u, const StripPoint& v);
StripPoint apply_T(const StripPoint& u, long power);
StripPoint embed_diag(const Rat& t);
Rat fauxtan(long k, const Rat& c);

/// Extended metric: nullopt encodes infinite distance.
std::optional<Rat> dist(const StripPoint& u, const StripPoint& v);
std::optional<Rat> dist_to_boundary(const StripPoint& u);
/// Nearest boundary point; only defined when dist_to_boundary is finite.
StripPoint nearest_boundary_point(const StripPoint& u);

int tile_degree(const StripPoint& u);
RegionClass region_classify(const StripPoint& u);
PairDescriptor rho(const StripPoint& u);
std::pair<PairDescriptor, int> pair_at(const StripPoint& u);

}  // namespace striphom

#endif
