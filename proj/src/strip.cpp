#include "striphom/strip.hpp"

#include <cstdlib>
#include <sstream>

namespace striphom {

namespace {

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// clamp maps branch overflow of a chart coordinate to the infinities.
ExtRat clamp(long k, const Rat& c) {
    if (k == 0) return ExtRat(c);
    return k < 0 ? ExtRat::neg_inf() : ExtRat::pos_inf();
}

// Membership in the up-set of the diagonal image: k1 <= 0, k2 >= 0, and in
// the central square additionally c1 <= c2.
bool in_up_im_diag(const StripPoint& u) {
    if (u.k1() > 0 || u.k2() < 0) return false;
    if (u.k1() == 0 && u.k2() == 0) return u.c1() <= u.c2();
    return true;
}

bool in_D(const StripPoint& u) {
    return in_up_im_diag(u) && !in_up_im_diag(apply_T(u, -1));
}

}  // namespace

StripPoint::StripPoint(long k1, long k2, Rat c1, Rat c2)
    : k1_(k1), k2_(k2), c1_(std::move(c1)), c2_(std::move(c2)) {
    long s = k1_ + k2_;
    if (s < -1 || s > 1)
        throw std::invalid_argument("StripPoint: branch sum outside {-1,0,1}");
    if (s == 1 && c1_ + c2_ > 0)
        throw std::invalid_argument("StripPoint: above the upper strip line");
    if (s == -1 && c1_ + c2_ < 0)
        throw std::invalid_argument("StripPoint: below the lower strip line");
}

bool StripPoint::on_boundary() const {
    return (k1_ + k2_ == 1 || k1_ + k2_ == -1) && c1_ + c2_ == 0;
}

std::string StripPoint::to_string() const {
    std::ostringstream os;
    os << k1_ << ' ' << k2_ << ' ' << rat_to_string(c1_) << ' ' << rat_to_string(c2_);
    return os.str();
}

std::string PairDescriptor::to_string() const {
    std::string s = "I=[" + extrat_to_string(i_lo) + "," + extrat_to_string(i_hi) + "]";
    if (c_gap)
        s += " C=compl(" + extrat_to_string(c_gap->first) + "," +
             extrat_to_string(c_gap->second) + ")";
    else
        s += " C=empty";
    return s;
}

bool poset_leq(const StripPoint& u, const StripPoint& v) {
    // first coordinate reversed: u1 >= v1
    bool first = (u.k1() > v.k1()) || (u.k1() == v.k1() && u.c1() >= v.c1());
    bool second = (u.k2() < v.k2()) || (u.k2() == v.k2() && u.c2() <= v.c2());
    return first && second;
}

StripPoint apply_T(const StripPoint& u, long power) {
    long k1 = u.k1(), k2 = u.k2();
    Rat c1 = u.c1(), c2 = u.c2();
    // T^2 is the translation (k1-2, k2+2 | c1, c2); apply it in bulk.
    long pairs = power >= 0 ? power / 2 : -((-power) / 2);
    k1 -= 2 * pairs;
    k2 += 2 * pairs;
    long rem = power - 2 * pairs;  // -1, 0, or 1
    if (rem == 1) {
        long nk1 = -1 - k2, nk2 = 1 - k1;
        k1 = nk1; k2 = nk2;
        std::swap(c1, c2);
        c1 = -c1; c2 = -c2;
    } else if (rem == -1) {
        long nk1 = 1 - k2, nk2 = -1 - k1;
        k1 = nk1; k2 = nk2;
        std::swap(c1, c2);
        c1 = -c1; c2 = -c2;
    }
    return StripPoint(k1, k2, std::move(c1), std::move(c2));
}

StripPoint embed_diag(const Rat& t) { return StripPoint(0, 0, t, t); }

Rat fauxtan(long k, const Rat& c) {
    long m = k % 2;
    return m == 0 ? c : Rat(-c);
}

std::optional<Rat> dist(const StripPoint& u, const StripPoint& v) {
    if (u.k1() != v.k1() || u.k2() != v.k2()) return std::nullopt;
    Rat d1 = rat_abs(u.c1() - v.c1());
    Rat d2 = rat_abs(u.c2() - v.c2());
    return d1 > d2 ? d1 : d2;
}

std::optional<Rat> dist_to_boundary(const StripPoint& u) {
    long s = u.k1() + u.k2();
    if (s != 1 && s != -1) return std::nullopt;
    return rat_abs(u.c1() + u.c2()) / 2;
}

StripPoint nearest_boundary_point(const StripPoint& u) {
    long s = u.k1() + u.k2();
    if (s != 1 && s != -1)
        throw std::invalid_argument("nearest_boundary_point: even branch square");
    Rat t = (u.c1() - u.c2()) / 2;
    return StripPoint(u.k1(), u.k2(), t, -t);
}

int tile_degree(const StripPoint& u) {
    long bound = std::labs(u.k1()) + std::labs(u.k2()) + 2;
    for (long n = 0; n <= bound; ++n) {
        if (in_D(apply_T(u, n))) return static_cast<int>(n);
        if (n > 0 && in_D(apply_T(u, -n))) return static_cast<int>(-n);
    }
    throw std::logic_error("tile_degree: no tile found within bound (invalid point)");
}

RegionClass region_classify(const StripPoint& u) {
    RegionClass rc;
    bool in_closed_window = u.k1() >= 0 && u.k2() <= 0;
    if (u.on_boundary()) {
        rc.kind = in_closed_window ? RegionClass::OnBoundary : RegionClass::OutsideS;
        return rc;
    }
    bool in_S = in_closed_window &&
                (u.k1() != 0 || u.k2() != 0 || u.c2() <= u.c1());
    if (!in_S) {
        rc.kind = RegionClass::OutsideS;
        return rc;
    }
    if (u.k1() == 0 && u.k2() == 0) {
        rc.kind = RegionClass::InR;
        return rc;
    }
    long bound = std::labs(u.k1()) + std::labs(u.k2()) + 2;
    for (long n = 1; n <= bound; ++n) {
        StripPoint v = apply_T(u, n);
        if (v.k1() == -1 && v.k2() == 0) {
            rc.kind = RegionClass::Lift;
            rc.n = static_cast<int>(n);
            rc.shape = RegionClass::E1;
            return rc;
        }
        if (v.k1() == 0 && v.k2() == 1) {
            rc.kind = RegionClass::Lift;
            rc.n = static_cast<int>(n);
            rc.shape = RegionClass::E2;
            return rc;
        }
        if (v.k1() == 0 && v.k2() == 0) {
            rc.kind = RegionClass::Lift;
            rc.n = static_cast<int>(n);
            rc.shape = RegionClass::E3;
            rc.e3_variant = v.c1() <= v.c2() ? RegionClass::LeqDiag : RegionClass::GtDiag;
            return rc;
        }
    }
    throw std::logic_error("region_classify: no lift square found within bound");
}

PairDescriptor rho(const StripPoint& u) {
    if (tile_degree(u) != 0)
        throw std::invalid_argument("rho: point not in the fundamental domain");
    PairDescriptor d;
    d.i_lo = clamp(u.k1(), u.c1());
    d.i_hi = clamp(u.k2(), u.c2());
    StripPoint up = apply_T(u, -1);
    ExtRat a = clamp(up.k2(), up.c2());
    ExtRat b = clamp(up.k1(), up.c1());
    if (a.is_neg_inf() && b.is_pos_inf()) {
        d.c_gap.reset();  // C is empty
    } else {
        if (b < a) throw std::logic_error("rho: inverted complement gap");
        d.c_gap = std::make_pair(a, b);
    }
    return d;
}

std::pair<PairDescriptor, int> pair_at(const StripPoint& u) {
    int n = tile_degree(u);
    return {rho(apply_T(u, n)), n};
}

}  // namespace striphom
