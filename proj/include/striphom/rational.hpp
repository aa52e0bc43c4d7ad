#ifndef STRIPHOM_RATIONAL_HPP
#define STRIPHOM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace striphom {

using Rat = boost::multiprecision::cpp_rational;

/// Extended rational: a finite rational or one of the two infinities.
/// Used for interval endpoints of pair descriptors.
class ExtRat {
public:
    ExtRat() : cls_(0), v_(0) {}
    ExtRat(Rat v) : cls_(0), v_(std::move(v)) {}
    ExtRat(long v) : cls_(0), v_(v) {}

    static ExtRat neg_inf() { ExtRat e; e.cls_ = -1; return e; }
    static ExtRat pos_inf() { ExtRat e; e.cls_ = +1; return e; }

    bool finite() const { return cls_ == 0; }
    bool is_neg_inf() const { return cls_ < 0; }
    bool is_pos_inf() const { return cls_ > 0; }

    const Rat& value() const {
        if (!finite()) throw std::logic_error("ExtRat: value() on infinity");
        return v_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        return a.cls_ == b.cls_ && (a.cls_ != 0 || a.v_ == b.v_);
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.cls_ != b.cls_) return a.cls_ < b.cls_;
        return a.cls_ == 0 && a.v_ < b.v_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

    ExtRat negated() const {
        ExtRat e = *this;
        if (e.cls_ == 0) e.v_ = -e.v_; else e.cls_ = -e.cls_;
        return e;
    }

private:
    int cls_;  // -1, 0, +1
    Rat v_;
};

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

std::string extrat_to_string(const ExtRat& e);
ExtRat extrat_from_string(const std::string& s);

}  // namespace striphom

#endif
