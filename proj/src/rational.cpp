#include "striphom/rational.hpp"

namespace striphom {

std::string rat_to_string(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r(s);  // cpp_rational accepts "p/q" and integer literals
    return r;
}

std::string extrat_to_string(const ExtRat& e) {
    if (e.is_neg_inf()) return "-inf";
    if (e.is_pos_inf()) return "inf";
    return rat_to_string(e.value());
}

ExtRat extrat_from_string(const std::string& s) {
    if (s == "inf" || s == "+inf") return ExtRat::pos_inf();
    if (s == "-inf") return ExtRat::neg_inf();
    return ExtRat(rat_from_string(s));
}

}  // namespace striphom
