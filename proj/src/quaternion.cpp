#include "funcid/quaternion.hpp"

namespace funcid {

Quaternion Quaternion::operator*(const Quaternion& rhs) const {
    // Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
    return {
        a_ * rhs.a_ - b_ * rhs.b_ - c_ * rhs.c_ - d_ * rhs.d_,
        a_ * rhs.b_ + b_ * rhs.a_ + c_ * rhs.d_ - d_ * rhs.c_,
        a_ * rhs.c_ - b_ * rhs.d_ + c_ * rhs.a_ + d_ * rhs.b_,
        a_ * rhs.d_ + b_ * rhs.c_ - c_ * rhs.b_ + d_ * rhs.a_,
    };
}

Quaternion Quaternion::inverse() const {
    if (is_zero()) throw DivisionByZero("quaternion inverse of zero");
    const BigRational n = norm();
    const Quaternion c = conjugate();
    return {c.a_ / n, c.b_ / n, c.c_ / n, c.d_ / n};
}

std::string Quaternion::to_string() const {
    const auto piece = [](const BigRational& v, const char* unit, bool& first) -> std::string {
        if (v == 0) return "";
        std::string s;
        if (v < 0) {
            s += first ? "-" : " - ";
        } else if (!first) {
            s += " + ";
        }
        const BigRational mag = v < 0 ? BigRational(-v) : v;
        if (mag != 1 || unit[0] == '\0') s += mag.str();
        s += unit;
        first = false;
        return s;
    };
    bool first = true;
    std::string out;
    out += piece(a_, "", first);
    out += piece(b_, "i", first);
    out += piece(c_, "j", first);
    out += piece(d_, "k", first);
    return out.empty() ? "0" : out;
}

}  // namespace funcid
