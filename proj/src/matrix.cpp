#include "trop/matrix.hpp"

namespace trop {

std::string Matrix4::str() const {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (j) s += ' ';
            s += at(i, j).str();
        }
        s += '\n';
    }
    return s;
}

std::string ProjectivePoint::str() const {
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ", ";
        s += c[static_cast<size_t>(i)].str();
    }
    s += "]";
    return s;
}

Rational tdist(const ProjectivePoint& p, const ProjectivePoint& q) {
    Rational best(0);
    for (int i = 0; i < 3; ++i) {
        Rational d = (p[i] - q[i]).abs();
        if (best < d) best = d;
    }
    return best;
}

Rational euclid_sq(const ProjectivePoint& p, const ProjectivePoint& q) {
    Rational s(0);
    for (int i = 0; i < 3; ++i) {
        Rational d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

} // namespace trop
