#include "fareyplumb/integer.hpp"

#include <sstream>

namespace fareyplumb {

Int mod_inverse(Int a, Int m) {
    if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    Int r0 = ((a % m) + m) % m, r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int t = r0 / r1;
        Int r2 = r0 - t * r1;
        r0 = r1;
        r1 = r2;
        Int s2 = checked_sub(s0, checked_mul(t, s1));
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return ((s0 % m) + m) % m;
}

IntVector& IntVector::operator+=(const IntVector& o) {
    if (o.rank() != rank()) throw std::invalid_argument("IntVector: rank mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = checked_add(coords[i], o.coords[i]);
    return *this;
}

IntVector& IntVector::operator-=(const IntVector& o) {
    if (o.rank() != rank()) throw std::invalid_argument("IntVector: rank mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = checked_sub(coords[i], o.coords[i]);
    return *this;
}

IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }

IntVector operator*(Int s, const IntVector& v) {
    IntVector r(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) r[i] = checked_mul(s, v[i]);
    return r;
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("dot: rank mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

IntVector unit(std::size_t rank, std::size_t index) {
    IntVector v(rank);
    v.coords.at(index) = 1;
    return v;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.rank(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace fareyplumb
