#include "lsc/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsc {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Point& p) {
    return "(" + p.x.get_str() + "," + p.y.get_str() + ")";
}

Rational cross(const Point& u, const Point& v) {
    return u.x * v.y - u.y * v.x;
}

Turn orient(const Point& p, const Point& q, const Point& r) {
    Rational c = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    int s = sgn(c);
    return s > 0 ? Turn::left : (s < 0 ? Turn::right : Turn::collinear);
}

OrientationTag OrientationTag::horizontal() {
    OrientationTag t;
    t.kind = Kind::horizontal;
    t.dx = 1;
    t.dy = 0;
    return t;
}

OrientationTag OrientationTag::vertical() {
    OrientationTag t;
    t.kind = Kind::vertical;
    t.dx = 0;
    t.dy = 1;
    return t;
}

OrientationTag OrientationTag::of_direction(Integer dx, Integer dy) {
    if (dx == 0 && dy == 0) throw std::invalid_argument("zero direction");
    if (dy == 0) return horizontal();
    if (dx == 0) return vertical();
    Integer g;
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    dx /= g;
    dy /= g;
    if (dx < 0) {
        dx = -dx;
        dy = -dy;
    }
    OrientationTag t;
    t.kind = Kind::general;
    t.dx = dx;
    t.dy = dy;
    return t;
}

std::string to_string(const OrientationTag& tag) {
    switch (tag.kind) {
        case OrientationTag::Kind::horizontal: return "h";
        case OrientationTag::Kind::vertical: return "v";
        case OrientationTag::Kind::general: break;
    }
    return tag.dx.get_str() + "," + tag.dy.get_str();
}

OrientationTag parse_orientation(const std::string& text) {
    if (text == "h" || text == "horizontal") return OrientationTag::horizontal();
    if (text == "v" || text == "vertical") return OrientationTag::vertical();
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad orientation '" + text + "'");
    Integer dx, dy;
    if (dx.set_str(text.substr(0, comma), 10) != 0 || dy.set_str(text.substr(comma + 1), 10) != 0)
        throw std::invalid_argument("bad orientation '" + text + "'");
    return OrientationTag::of_direction(dx, dy);
}

namespace {

OrientationTag derive_orientation(const Point& a, const Point& b) {
    if (a == b) return OrientationTag{};
    Rational dx = b.x - a.x;
    Rational dy = b.y - a.y;
    // scale to integers before normalising
    Integer l;
    mpz_lcm(l.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
    Rational sx = dx * l;
    Rational sy = dy * l;
    return OrientationTag::of_direction(sx.get_num(), sy.get_num());
}

}  // namespace

Segment::Segment(int id, Point pa, Point pb)
    : id(id), a(std::move(pa)), b(std::move(pb)), orientation(derive_orientation(a, b)) {}

bool Segment::contains(const Point& p) const {
    if (orient(a, b, p) != Turn::collinear) return false;
    const Point& lo = a < b ? a : b;
    const Point& hi = a < b ? b : a;
    return !(p < lo) && !(hi < p);
}

Intersection intersect(const Segment& s, const Segment& t) {
    Point d1 = s.direction();
    Point d2 = t.direction();
    Point ca(t.a.x - s.a.x, t.a.y - s.a.y);
    Rational denom = cross(d1, d2);
    Intersection out;
    if (sgn(denom) != 0) {
        Rational ts = cross(ca, d2) / denom;
        Rational ut = cross(ca, d1) / denom;
        if (sgn(ts) < 0 || ts > 1 || sgn(ut) < 0 || ut > 1) return out;
        out.kind = Intersection::Kind::point;
        out.point = Point(s.a.x + ts * d1.x, s.a.y + ts * d1.y);
        return out;
    }
    if (sgn(cross(ca, d1)) != 0) return out;  // parallel, distinct lines
    // Collinear: project t's endpoints onto s's parameter line.
    Rational len2 = d1.x * d1.x + d1.y * d1.y;
    Rational t0 = (ca.x * d1.x + ca.y * d1.y) / len2;
    Point da(t.b.x - s.a.x, t.b.y - s.a.y);
    Rational t1 = (da.x * d1.x + da.y * d1.y) / len2;
    if (t1 < t0) std::swap(t0, t1);
    Rational lo = t0 > 0 ? t0 : Rational(0);
    Rational hi = t1 < 1 ? t1 : Rational(1);
    if (hi < lo) return out;
    if (hi == lo) {
        out.kind = Intersection::Kind::point;
        out.point = Point(s.a.x + lo * d1.x, s.a.y + lo * d1.y);
        return out;
    }
    out.kind = Intersection::Kind::overlap;
    return out;
}

}  // namespace lsc
