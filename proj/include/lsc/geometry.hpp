#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace lsc {

using Integer = mpz_class;
// Canonical fraction with positive denominator. Every arithmetic result of
// mpq_class is canonical; values built from raw num/den pairs go through
// make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // lexicographic (x, then y)
    friend bool operator<(const Point& a, const Point& b) {
        int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : cmp(a.y, b.y) < 0;
    }
};

std::string to_string(const Point& p);

enum class Turn { right = -1, collinear = 0, left = 1 };

// Sign of (q - p) x (r - p).
Turn orient(const Point& p, const Point& q, const Point& r);

Rational cross(const Point& u, const Point& v);

// Orientation class of a segment. General directions are stored as the
// primitive integer vector with dx > 0, or dx == 0 and dy > 0, so two
// segments are parallel iff their tags compare equal.
struct OrientationTag {
    enum class Kind { horizontal, vertical, general };
    Kind kind = Kind::general;
    Integer dx;
    Integer dy;

    static OrientationTag horizontal();
    static OrientationTag vertical();
    static OrientationTag of_direction(Integer dx, Integer dy);

    friend bool operator==(const OrientationTag& a, const OrientationTag& b) {
        return a.kind == b.kind && a.dx == b.dx && a.dy == b.dy;
    }
};

// "h", "v" or "dx,dy".
std::string to_string(const OrientationTag& tag);
OrientationTag parse_orientation(const std::string& text);

struct Segment {
    int id = 0;
    Point a;
    Point b;
    OrientationTag orientation;

    Segment() = default;
    // Orientation is derived from the endpoints. a == b is allowed here and
    // rejected by validation so that the offending id can be reported.
    Segment(int id, Point a, Point b);

    bool axis_parallel() const { return orientation.kind != OrientationTag::Kind::general; }
    Point direction() const { return Point(b.x - a.x, b.y - a.y); }
    bool contains(const Point& p) const;
};

struct Intersection {
    enum class Kind { empty, point, overlap };
    Kind kind = Kind::empty;
    Point point;  // valid when kind == point

    bool is_point() const { return kind == Kind::point; }
};

Intersection intersect(const Segment& s, const Segment& t);

}  // namespace lsc
