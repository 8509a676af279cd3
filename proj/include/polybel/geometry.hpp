#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polybel/errors.hpp"
#include "polybel/exact.hpp"

namespace polybel::geometry {

// Coordinates are integers on the frame grid (default 1e-4 m per unit).
using Coord = std::int64_t;

// Doubled shoelace area: the exact integer cardinality surrogate.
using Card = exact::i128;

// Headroom so cross products of coordinate differences stay exact in __int128.
inline constexpr Coord kMaxCoord = (Coord{1} << 62) - 1;

struct Point {
    Coord x{0};
    Coord y{0};

    friend bool operator==(const Point&, const Point&) = default;
};

// Lexicographic (x, then y): the canonical start-vertex order.
inline bool lex_less(const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
}

// Closed simple path; the edge from back() to front() is implicit.
// Counterclockwise rings bound positive area, clockwise rings are holes.
using Ring = std::vector<Point>;

exact::i128 ring_doubled_area(const Ring& r);

struct OffsetJoin {
    enum class Type { Round, Miter };
    Type type{Type::Round};
    double arc_tolerance{0.0};  // max deviation from the true arc, units; 0 = 0.25% of delta
    double miter_limit{2.0};    // multiples of delta before falling back to bevel

    static OffsetJoin round(double arc_tolerance = 0.0) {
        return OffsetJoin{Type::Round, arc_tolerance, 0.0};
    }
    static OffsetJoin miter(double limit = 2.0) {
        return OffsetJoin{Type::Miter, 0.0, limit};
    }
};

// Exact integer multi-polygon with holes. Instances produced by the factory
// functions and boolean operators below are always in canonical form: every
// ring starts at its lexicographically smallest vertex, rings are sorted by
// (start vertex, vertex count, vertex sequence), no collinear or duplicate
// vertices, no zero-area rings. Any region of doubled area zero is the empty
// set.
class PolygonSet {
public:
    PolygonSet() = default;  // the empty set (canonical)

    // Validates invariants (fatal on self-crossing rings) and canonicalizes.
    static PolygonSet from_rings(std::vector<Ring> rings);

    // Wraps rings without normalization; canonical() is false. Only
    // canonicalize() accepts such values.
    static PolygonSet raw(std::vector<Ring> rings);

    const std::vector<Ring>& rings() const { return rings_; }
    bool canonical() const { return canonical_; }
    bool empty() const { return rings_.empty(); }

    Card doubled_area() const;
    std::uint64_t digest() const;
    std::size_t vertex_count() const;

    Point bbox_lo() const { return bbox_lo_; }
    Point bbox_hi() const { return bbox_hi_; }

    // Area-weighted centroid in grid units; empty for the empty set.
    std::optional<std::pair<double, double>> centroid() const;

    friend bool operator==(const PolygonSet& a, const PolygonSet& b) {
        return a.rings_ == b.rings_;
    }

private:
    std::vector<Ring> rings_;
    bool canonical_ = true;
    Card area2_ = 0;
    std::uint64_t digest_ = 0;
    Point bbox_lo_{0, 0};
    Point bbox_hi_{0, 0};

    void recache();
    friend PolygonSet canonicalize(const PolygonSet&);
    friend PolygonSet assemble_canonical(std::vector<Ring>&& rings);
};

// Boolean operators; inputs must be canonical. Results are canonical and
// drop zero-area slivers.
PolygonSet intersect(const PolygonSet& a, const PolygonSet& b);
PolygonSet unite(const PolygonSet& a, const PolygonSet& b);
PolygonSet subtract(const PolygonSet& a, const PolygonSet& b);
PolygonSet unite_all(const std::vector<const PolygonSet*>& sets);

Card doubled_area(const PolygonSet& a);

// b is covered by a (area test: |a ∩ b| == |b|).
bool contains(const PolygonSet& a, const PolygonSet& b);

// Normalizes an arbitrary ring set; fatal on self-crossing rings.
PolygonSet canonicalize(const PolygonSet& a);

std::uint64_t hash(const PolygonSet& a);

// Isotropic dilation by delta grid units (delta > 0).
PolygonSet offset(const PolygonSet& a, Coord delta, OffsetJoin join = OffsetJoin::round());

// Inscribed regular n-gon disk approximation (n >= 8 per the library default;
// n >= 3 accepted for tests).
PolygonSet regular_polygon_disk(Point center, double radius, int n_vertices);

// Trapezoidal ring-sector: two vertices on each radius at the bounding
// angles. 0 < r_inner < r_outer, 0 < angle_width < pi.
PolygonSet ring_sector(Point center, double r_inner, double r_outer,
                       double angle_center, double angle_width);

PolygonSet rectangle(Point lo, Point hi);

// Translate all vertices; exact.
PolygonSet translate(const PolygonSet& a, Coord dx, Coord dy);

// Multiply all vertices by an integer factor; exact.
PolygonSet scale_coords(const PolygonSet& a, Coord factor);

// Winding number of an integer point (half-open edge rule; points exactly on
// the boundary are assigned to one side deterministically).
int winding_number(const PolygonSet& a, Point p);

inline bool contains_point(const PolygonSet& a, Point p) {
    return winding_number(a, p) != 0;
}

// The discernment frame as a bounded scaled region.
struct FrameSpec {
    Point lo{0, 0};
    Point hi{0, 0};
    double scale = 1e4;  // grid units per meter

    bool valid() const { return hi.x > lo.x && hi.y > lo.y && scale > 0; }
    PolygonSet region() const { return rectangle(lo, hi); }

    bool contains(const PolygonSet& s) const {
        if (s.empty()) return true;
        return s.bbox_lo().x >= lo.x && s.bbox_lo().y >= lo.y &&
               s.bbox_hi().x <= hi.x && s.bbox_hi().y <= hi.y;
    }

    Point to_units(double x_m, double y_m) const;
    std::pair<double, double> to_meters(Point p) const;
    double area_m2(Card doubled_units) const {
        return exact::to_double(doubled_units) / (2.0 * scale * scale);
    }

    friend bool operator==(const FrameSpec&, const FrameSpec&) = default;
};

}  // namespace polybel::geometry
