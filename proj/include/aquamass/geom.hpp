#pragma once

namespace aquamass::geom {

/// Point in image coordinates, origin top-left, x to the right, y down.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Axis-aligned box, half-open in neither axis: covers [x0,x1] x [y0,y1].
struct Box {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;
    friend bool operator==(const Box&, const Box&) = default;
};

inline double box_area(const Box& b) {
    return (b.x1 - b.x0) * (b.y1 - b.y0);
}

}  // namespace aquamass::geom
