#pragma once

namespace schwarz {

// H^m measure of the unit ball in R^m: pi^{m/2} / Gamma(m/2 + 1).
// unit_ball_volume(1) = 2, (2) = pi, (3) = 4*pi/3.
double unit_ball_volume(int m);

// H^{n-2} measure of the boundary sphere of an (n-1)-ball of radius r:
// (n-1) * omega_{n-1} * r^{n-2}. For n = 2 this counts endpoints: 2 when
// r > 0, 0 when r = 0. Rejects negative r.
double sphere_boundary_measure(int n, double r);

// Area of the intersection of two disks in the plane (radii R, r, center
// distance d).
double lens_area(double d, double R, double r);

// H^{n-1} measure of the symmetric difference of two (n-1)-balls whose
// centers are d apart. Exact for nested or disjoint balls in any dimension;
// overlapping balls are supported for n = 2 (intervals) and n = 3 (lens).
double ball_symmetric_difference(int n, double d, double r1, double r2);

} // namespace schwarz
