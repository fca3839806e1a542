#pragma once

#include "isodyn/dpmodels.hpp"
#include "isodyn/schlesinger.hpp"

namespace isodyn {

struct XYCoords {
    Rat x, y;
    bool operator==(const XYCoords& other) const { return x == other.x && y == other.y; }
};

// ---------------------------------------------------------------------------
// 3x3 family: two finite poles of rank 2 plus a pole at infinity
// ---------------------------------------------------------------------------

/// Accessory parameters (alpha, beta) filling the slice so that the residue at
/// infinity has the scheme's spectrum. Linear solve on the characteristic
/// polynomial coefficients; the trace condition is the Fuchs relation.
std::pair<Rat, Rat> a2_accessory(const RiemannScheme& scheme, const XYCoords& xy);

DecompositionPoint a2_point_from_xy(const RiemannScheme& scheme, const XYCoords& xy);

/// Canonicalizes the point into the slice gauge (eigenvector frame pinned to
/// the standard basis and the all-ones vector) and reads off (x, y).
XYCoords a2_xy_from_point(const DecompositionPoint& point);

/// Closed form of the map (x, y) -> (xbar, ybar) induced by the elementary
/// transformation moving one index unit from pole 1 slot 1 to pole 2 slot 1.
XYCoords a2_psi_closed(const RiemannScheme& scheme, const XYCoords& xy);

/// The (2,2)-curve through the finite indeterminate points.
Rat a2_curve_q(const RiemannScheme& scheme, const XYCoords& xy);

FGPoint a2_to_fg(const RiemannScheme& scheme, const XYCoords& xy);

/// Same map in homogeneous coordinates (X : Y : Z), so points on the line at
/// infinity Z = 0 can be pushed through as well.
FGPoint a2_to_fg_homogeneous(const RiemannScheme& scheme, const Rat& x_hom, const Rat& y_hom, const Rat& z_hom);

XYCoords a2_from_fg(const RiemannScheme& scheme, const FGPoint& fg);

ParamsA2 a2_param_dict(const RiemannScheme& scheme);

/// Checks that one model step equals the four-transformation chain
/// (unit shift 2->1 slot 1, kernel swap, unit shift 2->1 slot 2, kernel swap)
/// pushed through the decomposition space, compared in (f, g).
bool a2_verify_composition(const RiemannScheme& scheme, const XYCoords& xy);

// ---------------------------------------------------------------------------
// 4x4 family: three finite poles, double eigenvalue at the third
// ---------------------------------------------------------------------------

std::array<Rat, 3> a1_accessory(const RiemannScheme& scheme, const XYCoords& xy);

/// Builds the 4x4 slice point. The two stored indices at pole 3 may be equal
/// (the double-eigenvalue family) or distinct; both shapes share the slice.
DecompositionPoint a1_point_from_xy(const RiemannScheme& scheme, const XYCoords& xy);

XYCoords a1_xy_from_point(const DecompositionPoint& point);

Rat a1_curve_q(const RiemannScheme& scheme, const XYCoords& xy);

FGPoint a1_to_fg(const RiemannScheme& scheme, const XYCoords& xy);

XYCoords a1_from_fg(const RiemannScheme& scheme, const FGPoint& fg);

ParamsA1 a1_param_dict(const RiemannScheme& scheme);

/// Checks that one model step equals the two rank-2 transformations
/// (pole 2 slots 1,2 -> pole 3; then pole 2 slots 3,4 -> pole 3) pushed
/// through the decomposition space, compared in (f, g).
bool a1_verify_composition(const RiemannScheme& scheme, const XYCoords& xy);

}  // namespace isodyn
