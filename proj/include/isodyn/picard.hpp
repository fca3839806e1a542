#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace isodyn {

/// Rank-10 Picard lattice bases: either the two rulings plus eight blow-up
/// classes, or one line class plus nine blow-up classes.
enum class PicBasisKind { P1xP1_8, P2_9 };

using PicVec = Eigen::Matrix<std::int64_t, 10, 1>;
using PicMat = Eigen::Matrix<std::int64_t, 10, 10>;

struct PicClass {
    PicBasisKind basis;
    PicVec coeffs;
};

/// Integer matrix acting on lattice classes; column j is the image of the
/// j-th basis class.
struct LatticeMap {
    std::string name;
    PicBasisKind basis;
    PicMat matrix;
};

std::int64_t pairing(const PicClass& a, const PicClass& b);

PicClass anticanonical(PicBasisKind basis);

/// (C^2 + K.C)/2 + 1
std::int64_t virtual_genus(const PicClass& c);

enum class RootLabel { E6Affine, E7Affine, A2Surface, A1Surface };

struct RootBasis {
    RootLabel label;
    PicBasisKind basis;
    std::vector<PicClass> roots;
};

/// The listed root classes; construction validates self-pairings and, for the
/// affine bases, that the pairing graph is the right affine diagram.
RootBasis root_basis(RootLabel label);

/// Transcribed push-forward actions: phi_a2, psi_a2, phi_a1, psi11_a1,
/// psi12_a1, psi34_a1. Throws UnknownMap for anything else.
LatticeMap pushforward(const std::string& name);

/// True iff the map preserves the intersection pairing and fixes the
/// anticanonical class.
bool check_isometry(const LatticeMap& map);

PicClass apply(const LatticeMap& map, const PicClass& c);

/// Coefficients c_i with map(alpha_i) = alpha_i + c_i (-K). Throws
/// NotTranslation when some image differs by a non-multiple of -K.
std::vector<std::int64_t> translation_vector(const LatticeMap& map, const RootBasis& roots);

enum class BlowdownCase { A2Schlesinger, A1Schlesinger };

/// The identification of the model-surface basis classes inside the
/// Schlesinger-surface lattice: columns are (H_f, H_g, E_1..E_8) expressed in
/// the source basis. Construction verifies all pairing relations, the
/// anticanonical class, and the surface-root decompositions on both sides.
LatticeMap blowdown_change_of_basis(BlowdownCase which);

}  // namespace isodyn
