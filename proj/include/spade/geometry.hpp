#pragma once

namespace spade {

/// Two incoherent point sources on either side of the origin, described in
/// dimensionless units of the Gaussian point-spread-function width w.
///
///   x     half-separation in PSF widths, x = d / (2w), x >= 0
///   theta angle of the source axis against the first image axis, [0, 2pi)
///   nu    relative brightness of the brighter source, [1/2, 1]
///
/// Inputs with nu < 1/2 are accepted and canonicalized by relabeling the
/// sources: theta -> theta + pi, nu -> 1 - nu. The detection statistics are
/// invariant under that relabeling.
struct SourceGeometry {
    double x = 0.0;
    double theta = 0.0;
    double nu = 0.5;

    static SourceGeometry make(double x, double theta, double nu);
};

}  // namespace spade
