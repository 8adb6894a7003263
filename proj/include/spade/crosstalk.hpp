#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "spade/complex_matrix.hpp"
#include "spade/rng.hpp"

namespace spade {

/// Unit vector on the hypersphere parameterizing a crosstalk direction.
struct SphereVector {
    std::vector<double> components;  // unit Euclidean norm
};

/// Crosstalk acting on the D*D monitored detector modes. Rows and columns
/// are indexed by mode pairs (n, m), n, m in 0..D-1, at position n*D + m.
///
/// `unitary` is true for matrices generated from the exponential map (and
/// for the identity); the uniform model below is not unitary and is kept
/// only as an analytic reference, so probabilities derived from it are
/// used raw, without renormalization.
struct CrosstalkMatrix {
    int modes_per_axis = 0;       // D
    ComplexMatrix matrix;         // side D^2
    double nominal_strength = 0.0;  // requested p_c (0 if constructed directly)
    double mu = 0.0;              // exponential-map angle (0 when not applicable)
    double measured_strength = 0.0;
    bool unitary = false;

    int dim() const { return modes_per_axis * modes_per_axis; }
};

/// Uniform sample from the unit sphere in `dim` dimensions: i.i.d. standard
/// normals, normalized.
SphereVector sample_sphere_vector(std::size_t dim, RandomEngine& rng);

/// Angle of the exponential map that yields ensemble-average strength p_c:
/// mu = sqrt(p_c (D^4 - 1) / 2). Requires 0 <= p_c < 1.
double mu_for_strength(double p_c, int modes_per_axis);

/// Mean squared off-diagonal element, averaged over the D^2(D^2-1)
/// off-diagonal slots.
double strength(const ComplexMatrix& m);
double strength(const CrosstalkMatrix& c);

/// exp(-i mu lambda.G) for a given direction; exact exponential, unitary.
CrosstalkMatrix crosstalk_from_direction(int modes_per_axis, const SphereVector& lambda, double mu);

/// Random crosstalk of nominal strength p_c: direction sampled uniformly on
/// the sphere, angle from mu_for_strength. The measured strength of the
/// returned matrix is recorded alongside the requested one.
CrosstalkMatrix random_crosstalk(int modes_per_axis, double p_c, RandomEngine& rng);

/// The analytic uniform model: 1 on the diagonal, sqrt(p_c) everywhere else.
/// Not unitary for p_c > 0.
CrosstalkMatrix uniform_crosstalk(int modes_per_axis, double p_c);

CrosstalkMatrix identity_crosstalk(int modes_per_axis);

/// JSON round-trip: {D, mu, nominal_strength, measured_strength, re, im}.
/// The unitary flag is not stored; it is re-derived on load.
void write_json(std::ostream& os, const CrosstalkMatrix& c);
CrosstalkMatrix read_crosstalk_json(std::istream& is);

}  // namespace spade
