#pragma once

#include <complex>
#include <vector>

#include "spade/crosstalk.hpp"
#include "spade/geometry.hpp"

namespace spade {

/// Overlap of the source-centered fundamental Hermite-Gauss mode with the
/// origin-centered mode (k, l):
///
///   beta(sign, k, l) = (±x)^{k+l} cos^k(theta) sin^l(theta) e^{-x^2/2} / sqrt(k! l!)
///
/// sign = +1 selects the brighter source at +x along the source axis,
/// sign = -1 the dimmer one at -x.
double overlap_coeff(int sign, int k, int l, const SourceGeometry& g);

/// Analytic d/dx of overlap_coeff. The x^{k+l-1} factor is evaluated in its
/// removable form: the derivative is finite at x = 0 for every (k, l).
double overlap_coeff_dx(int sign, int k, int l, const SourceGeometry& g);

/// Geometry plus crosstalk: everything needed to evaluate the per-mode
/// detection probabilities and their separation derivatives.
class DetectionModel {
public:
    DetectionModel(SourceGeometry geometry, CrosstalkMatrix crosstalk);

    const SourceGeometry& geometry() const { return geometry_; }
    const CrosstalkMatrix& crosstalk() const { return crosstalk_; }
    int modes_per_axis() const { return crosstalk_.modes_per_axis; }

    /// Mode amplitude of source `sign` in detector mode (n, m):
    /// sum_{k,l} c_{nm,kl} beta(sign, k, l). Complex for generic crosstalk.
    std::complex<double> detector_coeff(int sign, int n, int m) const;

    /// p(nm) = nu |f+_{nm}|^2 + (1 - nu) |f-_{nm}|^2
    double probability(int n, int m) const;

    /// d/dx of probability(n, m); analytic, no finite differences.
    double probability_dx(int n, int m) const;

    /// All probabilities and derivatives in one pass, indexed n*D + m.
    struct Table {
        std::vector<double> p;
        std::vector<double> dp;
    };
    Table probability_table() const;

private:
    void check_mode(int n, int m) const;
    std::vector<double> overlap_vector(int sign) const;
    std::vector<double> overlap_vector_dx(int sign) const;

    SourceGeometry geometry_;
    CrosstalkMatrix crosstalk_;
};

}  // namespace spade
