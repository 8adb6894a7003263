#pragma once

#include <cstddef>
#include <vector>

#include "spade/complex_matrix.hpp"

namespace spade {

/// The dim^2 - 1 Hermitian traceless generators of su(dim), normalized so
/// that Tr(G_i G_j) = 2 delta_ij.
///
/// Generator ordering is frozen and part of the contract:
///   1) symmetric off-diagonal pairs E_jk + E_kj, (j,k) lexicographic, j < k
///   2) antisymmetric pairs -i (E_jk - E_kj), same (j,k) order
///   3) diagonal matrices sqrt(2/(l(l+1))) (sum_{j<l} E_jj - l E_ll), l = 1..dim-1
///
/// Downstream closed forms index into this ordering (for dim = 4 the
/// generators coupling basis state 0 to states 1 and 2 are #0, #1 of the
/// symmetric block and #6, #7 overall in the antisymmetric block).
struct GellMannBasis {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> generators;

    std::size_t count() const { return generators.size(); }
};

/// Build the basis for matrices of side `dim` (dim >= 2).
const GellMannBasis& gellmann_basis(std::size_t dim);

/// sum_k coeffs[k] * G_k. coeffs.size() must equal dim^2 - 1.
ComplexMatrix gellmann_combination(const GellMannBasis& basis, const std::vector<double>& coeffs);

}  // namespace spade
