#include "spade/gellmann.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace spade {

namespace {

GellMannBasis build_basis(std::size_t dim) {
    GellMannBasis basis;
    basis.dim = dim;
    basis.generators.reserve(dim * dim - 1);

    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = j + 1; k < dim; ++k) {
            ComplexMatrix g(dim, dim);
            g.at(j, k) = 1.0;
            g.at(k, j) = 1.0;
            basis.generators.push_back(std::move(g));
        }
    }
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = j + 1; k < dim; ++k) {
            ComplexMatrix g(dim, dim);
            g.at(j, k) = Complex{0.0, -1.0};
            g.at(k, j) = Complex{0.0, 1.0};
            basis.generators.push_back(std::move(g));
        }
    }
    for (std::size_t l = 1; l < dim; ++l) {
        ComplexMatrix g(dim, dim);
        const double norm = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (std::size_t j = 0; j < l; ++j) g.at(j, j) = norm;
        g.at(l, l) = -norm * static_cast<double>(l);
        basis.generators.push_back(std::move(g));
    }
    return basis;
}

}  // namespace

const GellMannBasis& gellmann_basis(std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("gellmann_basis: dim must be >= 2");
    static std::map<std::size_t, GellMannBasis> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(dim);
    if (it == cache.end()) it = cache.emplace(dim, build_basis(dim)).first;
    return it->second;
}

ComplexMatrix gellmann_combination(const GellMannBasis& basis, const std::vector<double>& coeffs) {
    if (coeffs.size() != basis.count())
        throw std::invalid_argument("gellmann_combination: coefficient count mismatch");
    ComplexMatrix h(basis.dim, basis.dim);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0.0) continue;
        const auto& g = basis.generators[k];
        for (std::size_t i = 0; i < h.entries().size(); ++i)
            h.entries()[i] += coeffs[k] * g.entries()[i];
    }
    return h;
}

}  // namespace spade
