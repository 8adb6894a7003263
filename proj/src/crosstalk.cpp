#include "spade/crosstalk.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "spade/gellmann.hpp"

namespace spade {

SphereVector sample_sphere_vector(std::size_t dim, RandomEngine& rng) {
    if (dim < 1) throw std::invalid_argument("sample_sphere_vector: dim must be >= 1");
    std::normal_distribution<double> normal(0.0, 1.0);
    SphereVector v;
    v.components.resize(dim);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& c : v.components) {
            c = normal(rng);
            norm2 += c * c;
        }
    } while (norm2 < 1e-280);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : v.components) c *= inv;
    return v;
}

double mu_for_strength(double p_c, int modes_per_axis) {
    if (!(p_c >= 0.0 && p_c < 1.0))
        throw std::invalid_argument("mu_for_strength: p_c must be in [0, 1)");
    if (modes_per_axis < 2) throw std::invalid_argument("mu_for_strength: D must be >= 2");
    const double d4 = std::pow(static_cast<double>(modes_per_axis), 4.0);
    return std::sqrt(p_c * (d4 - 1.0) / 2.0);
}

double strength(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("strength: matrix not square");
    const std::size_t n = m.rows();
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (r != c) sum += std::norm(m.at(r, c));
    return sum / (static_cast<double>(n) * (n - 1));
}

double strength(const CrosstalkMatrix& c) { return strength(c.matrix); }

CrosstalkMatrix crosstalk_from_direction(int modes_per_axis, const SphereVector& lambda,
                                         double mu) {
    if (modes_per_axis < 2)
        throw std::invalid_argument("crosstalk_from_direction: D must be >= 2");
    const std::size_t dim = static_cast<std::size_t>(modes_per_axis) * modes_per_axis;
    const auto& basis = gellmann_basis(dim);
    if (lambda.components.size() != basis.count())
        throw std::invalid_argument("crosstalk_from_direction: lambda size must be D^4 - 1");

    CrosstalkMatrix out;
    out.modes_per_axis = modes_per_axis;
    out.mu = mu;
    out.unitary = true;
    if (mu == 0.0) {
        out.matrix = ComplexMatrix::identity(dim);
    } else {
        const ComplexMatrix h = gellmann_combination(basis, lambda.components);
        out.matrix = unitary_exp(h, -mu);
    }
    out.measured_strength = strength(out.matrix);
    out.nominal_strength = 2.0 * mu * mu / (static_cast<double>(dim) * dim - 1.0);
    return out;
}

CrosstalkMatrix random_crosstalk(int modes_per_axis, double p_c, RandomEngine& rng) {
    if (modes_per_axis < 2) throw std::invalid_argument("random_crosstalk: D must be >= 2");
    const double mu = mu_for_strength(p_c, modes_per_axis);
    const std::size_t lambda_dim =
        static_cast<std::size_t>(modes_per_axis) * modes_per_axis;
    const SphereVector lambda = sample_sphere_vector(lambda_dim * lambda_dim - 1, rng);
    CrosstalkMatrix out = crosstalk_from_direction(modes_per_axis, lambda, mu);
    out.nominal_strength = p_c;
    return out;
}

CrosstalkMatrix uniform_crosstalk(int modes_per_axis, double p_c) {
    if (modes_per_axis < 2) throw std::invalid_argument("uniform_crosstalk: D must be >= 2");
    if (!(p_c >= 0.0 && p_c < 1.0))
        throw std::invalid_argument("uniform_crosstalk: p_c must be in [0, 1)");
    const std::size_t dim = static_cast<std::size_t>(modes_per_axis) * modes_per_axis;
    CrosstalkMatrix out;
    out.modes_per_axis = modes_per_axis;
    out.nominal_strength = p_c;
    out.mu = 0.0;
    out.matrix = ComplexMatrix(dim, dim);
    const double off = std::sqrt(p_c);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) out.matrix.at(r, c) = (r == c) ? 1.0 : off;
    out.measured_strength = p_c;
    out.unitary = (p_c == 0.0);
    return out;
}

CrosstalkMatrix identity_crosstalk(int modes_per_axis) {
    if (modes_per_axis < 1) throw std::invalid_argument("identity_crosstalk: D must be >= 1");
    const std::size_t dim = static_cast<std::size_t>(modes_per_axis) * modes_per_axis;
    CrosstalkMatrix out;
    out.modes_per_axis = modes_per_axis;
    out.matrix = ComplexMatrix::identity(dim);
    out.unitary = true;
    return out;
}

namespace {

bool check_unitary(const ComplexMatrix& m, double tol) {
    const ComplexMatrix prod = m * m.adjoint();
    return prod.max_abs_diff(ComplexMatrix::identity(m.rows())) < tol;
}

}  // namespace

void write_json(std::ostream& os, const CrosstalkMatrix& c) {
    nlohmann::json j;
    j["D"] = c.modes_per_axis;
    j["mu"] = c.mu;
    j["nominal_strength"] = c.nominal_strength;
    j["measured_strength"] = c.measured_strength;
    const std::size_t n = c.matrix.rows();
    auto re = nlohmann::json::array();
    auto im = nlohmann::json::array();
    for (std::size_t r = 0; r < n; ++r) {
        auto re_row = nlohmann::json::array();
        auto im_row = nlohmann::json::array();
        for (std::size_t col = 0; col < n; ++col) {
            re_row.push_back(c.matrix.at(r, col).real());
            im_row.push_back(c.matrix.at(r, col).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    os << j.dump(2) << '\n';
}

CrosstalkMatrix read_crosstalk_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    CrosstalkMatrix c;
    c.modes_per_axis = j.at("D").get<int>();
    c.mu = j.at("mu").get<double>();
    c.nominal_strength = j.at("nominal_strength").get<double>();
    c.measured_strength = j.at("measured_strength").get<double>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    const std::size_t n = re.size();
    if (n != static_cast<std::size_t>(c.modes_per_axis) * c.modes_per_axis)
        throw std::invalid_argument("read_crosstalk_json: matrix side must equal D^2");
    c.matrix = ComplexMatrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col)
            c.matrix.at(r, col) = Complex{re[r][col].get<double>(), im[r][col].get<double>()};
    c.unitary = check_unitary(c.matrix, 1e-10);
    return c;
}

}  // namespace spade
