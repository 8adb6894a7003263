#include "spade/detection.hpp"

#include <cmath>
#include <stdexcept>

namespace spade {

SourceGeometry SourceGeometry::make(double x, double theta, double nu) {
    if (!(x >= 0.0)) throw std::invalid_argument("SourceGeometry: x must be >= 0");
    if (!(nu >= 0.0 && nu <= 1.0))
        throw std::invalid_argument("SourceGeometry: nu must be in [0, 1]");
    if (!std::isfinite(theta)) throw std::invalid_argument("SourceGeometry: theta not finite");
    if (nu < 0.5) {
        nu = 1.0 - nu;
        theta += M_PI;
    }
    const double two_pi = 2.0 * M_PI;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    return SourceGeometry{x, theta, nu};
}

namespace {

double inv_sqrt_factorials(int k, int l) {
    return std::exp(-0.5 * (std::lgamma(k + 1.0) + std::lgamma(l + 1.0)));
}

double sign_power(int sign, int t) {
    if (sign >= 0) return 1.0;
    return (t % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

double overlap_coeff(int sign, int k, int l, const SourceGeometry& g) {
    if (k < 0 || l < 0) throw std::invalid_argument("overlap_coeff: negative mode index");
    const int t = k + l;
    const double angular = std::pow(std::cos(g.theta), k) * std::pow(std::sin(g.theta), l);
    return inv_sqrt_factorials(k, l) * sign_power(sign, t) * std::pow(g.x, t) * angular *
           std::exp(-0.5 * g.x * g.x);
}

double overlap_coeff_dx(int sign, int k, int l, const SourceGeometry& g) {
    if (k < 0 || l < 0) throw std::invalid_argument("overlap_coeff_dx: negative mode index");
    const int t = k + l;
    const double angular = std::pow(std::cos(g.theta), k) * std::pow(std::sin(g.theta), l);
    // d/dx [x^t e^{-x^2/2}] = (t x^{t-1} - x^{t+1}) e^{-x^2/2};
    // the first term is 0 for t = 0 and finite at x = 0 otherwise.
    const double leading = (t == 0) ? 0.0 : t * std::pow(g.x, t - 1);
    return inv_sqrt_factorials(k, l) * sign_power(sign, t) * angular *
           (leading - std::pow(g.x, t + 1)) * std::exp(-0.5 * g.x * g.x);
}

DetectionModel::DetectionModel(SourceGeometry geometry, CrosstalkMatrix crosstalk)
    : geometry_(geometry), crosstalk_(std::move(crosstalk)) {
    const std::size_t side =
        static_cast<std::size_t>(crosstalk_.modes_per_axis) * crosstalk_.modes_per_axis;
    if (crosstalk_.matrix.rows() != side || crosstalk_.matrix.cols() != side)
        throw std::invalid_argument("DetectionModel: crosstalk side must equal D^2");
}

void DetectionModel::check_mode(int n, int m) const {
    const int d = modes_per_axis();
    if (n < 0 || m < 0 || n >= d || m >= d)
        throw std::out_of_range("DetectionModel: mode index out of range");
}

std::vector<double> DetectionModel::overlap_vector(int sign) const {
    const int d = modes_per_axis();
    std::vector<double> v(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) v[k * d + l] = overlap_coeff(sign, k, l, geometry_);
    return v;
}

std::vector<double> DetectionModel::overlap_vector_dx(int sign) const {
    const int d = modes_per_axis();
    std::vector<double> v(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) v[k * d + l] = overlap_coeff_dx(sign, k, l, geometry_);
    return v;
}

std::complex<double> DetectionModel::detector_coeff(int sign, int n, int m) const {
    check_mode(n, m);
    const int d = modes_per_axis();
    const std::vector<double> beta = overlap_vector(sign);
    std::complex<double> acc{0.0, 0.0};
    const std::size_t row = static_cast<std::size_t>(n) * d + m;
    for (std::size_t col = 0; col < beta.size(); ++col)
        acc += crosstalk_.matrix.at(row, col) * beta[col];
    return acc;
}

double DetectionModel::probability(int n, int m) const {
    check_mode(n, m);
    const auto fp = detector_coeff(+1, n, m);
    const auto fm = detector_coeff(-1, n, m);
    return geometry_.nu * std::norm(fp) + (1.0 - geometry_.nu) * std::norm(fm);
}

double DetectionModel::probability_dx(int n, int m) const {
    check_mode(n, m);
    const Table t = probability_table();
    return t.dp[static_cast<std::size_t>(n) * modes_per_axis() + m];
}

DetectionModel::Table DetectionModel::probability_table() const {
    const auto fp = crosstalk_.matrix.apply(overlap_vector(+1));
    const auto fm = crosstalk_.matrix.apply(overlap_vector(-1));
    const auto dfp = crosstalk_.matrix.apply(overlap_vector_dx(+1));
    const auto dfm = crosstalk_.matrix.apply(overlap_vector_dx(-1));
    const double nu = geometry_.nu;

    Table t;
    t.p.resize(fp.size());
    t.dp.resize(fp.size());
    for (std::size_t i = 0; i < fp.size(); ++i) {
        t.p[i] = nu * std::norm(fp[i]) + (1.0 - nu) * std::norm(fm[i]);
        t.dp[i] = 2.0 * (nu * (std::conj(fp[i]) * dfp[i]).real() +
                         (1.0 - nu) * (std::conj(fm[i]) * dfm[i]).real());
    }
    return t;
}

}  // namespace spade
