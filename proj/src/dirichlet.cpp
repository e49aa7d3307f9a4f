#include "zetacomb/dirichlet.hpp"
#include "zetacomb/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace zetacomb {

namespace {
const double kPi = 3.14159265358979323846;

double pow_int(double base, int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= base;
    return p;
}
} // namespace

GeneralizedDirichletSeries make_series(std::vector<DirichletTerm> terms) {
    for (const auto& t : terms) {
        if (!(t.frequency > 0.0) || !std::isfinite(t.frequency))
            throw DomainError("series frequencies must be positive and finite");
    }
    std::sort(terms.begin(), terms.end(),
              [](const DirichletTerm& a, const DirichletTerm& b) {
                  return a.frequency < b.frequency;
              });
    GeneralizedDirichletSeries out;
    for (const auto& t : terms) {
        if (!out.terms.empty() && out.terms.back().frequency == t.frequency)
            out.terms.back().coefficient += t.coefficient;
        else
            out.terms.push_back(t);
    }
    std::erase_if(out.terms, [](const DirichletTerm& t) {
        return t.coefficient == Complex{0.0, 0.0};
    });
    return out;
}

Complex eval_truncated(const GeneralizedDirichletSeries& series, Complex s) {
    Complex sum{0.0, 0.0};
    for (const auto& t : series.terms)
        sum += t.coefficient * std::exp(-s * std::log(t.frequency));
    return sum;
}

Complex mellin_step_integral(const GeneralizedDirichletSeries& series,
                             Complex s) {
    if (series.terms.empty()) return {0.0, 0.0};
    double mass = 0.0;
    Complex total{0.0, 0.0};
    for (const auto& t : series.terms) {
        mass += std::abs(t.coefficient);
        total += t.coefficient;
    }
    const bool tail_vanishes = std::abs(total) <= 1e-12 * std::max(1.0, mass);
    if (s.real() <= 0.0 && !tail_vanishes)
        throw DomainError(
            "step-function integral diverges for Re s <= 0 unless the "
            "coefficients cancel");

    auto power = [&](double x) { return std::exp(-s * std::log(x)); };
    Complex sum{0.0, 0.0};
    Complex cumulative{0.0, 0.0};
    const std::size_t n = series.terms.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        cumulative += series.terms[i].coefficient;
        sum += cumulative *
               (power(series.terms[i].frequency) -
                power(series.terms[i + 1].frequency));
    }
    cumulative += series.terms[n - 1].coefficient;
    if (!tail_vanishes)
        sum += cumulative * power(series.terms[n - 1].frequency);
    return sum;
}

Complex zeta_shift_g(int k, Complex s) {
    const double base = -4.0 * kPi * kPi;
    if (k >= 0) {
        Complex numerator{1.0, 0.0};
        for (int j = 0; j < 2 * k; ++j) numerator *= s + double(j);
        return numerator / pow_int(base, k) * riemann_zeta(s + 2.0 * k);
    }
    Complex denominator{1.0, 0.0};
    for (int j = 0; j < -2 * k; ++j) {
        Complex factor = s + 2.0 * k + double(j);
        if (std::abs(factor) < 1e-8)
            throw PoleProximity("zeta_shift_g: denominator factor near zero");
        denominator *= factor;
    }
    return pow_int(base, -k) / denominator * riemann_zeta(s + 2.0 * k);
}

Complex combo_f(const ZetaShiftCombination& combo, Complex s) {
    Complex sum{0.0, 0.0};
    for (const auto& [k, c] : combo.coefficients)
        sum += c * riemann_zeta(s - 2.0 * k);
    return sum;
}

Complex combo_g(const ZetaShiftCombination& combo, Complex s) {
    Complex sum{0.0, 0.0};
    for (const auto& [k, c] : combo.coefficients)
        sum += c * zeta_shift_g(k, s);
    return sum;
}

RecoveryResult recover_shift_coefficients(
    const std::vector<std::pair<double, Complex>>& samples, int k_min,
    int k_max) {
    if (k_min > k_max) throw DomainError("empty shift range");
    const int width = k_max - k_min + 1;
    const int m = static_cast<int>(samples.size());
    if (m < width)
        throw DomainError("need at least as many samples as basis elements");
    for (int i = 0; i < m; ++i) {
        if (samples[i].first < 5.0)
            throw DomainError("sample abscissas must satisfy sigma >= 5");
        for (int j = i + 1; j < m; ++j)
            if (samples[i].first == samples[j].first)
                throw DomainError("sample abscissas must be distinct");
    }

    Eigen::MatrixXcd design(m, width);
    Eigen::VectorXcd rhs(m);
    for (int i = 0; i < m; ++i) {
        rhs(i) = samples[i].second;
        for (int j = 0; j < width; ++j)
            design(i, j) =
                zeta_shift_g(k_min + j, Complex{samples[i].first, 0.0});
    }

    // The basis is steeply graded in k; scale each column to geometric
    // mean 1 so the condition number reflects genuine collinearity.
    Eigen::VectorXd scale(width);
    for (int j = 0; j < width; ++j) {
        double log_sum = 0.0;
        for (int i = 0; i < m; ++i)
            log_sum += std::log(std::max(DBL_MIN, std::abs(design(i, j))));
        scale(j) = std::exp(log_sum / m);
    }
    Eigen::MatrixXcd scaled = design;
    for (int j = 0; j < width; ++j) scaled.col(j) /= scale(j);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        scaled, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(width - 1);
    const double condition = (smin > 0.0) ? smax / smin : HUGE_VAL;
    if (condition > 1e12)
        throw IllConditioned("scaled design matrix condition exceeds 1e12");

    Eigen::VectorXcd solution = svd.solve(rhs);
    const double residual = (scaled * solution - rhs).norm();
    if (residual > 1e-6 * rhs.norm())
        throw ResidualTooLarge("fit residual exceeds 1e-6 of the sample norm");

    double largest = 0.0;
    for (int j = 0; j < width; ++j)
        largest = std::max(largest, std::abs(solution(j) / scale(j)));
    RecoveryResult out;
    out.residual = residual;
    out.condition_number = condition;
    for (int j = 0; j < width; ++j) {
        Complex c = solution(j) / scale(j);
        if (std::abs(c) >= 1e-11 * std::max(1.0, largest))
            out.combination.coefficients[k_min + j] = c;
    }
    return out;
}

double estimate_support_gap(const std::function<Complex(double)>& g,
                            const std::vector<double>& sigma) {
    if (sigma.size() < 4)
        throw DomainError("support-gap estimate needs at least 4 abscissas");
    for (std::size_t i = 1; i < sigma.size(); ++i)
        if (!(sigma[i] > sigma[i - 1]))
            throw DomainError("abscissas must be strictly increasing");
    if (sigma.back() < 60.0)
        throw DomainError("largest abscissa must be at least 60");

    std::vector<double> log_abs(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const double a = std::abs(g(sigma[i]));
        if (a < DBL_MIN)
            throw SignalTooSmall("|g(sigma)| underflowed");
        log_abs[i] = std::log(a);
    }
    const std::size_t n = sigma.size();
    double slopes[3];
    for (int j = 0; j < 3; ++j) {
        const std::size_t i = n - 3 + j;
        slopes[j] = (log_abs[i] - log_abs[i - 1]) / (sigma[i] - sigma[i - 1]);
    }
    std::sort(slopes, slopes + 3);
    return std::exp(-slopes[1]);
}

} // namespace zetacomb
