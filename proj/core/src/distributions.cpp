#include "centropy/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace centropy {

std::string_view to_string(dist_family family) {
    switch (family) {
    case dist_family::exponential: return "exponential";
    case dist_family::chi_square: return "chi_square";
    case dist_family::gamma: return "gamma";
    case dist_family::weibull: return "weibull";
    case dist_family::generalized_exponential: return "generalized_exponential";
    case dist_family::uniform: return "uniform";
    case dist_family::beta: return "beta";
    case dist_family::log_normal: return "log_normal";
    }
    return "unknown";
}

std::string_view to_string(hazard_class hazard) {
    switch (hazard) {
    case hazard_class::decreasing: return "decreasing";
    case hazard_class::increasing: return "increasing";
    case hazard_class::non_monotone: return "non_monotone";
    }
    return "unknown";
}

void distribution_spec::validate() const {
    if (!(scale > 0.0)) {
        throw std::invalid_argument("distribution scale must be positive");
    }
    switch (family) {
    case dist_family::uniform:
        return; // no shape parameters
    case dist_family::beta:
        if (!(shape1 > 0.0) || !(shape2 > 0.0)) {
            throw std::invalid_argument("beta shapes must be positive");
        }
        return;
    case dist_family::exponential:
        return; // scale-only family
    default:
        if (!(shape1 > 0.0)) {
            throw std::invalid_argument("shape parameter must be positive");
        }
        return;
    }
}

distribution_spec distribution_spec::exponential(double scale) {
    return {dist_family::exponential, 1.0, 1.0, scale};
}
distribution_spec distribution_spec::chi_square(double df) {
    return {dist_family::chi_square, df, 1.0, 1.0};
}
distribution_spec distribution_spec::gamma(double shape, double scale) {
    return {dist_family::gamma, shape, 1.0, scale};
}
distribution_spec distribution_spec::weibull(double shape) {
    return {dist_family::weibull, shape, 1.0, 1.0};
}
distribution_spec distribution_spec::generalized_exponential(double shape) {
    return {dist_family::generalized_exponential, shape, 1.0, 1.0};
}
distribution_spec distribution_spec::uniform() {
    return {dist_family::uniform, 1.0, 1.0, 1.0};
}
distribution_spec distribution_spec::beta(double a, double b) {
    return {dist_family::beta, a, b, 1.0};
}
distribution_spec distribution_spec::log_normal(double sigma) {
    return {dist_family::log_normal, sigma, 1.0, 1.0};
}

double quantile(const distribution_spec& spec, double p) {
    spec.validate();
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("quantile level must be in (0, 1)");
    }
    switch (spec.family) {
    case dist_family::exponential:
        return -spec.scale * std::log1p(-p);
    case dist_family::weibull:
        return spec.scale * std::pow(-std::log1p(-p), 1.0 / spec.shape1);
    case dist_family::generalized_exponential:
        // F(x) = (1 - e^-x)^shape, so x = -ln(1 - p^(1/shape)).
        return -spec.scale * std::log1p(-std::pow(p, 1.0 / spec.shape1));
    case dist_family::uniform:
        return spec.scale * p;
    default:
        throw std::invalid_argument("no closed-form quantile for this family");
    }
}

namespace {

// Marsaglia-Tsang squeeze for gamma(shape, 1) with shape >= 1; the
// shape < 1 case is boosted from shape + 1 by a uniform power.
double gamma_standard(double shape, random_stream& stream) {
    if (shape < 1.0) {
        const double g = gamma_standard(shape + 1.0, stream);
        return g * std::pow(stream.uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = stream.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

} // namespace

double sample_one(const distribution_spec& spec, random_stream& stream) {
    switch (spec.family) {
    case dist_family::exponential:
    case dist_family::weibull:
    case dist_family::generalized_exponential:
    case dist_family::uniform:
        return quantile(spec, stream.uniform());
    case dist_family::chi_square:
        return spec.scale * 2.0 * gamma_standard(spec.shape1 / 2.0, stream);
    case dist_family::gamma:
        return spec.scale * gamma_standard(spec.shape1, stream);
    case dist_family::beta: {
        const double a = gamma_standard(spec.shape1, stream);
        const double b = gamma_standard(spec.shape2, stream);
        return spec.scale * a / (a + b);
    }
    case dist_family::log_normal:
        return spec.scale * std::exp(spec.shape1 * stream.normal());
    }
    throw std::invalid_argument("unknown distribution family");
}

std::vector<double> sample(const distribution_spec& spec, int n, random_stream& stream) {
    if (n < 1) {
        throw std::invalid_argument("sample size must be at least 1");
    }
    spec.validate();
    std::vector<double> draws(static_cast<std::size_t>(n));
    for (double& d : draws) {
        d = sample_one(spec, stream);
    }
    return draws;
}

const std::vector<alternative_entry>& alternative_catalog() {
    static const std::vector<alternative_entry> catalog = {
        {"A1", distribution_spec::chi_square(1.0), hazard_class::decreasing},
        {"A2", distribution_spec::gamma(0.5), hazard_class::decreasing},
        {"A3", distribution_spec::weibull(0.5), hazard_class::decreasing},
        {"A4", distribution_spec::generalized_exponential(0.5), hazard_class::decreasing},
        {"B1", distribution_spec::uniform(), hazard_class::increasing},
        {"B2", distribution_spec::weibull(2.0), hazard_class::increasing},
        {"B3", distribution_spec::gamma(1.5), hazard_class::increasing},
        {"B4", distribution_spec::gamma(2.0), hazard_class::increasing},
        {"B5", distribution_spec::chi_square(3.0), hazard_class::increasing},
        {"B6", distribution_spec::chi_square(4.0), hazard_class::increasing},
        {"B7", distribution_spec::beta(1.0, 2.0), hazard_class::increasing},
        {"B8", distribution_spec::beta(2.0, 1.0), hazard_class::increasing},
        {"C1", distribution_spec::log_normal(0.6), hazard_class::non_monotone},
        {"C2", distribution_spec::log_normal(1.0), hazard_class::non_monotone},
        {"C3", distribution_spec::log_normal(1.2), hazard_class::non_monotone},
        {"C4", distribution_spec::beta(0.5, 1.0), hazard_class::non_monotone},
    };
    return catalog;
}

const alternative_entry* find_alternative(std::string_view code) {
    for (const auto& entry : alternative_catalog()) {
        if (entry.code == code) {
            return &entry;
        }
    }
    return nullptr;
}

} // namespace centropy
