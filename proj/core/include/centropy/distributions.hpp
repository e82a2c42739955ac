#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "centropy/random.hpp"

namespace centropy {

enum class dist_family {
    exponential,
    chi_square,
    gamma,
    weibull,
    generalized_exponential,
    uniform,
    beta,
    log_normal,
};

std::string_view to_string(dist_family family);

// One parametric distribution. shape1 is the family's main parameter
// (degrees of freedom, shape, or log-normal sigma); shape2 is used only by
// the beta family. scale multiplies the standard-form variate.
struct distribution_spec {
    dist_family family = dist_family::exponential;
    double shape1 = 1.0;
    double shape2 = 1.0;
    double scale = 1.0;

    // Throws std::invalid_argument for nonpositive shape/scale parameters.
    void validate() const;

    static distribution_spec exponential(double scale = 1.0);
    static distribution_spec chi_square(double df);
    static distribution_spec gamma(double shape, double scale = 1.0);
    static distribution_spec weibull(double shape);
    static distribution_spec generalized_exponential(double shape);
    static distribution_spec uniform();
    static distribution_spec beta(double a, double b);
    static distribution_spec log_normal(double sigma);
};

// Closed-form quantile function for the inversion-sampled families
// (exponential, weibull, generalized_exponential, uniform). Throws
// std::invalid_argument for families drawn by other methods.
double quantile(const distribution_spec& spec, double p);

// One draw. Gamma variates use the Marsaglia-Tsang squeeze with the
// U^(1/shape) boost for shape < 1; chi-square is gamma(df/2, scale 2);
// beta is a ratio of two gamma draws.
double sample_one(const distribution_spec& spec, random_stream& stream);

// n independent draws; deterministic given the stream state.
std::vector<double> sample(const distribution_spec& spec, int n, random_stream& stream);

enum class hazard_class { decreasing, increasing, non_monotone };

std::string_view to_string(hazard_class hazard);

struct alternative_entry {
    std::string code; // "A1".."A4", "B1".."B8", "C1".."C4"
    distribution_spec spec;
    hazard_class hazard;
};

// The 16 alternative distributions used in the power studies, grouped by
// hazard shape: A* decreasing, B* increasing, C* non-monotone. All have
// scale 1.
const std::vector<alternative_entry>& alternative_catalog();

// nullptr when the code is unknown.
const alternative_entry* find_alternative(std::string_view code);

} // namespace centropy
