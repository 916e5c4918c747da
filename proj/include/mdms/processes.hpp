#pragma once

#include "mdms/rng.hpp"
#include "mdms/vec2.hpp"

#include <string>

namespace mdms {

enum class ProcessKind { Levy, Brownian, Uniform };

/// How the Uniform process turns scalar draws into a heading. Raw follows
/// the two-sample construction literally, which for a one-sided support
/// like (0, 1) confines headings to the first quadrant. Angle draws the
/// heading uniformly on [0, 2pi) instead and is the default everywhere.
enum class UniformDirectionMode { Raw, Angle };

/// One of the three stochastic processes used to generate search
/// directions: Levy (symmetric alpha-stable), Brownian (zero-mean
/// Gaussian) or Uniform on [lower, upper].
struct StochasticProcess {
    ProcessKind kind = ProcessKind::Uniform;
    double levy_lambda = 1.0;      // stability index, in (0, 2]
    double levy_alpha = 1.0;       // scale parameter, > 0
    double brownian_sigma = 1.0;   // standard deviation, > 0
    double uniform_lower = 0.0;
    double uniform_upper = 1.0;
    UniformDirectionMode uniform_mode = UniformDirectionMode::Angle;

    static StochasticProcess levy(double lambda = 1.0, double alpha = 1.0);
    static StochasticProcess brownian(double sigma = 1.0);
    static StochasticProcess uniform(double lower = 0.0, double upper = 1.0,
                                     UniformDirectionMode mode = UniformDirectionMode::Angle);

    /// Throws std::domain_error if any parameter is out of range.
    void validate() const;

    std::string name() const;
};

StochasticProcess parse_process(const std::string& name);

/// One draw from the symmetric alpha-stable distribution with stability
/// index lambda in (0, 2] and scale alpha > 0, via the
/// Chambers-Mallows-Stuck construction. lambda = 2 is Gaussian with
/// variance 2*alpha, lambda = 1 is Cauchy with scale alpha.
double sample_levy(RngStream& rng, double lambda, double alpha);

/// One draw from N(0, sigma^2).
double sample_gaussian(RngStream& rng, double sigma);

/// One draw uniform on [lower, upper).
double sample_uniform(RngStream& rng, double lower, double upper);

/// One scalar draw from the given process.
double sample_scalar(RngStream& rng, const StochasticProcess& process);

/// Unit direction vector from the process: two independent scalar draws
/// (s_x, s_y), normalized. Zero-norm draws (possible only for Uniform
/// spanning zero) are rejected and redrawn. Uniform in Angle mode draws
/// the heading directly.
Vec2 sample_direction(RngStream& rng, const StochasticProcess& process);

}  // namespace mdms
