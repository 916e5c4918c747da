#include "mdms/processes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdms {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kMaxRedraws = 100;
}  // namespace

StochasticProcess StochasticProcess::levy(double lambda, double alpha) {
    StochasticProcess p;
    p.kind = ProcessKind::Levy;
    p.levy_lambda = lambda;
    p.levy_alpha = alpha;
    p.validate();
    return p;
}

StochasticProcess StochasticProcess::brownian(double sigma) {
    StochasticProcess p;
    p.kind = ProcessKind::Brownian;
    p.brownian_sigma = sigma;
    p.validate();
    return p;
}

StochasticProcess StochasticProcess::uniform(double lower, double upper,
                                             UniformDirectionMode mode) {
    StochasticProcess p;
    p.kind = ProcessKind::Uniform;
    p.uniform_lower = lower;
    p.uniform_upper = upper;
    p.uniform_mode = mode;
    p.validate();
    return p;
}

void StochasticProcess::validate() const {
    switch (kind) {
        case ProcessKind::Levy:
            if (!(levy_lambda > 0.0 && levy_lambda <= 2.0))
                throw std::domain_error("levy lambda must be in (0, 2]");
            if (!(levy_alpha > 0.0))
                throw std::domain_error("levy alpha must be > 0");
            break;
        case ProcessKind::Brownian:
            if (!(brownian_sigma > 0.0))
                throw std::domain_error("brownian sigma must be > 0");
            break;
        case ProcessKind::Uniform:
            if (!(uniform_lower < uniform_upper))
                throw std::domain_error("uniform bounds must satisfy lower < upper");
            break;
    }
}

std::string StochasticProcess::name() const {
    switch (kind) {
        case ProcessKind::Levy: return "levy";
        case ProcessKind::Brownian: return "brownian";
        case ProcessKind::Uniform: return "uniform";
    }
    return "?";
}

StochasticProcess parse_process(const std::string& name) {
    if (name == "levy" || name == "ls") return StochasticProcess::levy();
    if (name == "brownian" || name == "bs") return StochasticProcess::brownian();
    if (name == "uniform" || name == "us") return StochasticProcess::uniform();
    throw std::domain_error("unknown process name: " + name);
}

double sample_levy(RngStream& rng, double lambda, double alpha) {
    if (!(lambda > 0.0 && lambda <= 2.0))
        throw std::domain_error("sample_levy: lambda must be in (0, 2]");
    if (!(alpha > 0.0))
        throw std::domain_error("sample_levy: alpha must be > 0");

    // Chambers-Mallows-Stuck, symmetric case (skew 0). The draw is standard
    // (unit scale); the characteristic function exp(-alpha*|m|^lambda)
    // corresponds to scale alpha^(1/lambda).
    const double scale = (alpha == 1.0) ? 1.0 : std::pow(alpha, 1.0 / lambda);
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const double u = kPi * (rng.next_double_open() - 0.5);  // (-pi/2, pi/2)
        const double w = -std::log(rng.next_double_open());     // Exp(1)
        double x;
        if (lambda == 1.0) {
            x = std::tan(u);
        } else {
            x = std::sin(lambda * u) / std::pow(std::cos(u), 1.0 / lambda) *
                std::pow(std::cos((1.0 - lambda) * u) / w, (1.0 - lambda) / lambda);
        }
        if (std::isfinite(x)) return scale * x;
        // Overflow is possible for very small lambda; redraw.
    }
    throw std::runtime_error("sample_levy: no finite draw after redraw limit");
}

double sample_gaussian(RngStream& rng, double sigma) {
    if (!(sigma > 0.0))
        throw std::domain_error("sample_gaussian: sigma must be > 0");
    // Box-Muller, one value per call. No spare cache: keeps the stream
    // position a pure function of the call count.
    const double u1 = rng.next_double_open();
    const double u2 = rng.next_double();
    return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

double sample_uniform(RngStream& rng, double lower, double upper) {
    if (!(lower < upper))
        throw std::domain_error("sample_uniform: bounds must satisfy lower < upper");
    return lower + rng.next_double() * (upper - lower);
}

double sample_scalar(RngStream& rng, const StochasticProcess& process) {
    switch (process.kind) {
        case ProcessKind::Levy:
            return sample_levy(rng, process.levy_lambda, process.levy_alpha);
        case ProcessKind::Brownian:
            return sample_gaussian(rng, process.brownian_sigma);
        case ProcessKind::Uniform:
            return sample_uniform(rng, process.uniform_lower, process.uniform_upper);
    }
    throw std::logic_error("sample_scalar: bad process kind");
}

Vec2 sample_direction(RngStream& rng, const StochasticProcess& process) {
    if (process.kind == ProcessKind::Uniform &&
        process.uniform_mode == UniformDirectionMode::Angle) {
        const double theta = 2.0 * kPi * rng.next_double();
        return {std::cos(theta), std::sin(theta)};
    }
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const double sx = sample_scalar(rng, process);
        const double sy = sample_scalar(rng, process);
        const double n = std::hypot(sx, sy);
        if (n > 0.0 && std::isfinite(n)) return {sx / n, sy / n};
    }
    throw std::runtime_error("sample_direction: zero-norm draws exceeded redraw limit");
}

}  // namespace mdms
