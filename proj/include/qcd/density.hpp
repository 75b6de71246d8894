#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcd/rng.hpp"

namespace qcd {

enum class Family { Gaussian, Poisson };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

// A single observation distribution: Gaussian(mean, variance) or
// Poisson(rate). Immutable value type.
class Density {
public:
    static Density gaussian(double mean, double variance);
    static Density poisson(double rate);

    Family family() const { return family_; }
    bool is_continuous() const { return family_ == Family::Gaussian; }

    double mean() const;
    double variance() const;
    // The family parameter used for ordering: Gaussian mean or Poisson rate.
    double location() const;
    double rate() const; // Poisson only

    // Log density (Gaussian) or log mass (Poisson). Poisson support is the
    // nonnegative integers; anything else throws.
    double log_pdf(double x) const;

    // Survival function P(X >= t).
    double survival(double t) const;

    double sample(Rng& rng) const;

    friend bool operator==(const Density&, const Density&) = default;

private:
    Density(Family f, double a, double b) : family_(f), a_(a), b_(b) {}
    Family family_;
    double a_; // Gaussian mean / Poisson rate
    double b_; // Gaussian variance / unused
};

// log g(x) - log f(x). Both densities must share the same support family.
double log_likelihood_ratio(const Density& g, const Density& f, double x);

// Kullback-Leibler divergence D(g || f) in nats, closed form per family.
double kl_divergence(const Density& g, const Density& f);

// True iff g(x)/f(x) is non-decreasing across the grid, within 1e-12 on
// log-ratios. Grid must be sorted ascending, have >= 3 points, and lie in
// the common support.
bool check_mlr_order(const Density& g, const Density& f, std::span<const double> grid);

// True iff P(A >= t) >= P(B >= t) - 1e-12 for every grid point t (a >> b).
bool check_stochastic_dominance(const Density& a, const Density& b, std::span<const double> grid);

// Deterministic validation grid for a same-family pair: Gaussian
// [mu_min - 8*sd_max, mu_max + 8*sd_max] with 1000 points; Poisson integers
// 0 .. ceil(20 * rate_max).
std::vector<double> standard_grid(const Density& a, const Density& b);

} // namespace qcd
