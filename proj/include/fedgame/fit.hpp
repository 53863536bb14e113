#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fedgame/types.hpp"

namespace fedgame {

/// One (contribution profile, noise profile, observed accuracy) observation.
struct AccuracySample {
    StrategyProfile s;
    std::vector<double> eps;
    double observed = 0.0;  // in [0, 1]
    double weight = 1.0;    // > 0

    void validate() const;
};

struct FitOptions {
    // Bounds of the outer (alpha2, alpha3) search. Chosen to keep the log
    // argument positive over any sane sample range.
    double a2_min = 1e-8, a2_max = 10.0;
    double a3_min = 1e-6, a3_max = 1e3;
    int grid_points = 17;    // per axis, per refinement level
    int max_levels = 64;     // refinement cap
    double rel_tol = 1e-10;  // stop when the objective decrease is this small
};

struct FitResult {
    std::array<double, 5> alpha{};
    double gamma = 0.0;
    double rmse = 0.0;
    int iterations = 0;  // outer grid cells evaluated
    bool converged = false;
};

/// Fits alpha1..alpha5 of the clean-label curve
///   A(s, 0) = a1*log(a2*T + a3) + a4*T + a5,  T = total contribution,
/// by weighted least squares: a multi-resolution logarithmic grid search
/// over (a2, a3) with an exact linear solve for (a1, a4, a5) in each cell.
/// Requires >= 5 samples with distinct totals and all eps = 0.
/// Throws FitError when underdetermined or the inner system is singular.
FitResult fit_clean(std::span<const AccuracySample> samples, const FitOptions& options = {});

/// Closed-form weighted least squares for the noise-penalty coefficient:
/// regresses A(s,0) - observed on z = sum(eps_n s_n)/T, clamped at 0.
/// Requires at least one sample with a nonzero regressor; all-clean sample
/// sets throw FitError.
double fit_gamma(std::span<const AccuracySample> samples, const std::array<double, 5>& alpha);

/// Two-stage fit: fit_clean on the eps = 0 samples, then fit_gamma on the
/// rest with alpha held fixed. The reported rmse covers all samples.
FitResult fit_surrogate(std::span<const AccuracySample> samples, const FitOptions& options = {});

/// Model prediction for one sample under (alpha, gamma).
double predict(const std::array<double, 5>& alpha, double gamma, const AccuracySample& sample);

/// Weighted RMS residual of the model over `samples`.
double fit_rmse(const std::array<double, 5>& alpha, double gamma,
                std::span<const AccuracySample> samples);

/// Sample file I/O. Format: CSV with header s_1..s_N, eps_1..eps_N,
/// accuracy, weight.
std::vector<AccuracySample> read_samples(std::istream& in);
std::vector<AccuracySample> read_samples_file(const std::string& path);
void write_samples(std::ostream& out, std::span<const AccuracySample> samples);

}  // namespace fedgame
