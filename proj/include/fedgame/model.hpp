#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fedgame/types.hpp"

namespace fedgame {

/// Global-model accuracy as a function of the contribution profile and the
/// per-client noise rates.
///
/// Two variants:
///  - Surrogate: the closed form
///      A(s, eps) = a1*log(a2*T + a3) + a4*T + a5 - gamma * sum(eps_n s_n) / T
///    with T = sum(s_n), clamped to [0, 1]. At T = 0 it returns `baseline`
///    (random-guess accuracy, 1/C for a C-class task).
///  - Stub: an arbitrary callable supplied by tests. Stubs are evaluated raw,
///    with no clamping and no zero-total special case, so test games can use
///    whatever value scale is convenient.
class AccuracyModel {
public:
    using StubFn = std::function<double(const StrategyProfile&, std::span<const double>)>;

    enum class Variant { Surrogate, Stub };

    static AccuracyModel surrogate(const std::array<double, 5>& alpha, double gamma,
                                   double baseline);
    static AccuracyModel stub(StubFn fn, double baseline = 0.0);

    Variant variant() const { return variant_; }
    const std::array<double, 5>& alpha() const { return alpha_; }
    double gamma() const { return gamma_; }
    double baseline() const { return baseline_; }

    /// A(s, eps). Throws DomainError if the log argument is non-positive
    /// while any s_n > 0.
    double evaluate(const StrategyProfile& s, std::span<const double> eps) const;

    /// True if the last clamp would fire for this input, without mutating
    /// anything: surrogate value fell outside [0, 1] before clamping.
    bool would_clamp(const StrategyProfile& s, std::span<const double> eps) const;

    /// The unpenalized clean-label curve A(s, 0) (surrogate only).
    double clean(long long total_contribution) const;

private:
    AccuracyModel() = default;

    Variant variant_ = Variant::Surrogate;
    std::array<double, 5> alpha_{};
    double gamma_ = 0.0;
    double baseline_ = 0.0;
    StubFn stub_;

    double surrogate_raw(const StrategyProfile& s, std::span<const double> eps) const;
};

/// Convex profit from model accuracy: Pi(A) = beta1 * A^2 + beta2.
/// beta1 >= 0 keeps Pi non-decreasing on [0, 1]; beta2 may be negative.
struct ProfitModel {
    double beta1 = 0.0;
    double beta2 = 0.0;

    void validate() const;
    double operator()(double accuracy) const { return beta1 * accuracy * accuracy + beta2; }
};

/// Privacy cost mu_n * f(s_n). The default f is linear; a convex power form
/// f(s) = s^p with p >= 1 is available for exercising convex costs.
struct PrivacyCostModel {
    enum class Form { Linear, Power };

    Form form = Form::Linear;
    double exponent = 1.0;  // p, used by the power form

    void validate() const;
    double cost(const ClientProfile& client, int s_n) const;
};

std::string to_string(PrivacyCostModel::Form f);
PrivacyCostModel::Form privacy_form_from_string(const std::string& name);

/// A full game instance.
struct GameSpec {
    std::vector<ClientProfile> clients;
    Mechanism mechanism = Mechanism::EG;
    AccuracyModel accuracy = AccuracyModel::surrogate({0, 0, 1, 0, 0}, 0.0, 0.0);
    ProfitModel profit;
    PrivacyCostModel privacy;
    SolverSettings solver;
    int sv_enum_cap = 12;  // SV enumerates 2^N coalitions; refuse above this N

    std::size_t num_clients() const { return clients.size(); }
    std::vector<double> noise_rates() const;

    /// Checks all nested invariants. Throws ConfigError naming the violation.
    void validate() const;

    /// Checks that `s` matches the client count and capacity bounds.
    void validate_profile(const StrategyProfile& s) const;
};

// Spec operations over the economic primitives. All are pure.

/// A(s, eps); see AccuracyModel::evaluate.
double eval_accuracy(const AccuracyModel& model, const StrategyProfile& s,
                     std::span<const double> eps);

/// Pi(accuracy) = beta1 * accuracy^2 + beta2. The accuracy range is the
/// caller's obligation; the formula is applied as-is so stub accuracy models
/// may exceed [0, 1].
double eval_profit(const ProfitModel& profit, double accuracy);

/// mu_n * f(s_n). Throws ContractError if s_n is negative or exceeds capacity.
double eval_privacy_cost(const PrivacyCostModel& privacy, const ClientProfile& client, int s_n);

/// Client n's payoff  U_n(s) = g_n(s, eps) * Pi(A(s, eps)) - C_n^pri(s_n).
double eval_payoff(const GameSpec& spec, const StrategyProfile& s, std::size_t n);

}  // namespace fedgame
