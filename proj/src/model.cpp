#include "fedgame/model.hpp"

#include <cmath>
#include <utility>

#include "fedgame/mechanisms.hpp"

namespace fedgame {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw DomainError(std::string(name) + " is not finite");
}

}  // namespace

AccuracyModel AccuracyModel::surrogate(const std::array<double, 5>& alpha, double gamma,
                                       double baseline) {
    static const char* kAlphaNames[5] = {"alpha1", "alpha2", "alpha3", "alpha4", "alpha5"};
    for (int i = 0; i < 5; ++i) require_finite(alpha[i], kAlphaNames[i]);
    require_finite(gamma, "gamma");
    if (gamma < 0.0) throw DomainError("gamma must be >= 0");
    require_finite(baseline, "baseline");
    if (baseline < 0.0 || baseline > 1.0) throw DomainError("baseline must be in [0, 1]");

    AccuracyModel m;
    m.variant_ = Variant::Surrogate;
    m.alpha_ = alpha;
    m.gamma_ = gamma;
    m.baseline_ = baseline;
    return m;
}

AccuracyModel AccuracyModel::stub(StubFn fn, double baseline) {
    AccuracyModel m;
    m.variant_ = Variant::Stub;
    m.stub_ = std::move(fn);
    m.baseline_ = baseline;
    return m;
}

double AccuracyModel::clean(long long total) const {
    if (variant_ != Variant::Surrogate)
        throw DomainError("clean-label curve is only defined for the surrogate variant");
    if (total == 0) return baseline_;
    const double t = static_cast<double>(total);
    const double arg = alpha_[1] * t + alpha_[2];
    if (!(arg > 0.0))
        throw DomainError("log argument alpha2*total+alpha3 = " + std::to_string(arg) +
                          " is not positive");
    return alpha_[0] * std::log(arg) + alpha_[3] * t + alpha_[4];
}

double AccuracyModel::surrogate_raw(const StrategyProfile& s, std::span<const double> eps) const {
    const long long total = s.total();
    if (total == 0) return baseline_;
    double noise = 0.0;
    for (std::size_t n = 0; n < s.size(); ++n) noise += eps[n] * s[n];
    return clean(total) - gamma_ * noise / static_cast<double>(total);
}

double AccuracyModel::evaluate(const StrategyProfile& s, std::span<const double> eps) const {
    if (variant_ == Variant::Stub) return stub_(s, eps);
    const double raw = surrogate_raw(s, eps);
    return raw < 0.0 ? 0.0 : (raw > 1.0 ? 1.0 : raw);
}

bool AccuracyModel::would_clamp(const StrategyProfile& s, std::span<const double> eps) const {
    if (variant_ == Variant::Stub) return false;
    const double raw = surrogate_raw(s, eps);
    return raw < 0.0 || raw > 1.0;
}

void ProfitModel::validate() const {
    require_finite(beta1, "profit.beta1");
    require_finite(beta2, "profit.beta2");
    if (beta1 < 0.0) throw DomainError("profit.beta1 must be >= 0 so profit is non-decreasing");
}

void PrivacyCostModel::validate() const {
    require_finite(exponent, "privacy.exponent");
    if (form == Form::Power && exponent < 1.0)
        throw DomainError("privacy.exponent must be >= 1 so the cost is convex");
}

double PrivacyCostModel::cost(const ClientProfile& client, int s_n) const {
    if (s_n < 0)
        throw ContractError("contribution " + std::to_string(s_n) + " is negative");
    if (s_n > client.capacity)
        throw ContractError("contribution " + std::to_string(s_n) + " exceeds capacity " +
                            std::to_string(client.capacity) + " of client " +
                            std::to_string(client.id));
    if (form == Form::Linear) return client.privacy_sensitivity * s_n;
    return client.privacy_sensitivity * std::pow(static_cast<double>(s_n), exponent);
}

std::string to_string(PrivacyCostModel::Form f) {
    return f == PrivacyCostModel::Form::Linear ? "linear" : "power";
}

PrivacyCostModel::Form privacy_form_from_string(const std::string& name) {
    if (name == "linear") return PrivacyCostModel::Form::Linear;
    if (name == "power") return PrivacyCostModel::Form::Power;
    throw ConfigError("privacy.form", "must be \"linear\" or \"power\" (got \"" + name + "\")");
}

std::vector<double> GameSpec::noise_rates() const {
    std::vector<double> eps;
    eps.reserve(clients.size());
    for (const auto& c : clients) eps.push_back(c.epsilon);
    return eps;
}

void GameSpec::validate() const {
    if (clients.empty()) throw ConfigError("clients", "at least one client is required");
    for (std::size_t n = 0; n < clients.size(); ++n) {
        try {
            clients[n].validate();
        } catch (const ConfigError& e) {
            throw ConfigError("clients[" + std::to_string(n) + "]." + e.path, e.what());
        }
    }
    profit.validate();
    privacy.validate();
    solver.validate();
    if (mechanism == Mechanism::SV && static_cast<int>(clients.size()) > sv_enum_cap)
        throw ConfigError("mechanism",
                          "SV enumerates 2^N coalitions; N = " + std::to_string(clients.size()) +
                              " exceeds the cap " + std::to_string(sv_enum_cap));
    if (!solver.initial.values.empty()) validate_profile(solver.initial);
}

void GameSpec::validate_profile(const StrategyProfile& s) const {
    if (s.size() != clients.size())
        throw ContractError("profile has " + std::to_string(s.size()) + " entries for " +
                            std::to_string(clients.size()) + " clients");
    for (std::size_t n = 0; n < s.size(); ++n) {
        if (s[n] < 0 || s[n] > clients[n].capacity)
            throw ContractError("contribution s[" + std::to_string(n) + "] = " +
                                std::to_string(s[n]) + " is outside [0, " +
                                std::to_string(clients[n].capacity) + "]");
    }
}

double eval_accuracy(const AccuracyModel& model, const StrategyProfile& s,
                     std::span<const double> eps) {
    if (eps.size() != s.size())
        throw ContractError("noise vector has " + std::to_string(eps.size()) +
                            " entries for a profile of size " + std::to_string(s.size()));
    return model.evaluate(s, eps);
}

double eval_profit(const ProfitModel& profit, double accuracy) {
    return profit(accuracy);
}

double eval_privacy_cost(const PrivacyCostModel& privacy, const ClientProfile& client, int s_n) {
    return privacy.cost(client, s_n);
}

double eval_payoff(const GameSpec& spec, const StrategyProfile& s, std::size_t n) {
    spec.validate_profile(s);
    const auto eps = spec.noise_rates();
    const ProfitShares g = shares(compute_indices(spec, s));
    const double a = eval_accuracy(spec.accuracy, s, eps);
    const double pi = eval_profit(spec.profit, a);
    return g.values[n] * pi - eval_privacy_cost(spec.privacy, spec.clients[n], s[n]);
}

}  // namespace fedgame
