#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fedgame/model.hpp"

namespace fedgame {

/// Per-client contribution indices I_n(s, eps) under one mechanism.
struct ContributionIndices {
    std::vector<double> values;
    Mechanism mechanism = Mechanism::EG;
};

/// Normalized profit shares g_n = I_n / sum(I). Always a valid distribution:
/// entries in [0, 1] summing to 1.
struct ProfitShares {
    std::vector<double> values;
    bool fallback_used = false;  // all-zero index vector fell back to equal split
};

/// Accuracy of a contribution profile with the noise vector already bound.
using AccuracyFn = std::function<double(const StrategyProfile&)>;

/// Egalitarian: every index is 1/N.
ContributionIndices index_eg(std::size_t num_clients);

/// Linearly proportional: index[n] = (1 - eps_n) * s_n.
ContributionIndices index_lp(const StrategyProfile& s, std::span<const double> eps);

/// Leave-one-out: index[n] = A(s) - A(s with s_n := 0).
ContributionIndices index_loo(const StrategyProfile& s, const AccuracyFn& accuracy);
ContributionIndices index_loo(const GameSpec& spec, const StrategyProfile& s);

/// Exact Shapley value: index[n] averages the marginal contribution
/// A(S u {n}) - A(S) over all 2^(N-1) coalitions S of the other clients,
/// weighted by 1 / (N * C(N-1, |S|)). Coalition profiles zero the
/// non-members' contributions; the model arity never changes.
/// Throws ContractError when N exceeds `enum_cap`.
ContributionIndices index_sv(const StrategyProfile& s, const AccuracyFn& accuracy, int enum_cap);
ContributionIndices index_sv(const GameSpec& spec, const StrategyProfile& s);

/// Indices under the spec's configured mechanism.
ContributionIndices compute_indices(const GameSpec& spec, const StrategyProfile& s);
ContributionIndices compute_indices(const GameSpec& spec, const StrategyProfile& s,
                                    const AccuracyFn& accuracy);

/// Normalizes indices into shares. Negative indices (possible under LOO/SV)
/// are clipped to zero first; an all-zero vector falls back to the equal
/// split with `fallback_used` set.
ProfitShares shares(const ContributionIndices& indices);

}  // namespace fedgame
