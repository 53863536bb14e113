#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fedgame/mechanisms.hpp"
#include "fedgame/model.hpp"

namespace fedgame {

/// Result of exhaustive unilateral-deviation checking.
struct NashVerdict {
    bool is_nash = false;
    double tolerance = 0.0;
    // Best deviation found anywhere (may still be losing when is_nash).
    int client = -1;       // 0-based; -1 when no alternative existed
    int deviation = 0;     // the deviating contribution level
    double gain = 0.0;     // payoff improvement of the deviation
};

/// Solver output for one game instance.
struct EquilibriumReport {
    StrategyProfile final;
    std::vector<StrategyProfile> trajectory;  // trajectory[0] is the initial profile
    bool converged = false;
    int iterations = 0;
    NashVerdict nash;
    // Evaluated at the final profile:
    std::vector<double> payoffs;
    std::vector<double> shares;
    std::vector<double> raw_indices;
    bool share_fallback = false;
    double accuracy = 0.0;
    bool accuracy_clamped = false;
    double profit = 0.0;
};

/// Payoff evaluation with memoized accuracy values. The cache is keyed on
/// the full contribution vector, so LOO/SV coalition profiles that do not
/// depend on a scanned s_n are computed once per best-response scan.
/// Deterministic: cached and uncached paths return identical values.
class PayoffEvaluator {
public:
    explicit PayoffEvaluator(const GameSpec& spec);

    double accuracy(const StrategyProfile& s);
    ContributionIndices indices(const StrategyProfile& s);
    ProfitShares shares_at(const StrategyProfile& s);
    double payoff(const StrategyProfile& s, std::size_t n);
    std::vector<double> payoffs(const StrategyProfile& s);

    const GameSpec& spec() const { return *spec_; }
    std::size_t cache_size() const { return cache_.size(); }

private:
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const;
    };

    const GameSpec* spec_;
    std::vector<double> eps_;
    std::unordered_map<std::vector<int>, double, VecHash> cache_;
};

/// The best-response search set for one client: {0 (if include_zero), step,
/// 2*step, ...} always including the capacity. Capacity 0 yields {0}.
std::vector<int> search_grid(int capacity, int step, bool include_zero);

/// Smallest maximizer of U_n(., s_others) over the search set (the
/// min[argmax] tie-break).
int best_response(const GameSpec& spec, const StrategyProfile& s, std::size_t n,
                  PayoffEvaluator& eval);

/// Iterates best responses from spec.solver.initial until
/// max_n |s_n(t) - s_n(t-1)| <= tau or max_iters. Jacobi updates respond to
/// the round-start profile; Gauss-Seidel responds in ascending client order
/// seeing earlier updates. Non-convergence is reported, not thrown.
EquilibriumReport solve(const GameSpec& spec);

/// Checks the Nash condition on the integer grid {0, step, ..., D_n} (zero
/// always included, matching the deviation space of the equilibrium
/// definition). Returns the verdict and the best deviation found.
NashVerdict verify_nash(const GameSpec& spec, const StrategyProfile& s, double tolerance,
                        bool include_zero = true);

enum class SweepParam { Epsilon, Mu, Capacity };

std::string to_string(SweepParam p);
SweepParam sweep_param_from_string(const std::string& name);

struct SweepPoint {
    double value = 0.0;
    std::optional<EquilibriumReport> report;  // empty if this point errored
    std::string error;
};

/// Applies `value` to `param` of every client in `client_ids` (0-based) and
/// returns the modified spec. Capacity values must be integral.
GameSpec apply_sweep_value(const GameSpec& base, SweepParam param,
                           std::span<const int> client_ids, double value);

/// Solves the game once per value, same initial profile and settings
/// throughout. Per-point failures are recorded, not propagated.
std::vector<SweepPoint> sweep(const GameSpec& base, SweepParam param,
                              std::span<const int> client_ids, std::span<const double> values);

}  // namespace fedgame
