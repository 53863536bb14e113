#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fedgame/errors.hpp"

namespace fedgame {

/// Profit allocation mechanisms.
enum class Mechanism { EG, LP, LOO, SV };

std::string to_string(Mechanism m);
Mechanism mechanism_from_string(const std::string& name);

/// One client's exogenous parameters.
struct ClientProfile {
    int id = 0;                       // 1-based client index
    double epsilon = 0.0;             // label noise rate, in [0, 1]
    int capacity = 0;                 // maximum data points, >= 0
    double privacy_sensitivity = 0.0; // cost per unit of privacy exposure, >= 0

    void validate() const;
};

/// The vector of per-client data-contribution levels. Contributions are
/// integers (data points), which keeps argmax searches and brute-force
/// oracles exact.
struct StrategyProfile {
    std::vector<int> values;

    StrategyProfile() = default;
    explicit StrategyProfile(std::vector<int> v) : values(std::move(v)) {}
    StrategyProfile(std::initializer_list<int> v) : values(v) {}

    std::size_t size() const { return values.size(); }
    int operator[](std::size_t n) const { return values[n]; }
    int& operator[](std::size_t n) { return values[n]; }
    auto begin() const { return values.begin(); }
    auto end() const { return values.end(); }

    long long total() const {
        long long t = 0;
        for (int v : values) t += v;
        return t;
    }

    /// Copy with entry n replaced.
    StrategyProfile with(std::size_t n, int v) const {
        StrategyProfile s(*this);
        s.values[n] = v;
        return s;
    }

    friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

enum class UpdateScheme { Jacobi, GaussSeidel };

std::string to_string(UpdateScheme s);
UpdateScheme scheme_from_string(const std::string& name);

/// Best-response iteration settings.
struct SolverSettings {
    StrategyProfile initial;            // s^ini
    double tau = 0.0;                   // convergence threshold on max |delta s_n|
    int max_iters = 100;
    std::optional<int> grid_step;       // argmax stride; nullopt = per-client max(1, D_n/200)
    UpdateScheme scheme = UpdateScheme::Jacobi;
    bool include_zero = true;           // add s_n = 0 to the best-response search set

    void validate() const;

    /// Effective stride for a client with the given capacity.
    int step_for_capacity(int capacity) const {
        if (grid_step) return *grid_step;
        return capacity / 200 > 1 ? capacity / 200 : 1;
    }
};

}  // namespace fedgame
