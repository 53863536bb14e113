#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fedgame/flsim.hpp"
#include "fedgame/model.hpp"

namespace fedgame {

/// The flsim section of a config file: task geometry, training
/// hyper-parameters, and the (s, eps) grid to simulate.
struct FlsimConfig {
    int num_classes = 4;
    int input_dim = 8;
    double center_scale = 2.0;
    double spread = 1.0;
    int test_size = 2000;
    int client_data = 1000;  // points drawn per client
    SimConfig train;
    int repeats = 3;
    std::vector<StrategyProfile> s_profiles;
    std::vector<std::vector<double>> eps_profiles;

    std::vector<SimGridPoint> grid() const;  // cross product s_profiles x eps_profiles
    void validate() const;
};

/// A parsed config file: the game spec, the mandatory root seed, and the
/// optional flsim section.
struct Config {
    GameSpec game;
    std::uint64_t seed = 0;
    std::optional<FlsimConfig> flsim;
    bool has_game = false;  // solve/sweep/verify need it; flsim-only configs don't
};

/// Parses and schema-validates a config document. Unknown keys and value
/// violations raise ConfigError with the offending key path.
Config parse_config(const nlohmann::json& doc);
Config load_config_file(const std::string& path);

/// Serializes a GameSpec back to the config schema (surrogate accuracy only).
nlohmann::json game_to_json(const GameSpec& spec);

}  // namespace fedgame
