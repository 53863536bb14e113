#include "fedgame/types.hpp"

#include <cmath>

namespace fedgame {

std::string to_string(Mechanism m) {
    switch (m) {
        case Mechanism::EG: return "EG";
        case Mechanism::LP: return "LP";
        case Mechanism::LOO: return "LOO";
        case Mechanism::SV: return "SV";
    }
    return "?";
}

Mechanism mechanism_from_string(const std::string& name) {
    if (name == "EG") return Mechanism::EG;
    if (name == "LP") return Mechanism::LP;
    if (name == "LOO") return Mechanism::LOO;
    if (name == "SV") return Mechanism::SV;
    throw ConfigError("mechanism", "must be one of EG, LP, LOO, SV (got \"" + name + "\")");
}

std::string to_string(UpdateScheme s) {
    return s == UpdateScheme::Jacobi ? "jacobi" : "gauss_seidel";
}

UpdateScheme scheme_from_string(const std::string& name) {
    if (name == "jacobi") return UpdateScheme::Jacobi;
    if (name == "gauss_seidel") return UpdateScheme::GaussSeidel;
    throw ConfigError("solver.scheme", "must be \"jacobi\" or \"gauss_seidel\" (got \"" + name + "\")");
}

void ClientProfile::validate() const {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw ConfigError("epsilon", "must be in [0, 1]");
    if (capacity < 0)
        throw ConfigError("capacity", "must be >= 0");
    if (!(privacy_sensitivity >= 0.0) || !std::isfinite(privacy_sensitivity))
        throw ConfigError("mu", "must be a finite value >= 0");
}

void SolverSettings::validate() const {
    if (!(tau >= 0.0))
        throw ConfigError("solver.tau", "must be >= 0");
    if (max_iters < 1)
        throw ConfigError("solver.max_iters", "must be >= 1");
    if (grid_step && *grid_step < 1)
        throw ConfigError("solver.grid_step", "must be >= 1");
}

}  // namespace fedgame
