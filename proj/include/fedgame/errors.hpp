#pragma once

#include <stdexcept>
#include <string>

namespace fedgame {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Config file problem. `path` is the offending key path, e.g. "clients[2].epsilon".
struct ConfigError : Error {
    std::string path;
    ConfigError(std::string key_path, const std::string& what_arg)
        : Error(key_path.empty() ? what_arg : key_path + ": " + what_arg),
          path(std::move(key_path)) {}
};

/// Model evaluated outside its mathematical domain (bad parameter, log of
/// a non-positive argument, ...). The message names the offending parameter.
struct DomainError : Error {
    using Error::Error;
};

/// A documented precondition was violated (capacity bounds, size mismatches,
/// coalition-enumeration cap, ...).
struct ContractError : Error {
    using Error::Error;
};

/// Curve fitting cannot proceed (underdetermined system, singular inner
/// solve, degenerate regressor).
struct FitError : Error {
    using Error::Error;
};

}  // namespace fedgame
