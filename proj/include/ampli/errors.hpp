#pragma once

#include <stdexcept>
#include <string>

namespace ampli {

/// Violated precondition (wrong dimensions, bad index list, wrong parity...).
struct ContractError : std::invalid_argument {
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

/// A sampler's exhaustive minor certification failed.
struct PositivityError : std::runtime_error {
    explicit PositivityError(const std::string& what) : std::runtime_error(what) {}
};

/// C*Z lost rank, or an input is too degenerate to work with.
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

/// A replacement twistor vanished for the current ray; caller resamples.
struct NonGenericRayError : std::runtime_error {
    explicit NonGenericRayError(const std::string& what) : std::runtime_error(what) {}
};

/// Y sits on the coarse boundary; the winding map is not defined there.
struct WindingUndefinedError : std::runtime_error {
    explicit WindingUndefinedError(const std::string& what) : std::runtime_error(what) {}
};

/// A configuration that must be full dimensional is flat.
struct FlatConfigurationError : std::runtime_error {
    explicit FlatConfigurationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ampli
