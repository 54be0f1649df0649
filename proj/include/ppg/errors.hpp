#pragma once

#include <stdexcept>
#include <string>

namespace ppg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two points of a placement coincide.
struct DuplicateCoordinateError : Error {
    using Error::Error;
};

// Some point's position is not constrained by the given edges and pins.
struct UnderdeterminedGraphError : Error {
    using Error::Error;
};

// Instance exceeds the brute-force cap.
struct InstanceTooLargeError : Error {
    using Error::Error;
};

struct MissingEdgeError : Error {
    using Error::Error;
};

struct UnknownPointError : Error {
    using Error::Error;
};

// A core gadget failed its rigidity certification under the answered lengths.
struct CoreNotRigidError : Error {
    using Error::Error;
};

struct NoFeasibleTripletError : Error {
    using Error::Error;
};

struct NoFeasibleLeafError : Error {
    using Error::Error;
};

// The adversary painted itself into a corner; treated as a bug.
struct InconsistentStrategyError : Error {
    using Error::Error;
};

struct VerificationError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace ppg
