// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace localize {

/// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input validation failures (CLI maps these to exit code 2).
class OrderingViolation : public Error {
public:
    using Error::Error;
};
class DegenerateSpectrum : public Error {
public:
    using Error::Error;
};
class NonPositiveRho : public Error {
public:
    using Error::Error;
};
class OutOfChart : public Error {
public:
    using Error::Error;
};
class KindMismatch : public Error {
public:
    using Error::Error;
};
class DivergentRegime : public Error {
public:
    using Error::Error;
};
class SingularPhi : public Error {
public:
    using Error::Error;
};
class ParseError : public Error {
public:
    using Error::Error;
};

// Runtime/numerical failures.
class StepTooLarge : public Error {
public:
    using Error::Error;
};
class BudgetExhausted : public Error {
public:
    using Error::Error;
};
class WeightOverflow : public Error {
public:
    using Error::Error;
};
class TailDominates : public Error {
public:
    using Error::Error;
};
class InsufficientNodes : public Error {
public:
    using Error::Error;
};

}  // namespace localize
