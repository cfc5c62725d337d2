// Copyright 2026 The Hardy Interferometer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HARDY_ERRORS_HPP
#define HARDY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hardy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (bad range, even phase integer, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// The (t1', r2', u') configuration has no physical absorber solution.
class InfeasibleError : public Error {
   public:
    using Error::Error;
};

/// An amplitude table whose squared norm is not 1.
class NormalizationError : public Error {
   public:
    using Error::Error;
};

/// Normalised correlation requested on a table with no non-absorbed mass.
class UndefinedCorrelationError : public Error {
   public:
    using Error::Error;
};

/// Not enough events to form an estimate.
class InsufficientDataError : public Error {
   public:
    using Error::Error;
};

/// An event stream does not cover every setting pair.
class CoverageError : public InsufficientDataError {
   public:
    using InsufficientDataError::InsufficientDataError;
};

/// Interaction-free efficiency requested with a perfectly transmitting object.
class NoObjectInteractionError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Event classification requested outside the dark-fringe configuration.
class ClassificationUnsupportedError : public DomainError {
   public:
    using DomainError::DomainError;
};

}  // namespace hardy

#endif  // HARDY_ERRORS_HPP
