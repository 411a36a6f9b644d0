// Copyright 2026 The Thompson Ends Authors.
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

#ifndef THOMPSON_ERRORS_H_
#define THOMPSON_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thompson {

// Base of every error raised by the library. Callers that only need a
// message can catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedPartition : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ClassMismatch : public Error {
 public:
  using Error::Error;
};

class NotNormalizing : public Error {
 public:
  using Error::Error;
};

// Raised when an exploration would exceed its vertex budget. Carries how far
// the exploration got so the caller can report partial progress.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, int completed_radius,
                std::size_t vertices)
      : Error(what),
        completed_radius_(completed_radius),
        vertices_(vertices) {}

  int completed_radius() const { return completed_radius_; }
  std::size_t vertices() const { return vertices_; }

 private:
  int completed_radius_;
  std::size_t vertices_;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class FormatVersionMismatch : public Error {
 public:
  using Error::Error;
};

class MarginTooSmall : public Error {
 public:
  using Error::Error;
};

class PreconditionUnverifiable : public Error {
 public:
  using Error::Error;
};

class NoEvidence : public Error {
 public:
  using Error::Error;
};

class CertificateFailure : public Error {
 public:
  using Error::Error;
};

class OutOfBall : public Error {
 public:
  using Error::Error;
};

}  // namespace thompson

#endif  // THOMPSON_ERRORS_H_
