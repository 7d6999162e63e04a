// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qfc {

/// Argument outside its physical or mathematical domain.
class domain_error : public std::invalid_argument {
public:
  explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A value type failed its construction-time invariants.
class contract_error : public std::invalid_argument {
public:
  explicit contract_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Curve fitting failed (degenerate data, no usable minimum).
class fit_error : public std::runtime_error {
public:
  explicit fit_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Process reconstruction failed (missing settings, optimizer stall).
class reconstruction_error : public std::runtime_error {
public:
  explicit reconstruction_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Configuration file missing, malformed, or violating the schema.
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// CSV ingestion failure; carries a 1-based line number when known.
class data_error : public std::runtime_error {
public:
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qfc
