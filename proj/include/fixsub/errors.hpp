#pragma once

#include <stdexcept>
#include <string>

namespace fixsub {

// Malformed text input: words, iso-type strings, ambient specs, JSON files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Fix(alpha) certificate that does not hold up.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration or coset-graph size guard tripped.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fixsub
