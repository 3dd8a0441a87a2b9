#pragma once

#include <stdexcept>
#include <string>

namespace seqemb {

// A theorem hypothesis does not hold for the requested inputs (infeasible
// cover, divergent series, truncation too small, ...). CLI maps this to
// exit code 3.
class hypothesis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant was breached; always a bug. CLI maps this to exit
// code 4.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace seqemb
