#pragma once

#include <stdexcept>
#include <string>

namespace flslab {

/// Error categories. Values double as CLI / C-API status codes.
enum class ErrCode : int {
  ok = 0,
  internal = 1,
  parameter = 2,        // invalid spec or configuration
  sampling_failure = 3, // rejection sampling exhausted max_tries
  divergence = 4,       // non-finite values during integration
  data = 5,             // bad dataset content (e.g. zero-norm row)
  shape = 6,            // dimension mismatch
  degenerate = 7,       // empty cone / zero predictor
  inapplicable = 8,     // formula precondition cannot hold (e.g. lambda <= 0)
  ordering = 9,         // threshold ordering violated (e.g. eta > risk(t2))
  io = 10,
};

class Error : public std::runtime_error {
public:
  Error(ErrCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrCode code() const noexcept { return code_; }

private:
  ErrCode code_;
};

/// Thrown by rejection_sample_separable; carries the best separability seen.
class SamplingError : public Error {
public:
  SamplingError(const std::string& what, double best_lambda, int attempts)
      : Error(ErrCode::sampling_failure, what),
        best_lambda_hat(best_lambda),
        attempts(attempts) {}
  double best_lambda_hat;
  int attempts;
};

inline void require(bool cond, ErrCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

} // namespace flslab
