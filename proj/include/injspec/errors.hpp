#pragma once

#include <stdexcept>
#include <string>

namespace injspec {

enum class errc {
  cap_exceeded,
  backend_mismatch,
  dimension_mismatch,
  zero_module,
  zero_polynomial,
  unknown_point,
  not_supported_for_backend,
  no_prime_submodule,
  point_not_in_subspace,
  invalid_series,
  not_in_spec,
  inhomogeneous_relation,
  invalid_input,
  internal_assertion,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::cap_exceeded: return "CapExceeded";
    case errc::backend_mismatch: return "BackendMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::zero_module: return "ZeroModule";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::unknown_point: return "UnknownPoint";
    case errc::not_supported_for_backend: return "NotSupportedForBackend";
    case errc::no_prime_submodule: return "NoPrimeSubmodule";
    case errc::point_not_in_subspace: return "PointNotInSubspace";
    case errc::invalid_series: return "InvalidSeries";
    case errc::not_in_spec: return "NotInSpec";
    case errc::inhomogeneous_relation: return "InhomogeneousRelation";
    case errc::invalid_input: return "InvalidInput";
    case errc::internal_assertion: return "InternalAssertionFailed";
  }
  return "UnknownError";
}

class domain_error : public std::runtime_error {
 public:
  domain_error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw domain_error(c, msg); }

inline void require(bool cond, errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

// Enumeration caps.  Searches that would exceed them fail loudly with
// CapExceeded instead of degrading.
struct Caps {
  long long element_enum = 65536;  // p^dim bound for ring-element enumeration
  int lattice = 4096;              // submodule lattice size bound
};

inline Caps& caps() {
  static Caps c;
  return c;
}

}  // namespace injspec
