#ifndef K3GON_ERRORS_HPP
#define K3GON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace k3gon {

// A lattice operation that needs the no-(-2)-curve / no-elliptic-pencil
// certificates was invoked on a lattice that lacks them.
struct UncertifiedLattice : std::logic_error {
  explicit UncertifiedLattice(const std::string& what) : std::logic_error(what) {}
};

// A caller demanded hypothesis checking and one of the numeric hypotheses
// failed; the message names the failed flag.
struct HypothesisViolation : std::runtime_error {
  explicit HypothesisViolation(const std::string& what) : std::runtime_error(what) {}
};

// A value the theory guarantees was contradicted by the computation.
// This is a bug (ours or the theory's), never a normal result.
struct InternalInvariantViolation : std::logic_error {
  explicit InternalInvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace k3gon

#endif
