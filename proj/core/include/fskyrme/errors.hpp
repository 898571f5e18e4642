#ifndef FSKYRME_ERRORS_HPP
#define FSKYRME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fskyrme {

// One exception type for the whole library; the kind tells callers (and
// tests) which contract was violated.
class Error : public std::runtime_error {
public:
    enum class Kind {
        AntipodeSingular,        // log at q = -1
        InvalidBasePoint,        // non-unit reference direction
        DegreeOverflow,          // form degree out of range for the operation
        NotInStabilizer,         // gauge section does not stabilize the reference map
        NonzeroPrimaryFlux,      // Hopf number requested in a nontrivial 2-sector
        SpectralSolveFailure,    // zero-mode bookkeeping inconsistent in the Poisson solve
        AntipodeHit,             // lift undefined: field touches the antipode cap
        UnknownKey,              // config: key not recognized
        TypeMismatch,            // config: value does not parse as the declared type
        IncompatibleInitializer, // config: initializer not valid for the target
        InvalidValue,            // config or argument outside its allowed range
        Io                       // file read/write failure
    };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace fskyrme

#endif
