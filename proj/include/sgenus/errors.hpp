#pragma once

#include <stdexcept>

namespace sgenus {

struct NotPositiveDefinite : std::runtime_error { using std::runtime_error::runtime_error; };
struct InvalidS : std::runtime_error { using std::runtime_error::runtime_error; };
struct NoCoprimeValue : std::runtime_error { using std::runtime_error::runtime_error; };
struct GenusCountMismatch : std::runtime_error { using std::runtime_error::runtime_error; };
struct MassMismatch : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotStabilized : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnsupportedOrder : std::runtime_error { using std::runtime_error::runtime_error; };
struct InvalidPrime : std::runtime_error { using std::runtime_error::runtime_error; };
struct IrrationalDet : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnsupportedM : std::runtime_error { using std::runtime_error::runtime_error; };
struct PreconditionViolated : std::runtime_error { using std::runtime_error::runtime_error; };
struct FactorMismatch : std::runtime_error { using std::runtime_error::runtime_error; };
struct InvalidBranch : std::runtime_error { using std::runtime_error::runtime_error; };

} // namespace sgenus
