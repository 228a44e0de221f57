#pragma once

#include <stdexcept>
#include <string>

namespace tsw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct InputError : Error {
  using Error::Error;
};
struct NonIsometry : Error {
  using Error::Error;
};
struct OrbitOverflow : Error {
  using Error::Error;
};
struct UnsupportedVirtual : Error {
  using Error::Error;
};
struct WrongKind : Error {
  using Error::Error;
};
struct NonOrthogonalSubspaces : Error {
  using Error::Error;
};
struct NonOrthogonalBlocks : Error {
  using Error::Error;
};
struct DegenerateWitness : Error {
  using Error::Error;
};
struct NotASystem : Error {
  using Error::Error;
};

}  // namespace tsw
