#include "isingcc/states.hpp"

namespace isingcc {

const char* to_string(Sector s) {
  switch (s) {
    case Sector::kAB:
      return "AB";
    case Sector::kAperpBperp:
      return "AperpBperp";
    case Sector::kABperp:
      return "ABperp";
    case Sector::kAperpB:
      return "AperpB";
  }
  return "?";
}

}  // namespace isingcc
