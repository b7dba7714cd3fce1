#include "ospkw/halfint.hpp"

#include "ospkw/errors.hpp"

namespace ospkw {

std::string to_string(const Rational& r) { return r.str(); }

std::int64_t HalfInt::to_int() const {
  if (!is_integer()) fail(ErrorCode::InternalError, "half-integer " + to_string(*this) + " is not an integer");
  return doubled_ / 2;
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.doubled() / 2);
  return std::to_string(h.doubled()) + "/2";
}

}  // namespace ospkw
