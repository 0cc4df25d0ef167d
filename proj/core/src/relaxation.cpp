#include "omega/spec/relaxation.hpp"

#include "omega/error.hpp"

namespace omega::spec {

Index relaxation_time(const Rational& delta) {
  if (delta <= 0) throw Error(ErrorKind::invalid_argument, "relaxation_time needs delta > 0");
  Index n = 0;
  Rational bound = 2;  // 2^{1-n}
  while (bound >= delta) {
    bound /= 2;
    ++n;
  }
  return n < 1 ? 1 : n;
}

}  // namespace omega::spec
