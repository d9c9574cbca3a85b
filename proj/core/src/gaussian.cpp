#include "hermia/gaussian.hpp"

namespace hermia {

std::string to_string(const GaussianInt& z) {
  if (z.im == 0) return z.re.get_str();
  std::string imag;
  if (z.im == 1) {
    imag = "i";
  } else if (z.im == -1) {
    imag = "-i";
  } else {
    imag = z.im.get_str() + "i";
  }
  if (z.re == 0) return imag;
  if (z.im > 0) return z.re.get_str() + "+" + imag;
  return z.re.get_str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << to_string(z); }

}  // namespace hermia
