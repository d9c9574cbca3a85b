#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace hermia {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Gaussian integer re + im*i over an integer type `Int`.
///
/// The library uses two instantiations: `GaussianInt` over GMP integers for
/// every public value, and a fixed-width checked instantiation that exact
/// kernels try first and abandon on overflow.
template <typename Int>
struct BasicGaussian {
  Int re{0};
  Int im{0};

  BasicGaussian() = default;
  BasicGaussian(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
  explicit BasicGaussian(Int r) : re(std::move(r)), im(0) {}

  static BasicGaussian unit_i() { return {Int(0), Int(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  BasicGaussian conj() const { return {re, -im}; }

  BasicGaussian& operator+=(const BasicGaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BasicGaussian& operator-=(const BasicGaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BasicGaussian& operator*=(const BasicGaussian& o) {
    Int r = re * o.re - im * o.im;
    Int i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend BasicGaussian operator+(BasicGaussian a, const BasicGaussian& b) { return a += b; }
  friend BasicGaussian operator-(BasicGaussian a, const BasicGaussian& b) { return a -= b; }
  friend BasicGaussian operator*(BasicGaussian a, const BasicGaussian& b) { return a *= b; }
  friend BasicGaussian operator-(const BasicGaussian& a) { return {-a.re, -a.im}; }

  friend bool operator==(const BasicGaussian& a, const BasicGaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const BasicGaussian& a, const BasicGaussian& b) { return !(a == b); }
};

using GaussianInt = BasicGaussian<BigInt>;

/// Renders as `a`, `bi`, `a+bi` or `a-bi`; the units print as 1, i, -i, -1.
std::string to_string(const GaussianInt& z);
std::ostream& operator<<(std::ostream& os, const GaussianInt& z);

}  // namespace hermia
