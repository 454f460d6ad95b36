#include "mathieu/gaussian_rational.hpp"

#include "mathieu/errors.hpp"

namespace mathieu {
namespace {

Rational parse_imaginary(std::string_view text, std::string_view whole) {
  // text is the part ending in "i": "i", "-i", "c/d*i"
  if (text == "i" || text == "+i") return Rational(1);
  if (text == "-i") return Rational(-1);
  if (text.size() < 3 || text.substr(text.size() - 2) != "*i") {
    throw DomainError("invalid Gaussian literal '" + std::string(whole) + "'");
  }
  return Rational::parse(text.substr(0, text.size() - 2));
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw DomainError("empty Gaussian literal");
  if (text.back() != 'i') return {Rational::parse(text), Rational(0)};
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), parse_imaginary(text, text)};
  return {Rational::parse(text.substr(0, split)), parse_imaginary(text.substr(split), text)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  return *this *= rhs.inverse();
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.to_string() + "*i";
  }
  if (re_.is_zero()) return imag;
  return re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag;
}

}  // namespace mathieu
