#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace uavcov {

// Exact rational value used for every time/energy feasibility comparison.
// Wraps GMP's mpq_class behind a plain value type so boundary cases like
// k * dwell == rotation period never flip on floating-point noise.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long long n) : q_(mpz_class(static_cast<long>(n))) {}
  Rat(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_ = mpq_class(mpz_class(static_cast<long>(num)),
                   mpz_class(static_cast<long>(den)));
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Rounds v to the nearest 1/scale and returns the exact result. All
  // double-valued physics feeding the planner passes through here once,
  // so two ways of writing the same quantity land on the same rational.
  static Rat from_double_quantized(double v, long long scale = 1000000) {
    if (!std::isfinite(v)) throw std::invalid_argument("Rat: non-finite value");
    double scaled = v * static_cast<double>(scale);
    if (std::fabs(scaled) >= 9.0e18)
      throw std::invalid_argument("Rat: value out of quantization range");
    return Rat(static_cast<long long>(std::llround(scaled)), scale);
  }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  double to_double() const { return q_.get_d(); }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  // Smallest integer >= value.
  long long ceil_ll() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return to_ll(r, "ceil");
  }
  long long floor_ll() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return to_ll(r, "floor");
  }
  // Half-up rounding, used when energies are scaled to whole joules.
  long long round_half_up_ll() const {
    Rat shifted = *this + Rat(1, 2);
    return shifted.floor_ll();
  }

  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return make(a.q_ + b.q_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return make(a.q_ - b.q_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return make(a.q_ * b.q_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (sgn(b.q_) == 0) throw std::invalid_argument("Rat: division by zero");
    return make(a.q_ / b.q_);
  }
  Rat operator-() const { return make(-q_); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

 private:
  static Rat make(const mpq_class& q) {
    Rat r;
    r.q_ = q;
    return r;
  }
  static long long to_ll(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p())
      throw std::overflow_error(std::string("Rat: ") + what + " out of range");
    return static_cast<long long>(z.get_si());
  }

  mpq_class q_;
};

}  // namespace uavcov
