#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperspec {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Neumaier's variant of compensated summation.
template <class T = double>
class compensated_sum {
 public:
  void add(T v) {
    T t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  compensated_sum& operator+=(T v) {
    add(v);
    return *this;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{0};
  T comp_{0};
};

// (n)_k = n (n-1) ... (n-k+1), exact in 128-bit integers while it fits.
inline double falling(long long n, int k) {
  if (k < 0) throw error("falling factorial: negative k");
  if (n < k) return 0.0;
  unsigned __int128 acc = 1;
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 100;
  for (int i = 0; i < k; ++i) {
    acc *= static_cast<unsigned __int128>(n - i);
    if (acc > cap) {
      long double rest = static_cast<long double>(acc);
      for (int j = i + 1; j < k; ++j) rest *= static_cast<long double>(n - j);
      return static_cast<double>(rest);
    }
  }
  return static_cast<double>(acc);
}

inline double factorial(int k) { return falling(k, k); }

inline double binomial(long long n, int k) {
  if (k < 0 || n < k) return 0.0;
  // exact while the running value fits: C(n,i+1) = C(n,i) (n-i) / (i+1)
  unsigned __int128 acc = 1;
  for (int i = 0; i < k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
    if (acc > (static_cast<unsigned __int128>(1) << 100))
      return std::exp(std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
                      std::lgamma(double(n - k) + 1));
  }
  return static_cast<double>(acc);
}

inline double norm_p(std::span<const double> x, double p) {
  double mx = 0.0;
  for (double v : x) mx = std::max(mx, std::abs(v));
  if (mx == 0.0) return 0.0;
  compensated_sum<> s;
  for (double v : x) s += std::pow(std::abs(v) / mx, p);
  return mx * std::pow(s.value(), 1.0 / p);
}

inline void normalize_p(std::span<double> x, double p) {
  double nr = norm_p(x, p);
  if (nr == 0.0) return;
  for (double& v : x) v /= nr;
}

// t |t|^(p-2), continuous at 0 for p > 1
inline double signed_pow(double t, double e) {
  if (t == 0.0) return 0.0;
  return t > 0 ? std::pow(t, e) : -std::pow(-t, e);
}

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// splitmix64 step; used to derive independent per-restart seeds
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// uniform double in [0,1) from a 64-bit engine; avoids the
// implementation-defined std::uniform_real_distribution
template <class Engine>
double unit_uniform(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace hyperspec
