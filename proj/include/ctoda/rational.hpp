#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctoda {

using Q = mpq_class;

struct param_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Q qint(long v) { return Q(v); }

inline Q qfrac(long p, long q) {
  Q x(p, q);
  x.canonicalize();
  return x;
}

// integer power, negative exponents allowed for nonzero base
inline Q qpow(const Q& b, long e) {
  if (e < 0) {
    if (b == 0) throw domain_error("zero to a negative power");
    Q inv = 1 / b;
    return qpow(inv, -e);
  }
  Q r = 1, base = b;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// always "p/q", also for integers
inline std::string to_pq(const Q& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Q parse_q(const std::string& s) {
  Q x;
  if (s.empty() || x.set_str(s, 10) != 0) throw param_error("not a rational: '" + s + "'");
  if (x.get_den() == 0) throw param_error("zero denominator: '" + s + "'");
  x.canonicalize();
  return x;
}

inline std::optional<Q> exact_sqrt(const Q& x) {
  if (x < 0) return std::nullopt;
  mpz_class n = x.get_num(), d = x.get_den();
  mpz_class sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Q(sn, sd);
}

inline bool is_integer(const Q& x) { return x.get_den() == 1; }

inline long to_long(const Q& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p()) throw domain_error("not a machine integer");
  return x.get_num().get_si();
}

// positive rationals with numerator and denominator uniform in [1,1000]
class RatGen {
 public:
  explicit RatGen(std::uint64_t seed) : eng_(seed) {}
  Q operator()() {
    std::uniform_int_distribution<long> d(1, 1000);
    long p = d(eng_), q = d(eng_);
    return qfrac(p, q);
  }
  std::vector<Q> vec(int n) {
    std::vector<Q> v;
    for (int i = 0; i < n; ++i) v.push_back((*this)());
    return v;
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ctoda
