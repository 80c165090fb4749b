#pragma once

#include "ctoda/rational.hpp"

#include <ostream>
#include <string>

namespace ctoda {

// a + b*sqrt(2)
struct QSqrt2 {
  Q a, b;

  QSqrt2() : a(0), b(0) {}
  QSqrt2(const Q& x) : a(x), b(0) {}
  QSqrt2(long x) : a(x), b(0) {}
  QSqrt2(const Q& x, const Q& y) : a(x), b(y) {}

  static QSqrt2 sqrt2() { return {Q(0), Q(1)}; }

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  bool is_rational() const { return sgn(b) == 0; }
  Q norm() const { return a * a - 2 * b * b; }

  QSqrt2& operator+=(const QSqrt2& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  QSqrt2& operator-=(const QSqrt2& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  QSqrt2& operator*=(const QSqrt2& o) {
    if (sgn(b) == 0 && sgn(o.b) == 0) {
      a *= o.a;
      return *this;
    }
    Q na = a * o.a + 2 * b * o.b;
    Q nb = a * o.b + b * o.a;
    a = na;
    b = nb;
    return *this;
  }
  QSqrt2 inverse() const {
    if (is_rational()) {
      if (sgn(a) == 0) throw domain_error("division by zero");
      return QSqrt2(Q(1 / a));
    }
    Q n = norm();  // never zero for (a,b) != 0 since sqrt2 is irrational
    return {a / n, -b / n};
  }
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a, -x.b}; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

  std::string str() const {
    if (is_rational()) return to_pq(a);
    return to_pq(a) + (sgn(b) < 0 ? "-" : "+") + to_pq(abs(b)) + "√2";
  }
  friend std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.str(); }
};

inline QSqrt2 qpow(const QSqrt2& x, long e) {
  if (e < 0) return qpow(x.inverse(), -e);
  QSqrt2 r(1), base = x;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// accepts "p/q", "p/q+s/u√2", "p/q-s/u√2" and "s/u√2"
inline QSqrt2 parse_qsqrt2(const std::string& s) {
  static const std::string root = "√2";
  if (s.size() < root.size() || s.compare(s.size() - root.size(), root.size(), root) != 0)
    return QSqrt2(parse_q(s));
  std::string body = s.substr(0, s.size() - root.size());
  // split at the last sign that is not the leading one
  std::size_t cut = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;)
    if (body[i] == '+' || body[i] == '-') {
      cut = i;
      break;
    }
  if (cut == std::string::npos) return {Q(0), parse_q(body)};
  Q a = parse_q(body.substr(0, cut));
  std::string bs = body.substr(cut);
  if (bs[0] == '+') bs = bs.substr(1);
  return {a, parse_q(bs)};
}

}  // namespace ctoda
