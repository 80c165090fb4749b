#pragma once

#include "ctoda/qsqrt2.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ctoda {

inline bool is_zero(const Q& x) { return sgn(x) == 0; }
inline bool is_zero(const QSqrt2& x) { return x.is_zero(); }

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), d_(std::size_t(rows) * cols, T(0)) {}
  explicit Matrix(int n) : Matrix(n, n) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return d_[std::size_t(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return d_[std::size_t(i) * c_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : d_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(Matrix x, const T& s) { return x *= s; }
  friend Matrix operator-(Matrix x) {
    for (auto& v : x.d_) v = -v;
    return x;
  }

  // zero-skipping product; chips are sparse so this is close to O(n * nnz)
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw param_error("matrix shape mismatch");
    std::vector<std::vector<int>> nz(y.r_);
    for (int k = 0; k < y.r_; ++k)
      for (int j = 0; j < y.c_; ++j)
        if (!is_zero(y(k, j))) nz[k].push_back(j);
    Matrix z(x.r_, y.c_);
    T tmp;
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        const T& a = x(i, k);
        if (is_zero(a)) continue;
        for (int j : nz[k]) {
          tmp = a;
          tmp *= y(k, j);
          z(i, j) += tmp;
        }
      }
    return z;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T s(0);
    for (int i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
    return s;
  }

  bool is_diagonal() const {
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (i != j && !is_zero((*this)(i, j))) return false;
    return true;
  }

  template <class U, class F>
  Matrix<U> map(F f) const {
    Matrix<U> m(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> d_;
};

using QMatrix = Matrix<Q>;
using GMatrix = Matrix<QSqrt2>;

inline GMatrix to_gmatrix(const QMatrix& m) {
  return m.map<QSqrt2>([](const Q& x) { return QSqrt2(x); });
}

// Faddeev-LeVerrier: returns f_0..f_n with det(I + xM) = sum f_k x^k,
// i.e. f_k = trace of the k-th exterior power
template <class T>
std::vector<T> char_poly_coeffs(const Matrix<T>& m) {
  int n = m.rows();
  // c_k are coefficients of det(lambda I - M) = sum c_k lambda^(n-k)
  std::vector<T> c(n + 1, T(0));
  c[0] = T(1);
  Matrix<T> mk(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = M (M_{k-1} + c_{k-1} I)
    Matrix<T> tmp = mk;
    for (int i = 0; i < n; ++i) tmp(i, i) += c[k - 1];
    mk = m * tmp;
    c[k] = mk.trace() * T(qfrac(-1, k));
  }
  std::vector<T> f(n + 1);
  for (int k = 0; k <= n; ++k) f[k] = (k % 2 == 0) ? c[k] : -c[k];
  return f;
}

// exact inverse over a field by Gauss-Jordan; throws on singular input
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  int n = m.rows();
  if (m.cols() != n) throw param_error("inverse of non-square matrix");
  Matrix<T> a = m, inv = Matrix<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!is_zero(a(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) throw invariant_error("singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    T p = T(1) / a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || is_zero(a(i, col))) continue;
      T f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

template <class T>
int rank(Matrix<T> a) {
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!is_zero(a(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, col))) continue;
      T f = a(i, col) / a(r, col);
      for (int j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// M' = h M h^{-1} for some invertible diagonal h?  Solved along a spanning
// forest of the nonzero pattern, then checked on every entry.
template <class T>
bool diagonally_conjugate(const Matrix<T>& m, const Matrix<T>& mp) {
  int n = m.rows();
  if (mp.rows() != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (is_zero(m(i, j)) != is_zero(mp(i, j))) return false;
  std::vector<T> h(n, T(0));
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    h[s] = T(1);
    std::vector<int> st{s};
    while (!st.empty()) {
      int p = st.back();
      st.pop_back();
      for (int q = 0; q < n; ++q) {
        if (seen[q]) continue;
        // mp(p,q) = h_p/h_q m(p,q)  and  mp(q,p) = h_q/h_p m(q,p)
        if (!is_zero(m(p, q))) {
          h[q] = h[p] * m(p, q) / mp(p, q);
        } else if (!is_zero(m(q, p))) {
          h[q] = h[p] * mp(q, p) / m(q, p);
        } else {
          continue;
        }
        seen[q] = true;
        st.push_back(q);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(m(i, j)) && !(mp(i, j) * h[j] == h[i] * m(i, j))) return false;
  return true;
}

}  // namespace ctoda
