#include "loglocal/lattice.hpp"

#include <algorithm>
#include <utility>

namespace loglocal {

IntMat::IntMat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw InputError("matrix dimensions must be positive");
  a_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Int det(const IntMat& a0) {
  if (a0.rows() != a0.cols()) throw InputError("det: matrix must be square");
  const int n = a0.rows();
  IntMat a = a0;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact
    prev = a(k, k);
  }
  Int d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

namespace {

void swap_rows(IntMat& m, int r1, int r2) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

void swap_cols(IntMat& m, int c1, int c2) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, c1), m(i, c2));
}

// row r1 += f * row r2
void row_axpy(IntMat& m, int r1, int r2, const Int& f) {
  for (int j = 0; j < m.cols(); ++j) m(r1, j) += f * m(r2, j);
}

// col c1 += f * col c2
void col_axpy(IntMat& m, int c1, int c2, const Int& f) {
  for (int i = 0; i < m.rows(); ++i) m(i, c1) += f * m(i, c2);
}

void negate_row(IntMat& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SnfResult smith_normal_form(const IntMat& a) {
  const int m = a.rows();
  const int n = a.cols();
  IntMat u = IntMat::identity(m);
  IntMat v = IntMat::identity(n);
  IntMat s = a;

  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero |entry| of the trailing block
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          if (s(i, j) == 0) continue;
          if (pi < 0 || cmp(abs(s(i, j)), abs(s(pi, pj))) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // trailing block is zero

      if (pi != t) {
        swap_rows(s, t, pi);
        swap_rows(u, t, pi);
      }
      if (pj != t) {
        swap_cols(s, t, pj);
        swap_cols(v, t, pj);
      }

      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / s(t, t);
        if (q != 0) {
          row_axpy(s, i, t, -q);
          row_axpy(u, i, t, -q);
        }
        if (s(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / s(t, t);
        if (q != 0) {
          col_axpy(s, j, t, -q);
          col_axpy(v, j, t, -q);
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot divides its whole trailing block, or pull the bad row up
      int bi = -1;
      for (int i = t + 1; i < m && bi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      row_axpy(s, t, bi, Int(1));
      row_axpy(u, t, bi, Int(1));
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

bool is_primitive(const IntVec& v) {
  if (v.empty()) throw InputError("is_primitive: empty vector");
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) throw InputError("is_primitive: zero vector");
  return g == 1;
}

Int lattice_index(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) throw InputError("lattice_index: no vectors");
  const int n = static_cast<int>(vectors.size());
  IntMat mat(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(vectors[i].size()) != n)
      throw InputError("lattice_index: need n vectors of length n");
    for (int j = 0; j < n; ++j) mat(i, j) = vectors[i][j];
  }
  Int d = det(mat);
  if (d == 0) throw MathError("lattice_index: degenerate lattice (determinant 0)");
  return abs(d);
}

std::vector<IntVec> wps_fan_from_weights(const std::vector<Int>& weights) {
  const int count = static_cast<int>(weights.size());  // n + 1
  if (count < 2) throw InputError("weights: need at least two entries");
  for (int j = 0; j < count; ++j)
    if (weights[j] < 1)
      throw InputError("weights[" + std::to_string(j) + "]: must be a positive integer");
  // well-formed: gcd of every n-subset is 1 (this also forces overall gcd 1)
  for (int skip = 0; skip < count; ++skip) {
    Int g = 0;
    for (int j = 0; j < count; ++j)
      if (j != skip) g = gcd(g, weights[j]);
    if (g != 1)
      throw InputError("weights not well-formed: gcd of weights omitting index " +
                       std::to_string(skip) + " is " + int_str(g) +
                       "; supply explicit rays for fake quotients");
  }

  // Quotient Z^{n+1}/Zw: with u*w = ±e_1 unimodular, the projection to the
  // last n coordinates of u*x realizes the quotient; rays are the images of
  // the standard basis vectors, i.e. columns of u with the first row dropped.
  IntMat col(count, 1);
  for (int j = 0; j < count; ++j) col(j, 0) = weights[j];
  SnfResult f = smith_normal_form(col);

  std::vector<IntVec> rays(count, IntVec(count - 1));
  for (int j = 0; j < count; ++j)
    for (int i = 1; i < count; ++i) rays[j][i - 1] = f.u(i, j);

  for (int c = 0; c < count - 1; ++c) {
    Int acc = 0;
    for (int j = 0; j < count; ++j) acc += weights[j] * rays[j][c];
    if (acc != 0) throw MathError("wps fan: weight relation violated (internal)");
  }
  for (int j = 0; j < count; ++j)
    if (!is_primitive(rays[j]))
      throw MathError("wps fan: quotient ray not primitive (internal)");
  return rays;
}

}  // namespace loglocal
