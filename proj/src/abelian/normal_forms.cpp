#include "tdual/abelian/normal_forms.hpp"

#include <algorithm>

#include "tdual/errors.hpp"

namespace tdual {

namespace {

Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Working state of the Smith reduction. Row operations are mirrored on u and
// u_inv, column operations on v and v_inv.
struct SmithState {
  IntMatrix a, u, u_inv, v, v_inv;

  explicit SmithState(const IntMatrix& m)
      : a(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        v_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    a.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
    u_inv.add_col_multiple(src, dst, -k);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    a.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
    v_inv.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
};

}  // namespace

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithState s(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t j = t; j < cols; ++j) {
      for (std::size_t i = t; i < rows; ++i) {
        if (s.a(i, j) == 0) continue;
        if (pi == rows || abs(s.a(i, j)) < abs(s.a(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.a(i, t) == 0) continue;
        s.add_row(i, t, -trunc_div(s.a(i, t), s.a(t, t)));
        if (s.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.a(t, j) == 0) continue;
        s.add_col(j, t, -trunc_div(s.a(t, j), s.a(t, t)));
        if (s.a(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (s.a(i, t) != 0 && abs(s.a(i, t)) < abs(s.a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.a(t, j) != 0 && abs(s.a(t, j)) < abs(s.a(bi, bj))) bi = t, bj = j;
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!divides(s.a(t, t), s.a(i, j))) {
            s.add_row(t, i, 1);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    if (s.a(t, t) < 0) s.negate_row(t);
  }
  SmithForm out;
  out.rank = t;
  out.d = std::move(s.a);
  out.u = std::move(s.u);
  out.v = std::move(s.v);
  out.u_inv = std::move(s.u_inv);
  out.v_inv = std::move(s.v_inv);
  return out;
}

HermiteForm row_hermite_form(const IntMatrix& m) { return row_hermite_form(m, m.cols()); }

HermiteForm row_hermite_form(const IntMatrix& m, std::size_t pivot_cols) {
  HermiteForm out;
  out.h = m;
  out.transform = IntMatrix::identity(m.rows());
  IntMatrix& h = out.h;
  IntMatrix& t = out.transform;
  const std::size_t rows = m.rows();
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_cols && r < rows; ++col) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, col) != 0 && (best == rows || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best == rows) break;
      have_pivot = true;
      h.swap_rows(r, best);
      t.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        Int q = trunc_div(h(i, col), h(r, col));
        h.add_row_multiple(i, r, -q);
        t.add_row_multiple(i, r, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (!have_pivot) continue;
    if (h(r, col) < 0) {
      h.negate_row(r);
      t.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h(i, col), h(r, col));
      h.add_row_multiple(i, r, -q);
      t.add_row_multiple(i, r, -q);
    }
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rank = r;
  return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix aug = IntMatrix::hstack(a.transpose(), IntMatrix::identity(n));
  HermiteForm hf = row_hermite_form(aug, m);
  const std::size_t k = n - hf.rank;
  if (k == 0) return IntMatrix(n, 0);
  IntMatrix vecs = hf.h.block(hf.rank, m, k, n);
  HermiteForm nice = row_hermite_form(vecs);
  return nice.h.block(0, 0, nice.rank, n).transpose();
}

IntMatrix lattice_basis(const IntMatrix& g) {
  HermiteForm hf = row_hermite_form(g.transpose());
  return hf.h.block(0, 0, hf.rank, g.rows()).transpose();
}

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw MismatchedGroups("solve: row counts differ");
  SmithForm s = smith_normal_form(a);
  IntMatrix y = s.u * b;
  IntMatrix z(a.cols(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i < s.rank) {
        const Int& di = s.d(i, i);
        if (!divides(di, y(i, c))) return std::nullopt;
        Int q;
        mpz_divexact(q.get_mpz_t(), y(i, c).get_mpz_t(), di.get_mpz_t());
        z(i, c) = q;
      } else if (y(i, c) != 0) {
        return std::nullopt;
      }
    }
  }
  return s.v * z;
}

}  // namespace tdual
