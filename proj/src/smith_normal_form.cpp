#include "flexcontact/smith_normal_form.hpp"

#include <stdexcept>
#include <string>

namespace flexcontact {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the block [from.., from..]; false if the block is zero.
bool smallest_entry(const IntegerMatrix& d, std::size_t from, Position& out) {
  bool found = false;
  Integer best;
  for (std::size_t r = from; r < d.rows(); ++r)
    for (std::size_t c = from; c < d.cols(); ++c) {
      const Integer& v = d(r, c);
      if (v == 0) continue;
      Integer a = abs(v);
      if (!found || a < best) {
        best = a;
        out = {r, c};
        found = true;
      }
    }
  return found;
}

class Reducer {
public:
  explicit Reducer(const IntegerMatrix& a)
      : d_(a), u_(IntegerMatrix::identity(a.rows())), v_(IntegerMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      Position p{};
      if (!smallest_entry(d_, t, p)) break;
      move_to_pivot(t, p);
      while (true) {
        clear_cross(t);
        if (!fix_divisibility(t)) break;
      }
      if (d_(t, t) < 0) {
        d_.negate_row(t);
        u_.negate_row(t);
      }
    }
    return {std::move(d_), std::move(u_), std::move(v_)};
  }

private:
  void row_swap(std::size_t a, std::size_t b) {
    d_.swap_rows(a, b);
    u_.swap_rows(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    d_.swap_cols(a, b);
    v_.swap_cols(a, b);
  }
  void row_add(std::size_t target, std::size_t source, const Integer& f) {
    d_.add_row_multiple(target, source, f);
    u_.add_row_multiple(target, source, f);
  }
  void col_add(std::size_t target, std::size_t source, const Integer& f) {
    d_.add_col_multiple(target, source, f);
    v_.add_col_multiple(target, source, f);
  }

  void move_to_pivot(std::size_t t, Position p) {
    row_swap(t, p.row);
    col_swap(t, p.col);
  }

  // Zeroes row t and column t outside the pivot. Each pass either finishes or
  // strictly shrinks |pivot|.
  void clear_cross(std::size_t t) {
    while (true) {
      bool clean = true;
      Integer q;
      for (std::size_t r = t + 1; r < d_.rows(); ++r) {
        if (d_(r, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d_(r, t).get_mpz_t(), d_(t, t).get_mpz_t());
        row_add(r, t, -q);
        if (d_(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < d_.cols(); ++c) {
        if (d_(t, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d_(t, c).get_mpz_t(), d_(t, t).get_mpz_t());
        col_add(c, t, -q);
        if (d_(t, c) != 0) clean = false;
      }
      if (clean) return;
      // Bring the smallest leftover remainder into the pivot.
      Position best{t, t};
      Integer best_abs = abs(d_(t, t));
      for (std::size_t r = t + 1; r < d_.rows(); ++r)
        if (d_(r, t) != 0 && abs(d_(r, t)) < best_abs) {
          best_abs = abs(d_(r, t));
          best = {r, t};
        }
      for (std::size_t c = t + 1; c < d_.cols(); ++c)
        if (d_(t, c) != 0 && abs(d_(t, c)) < best_abs) {
          best_abs = abs(d_(t, c));
          best = {t, c};
        }
      if (best.row != t) row_swap(t, best.row);
      if (best.col != t) col_swap(t, best.col);
    }
  }

  // If some entry of the trailing block is not divisible by the pivot, folds its
  // row into row t so the next clear_cross lowers the pivot. Returns true if it
  // did so.
  bool fix_divisibility(std::size_t t) {
    const Integer& pivot = d_(t, t);
    for (std::size_t r = t + 1; r < d_.rows(); ++r)
      for (std::size_t c = t + 1; c < d_.cols(); ++c)
        if (!mpz_divisible_p(d_(r, c).get_mpz_t(), pivot.get_mpz_t())) {
          row_add(t, r, 1);
          return true;
        }
    return false;
  }

  IntegerMatrix d_;
  IntegerMatrix u_;
  IntegerMatrix v_;
};

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

void verify_smith_decomposition(const IntegerMatrix& a, const SmithDecomposition& s) {
  auto fail = [](const std::string& what) { throw std::logic_error("Smith normal form: " + what); };
  if (s.U.rows() != a.rows() || s.U.cols() != a.rows()) fail("U has the wrong shape");
  if (s.V.rows() != a.cols() || s.V.cols() != a.cols()) fail("V has the wrong shape");
  if (!(s.U * a * s.V == s.D)) fail("U*A*V != D");
  if (!s.D.is_diagonal()) fail("D is not diagonal");
  if (abs(determinant(s.U)) != 1) fail("U is not unimodular");
  if (abs(determinant(s.V)) != 1) fail("V is not unimodular");
  const std::size_t k = std::min(s.D.rows(), s.D.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (s.D(i, i) < 0) fail("negative diagonal entry");
    if (i + 1 < k) {
      const Integer& here = s.D(i, i);
      const Integer& next = s.D(i + 1, i + 1);
      if (here == 0 && next != 0) fail("zero before nonzero on the diagonal");
      if (here != 0 && !mpz_divisible_p(next.get_mpz_t(), here.get_mpz_t()))
        fail("divisibility chain broken");
    }
  }
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  SmithDecomposition s = Reducer(a).run();
  verify_smith_decomposition(a, s);
  return s;
}

}  // namespace flexcontact
