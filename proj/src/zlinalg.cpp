#include "zipchow/zlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace zipchow::zlinalg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  for (const auto &row : rows) {
    std::vector<Integer> r;
    for (long v : row)
      r.emplace_back(v);
    append_row(r);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

void IntMatrix::append_row(const std::vector<Integer> &row) {
  if (rows_ == 0 && data_.empty())
    cols_ = row.size();
  if (row.size() != cols_)
    throw std::invalid_argument("append_row: expected " +
                                std::to_string(cols_) + " columns, got " +
                                std::to_string(row.size()));
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer &k) {
  if (k == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0)
      (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Integer &k) {
  if (k == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0)
      (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(r, j) = -(*this)(r, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

MatrixCapExceeded::MatrixCapExceeded(std::size_t rows, std::size_t cols,
                                     std::size_t cap)
    : std::runtime_error("relation matrix " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " exceeds the size cap " +
                         std::to_string(cap)) {}

namespace {

// Elimination state: A with optional row/column transformation trackers.
class SmithReducer {
public:
  SmithReducer(const IntMatrix &m, bool track) : a_(m), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
    }
  }

  SmithForm run() {
    const std::size_t diag = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < diag; ++t) {
      if (!reduce_corner(t))
        break;
    }
    SmithForm out;
    for (std::size_t i = 0; i < t; ++i)
      out.invariants.push_back(a_(i, i));
    if (track_)
      out.certificate = SmithCertificate{std::move(u_), std::move(v_)};
    return out;
  }

private:
  // Minimal |entry| in the trailing submatrix; ties go to the lowest row,
  // then the lowest column.
  bool find_pivot(std::size_t t, std::size_t &pr, std::size_t &pc) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const auto &v = a_(i, j);
        if (v == 0)
          continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
          best = v;
          pr = i;
          pc = j;
          found = true;
          if (best == 1 || best == -1)
            return true;
        }
      }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    if (track_)
      u_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    a_.swap_cols(a, b);
    if (track_)
      v_.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer &k) {
    a_.add_row_multiple(dst, src, k);
    if (track_)
      u_.add_row_multiple(dst, src, k);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer &k) {
    a_.add_col_multiple(dst, src, k);
    if (track_)
      v_.add_col_multiple(dst, src, k);
  }

  // Brings a divisor of the whole trailing block to (t, t) and clears its row
  // and column. Returns false if the trailing block is zero.
  bool reduce_corner(std::size_t t) {
    while (true) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(t, pr, pc))
        return false;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (a_(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (a_(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue; // a smaller remainder now exists; repivot

      // Row and column are clear. Enforce divisibility of the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < a_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(),
                                                a_(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (!divides)
        continue;

      if (a_(t, t) < 0) {
        a_.negate_row(t);
        if (track_)
          u_.negate_row(t);
      }
      return true;
    }
  }

  IntMatrix a_;
  bool track_;
  IntMatrix u_, v_;
};

void check_cap(const IntMatrix &m, std::size_t cap) {
  if (m.rows() > cap || m.cols() > cap)
    throw MatrixCapExceeded(m.rows(), m.cols(), cap);
}

} // namespace

SmithForm smith_normal_form(const IntMatrix &m, bool want_certificate,
                            std::size_t cap) {
  check_cap(m, cap);
  return SmithReducer(m, want_certificate).run();
}

AbelianGroup cokernel(const IntMatrix &m, std::size_t ambient_rank,
                      std::size_t cap) {
  if (m.rows() > 0 && m.cols() != ambient_rank)
    throw std::invalid_argument("cokernel: matrix has " +
                                std::to_string(m.cols()) +
                                " columns, ambient rank is " +
                                std::to_string(ambient_rank));
  AbelianGroup out;
  if (m.rows() == 0) {
    out.free_rank = ambient_rank;
    return out;
  }
  auto snf = smith_normal_form(m, false, cap);
  out.free_rank = ambient_rank - snf.rank();
  for (auto &d : snf.invariants)
    if (d > 1)
      out.torsion.push_back(std::move(d));
  return out;
}

std::size_t rational_rank(const IntMatrix &m) {
  IntMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    // Euclid on the column entries below `rank` until one nonzero remains.
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = rank; i < a.rows(); ++i)
        if (a(i, col) != 0 &&
            (best == a.rows() || mpz_cmpabs(a(i, col).get_mpz_t(), a(best, col).get_mpz_t()) < 0))
          best = i;
      if (best == a.rows())
        break;
      a.swap_rows(rank, best);
      bool others = false;
      Integer q;
      for (std::size_t i = rank + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(),
                   a(rank, col).get_mpz_t());
        a.add_row_multiple(i, rank, -q);
        others = others || a(i, col) != 0;
      }
      if (!others) {
        ++rank;
        break;
      }
    }
  }
  return rank;
}

std::string to_string(const AbelianGroup &g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1)
    parts.emplace_back("Z");
  else if (g.free_rank > 1)
    parts.push_back("Z^" + std::to_string(g.free_rank));
  for (const auto &d : g.torsion)
    parts.push_back("Z/" + d.get_str());
  if (parts.empty())
    return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    out += " + " + parts[i];
  return out;
}

} // namespace zipchow::zlinalg
