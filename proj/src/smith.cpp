#include "cliqueline/smith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace cliqueline {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(x, b(k, j), &prod) ||
            __builtin_add_overflow(out(i, j), prod, &out(i, j))) {
          throw std::overflow_error("matrix product overflows int64");
        }
      }
    }
  }
  return out;
}

namespace {

struct Overflow {};

// int64 whose arithmetic throws Overflow instead of wrapping.
struct Checked {
  std::int64_t v = 0;

  friend Checked operator+(Checked a, Checked b) {
    Checked r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    Checked r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) {
    if (a.v == std::numeric_limits<std::int64_t>::min() && b.v == -1) throw Overflow{};
    return {a.v / b.v};
  }
  friend Checked operator%(Checked a, Checked b) {
    if (b.v == -1) return {0};
    return {a.v % b.v};
  }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  friend bool operator<(Checked a, Checked b) { return a.v < b.v; }
};

Checked abs_value(Checked x) {
  if (x.v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return {x.v < 0 ? -x.v : x.v};
}
BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

bool is_zero(Checked x) { return x.v == 0; }
bool is_zero(const BigInt& x) { return x.is_zero(); }

BigInt to_big(Checked x) { return BigInt(x.v); }
BigInt to_big(const BigInt& x) { return x; }

template <class Int>
class Work {
 public:
  Work(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), a_(m.rows() * m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = Int{m(i, j)};
  }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t x, std::size_t y, std::size_t from) {
    if (x == y) return;
    for (std::size_t j = from; j < cols_; ++j) std::swap(at(x, j), at(y, j));
  }
  void swap_cols(std::size_t x, std::size_t y, std::size_t from) {
    if (x == y) return;
    for (std::size_t i = from; i < rows_; ++i) std::swap(at(i, x), at(i, y));
  }
  // row_dst -= q * row_src over columns >= from
  void row_sub(std::size_t dst, std::size_t src, const Int& q, std::size_t from) {
    for (std::size_t j = from; j < cols_; ++j) {
      if (!is_zero(at(src, j))) at(dst, j) = at(dst, j) - q * at(src, j);
    }
  }
  void col_sub(std::size_t dst, std::size_t src, const Int& q, std::size_t from) {
    for (std::size_t i = from; i < rows_; ++i) {
      if (!is_zero(at(i, src))) at(i, dst) = at(i, dst) - q * at(i, src);
    }
  }
  void row_add(std::size_t dst, std::size_t src, std::size_t from) {
    for (std::size_t j = from; j < cols_; ++j) at(dst, j) = at(dst, j) + at(src, j);
  }

  std::vector<BigInt> reduce() {
    std::vector<BigInt> factors;
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!place_smallest_pivot(t)) break;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (is_zero(at(i, t))) continue;
          row_sub(i, t, at(i, t) / at(t, t), t);
          if (!is_zero(at(i, t))) clean = false;
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (is_zero(at(t, j))) continue;
          col_sub(j, t, at(t, j) / at(t, t), t);
          if (!is_zero(at(t, j))) clean = false;
        }
        if (!clean) {
          place_smallest_in_cross(t);
          continue;
        }
        // Divisibility: the pivot must divide the whole remaining block.
        if (!(abs_value(at(t, t)) == Int{1})) {
          std::size_t bad_row = rows_;
          for (std::size_t i = t + 1; i < rows_ && bad_row == rows_; ++i)
            for (std::size_t j = t + 1; j < cols_; ++j)
              if (!is_zero(at(i, j) % at(t, t))) {
                bad_row = i;
                break;
              }
          if (bad_row != rows_) {
            row_add(t, bad_row, t);
            continue;
          }
        }
        break;
      }
      factors.push_back(abs_value(to_big(at(t, t))));
    }
    return factors;
  }

 private:
  bool place_smallest_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Int best{};
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (is_zero(at(i, j))) continue;
        Int mag = abs_value(at(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          bi = i;
          bj = j;
          if (best == Int{1}) goto done;
        }
      }
    }
  done:
    if (!found) return false;
    swap_rows(t, bi, t);
    swap_cols(t, bj, t);
    return true;
  }

  // After a failed elimination pass the remainders sit in row t and column t.
  void place_smallest_in_cross(std::size_t t) {
    bool in_col = true;
    std::size_t best_idx = t;
    Int best = abs_value(at(t, t));
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (!is_zero(at(i, t)) && abs_value(at(i, t)) < best) {
        best = abs_value(at(i, t));
        best_idx = i;
        in_col = true;
      }
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (!is_zero(at(t, j)) && abs_value(at(t, j)) < best) {
        best = abs_value(at(t, j));
        best_idx = j;
        in_col = false;
      }
    }
    if (in_col) {
      swap_rows(t, best_idx, t);
    } else {
      swap_cols(t, best_idx, t);
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> a_;
};

}  // namespace

SNFResult smith_normal_form_exact(const IntMatrix& m) {
  Work<BigInt> work(m);
  return SNFResult{work.reduce(), true};
}

SNFResult smith_normal_form(const IntMatrix& m) {
  try {
    Work<Checked> work(m);
    return SNFResult{work.reduce(), false};
  } catch (const Overflow&) {
    return smith_normal_form_exact(m);
  }
}

}  // namespace cliqueline
