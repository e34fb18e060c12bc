#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliqueline {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Throws std::overflow_error if an entry leaves the int64 range.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SNFResult {
  /// Nonzero invariant factors d1 | d2 | ... | dr, all positive.
  std::vector<BigInt> factors;
  /// True when the int64 fast path overflowed and the exact path was used.
  bool used_bignum = false;

  std::size_t rank() const { return factors.size(); }
};

/// Smith normal form over the integers. Pivots are chosen as the entry of
/// smallest nonzero magnitude. Arithmetic runs in overflow-checked 64-bit
/// integers and restarts in arbitrary precision if any operation overflows,
/// so results are always exact.
SNFResult smith_normal_form(const IntMatrix& m);

/// The same reduction carried out in arbitrary precision from the start.
SNFResult smith_normal_form_exact(const IntMatrix& m);

}  // namespace cliqueline
