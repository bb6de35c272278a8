#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hca/exact.hpp"

namespace hca {

/// Dense square matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

  /// Row-major nested initializer, e.g. IntMatrix::from({{0, 1}, {1, 0}}).
  static IntMatrix from(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix zero(int dim) { return IntMatrix(dim); }
  static IntMatrix identity(int dim);

  int dim() const { return dim_; }
  const Int& at(int r, int c) const { return a_[idx(r, c)]; }
  Int& at(int r, int c) { return a_[idx(r, c)]; }

  bool is_symmetric() const;
  bool is_antisymmetric() const;

  IntMatrix transpose() const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix&) const = default;

  /// Lexicographic order on (dim, row-major entries).
  bool lex_less(const IntMatrix& o) const;

  const std::vector<Int>& flat() const { return a_; }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * dim_ + static_cast<std::size_t>(c);
  }

  int dim_ = 0;
  std::vector<Int> a_;
};

/// Dense square matrix of Gaussian integers.
class GaussMatrix {
 public:
  GaussMatrix() = default;
  explicit GaussMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}
  GaussMatrix(const IntMatrix& real, const IntMatrix& imag);

  static GaussMatrix identity(int dim);

  int dim() const { return dim_; }
  const GaussInt& at(int r, int c) const { return a_[idx(r, c)]; }
  GaussInt& at(int r, int c) { return a_[idx(r, c)]; }

  GaussMatrix operator+(const GaussMatrix&) const;
  GaussMatrix operator-(const GaussMatrix&) const;
  GaussMatrix operator*(const GaussMatrix&) const;
  GaussMatrix operator-() const;
  bool operator==(const GaussMatrix&) const = default;

  GaussMatrix conj_transpose() const;
  bool is_hermitian() const;
  Int trace_real() const;
  bool trace_is_real() const;

  IntMatrix real_part() const;
  IntMatrix imag_part() const;

  /// this * v for a Gaussian-integer vector.
  std::vector<GaussInt> apply(const std::vector<GaussInt>& v) const;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * dim_ + static_cast<std::size_t>(c);
  }

  int dim_ = 0;
  std::vector<GaussInt> a_;
};

/// Gaussian-integer matrix validated to equal its conjugate transpose.
/// For G = S + iA with integer parts this is exactly: S symmetric, A
/// antisymmetric.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Throws ValidationError unless m is Hermitian.
  explicit HermitianMatrix(GaussMatrix m);
  HermitianMatrix(const IntMatrix& sym, const IntMatrix& antisym);
  /// Real symmetric case.
  static HermitianMatrix from_symmetric(const IntMatrix& sym);

  int dim() const { return m_.dim(); }
  const GaussMatrix& matrix() const { return m_; }
  const GaussInt& at(int r, int c) const { return m_.at(r, c); }

  bool operator==(const HermitianMatrix&) const = default;

  /// Hermitian product combination [G1, G2] / i; exact on Gaussian integers.
  static HermitianMatrix commutator_over_i(const HermitianMatrix& g1, const HermitianMatrix& g2);

 private:
  GaussMatrix m_;
};

}  // namespace hca
