#include "hca/matrix.hpp"

#include "hca/errors.hpp"

namespace hca {

IntMatrix IntMatrix::from(std::initializer_list<std::initializer_list<long long>> rows) {
  const int d = static_cast<int>(rows.size());
  IntMatrix m(d);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d)
      throw ValidationError("matrix initializer is not square");
    int c = 0;
    for (long long v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r + 1; c < dim_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

bool IntMatrix::is_antisymmetric() const {
  for (int r = 0; r < dim_; ++r) {
    if (!at(r, r).is_zero()) return false;
    for (int c = r + 1; c < dim_; ++c)
      if (at(r, c) != -at(c, r)) return false;
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m.at(c, r) = at(r, c);
  return m;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

bool IntMatrix::lex_less(const IntMatrix& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] != o.a_[i]) return a_[i] < o.a_[i];
  }
  return false;
}

GaussMatrix::GaussMatrix(const IntMatrix& real, const IntMatrix& imag)
    : GaussMatrix(real.dim()) {
  if (real.dim() != imag.dim())
    throw ValidationError("real/imaginary parts have different dimensions");
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) at(r, c) = GaussInt(real.at(r, c), imag.at(r, c));
}

GaussMatrix GaussMatrix::identity(int dim) {
  GaussMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = GaussInt(Int(1));
  return m;
}

GaussMatrix GaussMatrix::operator+(const GaussMatrix& o) const {
  if (dim_ != o.dim_) throw ValidationError("matrix dimension mismatch");
  GaussMatrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

GaussMatrix GaussMatrix::operator-(const GaussMatrix& o) const {
  if (dim_ != o.dim_) throw ValidationError("matrix dimension mismatch");
  GaussMatrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

GaussMatrix GaussMatrix::operator*(const GaussMatrix& o) const {
  if (dim_ != o.dim_) throw ValidationError("matrix dimension mismatch");
  GaussMatrix m(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int k = 0; k < dim_; ++k) {
      const GaussInt& lhs = at(r, k);
      if (lhs.is_zero()) continue;
      for (int c = 0; c < dim_; ++c) m.at(r, c) += lhs * o.at(k, c);
    }
  }
  return m;
}

GaussMatrix GaussMatrix::operator-() const {
  GaussMatrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

GaussMatrix GaussMatrix::conj_transpose() const {
  GaussMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m.at(c, r) = at(r, c).conj();
  return m;
}

bool GaussMatrix::is_hermitian() const { return *this == conj_transpose(); }

Int GaussMatrix::trace_real() const {
  Int t = 0;
  for (int i = 0; i < dim_; ++i) t += at(i, i).re;
  return t;
}

bool GaussMatrix::trace_is_real() const {
  for (int i = 0; i < dim_; ++i)
    if (!at(i, i).im.is_zero()) return false;
  return true;
}

IntMatrix GaussMatrix::real_part() const {
  IntMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m.at(r, c) = at(r, c).re;
  return m;
}

IntMatrix GaussMatrix::imag_part() const {
  IntMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m.at(r, c) = at(r, c).im;
  return m;
}

std::vector<GaussInt> GaussMatrix::apply(const std::vector<GaussInt>& v) const {
  if (static_cast<int>(v.size()) != dim_) throw ValidationError("matrix/vector dimension mismatch");
  std::vector<GaussInt> out(v.size());
  for (int r = 0; r < dim_; ++r) {
    GaussInt acc;
    for (int c = 0; c < dim_; ++c) {
      if (!at(r, c).is_zero()) acc += at(r, c) * v[static_cast<std::size_t>(c)];
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

HermitianMatrix::HermitianMatrix(GaussMatrix m) : m_(std::move(m)) {
  if (!m_.is_hermitian()) throw ValidationError("matrix is not Hermitian");
}

HermitianMatrix::HermitianMatrix(const IntMatrix& sym, const IntMatrix& antisym)
    : HermitianMatrix(GaussMatrix(sym, antisym)) {}

HermitianMatrix HermitianMatrix::from_symmetric(const IntMatrix& sym) {
  return HermitianMatrix(sym, IntMatrix::zero(sym.dim()));
}

HermitianMatrix HermitianMatrix::commutator_over_i(const HermitianMatrix& g1,
                                                   const HermitianMatrix& g2) {
  if (g1.dim() != g2.dim()) throw ValidationError("observable dimension mismatch");
  GaussMatrix comm = g1.matrix() * g2.matrix() - g2.matrix() * g1.matrix();
  GaussMatrix out(comm.dim());
  for (int r = 0; r < comm.dim(); ++r)
    for (int c = 0; c < comm.dim(); ++c) out.at(r, c) = comm.at(r, c).div_i();
  return HermitianMatrix(std::move(out));
}

}  // namespace hca
