#pragma once

#include <cassert>
#include <cstddef>
#include <span>

#include "cftft/field.hpp"

namespace cftft {

/// Non-owning strided window onto a coefficient buffer. Element i lives at
/// data[i * stride]. Transforms address matrix rows (stride unchanged) and
/// columns (stride scaled by the row width) through the same type.
class StridedView {
 public:
  StridedView(std::span<Fp> buffer, std::size_t base, std::size_t stride, std::size_t len)
      : data_(buffer.data() + base), stride_(stride), len_(len) {
    assert(stride >= 1 && len >= 1);
    assert(base + (len - 1) * stride < buffer.size());
  }

  explicit StridedView(std::span<Fp> buffer) : StridedView(buffer, 0, 1, buffer.size()) {}

  Fp& operator[](std::size_t i) const {
    assert(i < len_);
    return data_[i * stride_];
  }

  std::size_t size() const noexcept { return len_; }
  std::size_t stride() const noexcept { return stride_; }

  /// Column u of this view read as a rows x cols matrix.
  StridedView column(std::size_t u, std::size_t rows, std::size_t cols) const {
    assert(u < cols && rows * cols == len_);
    return StridedView(data_ + u * stride_, stride_ * cols, rows);
  }

  /// Row u of this view read as a matrix with the given row width.
  StridedView row(std::size_t u, std::size_t cols) const {
    assert((u + 1) * cols <= len_);
    return StridedView(data_ + u * cols * stride_, stride_, cols);
  }

 private:
  StridedView(Fp* data, std::size_t stride, std::size_t len)
      : data_(data), stride_(stride), len_(len) {}

  Fp* data_;
  std::size_t stride_;
  std::size_t len_;
};

}  // namespace cftft
