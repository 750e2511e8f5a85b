#pragma once
#include "kergrad/field.hpp"
#include <cstdint>
#include <map>
#include <utility>

namespace kergrad {

// Sparse matrix over a fixed field; only nonzero entries are stored.
class ExactMatrix {
public:
    ExactMatrix(FieldSpec f, int64_t rows, int64_t cols);

    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    void set(int64_t r, int64_t c, const Scalar& v);
    void add(int64_t r, int64_t c, const Scalar& v);
    Scalar get(int64_t r, int64_t c) const;
    int64_t nonzeros() const { return static_cast<int64_t>(entries_.size()); }
    const std::map<std::pair<int64_t, int64_t>, Scalar>& entries() const { return entries_; }

    int64_t rank() const;
    int64_t kernel_dim() const { return cols_ - rank(); }

private:
    FieldSpec field_;
    int64_t rows_;
    int64_t cols_;
    std::map<std::pair<int64_t, int64_t>, Scalar> entries_;
    void check_index(int64_t r, int64_t c) const;
};

// Kernel dimension of the vertical stack of two matrices with equal column counts.
int64_t joint_kernel_dim(const ExactMatrix& top, const ExactMatrix& bottom);

} // namespace kergrad
