#ifndef MFTK_FEATURES_H_
#define MFTK_FEATURES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mftk {

// Sparse row vector; indices strictly increasing.
struct SparseVector {
  std::size_t dimension = 0;
  std::vector<std::uint32_t> indices;
  std::vector<double> values;

  std::size_t nnz() const { return indices.size(); }
  std::vector<double> ToDense() const;
  static SparseVector FromDense(std::span<const double> dense);
};

// Compressed sparse rows. Dense inputs are stored with every entry present.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  explicit FeatureMatrix(std::size_t cols) : cols_(cols) {}

  static FeatureMatrix FromRows(std::span<const SparseVector> rows, std::size_t cols);
  static FeatureMatrix FromDense(std::span<const std::vector<double>> rows);

  // Throws kDimensionMismatch if row.dimension != cols().
  void AppendRow(const SparseVector& row);

  std::size_t rows() const { return row_ptr_.size() - 1; }
  std::size_t cols() const { return cols_; }

  std::span<const std::uint32_t> RowIndices(std::size_t r) const {
    return std::span<const std::uint32_t>(col_idx_).subspan(
        row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]);
  }
  std::span<const double> RowValues(std::size_t r) const {
    return std::span<const double>(values_).subspan(row_ptr_[r],
                                                    row_ptr_[r + 1] - row_ptr_[r]);
  }
  SparseVector Row(std::size_t r) const;

  double Dot(std::size_t r, std::span<const double> w) const;
  FeatureMatrix SelectRows(std::span<const std::size_t> rows) const;
  bool AllFinite() const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::uint32_t> col_idx_;
  std::vector<double> values_;
};

}  // namespace mftk

#endif  // MFTK_FEATURES_H_
