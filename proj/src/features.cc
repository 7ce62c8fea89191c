#include "mftk/features.h"

#include <cmath>
#include <string>

#include "mftk/error.h"

namespace mftk {

std::vector<double> SparseVector::ToDense() const {
  std::vector<double> out(dimension, 0.0);
  for (std::size_t k = 0; k < indices.size(); ++k) out[indices[k]] = values[k];
  return out;
}

SparseVector SparseVector::FromDense(std::span<const double> dense) {
  SparseVector out;
  out.dimension = dense.size();
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (dense[j] != 0.0) {
      out.indices.push_back(static_cast<std::uint32_t>(j));
      out.values.push_back(dense[j]);
    }
  }
  return out;
}

FeatureMatrix FeatureMatrix::FromRows(std::span<const SparseVector> rows,
                                      std::size_t cols) {
  FeatureMatrix m(cols);
  for (const auto& r : rows) m.AppendRow(r);
  return m;
}

FeatureMatrix FeatureMatrix::FromDense(std::span<const std::vector<double>> rows) {
  FeatureMatrix m(rows.empty() ? 0 : rows.front().size());
  for (const auto& r : rows) {
    if (r.size() != m.cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged dense feature rows");
    }
    for (std::size_t j = 0; j < r.size(); ++j) {
      m.col_idx_.push_back(static_cast<std::uint32_t>(j));
      m.values_.push_back(r[j]);
    }
    m.row_ptr_.push_back(m.col_idx_.size());
  }
  return m;
}

void FeatureMatrix::AppendRow(const SparseVector& row) {
  if (row.dimension != cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "row has dimension " + std::to_string(row.dimension) + ", matrix has " +
                    std::to_string(cols_));
  }
  col_idx_.insert(col_idx_.end(), row.indices.begin(), row.indices.end());
  values_.insert(values_.end(), row.values.begin(), row.values.end());
  row_ptr_.push_back(col_idx_.size());
}

SparseVector FeatureMatrix::Row(std::size_t r) const {
  SparseVector out;
  out.dimension = cols_;
  const auto idx = RowIndices(r);
  const auto val = RowValues(r);
  out.indices.assign(idx.begin(), idx.end());
  out.values.assign(val.begin(), val.end());
  return out;
}

double FeatureMatrix::Dot(std::size_t r, std::span<const double> w) const {
  double s = 0.0;
  for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
    s += values_[k] * w[col_idx_[k]];
  }
  return s;
}

FeatureMatrix FeatureMatrix::SelectRows(std::span<const std::size_t> rows) const {
  FeatureMatrix m(cols_);
  for (std::size_t r : rows) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      m.col_idx_.push_back(col_idx_[k]);
      m.values_.push_back(values_[k]);
    }
    m.row_ptr_.push_back(m.col_idx_.size());
  }
  return m;
}

bool FeatureMatrix::AllFinite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace mftk
