#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace et {

// A multi-index (j_1,...,j_n), 1-based in every slot.
using MultiIndex = std::vector<int>;

// Dimension vector D = (d_1,...,d_n) of an n-partite system.
class Dims {
 public:
  explicit Dims(std::vector<int> dims) : d_(std::move(dims)) {
    if (d_.size() < 2) throw std::invalid_argument("Dims: need n >= 2");
    int64_t t = 1;
    for (int di : d_) {
      if (di < 1) throw std::invalid_argument("Dims: every d_i must be >= 1");
      t *= di;
      if (t > (int64_t{1} << 31)) throw std::overflow_error("Dims: total dimension exceeds 2^31");
    }
    total_ = t;
  }

  int n() const { return static_cast<int>(d_.size()); }
  int operator[](int i) const { return d_[static_cast<size_t>(i)]; }
  int64_t total() const { return total_; }
  const std::vector<int>& vec() const { return d_; }

  bool operator==(const Dims& o) const { return d_ == o.d_; }
  bool operator!=(const Dims& o) const { return d_ != o.d_; }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < d_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(d_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> d_;
  int64_t total_ = 0;
};

inline int64_t total_dim(const Dims& dims) { return dims.total(); }

// Row-major linear offset, last index fastest; indices are 1-based.
inline uint32_t offset_of(const Dims& dims, const MultiIndex& idx) {
  if (static_cast<int>(idx.size()) != dims.n())
    throw std::invalid_argument("offset_of: index length mismatch");
  int64_t off = 0;
  for (int i = 0; i < dims.n(); ++i) {
    if (idx[static_cast<size_t>(i)] < 1 || idx[static_cast<size_t>(i)] > dims[i])
      throw std::out_of_range("offset_of: index out of range");
    off = off * dims[i] + (idx[static_cast<size_t>(i)] - 1);
  }
  return static_cast<uint32_t>(off);
}

inline MultiIndex index_at(const Dims& dims, uint32_t offset) {
  MultiIndex idx(static_cast<size_t>(dims.n()));
  int64_t off = offset;
  for (int i = dims.n() - 1; i >= 0; --i) {
    idx[static_cast<size_t>(i)] = static_cast<int>(off % dims[i]) + 1;
    off /= dims[i];
  }
  return idx;
}

// A support pattern: the set of positions carrying nonzero coefficients.
// Stored as sorted unique offsets; L(v) = length().
class Support {
 public:
  Support(Dims dims, std::vector<uint32_t> offsets) : dims_(std::move(dims)), off_(std::move(offsets)) {
    std::sort(off_.begin(), off_.end());
    off_.erase(std::unique(off_.begin(), off_.end()), off_.end());
    if (!off_.empty() && off_.back() >= static_cast<uint64_t>(dims_.total()))
      throw std::out_of_range("Support: offset out of range");
  }

  static Support empty(const Dims& dims) { return Support(dims, {}); }

  static Support full(const Dims& dims) {
    std::vector<uint32_t> o(static_cast<size_t>(dims.total()));
    for (size_t k = 0; k < o.size(); ++k) o[k] = static_cast<uint32_t>(k);
    return Support(dims, std::move(o));
  }

  static Support of_indices(const Dims& dims, const std::vector<MultiIndex>& idxs) {
    std::vector<uint32_t> o;
    o.reserve(idxs.size());
    for (const auto& i : idxs) o.push_back(offset_of(dims, i));
    return Support(dims, std::move(o));
  }

  const Dims& dims() const { return dims_; }
  size_t length() const { return off_.size(); }
  const std::vector<uint32_t>& offsets() const { return off_; }

  bool contains(uint32_t off) const {
    return std::binary_search(off_.begin(), off_.end(), off);
  }

  std::vector<MultiIndex> indices() const {
    std::vector<MultiIndex> out;
    out.reserve(off_.size());
    for (uint32_t o : off_) out.push_back(index_at(dims_, o));
    return out;
  }

  Support with(uint32_t off) const {
    auto o = off_;
    o.push_back(off);
    return Support(dims_, std::move(o));
  }

  bool operator==(const Support& o) const { return dims_ == o.dims_ && off_ == o.off_; }

 private:
  Dims dims_;
  std::vector<uint32_t> off_;
};

}  // namespace et
