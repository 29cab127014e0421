// Small dense index containers for tensor components with 2, 3 or 4 indices.
// All axes share one extent (the frame dimension), row-major storage.

#pragma once

#include <cassert>
#include <vector>

namespace tmlift {

template <class T>
class Grid2 {
public:
  Grid2() = default;
  Grid2(int n, const T& init) : n_(n), d_(static_cast<size_t>(n) * n, init) {}

  int extent() const { return n_; }

  T& operator()(int i, int j) {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return d_[static_cast<size_t>(i) * n_ + j];
  }
  const T& operator()(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return d_[static_cast<size_t>(i) * n_ + j];
  }

private:
  int n_ = 0;
  std::vector<T> d_;
};

template <class T>
class Grid3 {
public:
  Grid3() = default;
  Grid3(int n, const T& init) : n_(n), d_(static_cast<size_t>(n) * n * n, init) {}

  int extent() const { return n_; }

  T& operator()(int i, int j, int k) {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_ && k >= 0 && k < n_);
    return d_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
  }
  const T& operator()(int i, int j, int k) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_ && k >= 0 && k < n_);
    return d_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
  }

private:
  int n_ = 0;
  std::vector<T> d_;
};

template <class T>
class Grid4 {
public:
  Grid4() = default;
  Grid4(int n, const T& init) : n_(n), d_(static_cast<size_t>(n) * n * n * n, init) {}

  int extent() const { return n_; }

  T& operator()(int i, int j, int k, int l) {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_ && k >= 0 && k < n_ && l >= 0 && l < n_);
    return d_[((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }
  const T& operator()(int i, int j, int k, int l) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_ && k >= 0 && k < n_ && l >= 0 && l < n_);
    return d_[((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }

private:
  int n_ = 0;
  std::vector<T> d_;
};

}  // namespace tmlift
