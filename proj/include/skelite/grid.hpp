#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "skelite/errors.hpp"

namespace skelite {

enum class GridKind : std::uint8_t { binary, continuous };

// Dense 2D/3D scalar grid, row-major with the last axis contiguous.
// 2D extents are (rows, cols); 3D extents are (depth, rows, cols).
// Binary grids hold exactly 0 or 1 in every cell; continuous grids hold
// values in [0,1]. Grids are plain values: copy freely, never mutate shared.
template <typename T>
class BasicGrid {
public:
    BasicGrid() = default;

    explicit BasicGrid(std::vector<int> extents, GridKind kind = GridKind::binary)
        : extents_(std::move(extents)), kind_(kind) {
        if (extents_.size() != 2 && extents_.size() != 3)
            throw ShapeError("grid must be 2D or 3D, got " + std::to_string(extents_.size()) + " extents");
        long n = 1;
        for (int e : extents_) {
            if (e <= 0) throw ShapeError("grid extents must be positive");
            n *= e;
        }
        data_.assign(static_cast<std::size_t>(n), T(0));
    }

    static BasicGrid filled(std::vector<int> extents, T value, GridKind kind = GridKind::binary) {
        BasicGrid g(std::move(extents), kind);
        for (auto& v : g.data_) v = value;
        return g;
    }

    int ndim() const { return static_cast<int>(extents_.size()); }
    const std::vector<int>& extents() const { return extents_; }
    int extent(int axis) const { return extents_[static_cast<std::size_t>(axis)]; }
    long size() const { return static_cast<long>(data_.size()); }
    GridKind kind() const { return kind_; }
    void set_kind(GridKind k) { kind_ = k; }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    T operator[](long i) const { return data_[static_cast<std::size_t>(i)]; }
    T& operator[](long i) { return data_[static_cast<std::size_t>(i)]; }

    // 2D access: (row, col). 3D access: (slice, row, col).
    long idx(int i0, int i1) const { return static_cast<long>(i0) * extents_[1] + i1; }
    long idx(int i0, int i1, int i2) const {
        return (static_cast<long>(i0) * extents_[1] + i1) * extents_[2] + i2;
    }
    T at(int i0, int i1) const { return data_[static_cast<std::size_t>(idx(i0, i1))]; }
    T& at(int i0, int i1) { return data_[static_cast<std::size_t>(idx(i0, i1))]; }
    T at(int i0, int i1, int i2) const { return data_[static_cast<std::size_t>(idx(i0, i1, i2))]; }
    T& at(int i0, int i1, int i2) { return data_[static_cast<std::size_t>(idx(i0, i1, i2))]; }

    bool same_shape(const BasicGrid& other) const { return extents_ == other.extents_; }

    bool in_bounds(const std::array<int, 3>& c) const {
        for (int a = 0; a < ndim(); ++a)
            if (c[static_cast<std::size_t>(a)] < 0 || c[static_cast<std::size_t>(a)] >= extents_[static_cast<std::size_t>(a)]) return false;
        return true;
    }

    // Value at coordinate, out-of-bounds cells read as background (0).
    T at_or_zero(const std::array<int, 3>& c) const {
        if (!in_bounds(c)) return T(0);
        long i = c[0];
        for (int a = 1; a < ndim(); ++a) i = i * extents_[static_cast<std::size_t>(a)] + c[static_cast<std::size_t>(a)];
        return data_[static_cast<std::size_t>(i)];
    }

    std::array<int, 3> coord(long flat) const {
        std::array<int, 3> c{0, 0, 0};
        for (int a = ndim() - 1; a >= 0; --a) {
            c[static_cast<std::size_t>(a)] = static_cast<int>(flat % extents_[static_cast<std::size_t>(a)]);
            flat /= extents_[static_cast<std::size_t>(a)];
        }
        return c;
    }

    long count_nonzero() const {
        long n = 0;
        for (const T& v : data_)
            if (v != T(0)) ++n;
        return n;
    }

    bool empty_foreground() const { return count_nonzero() == 0; }

    bool operator==(const BasicGrid& other) const {
        return extents_ == other.extents_ && kind_ == other.kind_ && data_ == other.data_;
    }

private:
    std::vector<int> extents_;
    std::vector<T> data_;
    GridKind kind_ = GridKind::binary;
};

using Grid = BasicGrid<float>;
using GridD = BasicGrid<double>;

enum class ElementwiseOp { mul, sub, add, max };

namespace detail {
inline const char* op_name(ElementwiseOp op) {
    switch (op) {
        case ElementwiseOp::mul: return "mul";
        case ElementwiseOp::sub: return "sub";
        case ElementwiseOp::add: return "add";
        case ElementwiseOp::max: return "max";
    }
    return "?";
}
} // namespace detail

// Per-element combination of two same-shaped grids. Subtraction clamps the
// result to [0,1] only when both inputs are binary; continuous operands keep
// the raw arithmetic so gradient paths stay exact.
template <typename T>
BasicGrid<T> elementwise(const BasicGrid<T>& a, const BasicGrid<T>& b, ElementwiseOp op) {
    if (!a.same_shape(b))
        throw ShapeError(std::string("elementwise ") + detail::op_name(op) + ": shape mismatch");
    const bool both_binary = a.kind() == GridKind::binary && b.kind() == GridKind::binary;
    BasicGrid<T> out(a.extents(), both_binary ? GridKind::binary : GridKind::continuous);
    const T* pa = a.data().data();
    const T* pb = b.data().data();
    T* po = out.data().data();
    const long n = a.size();
    switch (op) {
        case ElementwiseOp::mul:
            for (long i = 0; i < n; ++i) po[i] = pa[i] * pb[i];
            break;
        case ElementwiseOp::sub:
            if (both_binary) {
                for (long i = 0; i < n; ++i) {
                    T v = pa[i] - pb[i];
                    po[i] = v < T(0) ? T(0) : (v > T(1) ? T(1) : v);
                }
            } else {
                for (long i = 0; i < n; ++i) po[i] = pa[i] - pb[i];
            }
            break;
        case ElementwiseOp::add:
            for (long i = 0; i < n; ++i) po[i] = pa[i] + pb[i];
            break;
        case ElementwiseOp::max:
            for (long i = 0; i < n; ++i) po[i] = pa[i] > pb[i] ? pa[i] : pb[i];
            break;
    }
    return out;
}

// True when a's foreground is contained in b's (binary grids).
template <typename T>
bool subset_of(const BasicGrid<T>& a, const BasicGrid<T>& b) {
    if (!a.same_shape(b)) return false;
    for (long i = 0; i < a.size(); ++i)
        if (a[i] != T(0) && b[i] == T(0)) return false;
    return true;
}

} // namespace skelite
