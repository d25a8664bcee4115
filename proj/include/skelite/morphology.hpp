#pragma once

#include <algorithm>
#include <vector>

#include "skelite/grid.hpp"

namespace skelite {

namespace detail {

// 1D sliding min/max over a window of 3, out-of-range samples read as `pad`.
// src and dst are strided views into the grid payload.
template <typename T, bool Max>
void slide3(const T* src, T* dst, int n, long stride, T pad) {
    for (int i = 0; i < n; ++i) {
        T a = i > 0 ? src[(i - 1) * stride] : pad;
        T b = src[i * stride];
        T c = i + 1 < n ? src[(i + 1) * stride] : pad;
        if constexpr (Max)
            dst[i * stride] = std::max(a, std::max(b, c));
        else
            dst[i * stride] = std::min(a, std::min(b, c));
    }
}

// Separable 3-per-axis window min or max with out-of-grid cells counting as
// `pad`. Equivalent to the full 3^d window because min/max factor per axis.
template <typename T, bool Max>
BasicGrid<T> pool3(const BasicGrid<T>& g, T pad) {
    for (int a = 0; a < g.ndim(); ++a)
        if (g.extent(a) < 3)
            throw ShapeError("morphology needs every extent >= 3, got " + std::to_string(g.extent(a)));

    BasicGrid<T> cur = g;
    BasicGrid<T> tmp(g.extents(), g.kind());
    if (g.ndim() == 2) {
        const int h = g.extent(0), w = g.extent(1);
        for (int y = 0; y < h; ++y)
            slide3<T, Max>(cur.data().data() + static_cast<long>(y) * w,
                           tmp.data().data() + static_cast<long>(y) * w, w, 1, pad);
        for (int x = 0; x < w; ++x)
            slide3<T, Max>(tmp.data().data() + x, cur.data().data() + x, h, w, pad);
        return cur;
    }
    const int d = g.extent(0), h = g.extent(1), w = g.extent(2);
    const long plane = static_cast<long>(h) * w;
    for (int z = 0; z < d; ++z)
        for (int y = 0; y < h; ++y) {
            long off = z * plane + static_cast<long>(y) * w;
            slide3<T, Max>(cur.data().data() + off, tmp.data().data() + off, w, 1, pad);
        }
    for (int z = 0; z < d; ++z)
        for (int x = 0; x < w; ++x) {
            long off = z * plane + x;
            slide3<T, Max>(tmp.data().data() + off, cur.data().data() + off, h, w, pad);
        }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            long off = static_cast<long>(y) * w + x;
            slide3<T, Max>(cur.data().data() + off, tmp.data().data() + off, d, plane, pad);
        }
    return tmp;
}

} // namespace detail

// Morphological erosion: 1 - maxpool3(1 - g), i.e. a windowed min with
// out-of-grid cells treated as background, so border foreground erodes.
template <typename T>
BasicGrid<T> erode(const BasicGrid<T>& g) {
    return detail::pool3<T, false>(g, T(0));
}

// Morphological dilation: maxpool3(g), zero padding.
template <typename T>
BasicGrid<T> dilate(const BasicGrid<T>& g) {
    return detail::pool3<T, true>(g, T(0));
}

// Boundary shell: g - erode(erode(g)), the outer two foreground layers.
template <typename T>
BasicGrid<T> boundary(const BasicGrid<T>& g) {
    return elementwise(g, erode(erode(g)), ElementwiseOp::sub);
}

} // namespace skelite
