#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace ccl {

// Dense h*w*c tensor of doubles, row-major with channels innermost.
// Doubles throughout: the verification suite compares analytic
// gradients against central finite differences, which needs the
// headroom.
struct Tensor {
    int h = 0, w = 0, c = 0;
    std::vector<double> data;

    Tensor() = default;
    Tensor(int h_, int w_, int c_, double fill = 0.0)
        : h(h_), w(w_), c(c_), data(static_cast<size_t>(h_) * w_ * c_, fill) {}

    size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }
    bool same_shape(const Tensor& o) const { return h == o.h && w == o.w && c == o.c; }

    double& at(int y, int x, int ch) {
        return data[(static_cast<size_t>(y) * w + x) * c + ch];
    }
    double at(int y, int x, int ch) const {
        return data[(static_cast<size_t>(y) * w + x) * c + ch];
    }

    // Channel vector at one spatial position.
    std::span<double> pixel(int y, int x) {
        return {data.data() + (static_cast<size_t>(y) * w + x) * c, static_cast<size_t>(c)};
    }
    std::span<const double> pixel(int y, int x) const {
        return {data.data() + (static_cast<size_t>(y) * w + x) * c, static_cast<size_t>(c)};
    }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }

    Tensor& operator+=(const Tensor& o) {
        assert(same_shape(o));
        for (size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
        return *this;
    }

    Tensor& operator*=(double s) {
        for (auto& v : data) v *= s;
        return *this;
    }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline double l2_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace ccl
