#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "spguard/errors.hpp"

namespace spguard {

// Dense C x H x W tensor of doubles, channel-major then row-major.
// Used for latents, noise estimates, direction fields and masks alike.
struct Tensor3 {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> values;

    Tensor3() = default;

    Tensor3(int c, int h, int w, double fill = 0.0)
        : channels(c), height(h), width(w) {
        if (c <= 0 || h <= 0 || w <= 0) {
            throw ContractViolation("Tensor3: dimensions must be positive");
        }
        values.assign(static_cast<std::size_t>(c) * h * w, fill);
    }

    static Tensor3 from_values(int c, int h, int w, std::vector<double> v) {
        Tensor3 t;
        if (c <= 0 || h <= 0 || w <= 0) {
            throw ContractViolation("Tensor3: dimensions must be positive");
        }
        if (v.size() != static_cast<std::size_t>(c) * h * w) {
            throw ContractViolation("Tensor3: value count does not match C*H*W");
        }
        t.channels = c;
        t.height = h;
        t.width = w;
        t.values = std::move(v);
        return t;
    }

    std::size_t size() const { return values.size(); }

    std::size_t index(int c, int i, int j) const {
        return (static_cast<std::size_t>(c) * height + i) * width + j;
    }

    double& at(int c, int i, int j) { return values[index(c, i, j)]; }
    double at(int c, int i, int j) const { return values[index(c, i, j)]; }

    bool same_shape(const Tensor3& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }

    bool all_finite() const {
        for (double v : values) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

    std::span<const double> flat() const { return {values.data(), values.size()}; }
};

inline void require_same_shape(const Tensor3& a, const Tensor3& b, const char* op) {
    if (!a.same_shape(b)) {
        throw ContractViolation(std::string(op) + ": shape mismatch");
    }
}

inline Tensor3 zeros_like(const Tensor3& t) {
    return Tensor3(t.channels, t.height, t.width, 0.0);
}

inline Tensor3 abs_tensor(const Tensor3& t) {
    Tensor3 out = t;
    for (double& v : out.values) v = std::fabs(v);
    return out;
}

inline double min_value(const Tensor3& t) {
    return *std::min_element(t.values.begin(), t.values.end());
}

inline double max_value(const Tensor3& t) {
    return *std::max_element(t.values.begin(), t.values.end());
}

inline double mean_value(const Tensor3& t) {
    double s = 0.0;
    for (double v : t.values) s += v;
    return s / static_cast<double>(t.size());
}

// Cosine similarity of two equal-length vectors. Returns 0 when either norm
// falls below 1e-12 so that degenerate directions read as uninformative.
inline double cosine_sim(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ContractViolation("cosine_sim: length mismatch");
    }
    if (a.empty()) {
        throw ContractViolation("cosine_sim: vectors must have length >= 1");
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    na = std::sqrt(na);
    nb = std::sqrt(nb);
    if (na < 1e-12 || nb < 1e-12) return 0.0;
    return std::clamp(dot / (na * nb), -1.0, 1.0);
}

inline double cosine_sim(const Tensor3& a, const Tensor3& b) {
    require_same_shape(a, b, "cosine_sim");
    return cosine_sim(a.flat(), b.flat());
}

// Cosine over strided views; used for per-pixel channel vectors.
inline double cosine_sim_strided(const double* a, const double* b, int n, std::size_t stride) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = a[static_cast<std::size_t>(k) * stride];
        const double y = b[static_cast<std::size_t>(k) * stride];
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    na = std::sqrt(na);
    nb = std::sqrt(nb);
    if (na < 1e-12 || nb < 1e-12) return 0.0;
    return std::clamp(dot / (na * nb), -1.0, 1.0);
}

// Nearest-rank q-quantile over the supplied magnitudes, meant to be used with
// a strict ">" downstream: exactly N - ceil(q*N) elements of an all-distinct
// tensor exceed the returned threshold. q = 0 imposes no constraint, so every
// element exceeds the threshold. The small slack inside ceil() keeps decimal
// q values (0.9 * 10 -> rank 9) from drifting across the integer boundary.
inline double percentile_threshold(const Tensor3& magnitudes, double q) {
    if (!(q >= 0.0 && q < 1.0)) {
        throw ConfigError("percentile_threshold: q must lie in [0, 1)");
    }
    if (magnitudes.size() == 0) {
        throw ConfigError("percentile_threshold: tensor must be non-empty");
    }
    const double n = static_cast<double>(magnitudes.size());
    const long rank = static_cast<long>(std::ceil(q * n - 1e-9));
    if (rank <= 0) {
        return -std::numeric_limits<double>::infinity();
    }
    std::vector<double> sorted(magnitudes.values);
    const std::size_t idx = static_cast<std::size_t>(rank) - 1;
    std::nth_element(sorted.begin(), sorted.begin() + idx, sorted.end());
    return sorted[idx];
}

}  // namespace spguard
