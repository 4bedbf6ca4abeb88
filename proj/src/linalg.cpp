#include "coneproj/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace coneproj {

namespace {

constexpr double kPi = std::numbers::pi;

void require_same_dim(const Vec& a, const Vec& b, const char* what) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

}  // namespace

double dot(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& v) { return std::sqrt(dot(v, v)); }

Vec add(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "add");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "sub");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec scaled(const Vec& v, double s) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Vec zero_vector(std::size_t dim) { return Vec(dim, 0.0); }

bool all_finite(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

bool is_zero(const Vec& v) {
    return norm(v) <= 1e-12 * std::sqrt(static_cast<double>(v.size()));
}

double angle_between(const Vec& u, const Vec& v) {
    require_same_dim(u, v, "angle_between");
    if (is_zero(u) || is_zero(v)) return kPi;
    const double nu = norm(u);
    const double nv = norm(v);
    // theta = 2 atan2(||u nv - v nu||, ||u nv + v nu||)
    double diff2 = 0.0;
    double sum2 = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double a = u[i] * nv;
        const double b = v[i] * nu;
        diff2 += (a - b) * (a - b);
        sum2 += (a + b) * (a + b);
    }
    return 2.0 * std::atan2(std::sqrt(diff2), std::sqrt(sum2));
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<Vec> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

SubspaceBasis SubspaceBasis::orthonormalize(const std::vector<Vec>& spanning,
                                            std::size_t ambient_dim) {
    if (ambient_dim == 0) {
        throw std::invalid_argument("orthonormalize: ambient dimension must be positive");
    }
    double max_norm = 0.0;
    for (const Vec& w : spanning) {
        if (w.size() != ambient_dim) {
            throw std::invalid_argument("orthonormalize: dimension mismatch among inputs");
        }
        if (!all_finite(w)) {
            throw std::invalid_argument("orthonormalize: non-finite coordinate");
        }
        max_norm = std::max(max_norm, norm(w));
    }
    const double rank_tol = 1e-12 * max_norm;

    std::vector<Vec> basis;
    for (const Vec& w : spanning) {
        if (basis.size() == ambient_dim) break;
        Vec r = w;
        // Twice is enough: one re-orthogonalization pass keeps the Gram
        // deviation below 1e-10 even for ill-conditioned spanning sets.
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vec& q : basis) {
                const double c = dot(r, q);
                for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * q[i];
            }
        }
        const double rn = norm(r);
        if (rn > rank_tol && rn > 0.0) {
            for (double& x : r) x /= rn;
            basis.push_back(std::move(r));
        }
    }
    return SubspaceBasis(ambient_dim, std::move(basis));
}

SubspaceBasis SubspaceBasis::coordinate(std::size_t ambient_dim,
                                        const std::vector<std::size_t>& axes) {
    if (ambient_dim == 0) {
        throw std::invalid_argument("coordinate: ambient dimension must be positive");
    }
    std::vector<std::size_t> sorted = axes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("coordinate: duplicate axis index");
    }
    std::vector<Vec> basis;
    basis.reserve(sorted.size());
    for (std::size_t axis : sorted) {
        if (axis >= ambient_dim) {
            throw std::invalid_argument("coordinate: axis index out of range");
        }
        Vec e = zero_vector(ambient_dim);
        e[axis] = 1.0;
        basis.push_back(std::move(e));
    }
    return SubspaceBasis(ambient_dim, std::move(basis));
}

SubspaceBasis SubspaceBasis::zero_subspace(std::size_t ambient_dim) {
    if (ambient_dim == 0) {
        throw std::invalid_argument("zero_subspace: ambient dimension must be positive");
    }
    return SubspaceBasis(ambient_dim, {});
}

SubspaceBasis SubspaceBasis::full_space(std::size_t ambient_dim) {
    std::vector<std::size_t> axes(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) axes[i] = i;
    return coordinate(ambient_dim, axes);
}

Decomposition SubspaceBasis::decompose(const Vec& u) const {
    if (u.size() != ambient_dim_) {
        throw std::invalid_argument("decompose: dimension mismatch");
    }
    Vec parallel = zero_vector(ambient_dim_);
    for (const Vec& q : basis_) {
        const double c = dot(u, q);
        for (std::size_t i = 0; i < ambient_dim_; ++i) parallel[i] += c * q[i];
    }
    Vec perpendicular = sub(u, parallel);
    return {std::move(parallel), std::move(perpendicular)};
}

Vec SubspaceBasis::project(const Vec& u) const { return decompose(u).parallel; }

SubspaceBasis SubspaceBasis::complement() const {
    std::vector<Vec> ext = basis_;
    ext.reserve(basis_.size() + ambient_dim_);
    for (std::size_t i = 0; i < ambient_dim_; ++i) {
        Vec e = zero_vector(ambient_dim_);
        e[i] = 1.0;
        ext.push_back(std::move(e));
    }
    SubspaceBasis full = orthonormalize(ext, ambient_dim_);
    std::vector<Vec> tail(full.basis_.begin() + static_cast<std::ptrdiff_t>(dim()),
                          full.basis_.end());
    return SubspaceBasis(ambient_dim_, std::move(tail));
}

Vec SubspaceBasis::unit_orthogonal_to(const Vec& w) const {
    if (w.size() != ambient_dim_) {
        throw std::invalid_argument("unit_orthogonal_to: dimension mismatch");
    }
    Vec w1 = project(w);
    std::vector<Vec> ext;
    const bool anchored = !is_zero(w1);
    if (anchored) ext.push_back(std::move(w1));
    for (const Vec& q : basis_) ext.push_back(q);
    SubspaceBasis span = orthonormalize(ext, ambient_dim_);
    const std::size_t want = anchored ? 2 : 1;
    if (span.dim() < want) {
        throw std::domain_error(
            "unit_orthogonal_to: subspace has no direction orthogonal to the anchor");
    }
    return span.basis_[want - 1];
}

double SubspaceBasis::max_gram_deviation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = i; j < basis_.size(); ++j) {
            const double expected = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot(basis_[i], basis_[j]) - expected));
        }
    }
    return worst;
}

double angle_to_subspace(const Vec& u, const SubspaceBasis& V) {
    if (u.size() != V.ambient_dim()) {
        throw std::invalid_argument("angle_to_subspace: dimension mismatch");
    }
    if (is_zero(u)) return kPi;
    if (V.dim() == 0) return kPi;  // angle to {O}
    const double ratio = norm(V.project(u)) / norm(u);
    return std::acos(std::clamp(ratio, -1.0, 1.0));
}

double angle_to_complement(const Vec& u, const SubspaceBasis& V) {
    if (u.size() != V.ambient_dim()) {
        throw std::invalid_argument("angle_to_complement: dimension mismatch");
    }
    if (is_zero(u)) return kPi;
    if (V.is_full_space()) return kPi;  // the complement of H is {O}
    const Decomposition d = V.decompose(u);
    const double ratio = norm(d.perpendicular) / norm(u);
    return std::acos(std::clamp(ratio, -1.0, 1.0));
}

}  // namespace coneproj
