#pragma once

#include <cstddef>
#include <vector>

namespace coneproj {

/// Dense real coordinate vector. Dimension is the length.
using Vec = std::vector<double>;

// Basic vector helpers. Inputs are never modified; dimension mismatches
// throw std::invalid_argument.
double dot(const Vec& a, const Vec& b);
double norm(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, double s);
Vec zero_vector(std::size_t dim);
bool all_finite(const Vec& v);

/// Numerical zero test: ||v|| <= 1e-12 * sqrt(dim). All angle conventions
/// that speak about the zero vector use this predicate.
bool is_zero(const Vec& v);

/// Angle between two vectors, in [0, pi]. Returns pi when either vector is
/// zero (by is_zero); this convention keeps degenerate subspaces inside the
/// classification table without special cases. Evaluated with the
/// 2*atan2 formulation, which stays accurate near both 0 and pi.
double angle_between(const Vec& u, const Vec& v);

struct Decomposition {
    Vec parallel;       // component inside the subspace (P u)
    Vec perpendicular;  // component in the orthogonal complement (u - P u)
};

/// Orthonormal basis of a closed subspace of R^n. The empty basis is the
/// zero subspace {O}; n basis vectors span the whole space.
class SubspaceBasis {
  public:
    /// Orthonormalizes a spanning set with modified Gram-Schmidt plus one
    /// re-orthogonalization pass. A vector whose residual norm falls below
    /// 1e-12 * (largest input norm) is dropped as linearly dependent.
    static SubspaceBasis orthonormalize(const std::vector<Vec>& spanning,
                                        std::size_t ambient_dim);

    /// Subspace spanned by the given coordinate axes (0-based, deduplicated
    /// input rejected). The basis vectors are exact standard basis vectors.
    static SubspaceBasis coordinate(std::size_t ambient_dim,
                                    const std::vector<std::size_t>& axes);

    static SubspaceBasis zero_subspace(std::size_t ambient_dim);
    static SubspaceBasis full_space(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero_subspace() const { return basis_.empty(); }
    bool is_full_space() const { return basis_.size() == ambient_dim_; }
    const std::vector<Vec>& vectors() const { return basis_; }

    /// Splits u into the part inside the subspace and the remainder.
    Decomposition decompose(const Vec& u) const;

    /// P u, the orthogonal projection of u onto the subspace.
    Vec project(const Vec& u) const;

    /// Orthonormal basis of the orthogonal complement, computed by a
    /// deterministic extension with standard basis vectors.
    SubspaceBasis complement() const;

    /// Deterministic unit vector inside the subspace orthogonal to w
    /// (orthogonal to P w when w has a component outside). Throws
    /// std::domain_error when no such direction exists.
    Vec unit_orthogonal_to(const Vec& w) const;

    /// max |<b_i, b_j> - delta_ij| over all basis pairs.
    double max_gram_deviation() const;

  private:
    SubspaceBasis(std::size_t ambient_dim, std::vector<Vec> basis);

    std::size_t ambient_dim_;
    std::vector<Vec> basis_;
};

// Angle between a vector and a subspace / its orthogonal complement:
//   angle_to_subspace(u, V)   = arccos(||P u|| / ||u||)
//   angle_to_complement(u, V) = arccos(||u - P u|| / ||u||)
// with the conventions: both are pi for u = O; angle_to_subspace(u, {O}) = pi;
// angle_to_complement(u, H) = pi (the complement of the full space is {O}).
// Away from the degenerate cases the two sum to pi/2.
double angle_to_subspace(const Vec& u, const SubspaceBasis& V);
double angle_to_complement(const Vec& u, const SubspaceBasis& V);

}  // namespace coneproj
