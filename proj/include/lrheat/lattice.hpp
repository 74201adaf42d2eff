#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lrheat/errors.hpp"

namespace lrheat {

// Truncated lattice domain: interior nodes k*h with k_j in [lo_j, hi_j],
// Dirichlet-zero everywhere outside. Node coordinates are exact integer
// multiples of h.
class LatticeBox {
public:
    // Box symmetric about the origin with half-width W_j = m_j * h per axis;
    // interior indices run over [-(m_j-1), m_j-1], so the outermost layer
    // at +-W_j is the (implicit, zero) Dirichlet boundary.
    static LatticeBox symmetric(int dim, double h, std::span<const double> half_widths);
    static LatticeBox symmetric(int dim, double h, double half_width);

    // Box with n_j interior nodes at h, 2h, ..., n_j*h (Dirichlet at 0 and
    // (n_j+1)h). Used for spectra on path graphs of arbitrary node count.
    static LatticeBox from_counts(int dim, double h, std::span<const std::int64_t> counts);

    int dim() const { return dim_; }
    double mesh() const { return h_; }
    std::int64_t lo(int axis) const { return lo_[axis]; }
    std::int64_t hi(int axis) const { return hi_[axis]; }
    std::int64_t nodes_per_axis(int axis) const { return hi_[axis] - lo_[axis] + 1; }
    std::int64_t interior_count() const;
    double half_width(int axis) const;

    // Lexicographic flattening; axis 0 is the slowest index.
    std::int64_t flat_index(std::span<const std::int64_t> k) const;
    void unflatten(std::int64_t flat, std::span<std::int64_t> k_out) const;
    bool contains(std::span<const std::int64_t> k) const;
    double coordinate(std::int64_t k_j) const { return static_cast<double>(k_j) * h_; }

    bool operator==(const LatticeBox& other) const = default;

    std::string describe() const;

private:
    LatticeBox(int dim, double h, std::vector<std::int64_t> lo, std::vector<std::int64_t> hi);

    int dim_ = 0;
    double h_ = 0.0;
    std::vector<std::int64_t> lo_, hi_;
};

// Real-valued function on the interior nodes of a LatticeBox, extended by
// zero outside (Dirichlet). Values are stored in flat lexicographic order.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(LatticeBox box);
    ScalarField(LatticeBox box, std::vector<double> values);

    static ScalarField constant(const LatticeBox& box, double c);
    // Samples f at node coordinates.
    static ScalarField sample(const LatticeBox& box,
                              const std::function<double(std::span<const double>)>& f);

    const LatticeBox& box() const { return box_; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

    double operator[](std::int64_t flat) const { return values_[flat]; }
    double& operator[](std::int64_t flat) { return values_[flat]; }

    // Dirichlet evaluation: zero outside the box.
    double at(std::span<const std::int64_t> k) const;

    double norm() const;
    double norm_sq() const;
    double max_abs() const;

private:
    LatticeBox box_;
    std::vector<double> values_;
};

enum class DiffSign { Forward, Backward };

// Discrete difference calculus. All operators use the Dirichlet extension
// and return fields on the same box. `axis` is 1-based per the public
// contract; out of range raises DomainError.
ScalarField forward_diff(const ScalarField& u, int axis);
ScalarField backward_diff(const ScalarField& u, int axis);
ScalarField mean_op(const ScalarField& u, int axis, DiffSign sign);
ScalarField central_diff(const ScalarField& u, int axis);
ScalarField laplacian(const ScalarField& u);

// Pointwise arithmetic on a shared box.
ScalarField multiply(const ScalarField& u, const ScalarField& v);
ScalarField add(const ScalarField& u, const ScalarField& v);
ScalarField scale(const ScalarField& u, double c);

double inner_product(const ScalarField& u, const ScalarField& v);

// ||D^{+-}_axis u||^2 over the whole lattice hZ^d, i.e. including the
// one-layer-outside terms the Dirichlet extension creates.
double diff_norm_sq_extended(const ScalarField& u, int axis, DiffSign sign);

struct SbpResult {
    double residual = 0.0;
    // False when u or v has support touching the outermost interior layer:
    // the compact-support precondition of the identity is then violated.
    bool support_ok = true;
};

// sum v D+ u + sum u D- v; zero for fields supported strictly inside.
SbpResult sbp_residual(const ScalarField& u, const ScalarField& v, int axis);

void require_same_box(const ScalarField& u, const ScalarField& v, const char* op);

}  // namespace lrheat
