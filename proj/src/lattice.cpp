#include "lrheat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lrheat {

namespace {

std::int64_t round_to_int(double x) { return static_cast<std::int64_t>(std::llround(x)); }

void check_axis(int axis, int dim) {
    if (axis < 1 || axis > dim) {
        throw DomainError("axis " + std::to_string(axis) + " out of range [1," +
                          std::to_string(dim) + "]");
    }
}

}  // namespace

LatticeBox::LatticeBox(int dim, double h, std::vector<std::int64_t> lo,
                       std::vector<std::int64_t> hi)
    : dim_(dim), h_(h), lo_(std::move(lo)), hi_(std::move(hi)) {}

LatticeBox LatticeBox::symmetric(int dim, double h, std::span<const double> half_widths) {
    if (dim < 1) throw InvalidArgument("dimension must be positive");
    if (!(h > 0.0)) throw InvalidArgument("mesh h must be positive");
    if (static_cast<int>(half_widths.size()) != dim)
        throw InvalidArgument("half_widths size does not match dimension");
    std::vector<std::int64_t> lo(dim), hi(dim);
    for (int j = 0; j < dim; ++j) {
        double ratio = half_widths[j] / h;
        std::int64_t m = round_to_int(ratio);
        if (m < 2 || std::abs(ratio - static_cast<double>(m)) > 1e-9) {
            throw InvalidArgument(
                "half_width must be a multiple of h with at least 3 nodes per axis");
        }
        lo[j] = -(m - 1);
        hi[j] = m - 1;
    }
    return LatticeBox(dim, h, std::move(lo), std::move(hi));
}

LatticeBox LatticeBox::symmetric(int dim, double h, double half_width) {
    std::vector<double> w(static_cast<std::size_t>(dim), half_width);
    return symmetric(dim, h, w);
}

LatticeBox LatticeBox::from_counts(int dim, double h, std::span<const std::int64_t> counts) {
    if (dim < 1) throw InvalidArgument("dimension must be positive");
    if (!(h > 0.0)) throw InvalidArgument("mesh h must be positive");
    if (static_cast<int>(counts.size()) != dim)
        throw InvalidArgument("counts size does not match dimension");
    std::vector<std::int64_t> lo(dim), hi(dim);
    for (int j = 0; j < dim; ++j) {
        if (counts[j] < 3) throw InvalidArgument("need at least 3 nodes per axis");
        lo[j] = 1;
        hi[j] = counts[j];
    }
    return LatticeBox(dim, h, std::move(lo), std::move(hi));
}

std::int64_t LatticeBox::interior_count() const {
    std::int64_t n = 1;
    for (int j = 0; j < dim_; ++j) n *= nodes_per_axis(j);
    return n;
}

double LatticeBox::half_width(int axis) const {
    return 0.5 * static_cast<double>(nodes_per_axis(axis) + 1) * h_;
}

std::int64_t LatticeBox::flat_index(std::span<const std::int64_t> k) const {
    std::int64_t idx = 0;
    for (int j = 0; j < dim_; ++j) idx = idx * nodes_per_axis(j) + (k[j] - lo_[j]);
    return idx;
}

void LatticeBox::unflatten(std::int64_t flat, std::span<std::int64_t> k_out) const {
    for (int j = dim_ - 1; j >= 0; --j) {
        std::int64_t n = nodes_per_axis(j);
        k_out[j] = lo_[j] + flat % n;
        flat /= n;
    }
}

bool LatticeBox::contains(std::span<const std::int64_t> k) const {
    for (int j = 0; j < dim_; ++j)
        if (k[j] < lo_[j] || k[j] > hi_[j]) return false;
    return true;
}

std::string LatticeBox::describe() const {
    std::ostringstream os;
    os << "box(d=" << dim_ << ",h=" << h_ << ",nodes=";
    for (int j = 0; j < dim_; ++j) os << (j ? "x" : "") << nodes_per_axis(j);
    os << ")";
    return os.str();
}

ScalarField::ScalarField(LatticeBox box)
    : box_(std::move(box)), values_(static_cast<std::size_t>(box_.interior_count()), 0.0) {}

ScalarField::ScalarField(LatticeBox box, std::vector<double> values)
    : box_(std::move(box)), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != box_.interior_count())
        throw InvalidArgument("value count does not match interior node count");
}

ScalarField ScalarField::constant(const LatticeBox& box, double c) {
    ScalarField f(box);
    std::fill(f.values_.begin(), f.values_.end(), c);
    return f;
}

ScalarField ScalarField::sample(const LatticeBox& box,
                                const std::function<double(std::span<const double>)>& f) {
    ScalarField out(box);
    const int d = box.dim();
    std::vector<std::int64_t> k(d);
    std::vector<double> x(d);
    for (std::int64_t i = 0; i < out.size(); ++i) {
        box.unflatten(i, k);
        for (int j = 0; j < d; ++j) x[j] = box.coordinate(k[j]);
        out[i] = f(x);
    }
    return out;
}

double ScalarField::at(std::span<const std::int64_t> k) const {
    if (!box_.contains(k)) return 0.0;
    return values_[box_.flat_index(k)];
}

double ScalarField::norm_sq() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return s;
}

double ScalarField::norm() const { return std::sqrt(norm_sq()); }

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

void require_same_box(const ScalarField& u, const ScalarField& v, const char* op) {
    if (!(u.box() == v.box()))
        throw InvalidArgument(std::string(op) + ": fields live on different boxes");
}

namespace {

// Applies op(center_value, neighbor_value) along `axis0` (0-based) where the
// neighbor is offset by `step` in index space; Dirichlet zero outside.
template <typename Op>
ScalarField neighbor_op(const ScalarField& u, int axis0, std::int64_t step, Op op) {
    const LatticeBox& box = u.box();
    ScalarField out(box);
    const int d = box.dim();
    std::int64_t stride = 1;
    for (int j = d - 1; j > axis0; --j) stride *= box.nodes_per_axis(j);
    std::vector<std::int64_t> k(d);
    for (std::int64_t i = 0; i < u.size(); ++i) {
        box.unflatten(i, k);
        const std::int64_t kj = k[axis0];
        double neighbor = 0.0;
        if (kj + step >= box.lo(axis0) && kj + step <= box.hi(axis0))
            neighbor = u[i + step * stride];
        out[i] = op(u[i], neighbor);
    }
    return out;
}

}  // namespace

ScalarField forward_diff(const ScalarField& u, int axis) {
    check_axis(axis, u.box().dim());
    const double inv_h = 1.0 / u.box().mesh();
    return neighbor_op(u, axis - 1, +1,
                       [inv_h](double c, double n) { return (n - c) * inv_h; });
}

ScalarField backward_diff(const ScalarField& u, int axis) {
    check_axis(axis, u.box().dim());
    const double inv_h = 1.0 / u.box().mesh();
    return neighbor_op(u, axis - 1, -1,
                       [inv_h](double c, double n) { return (c - n) * inv_h; });
}

ScalarField mean_op(const ScalarField& u, int axis, DiffSign sign) {
    check_axis(axis, u.box().dim());
    const std::int64_t step = sign == DiffSign::Forward ? +1 : -1;
    return neighbor_op(u, axis - 1, step,
                       [](double c, double n) { return 0.5 * (n + c); });
}

ScalarField central_diff(const ScalarField& u, int axis) {
    check_axis(axis, u.box().dim());
    ScalarField fwd = forward_diff(u, axis);
    ScalarField bwd = backward_diff(u, axis);
    ScalarField out(u.box());
    for (std::int64_t i = 0; i < out.size(); ++i) out[i] = 0.5 * (fwd[i] + bwd[i]);
    return out;
}

ScalarField laplacian(const ScalarField& u) {
    const LatticeBox& box = u.box();
    ScalarField out(box);
    const double inv_h2 = 1.0 / (box.mesh() * box.mesh());
    const int d = box.dim();
    std::vector<std::int64_t> k(d);
    std::vector<std::int64_t> strides(d, 1);
    for (int j = d - 2; j >= 0; --j) strides[j] = strides[j + 1] * box.nodes_per_axis(j + 1);
    for (std::int64_t i = 0; i < u.size(); ++i) {
        box.unflatten(i, k);
        double acc = 0.0;
        for (int j = 0; j < d; ++j) {
            double up = (k[j] + 1 <= box.hi(j)) ? u[i + strides[j]] : 0.0;
            double dn = (k[j] - 1 >= box.lo(j)) ? u[i - strides[j]] : 0.0;
            acc += up + dn - 2.0 * u[i];
        }
        out[i] = acc * inv_h2;
    }
    return out;
}

ScalarField multiply(const ScalarField& u, const ScalarField& v) {
    require_same_box(u, v, "multiply");
    ScalarField out(u.box());
    for (std::int64_t i = 0; i < out.size(); ++i) out[i] = u[i] * v[i];
    return out;
}

ScalarField add(const ScalarField& u, const ScalarField& v) {
    require_same_box(u, v, "add");
    ScalarField out(u.box());
    for (std::int64_t i = 0; i < out.size(); ++i) out[i] = u[i] + v[i];
    return out;
}

ScalarField scale(const ScalarField& u, double c) {
    ScalarField out(u.box());
    for (std::int64_t i = 0; i < out.size(); ++i) out[i] = c * u[i];
    return out;
}

double inner_product(const ScalarField& u, const ScalarField& v) {
    require_same_box(u, v, "inner_product");
    double s = 0.0;
    for (std::int64_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

double diff_norm_sq_extended(const ScalarField& u, int axis, DiffSign sign) {
    check_axis(axis, u.box().dim());
    const LatticeBox& box = u.box();
    const int a = axis - 1;
    const double inv_h = 1.0 / box.mesh();
    ScalarField d = sign == DiffSign::Forward ? forward_diff(u, axis) : backward_diff(u, axis);
    double s = 0.0;
    for (std::int64_t i = 0; i < d.size(); ++i) s += d[i] * d[i];
    // One layer outside the box: for D+ the node just below lo sees u(lo)/h,
    // for D- the node just above hi sees -u(hi)/h.
    const int dd = box.dim();
    std::vector<std::int64_t> k(dd);
    for (std::int64_t i = 0; i < u.size(); ++i) {
        box.unflatten(i, k);
        bool edge = (sign == DiffSign::Forward) ? (k[a] == box.lo(a)) : (k[a] == box.hi(a));
        if (edge) {
            double t = u[i] * inv_h;
            s += t * t;
        }
    }
    return s;
}

SbpResult sbp_residual(const ScalarField& u, const ScalarField& v, int axis) {
    require_same_box(u, v, "sbp_residual");
    check_axis(axis, u.box().dim());
    const LatticeBox& box = u.box();
    const int a = axis - 1;

    SbpResult r;
    const int d = box.dim();
    std::vector<std::int64_t> k(d);
    for (std::int64_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0.0 && v[i] == 0.0) continue;
        box.unflatten(i, k);
        if (k[a] == box.lo(a) || k[a] == box.hi(a)) {
            r.support_ok = false;
            break;
        }
    }

    ScalarField du = forward_diff(u, axis);
    ScalarField dv = backward_diff(v, axis);
    double s = 0.0;
    for (std::int64_t i = 0; i < u.size(); ++i) s += v[i] * du[i] + u[i] * dv[i];
    r.residual = s;
    return r;
}

}  // namespace lrheat
