#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrheat/lattice.hpp"

namespace lrheat {

enum class PotentialKind { BoundedContinuous, BoundedC1, PowerGrowth };

using PointFn = std::function<double(std::span<const double>)>;
using GradFn = std::function<std::vector<double>(std::span<const double>)>;

// Closed-form potential with the metadata the theorems are parameterized by.
// PowerGrowth carries the split V = V1 + V2 (V1 differentiable) and the
// envelope constants of the growth assumption.
class PotentialSpec {
public:
    static PotentialSpec bounded(PointFn v, std::string name = "bounded");
    static PotentialSpec bounded_c1(PointFn v, GradFn grad, std::string name = "bounded_c1");
    static PotentialSpec power_growth(PointFn v, PointFn v1, GradFn grad_v1, PointFn v2,
                                      double beta1, double beta2, double c0, double c1,
                                      double c2, std::string name = "power_growth");

    // Named constructors used by configs and tests.
    static PotentialSpec zero();
    static PotentialSpec constant(double c);
    static PotentialSpec sine();                  // V(x) = sin(x_1)
    static PotentialSpec abs_power(double beta);  // V(x) = |x|^beta, V1 = V, V2 = 0
    // Tabulated node values bound to a box (nearest-node lookup elsewhere
    // is not supported: evaluation off the box's nodes is an error).
    static PotentialSpec tabulated(const LatticeBox& box, std::vector<double> values,
                                   std::string name = "table");

    PotentialKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool has_gradient() const { return static_cast<bool>(grad_); }

    double evaluate(std::span<const double> x) const;
    std::vector<double> gradient(std::span<const double> x) const;

    double beta1() const { return beta1_; }
    double beta2() const { return beta2_; }
    double c0() const { return c0_; }
    double c1() const { return c1_; }
    double c2() const { return c2_; }
    double v1(std::span<const double> x) const;
    double v2(std::span<const double> x) const;
    std::vector<double> grad_v1(std::span<const double> x) const;

private:
    PotentialKind kind_ = PotentialKind::BoundedContinuous;
    std::string name_;
    PointFn v_;
    GradFn grad_;
    PointFn v1_, v2_;
    GradFn grad_v1_;
    double beta1_ = 0.0, beta2_ = 0.0, c0_ = 0.0, c1_ = 0.0, c2_ = 0.0;
};

ScalarField restrict_potential(const PotentialSpec& spec, const LatticeBox& box);

struct SupNorms {
    double linf = 0.0;
    std::optional<double> w1inf;  // linf + sup |grad V|, when a gradient exists
};

// Max over the box nodes; documented surrogate for the true sup on R^d.
SupNorms sup_norms(const PotentialSpec& spec, const LatticeBox& box,
                   bool require_w1inf = false);

struct AssumptionAReport {
    bool holds = true;
    std::vector<std::int64_t> worst_node;  // multi-index of the worst violation
    double margin_lower_v = 0.0;           // min over nodes of V - c0|x|^b1
    double margin_lower_env = 0.0;         // min of (|DV1|+|V1|+|V2|^{4/3}) - c1|x|^b1
    double margin_upper_env = 0.0;         // min of c2|x|^b2 - (|DV1|+|V1|+|V2|^{4/3})
};

// Verifies the two growth-envelope inequalities at every box node. The
// envelope checks skip x = 0, where both sides vanish for the canonical
// example and the gradient may be singular.
AssumptionAReport assumption_a_check(const PotentialSpec& spec, const LatticeBox& box);

}  // namespace lrheat
