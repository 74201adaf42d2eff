#include "lrheat/potentials.hpp"

#include <cmath>
#include <limits>
#include <memory>

namespace lrheat {

namespace {

double norm2(std::span<const double> x) {
    double s = 0.0;
    for (double xi : x) s += xi * xi;
    return std::sqrt(s);
}

double vec_norm(const std::vector<double>& g) {
    double s = 0.0;
    for (double gi : g) s += gi * gi;
    return std::sqrt(s);
}

}  // namespace

PotentialSpec PotentialSpec::bounded(PointFn v, std::string name) {
    PotentialSpec p;
    p.kind_ = PotentialKind::BoundedContinuous;
    p.v_ = std::move(v);
    p.name_ = std::move(name);
    return p;
}

PotentialSpec PotentialSpec::bounded_c1(PointFn v, GradFn grad, std::string name) {
    PotentialSpec p;
    p.kind_ = PotentialKind::BoundedC1;
    p.v_ = std::move(v);
    p.grad_ = std::move(grad);
    p.name_ = std::move(name);
    return p;
}

PotentialSpec PotentialSpec::power_growth(PointFn v, PointFn v1, GradFn grad_v1, PointFn v2,
                                          double beta1, double beta2, double c0, double c1,
                                          double c2, std::string name) {
    if (!(beta1 > 0.0) || beta2 < beta1)
        throw InvalidArgument("power_growth needs 0 < beta1 <= beta2");
    if (!(c0 > 0.0) || !(c1 > 0.0) || !(c2 > 0.0))
        throw InvalidArgument("power_growth needs positive c0, c1, c2");
    PotentialSpec p;
    p.kind_ = PotentialKind::PowerGrowth;
    p.v_ = std::move(v);
    p.v1_ = std::move(v1);
    p.grad_v1_ = std::move(grad_v1);
    p.v2_ = std::move(v2);
    p.beta1_ = beta1;
    p.beta2_ = beta2;
    p.c0_ = c0;
    p.c1_ = c1;
    p.c2_ = c2;
    p.name_ = std::move(name);
    return p;
}

PotentialSpec PotentialSpec::zero() {
    return bounded_c1([](std::span<const double>) { return 0.0; },
                      [](std::span<const double> x) { return std::vector<double>(x.size(), 0.0); },
                      "zero");
}

PotentialSpec PotentialSpec::constant(double c) {
    return bounded_c1([c](std::span<const double>) { return c; },
                      [](std::span<const double> x) { return std::vector<double>(x.size(), 0.0); },
                      "const");
}

PotentialSpec PotentialSpec::sine() {
    return bounded_c1(
        [](std::span<const double> x) { return std::sin(x[0]); },
        [](std::span<const double> x) {
            std::vector<double> g(x.size(), 0.0);
            g[0] = std::cos(x[0]);
            return g;
        },
        "sin");
}

PotentialSpec PotentialSpec::abs_power(double beta) {
    auto v = [beta](std::span<const double> x) { return std::pow(norm2(x), beta); };
    auto grad = [beta](std::span<const double> x) {
        std::vector<double> g(x.size(), 0.0);
        double r = norm2(x);
        if (r > 0.0) {
            double f = beta * std::pow(r, beta - 2.0);
            for (std::size_t j = 0; j < x.size(); ++j) g[j] = f * x[j];
        }
        return g;
    };
    auto zero2 = [](std::span<const double>) { return 0.0; };
    return power_growth(v, v, grad, zero2, beta, beta, 1.0, 1.0, 1.0, "abs_power");
}

PotentialSpec PotentialSpec::tabulated(const LatticeBox& box, std::vector<double> values,
                                       std::string name) {
    if (static_cast<std::int64_t>(values.size()) != box.interior_count())
        throw InvalidArgument("tabulated potential: value count mismatch");
    auto table = std::make_shared<std::vector<double>>(std::move(values));
    auto v = [box, table](std::span<const double> x) {
        const int d = box.dim();
        std::vector<std::int64_t> k(d);
        for (int j = 0; j < d; ++j) {
            double r = x[j] / box.mesh();
            k[j] = static_cast<std::int64_t>(std::llround(r));
            if (std::abs(r - static_cast<double>(k[j])) > 1e-9)
                throw DomainError("tabulated potential: point off the lattice");
        }
        std::span<const std::int64_t> ks(k);
        if (!box.contains(ks))
            throw DomainError("tabulated potential: point outside the table box");
        return (*table)[box.flat_index(ks)];
    };
    return bounded(v, std::move(name));
}

double PotentialSpec::evaluate(std::span<const double> x) const { return v_(x); }

std::vector<double> PotentialSpec::gradient(std::span<const double> x) const {
    if (kind_ == PotentialKind::PowerGrowth && grad_v1_) return grad_v1_(x);
    if (!grad_) throw CapabilityError("potential '" + name_ + "' has no gradient evaluator");
    return grad_(x);
}

double PotentialSpec::v1(std::span<const double> x) const {
    if (kind_ != PotentialKind::PowerGrowth)
        throw CapabilityError("V1 split is only defined for power_growth potentials");
    return v1_(x);
}

double PotentialSpec::v2(std::span<const double> x) const {
    if (kind_ != PotentialKind::PowerGrowth)
        throw CapabilityError("V2 split is only defined for power_growth potentials");
    return v2_(x);
}

std::vector<double> PotentialSpec::grad_v1(std::span<const double> x) const {
    if (kind_ != PotentialKind::PowerGrowth)
        throw CapabilityError("V1 split is only defined for power_growth potentials");
    return grad_v1_(x);
}

ScalarField restrict_potential(const PotentialSpec& spec, const LatticeBox& box) {
    return ScalarField::sample(box, [&spec](std::span<const double> x) {
        return spec.evaluate(x);
    });
}

SupNorms sup_norms(const PotentialSpec& spec, const LatticeBox& box, bool require_w1inf) {
    SupNorms out;
    const bool want_grad = spec.has_gradient() || spec.kind() == PotentialKind::PowerGrowth;
    if (require_w1inf && !want_grad)
        throw CapabilityError("W^{1,inf} norm requested for a potential without gradient");

    const int d = box.dim();
    std::vector<std::int64_t> k(d);
    std::vector<double> x(d);
    double linf = 0.0, ginf = 0.0;
    for (std::int64_t i = 0; i < box.interior_count(); ++i) {
        box.unflatten(i, k);
        for (int j = 0; j < d; ++j) x[j] = box.coordinate(k[j]);
        linf = std::max(linf, std::abs(spec.evaluate(x)));
        if (want_grad) ginf = std::max(ginf, vec_norm(spec.gradient(x)));
    }
    out.linf = linf;
    if (want_grad) out.w1inf = linf + ginf;
    return out;
}

AssumptionAReport assumption_a_check(const PotentialSpec& spec, const LatticeBox& box) {
    if (spec.kind() != PotentialKind::PowerGrowth)
        throw CapabilityError("assumption_a_check requires a power_growth potential");

    AssumptionAReport rep;
    rep.margin_lower_v = std::numeric_limits<double>::infinity();
    rep.margin_lower_env = std::numeric_limits<double>::infinity();
    rep.margin_upper_env = std::numeric_limits<double>::infinity();

    const int d = box.dim();
    std::vector<std::int64_t> k(d);
    std::vector<double> x(d);
    double worst = std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i < box.interior_count(); ++i) {
        box.unflatten(i, k);
        for (int j = 0; j < d; ++j) x[j] = box.coordinate(k[j]);
        const double r = norm2(x);

        double local_worst = std::numeric_limits<double>::infinity();
        double m0 = spec.evaluate(x) - spec.c0() * std::pow(r, spec.beta1());
        rep.margin_lower_v = std::min(rep.margin_lower_v, m0);
        local_worst = std::min(local_worst, m0);

        if (r > 0.0) {
            double env = vec_norm(spec.grad_v1(x)) + std::abs(spec.v1(x)) +
                         std::pow(std::abs(spec.v2(x)), 4.0 / 3.0);
            double ml = env - spec.c1() * std::pow(r, spec.beta1());
            double mu = spec.c2() * std::pow(r, spec.beta2()) - env;
            rep.margin_lower_env = std::min(rep.margin_lower_env, ml);
            rep.margin_upper_env = std::min(rep.margin_upper_env, mu);
            local_worst = std::min({local_worst, ml, mu});
        }
        if (local_worst < worst) {
            worst = local_worst;
            rep.worst_node.assign(k.begin(), k.end());
        }
    }
    // Tolerance absorbs roundoff in the canonical-equality case (V = |x|^b).
    const double tol = 1e-12;
    rep.holds = rep.margin_lower_v >= -tol && rep.margin_lower_env >= -tol &&
                rep.margin_upper_env >= -tol;
    return rep;
}

}  // namespace lrheat
