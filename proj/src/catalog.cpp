#include "branchlab/catalog.hpp"

#include <algorithm>

namespace branchlab {

long LinearConstraint::value(const Params& p) const {
    if (p.size() != coeffs.size()) throw std::invalid_argument("constraint arity mismatch");
    long s = constant;
    for (std::size_t i = 0; i < p.size(); ++i) s += coeffs[i] * p[i];
    return s;
}

bool LinearConstraint::holds(const Params& p) const {
    long v = value(p);
    switch (kind) {
        case Kind::NonNegative: return v >= 0;
        case Kind::Zero: return v == 0;
        case Kind::Even: return v % 2 == 0;
    }
    return false;
}

bool ParamSpace::contains(const Params& p) const {
    if (p.size() != dim()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!is_signed[i] && p[i] < 0) return false;
    for (const auto& c : constraints)
        if (!c.holds(p)) return false;
    return true;
}

std::vector<Params> ParamSpace::enumerate(long bound) const {
    std::vector<Params> out;
    const std::size_t d = dim();
    if (bound < 0) return out;
    // Each constraint is tested as soon as its last variable is assigned.
    std::vector<std::vector<const LinearConstraint*>> ready(d + 1);
    for (const auto& c : constraints) {
        std::size_t last = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (c.coeffs[i] != 0) last = i + 1;
        ready[last].push_back(&c);
    }
    for (const auto* c : ready[0])
        if (!c->holds(Params(d, 0))) return out;
    Params p(d, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == d) {
            out.push_back(p);
            return;
        }
        for (long v = is_signed[i] ? -bound : 0; v <= bound; ++v) {
            p[i] = v;
            bool ok = true;
            for (const auto* c : ready[i + 1]) {
                long s = c->constant;
                for (std::size_t t = 0; t <= i; ++t) s += c->coeffs[t] * p[t];
                if ((c->kind == LinearConstraint::Kind::NonNegative && s < 0) ||
                    (c->kind == LinearConstraint::Kind::Zero && s != 0) ||
                    (c->kind == LinearConstraint::Kind::Even && s % 2 != 0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(i + 1);
        }
        p[i] = 0;
    };
    rec(0);
    return out;
}

std::size_t AffineMap::source_dim() const { return matrix.empty() ? 0 : matrix[0].size(); }

WeightVector AffineMap::apply(const WeightVector& x) const {
    WeightVector out = offset;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        if (matrix[i].size() != x.size()) throw std::invalid_argument("AffineMap: source dimension mismatch");
        for (std::size_t j = 0; j < x.size(); ++j)
            if (sgn(matrix[i][j]) != 0 && sgn(x[j]) != 0) out[i] += matrix[i][j] * x[j];
    }
    return out;
}

WeightVector AffineMap::apply(const Params& x) const {
    WeightVector out = offset;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        if (matrix[i].size() != x.size()) throw std::invalid_argument("AffineMap: source dimension mismatch");
        // Integral entries accumulate in a machine word; the rest go through GMP.
        long acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const Rational& m = matrix[i][j];
            if (x[j] == 0 || sgn(m) == 0) continue;
            if (is_integer(m) && m.get_num().fits_sint_p() && std::abs(x[j]) < (1L << 24))
                acc += m.get_num().get_si() * x[j];
            else
                out[i] += m * x[j];
        }
        if (acc != 0) out[i] += acc;
    }
    return out;
}

AffineMap affine_from(std::size_t source_dim, const std::function<WeightVector(const WeightVector&)>& f) {
    AffineMap m;
    WeightVector zero(source_dim, Rational(0));
    m.offset = f(zero);
    m.matrix.assign(m.offset.size(), std::vector<Rational>(source_dim, Rational(0)));
    for (std::size_t j = 0; j < source_dim; ++j) {
        WeightVector e = zero;
        e[j] = 1;
        WeightVector col = f(e);
        if (col.size() != m.offset.size()) throw std::logic_error("affine_from: inconsistent target dimension");
        for (std::size_t i = 0; i < col.size(); ++i) m.matrix[i][j] = col[i] - m.offset[i];
    }
    return m;
}

bool CartanHelgason::kills(const WeightVector& lambda) const {
    for (int i : zero_coords)
        if (lambda.at(std::size_t(i)) != 0) return false;
    for (auto [a, b] : equal_pairs)
        if (lambda.at(std::size_t(a)) != lambda.at(std::size_t(b))) return false;
    for (auto [a, b] : opposite_pairs)
        if (lambda.at(std::size_t(a)) != -lambda.at(std::size_t(b))) return false;
    return true;
}

std::string CaseRecord::id() const { return size ? tag + ":" + std::to_string(size) : tag; }

std::vector<Params> enumerate_disc(const CaseRecord& c, long bound) { return c.theta.enumerate(bound); }

static Params to_params(const WeightVector& v) {
    Params p;
    for (const auto& x : v) p.push_back(to_long(x));
    return p;
}

static IrrepLabel make_label(const GroupDescriptor& g, const WeightVector& hw) {
    IrrepLabel r{g, hw};
    require_valid(r);
    return r;
}

IrrepLabel theta_label(const CaseRecord& c, const Params& theta) {
    if (!c.theta.contains(theta)) throw std::invalid_argument(c.id() + ": parameters outside Disc(G/H)");
    return make_label(c.g, c.theta_hw.apply(theta));
}

IrrepLabel pi_label(const CaseRecord& c, const Params& pi) {
    if (!c.pi.contains(pi)) throw std::invalid_argument(c.id() + ": parameters outside Disc(G~/H~)");
    return make_label(c.gt, c.pi_hw.apply(pi));
}

IrrepLabel tau_label(const CaseRecord& c, const Params& tau) {
    if (!c.tau.contains(tau)) throw std::invalid_argument(c.id() + ": parameters outside Disc(K/H)");
    return make_label(c.k, c.tau_hw.apply(tau));
}

Params pi_params(const CaseRecord& c, const Params& theta) { return to_params(c.theta_to_pi.apply(theta)); }

Params tau_params(const CaseRecord& c, const Params& theta) { return to_params(c.theta_to_tau.apply(theta)); }

std::pair<IrrepLabel, IrrepLabel> pi_tau(const CaseRecord& c, const Params& theta) {
    if (!c.theta.contains(theta)) throw std::invalid_argument(c.id() + ": parameters outside Disc(G/H)");
    return {pi_label(c, pi_params(c, theta)), tau_label(c, tau_params(c, theta))};
}

std::array<int, 3> rank_triple(const CaseRecord& c) { return c.ranks; }

}  // namespace branchlab
