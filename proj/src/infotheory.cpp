#include "trihelix/infotheory.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "trihelix/errors.hpp"

namespace trihelix::infotheory {

namespace {

constexpr double kSumTolerance = 1e-9;

void check_probs(std::span<const double> probs) {
    if (probs.empty()) throw ValidationError("distribution has empty support");
    KahanSum sum;
    for (double p : probs) {
        if (!(p >= 0.0)) // also catches NaN
            throw ValidationError("distribution has a negative or NaN entry");
        sum.add(p);
    }
    if (std::abs(sum.value() - 1.0) > kSumTolerance)
        throw ValidationError("distribution sums to " + std::to_string(sum.value()) +
                              ", expected 1");
}

// Clamp the tiny negatives rounding can leave on quantities that are
// non-negative by theory.
double clamp_nonneg(double v) {
    return (v < 0.0 && v > -1e-9) ? 0.0 : v;
}

} // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    check_probs(probs_);
}

Distribution Distribution::from_counts(std::span<const double> counts, double alpha) {
    if (counts.empty()) throw ValidationError("empty count vector");
    if (alpha < 0.0) throw ValidationError("negative smoothing alpha");
    KahanSum total;
    for (double c : counts) {
        if (!(c >= 0.0)) throw ValidationError("negative count");
        total.add(c + alpha);
    }
    if (total.value() <= 0.0)
        throw ValidationError("count vector has zero total mass");
    std::vector<double> probs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        probs[i] = (counts[i] + alpha) / total.value();
    return Distribution(std::move(probs));
}

Joint2::Joint2(std::size_t rows, std::size_t cols, std::vector<double> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows_ == 0 || cols_ == 0 || cells_.size() != rows_ * cols_)
        throw ValidationError("joint dimensions do not match cell count");
    check_probs(cells_);
}

std::vector<double> Joint2::marginal_x() const {
    std::vector<double> m(rows_, 0.0);
    for (std::size_t x = 0; x < rows_; ++x) {
        KahanSum s;
        for (std::size_t y = 0; y < cols_; ++y) s.add(at(x, y));
        m[x] = s.value();
    }
    return m;
}

std::vector<double> Joint2::marginal_y() const {
    std::vector<double> m(cols_, 0.0);
    for (std::size_t y = 0; y < cols_; ++y) {
        KahanSum s;
        for (std::size_t x = 0; x < rows_; ++x) s.add(at(x, y));
        m[y] = s.value();
    }
    return m;
}

std::uint64_t ContingencyCube::n() const {
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    return total;
}

double entropy_bits(std::span<const double> probs) {
    KahanSum h;
    for (double p : probs)
        if (p > 0.0) h.add(-p * std::log2(p));
    return clamp_nonneg(h.value());
}

double entropy(const Distribution& d) {
    return entropy_bits(d.probs());
}

double conditional_entropy(const Joint2& j) {
    double h_joint = entropy_bits(j.cells());
    auto my = j.marginal_y();
    double h_y = entropy_bits(my);
    return clamp_nonneg(h_joint - h_y);
}

double transmission2(const Joint2& j) {
    auto mx = j.marginal_x();
    auto my = j.marginal_y();
    double t = entropy_bits(mx) + entropy_bits(my) - entropy_bits(j.cells());
    return clamp_nonneg(t);
}

namespace {

struct CubeMarginals {
    double u[2], i[2], g[2];    // singles
    double ui[4], ug[4], ig[4]; // pairs, index (a<<1)|b
};

CubeMarginals marginals_of(const std::array<double, 8>& p) {
    CubeMarginals m{};
    for (std::size_t k = 0; k < 8; ++k) {
        std::size_t u = (k >> 2) & 1, i = (k >> 1) & 1, g = k & 1;
        m.u[u] += p[k];
        m.i[i] += p[k];
        m.g[g] += p[k];
        m.ui[(u << 1) | i] += p[k];
        m.ug[(u << 1) | g] += p[k];
        m.ig[(i << 1) | g] += p[k];
    }
    return m;
}

} // namespace

double transmission3_ratio_form(const std::array<double, 8>& p) {
    check_probs(p);
    CubeMarginals m = marginals_of(p);
    KahanSum t;
    for (std::size_t k = 0; k < 8; ++k) {
        if (p[k] <= 0.0) continue;
        std::size_t u = (k >> 2) & 1, i = (k >> 1) & 1, g = k & 1;
        double num = m.ui[(u << 1) | i] * m.ug[(u << 1) | g] * m.ig[(i << 1) | g];
        double den = m.u[u] * m.i[i] * m.g[g] * p[k];
        t.add(p[k] * std::log2(num / den));
    }
    return t.value();
}

TransmissionReport transmission3(const std::array<double, 8>& p) {
    check_probs(p);
    CubeMarginals m = marginals_of(p);

    TransmissionReport r;
    r.h_u = entropy_bits(std::span(m.u, 2));
    r.h_i = entropy_bits(std::span(m.i, 2));
    r.h_g = entropy_bits(std::span(m.g, 2));
    r.h_ui = entropy_bits(std::span(m.ui, 4));
    r.h_ug = entropy_bits(std::span(m.ug, 4));
    r.h_ig = entropy_bits(std::span(m.ig, 4));
    r.h_uig = entropy_bits(std::span(p.data(), 8));

    r.t_ui = clamp_nonneg(r.h_u + r.h_i - r.h_ui);
    r.t_ug = clamp_nonneg(r.h_u + r.h_g - r.h_ug);
    r.t_ig = clamp_nonneg(r.h_i + r.h_g - r.h_ig);

    double t_bits = r.h_u + r.h_i + r.h_g - r.h_ui - r.h_ug - r.h_ig + r.h_uig;
    double t_check = transmission3_ratio_form(p);
    if (std::abs(t_bits - t_check) > 1e-9)
        throw Error("transmission dual-form disagreement: entropy form " +
                    std::to_string(t_bits) + " vs ratio form " + std::to_string(t_check));

    r.t_uig_mbits = 1000.0 * t_bits;
    return r;
}

TransmissionReport transmission3(const ContingencyCube& c) {
    std::uint64_t n = c.n();
    if (n == 0) throw Error("empty contingency cube");
    std::array<double, 8> p{};
    for (std::size_t k = 0; k < 8; ++k)
        p[k] = static_cast<double>(c.counts[k]) / static_cast<double>(n);
    return transmission3(p);
}

double expected_info(const Distribution& observed, const Distribution& predicted) {
    if (observed.size() != predicted.size())
        throw Error("expected_info: support mismatch (" + std::to_string(observed.size()) +
                    " vs " + std::to_string(predicted.size()) + " categories)");
    KahanSum s;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        double q = observed[k], p = predicted[k];
        if (q <= 0.0) continue;
        if (p <= 0.0)
            throw DivergenceError(
                "expected_info: observed mass on a predicted-zero category (index " +
                std::to_string(k) + "); enable smoothing or fix the prediction");
        s.add(q * std::log2(q / p));
    }
    return 1000.0 * clamp_nonneg(s.value());
}

} // namespace trihelix::infotheory
