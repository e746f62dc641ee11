#ifndef TRIHELIX_INFOTHEORY_HPP
#define TRIHELIX_INFOTHEORY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace trihelix::infotheory {

// Compensated (Kahan) accumulator; entropy sums mix cell probabilities that
// span six orders of magnitude.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = sum_ + y;
        c_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

// Probability vector over a finite support. Must sum to 1 within 1e-9 with
// no negative entries; construction validates.
class Distribution {
public:
    explicit Distribution(std::vector<double> probs);

    // Normalizes non-negative counts; alpha adds additive smoothing to every
    // cell before normalization (0 disables).
    static Distribution from_counts(std::span<const double> counts, double alpha = 0.0);

    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }

private:
    std::vector<double> probs_;
};

// Joint distribution over X x Y, row-major (rows = X states).
class Joint2 {
public:
    Joint2(std::size_t rows, std::size_t cols, std::vector<double> cells);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t x, std::size_t y) const { return cells_[x * cols_ + y]; }
    const std::vector<double>& cells() const { return cells_; }

    std::vector<double> marginal_x() const;
    std::vector<double> marginal_y() const;

private:
    std::size_t rows_, cols_;
    std::vector<double> cells_;
};

// 2x2x2 co-occurrence counts over three binary presence dimensions.
// Index layout: (u << 2) | (i << 1) | g.
struct ContingencyCube {
    std::array<std::uint64_t, 8> counts{};

    static constexpr std::size_t index(bool u, bool i, bool g) {
        return (static_cast<std::size_t>(u) << 2) | (static_cast<std::size_t>(i) << 1) |
               static_cast<std::size_t>(g);
    }
    std::uint64_t& at(bool u, bool i, bool g) { return counts[index(u, i, g)]; }
    std::uint64_t at(bool u, bool i, bool g) const { return counts[index(u, i, g)]; }
    std::uint64_t n() const;
};

struct TransmissionReport {
    double h_u = 0, h_i = 0, h_g = 0;          // single entropies, bits
    double h_ui = 0, h_ug = 0, h_ig = 0;       // pairwise joint entropies, bits
    double h_uig = 0;                          // full joint entropy, bits
    double t_ui = 0, t_ug = 0, t_ig = 0;       // bilateral transmissions, bits (>= 0)
    double t_uig_mbits = 0;                    // three-way transmission, millibits (signed)
};

// Shannon entropy in bits, 0*log2(0) == 0. The span form assumes the caller
// already validated; the Distribution form is the checked entry point.
double entropy_bits(std::span<const double> probs);
double entropy(const Distribution& d);

// H(X|Y) = H(XY) - H(Y).
double conditional_entropy(const Joint2& j);

// T(XY) = H(X) + H(Y) - H(XY), clamped at zero against rounding noise.
double transmission2(const Joint2& j);

// Three-way transmission from counts (cells/n) or from an explicit cell
// distribution. Computes the result through the entropy identity
//   T = H(u)+H(i)+H(g) - H(ui)-H(ug)-H(ig) + H(uig)
// and cross-checks it against the probability-ratio form; disagreement beyond
// 1e-9 bits raises an error.
TransmissionReport transmission3(const ContingencyCube& c);
TransmissionReport transmission3(const std::array<double, 8>& cell_probs);

// Probability-ratio form sum_xyz P(xyz) log2( P(xy)P(xz)P(yz) /
// (P(x)P(y)P(z)P(xyz)) ), in bits. Kept public as the independent second
// route for the dual-form check.
double transmission3_ratio_form(const std::array<double, 8>& cell_probs);

// Expected information of the message observed given prediction predicted:
// 1000 * sum_i q_i log2(q_i / p_i) millibits. Zero iff the distributions are
// equal; observed mass on a predicted-zero cell raises DivergenceError.
double expected_info(const Distribution& observed, const Distribution& predicted);

} // namespace trihelix::infotheory

#endif
