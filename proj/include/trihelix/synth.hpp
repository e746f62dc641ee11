#ifndef TRIHELIX_SYNTH_HPP
#define TRIHELIX_SYNTH_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trihelix/classifier.hpp"
#include "trihelix/helix.hpp"
#include "trihelix/systemness.hpp"

namespace trihelix::synth {

// Deterministic portable generator: mt19937_64 (whose output sequence is
// pinned by the standard) with explicit derivations instead of the
// implementation-defined std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    std::uint64_t bounded(std::uint64_t n); // uniform in [0, n)
    // Index into cumulative weights (strictly increasing, last = total mass).
    std::size_t pick(std::span<const double> cumulative);

private:
    std::mt19937_64 eng_;
};

// Largest-remainder apportionment of n across non-negative weights.
std::vector<std::uint64_t> largest_remainder(std::uint64_t n, std::span<const double> weights);

enum class Coupling { Independent, Coordinated, BilateralXor, ExplicitCube };

Coupling coupling_from_name(std::string_view name);

struct CorpusSpec {
    std::uint64_t n_documents = 0;       // records that carry addresses
    std::uint64_t n_without_address = 0; // extra records with no address lines
    std::uint64_t extra_addresses = 0;   // duplicated-sector addresses, spread round-robin
    int year_from = 2000, year_to = 2000;
    double p_u = 0.5, p_i = 0.5, p_g = 0.5;
    Coupling coupling = Coupling::Independent;
    double rho = 0.0;                      // Coordinated mixing weight
    std::array<double, 8> cube_weights{};  // ExplicitCube, index (u<<2)|(i<<1)|g
    std::map<std::string, double> country_mix = {{"USA", 1.0}};
    bool exact_allocation = false;
    std::uint64_t seed = 0;

    void validate() const;
};

// The 8-cell joint the spec describes, index (u<<2)|(i<<1)|g.
std::array<double, 8> joint_cells(const CorpusSpec& spec);

struct ProfileDraw {
    std::vector<classifier::SectorProfile> profiles;
    std::array<std::uint64_t, 8> realized{}; // includes the (0,0,0) cell
    std::array<double, 8> joint{};           // the specified cell probabilities
};

ProfileDraw gen_profiles(const CorpusSpec& spec);

// Record-format corpus whose addresses classify back to exactly the drawn
// profiles. Streaming; byte-identical per spec+seed.
void gen_corpus(const CorpusSpec& spec, std::ostream& out);
std::string gen_corpus(const CorpusSpec& spec);

struct StationaryParams {
    int year_from = 1993, year_to = 2000;
    std::size_t n_categories = 7;
    std::vector<std::string> categories; // optional; defaults to C1..Ck
    std::vector<double> shares;          // optional; drawn per seed if empty
    double base_total = 10000;
    double growth = 2.0;   // powers of two keep exact-mode shares bit-identical
    bool sampled = false;  // multinomial sampling instead of exact counts
    std::uint64_t sample_cap = 200000;
};

// Constant category shares, growing totals: the column (Markov) dynamic.
systemness::CategorySeries gen_markov_stationary(const StationaryParams& p,
                                                 std::uint64_t seed);

struct TrendsParams {
    int year_from = 1993, year_to = 2000;
    std::size_t n_categories = 7;
    std::vector<std::string> categories;
    std::vector<double> base;   // optional; drawn per seed if empty
    std::vector<double> rates;  // optional; drawn in [0.75, 1.75) if empty
    double base_total = 10000;
    bool sampled = false;
    std::uint64_t sample_cap = 200000;
};

// Independent per-category geometric growth: the row (trend) dynamic.
systemness::CategorySeries gen_independent_trends(const TrendsParams& p,
                                                  std::uint64_t seed);

struct DeclineParams {
    int year_from = 1993, year_to = 2000;
    double t_start_mbits = -95.0;
    double slope_mbits = -15.0; // per year
    double noise_mbits = 0.0;   // uniform jitter on each year's target
    std::uint64_t population = 1000000;

    // Achievable targets lie between the transmissions of the two family
    // endpoints (uniform over seven cells vs. uniform over the three
    // bilateral cells), roughly -88 to -415 mbits.
};

// Yearly inclusive hit counts whose union transmission follows a straight
// line in time; built by bisecting a one-parameter cell family per year.
std::vector<helix::YearlyHits> gen_linear_t_decline(const DeclineParams& p,
                                                    std::uint64_t seed);

// Solves for 7 Venn cell counts over `population` whose transmission is
// target_mbits. Exposed for tests of the generator's ground truth.
helix::VennCells cells_for_target_t(double target_mbits, std::uint64_t population);

enum class Regime { Corpus, MarkovStationary, IndependentTrends, LinearTDecline };

struct SynthConfig {
    Regime regime = Regime::Corpus;
    std::uint64_t seed = 0;
    CorpusSpec corpus;
    StationaryParams stationary;
    TrendsParams trends;
    DeclineParams decline;
};

// Flat key=value config ('#' comments). Unknown keys are errors.
SynthConfig parse_synth_config(std::istream& in);

// Writes the configured fixture (corpus records, category series CSV, or
// yearly hits CSV) to `out`.
void run_synth(const SynthConfig& config, std::ostream& out);

} // namespace trihelix::synth

#endif
