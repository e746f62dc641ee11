#ifndef TRIHELIX_HELIX_HPP
#define TRIHELIX_HELIX_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trihelix/classifier.hpp"
#include "trihelix/corpus.hpp"
#include "trihelix/infotheory.hpp"

namespace trihelix::helix {

// The seven mutually exclusive Venn regions of three sets (ui = in U and I
// but not G, and so on). They partition the union.
struct VennCells {
    std::uint64_t u_only = 0, i_only = 0, g_only = 0;
    std::uint64_t ui = 0, ug = 0, ig = 0, uig = 0;

    std::uint64_t union_count() const;
    std::uint64_t univ_total() const { return u_only + ui + ug + uig; }
    std::uint64_t ind_total() const { return i_only + ui + ig + uig; }
    std::uint64_t gov_total() const { return g_only + ug + ig + uig; }

    bool operator==(const VennCells&) const = default;
};

// Venn cells as a 2x2x2 cube; `none` fills the (0,0,0) cell.
infotheory::ContingencyCube cube_from_cells(const VennCells& v, std::uint64_t none = 0);
VennCells cells_from_cube(const infotheory::ContingencyCube& c);

// Inclusive hit counts for one year: u is everything containing U, ui is
// everything containing both U and I (regardless of G), etc.
struct YearlyHits {
    int year = 0;
    std::uint64_t u = 0, i = 0, g = 0;
    std::uint64_t ui = 0, ug = 0, ig = 0, uig = 0;
};

// Inclusion-exclusion; throws InconsistencyError naming the first derived
// cell that would go negative (hit-count sources can be incoherent).
VennCells venn_from_inclusive(const YearlyHits& h);
YearlyHits inclusive_from_venn(const VennCells& v, int year = 0);

struct CubeResult {
    infotheory::ContingencyCube cube; // (0,0,0) structurally zero
    std::uint64_t excluded = 0;       // unidentified profiles left out
};

CubeResult cube_from_profiles(std::span<const classifier::SectorProfile> profiles);

// Named country groups (EU-15 membership as of 2000; SCAND).
class Aggregates {
public:
    static Aggregates defaults();
    static Aggregates load_csv(std::istream& in); // columns: name,member

    void add(std::string name, std::set<std::string> members);
    const std::set<std::string>* members(std::string_view name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, std::set<std::string>, std::less<>> groups_;
};

inline constexpr std::string_view kSliceAll = "all";
inline constexpr std::string_view kSliceInternational = "internationally coauthored";

enum class SampleSpace {
    UnionOnly,           // identified records only; (0,0,0) has probability zero
    IncludeUnidentified, // unidentified records occupy the (0,0,0) cell
};

struct ReportOptions {
    SampleSpace sample_space = SampleSpace::UnionOnly;
};

struct HelixRow {
    std::string slice;
    std::uint64_t number = 0;        // identified records in the slice
    std::uint64_t slice_records = 0; // records in the slice (>= 1 address each)
    double pct_identified = 0.0;
    std::optional<double> t_uig_mbits; // absent when the cube is empty
    VennCells cells;
    std::uint64_t univ_total = 0, ind_total = 0, gov_total = 0;
};

// Pre-extracted per-document facts so one corpus pass serves many slices.
struct DocFacts {
    classifier::SectorProfile profile;
    std::vector<std::string> countries; // distinct, sorted
    bool has_address = false;
};

DocFacts doc_facts(const corpus::Document& d, const classifier::RuleSet& rules);
std::vector<DocFacts> corpus_facts(std::span<const corpus::Document> docs,
                                   const classifier::RuleSet& rules);

// Slice names: "all", "internationally coauthored", an aggregate name, or a
// country code present in the corpus. Unknown names raise an error listing
// the known slices.
HelixRow helix_report(std::span<const DocFacts> facts, std::string_view slice,
                      const Aggregates& aggregates, ReportOptions options = {});
HelixRow helix_report(std::span<const corpus::Document> docs,
                      const classifier::RuleSet& rules, std::string_view slice,
                      const Aggregates& aggregates = Aggregates::defaults(),
                      ReportOptions options = {});

enum class CountingMode { Integer, Fractional };

// Country attribution. Integer mode credits each distinct country on a
// document with 1; fractional mode splits one unit across the document's
// addresses. Addresses without a resolvable country accrue to "(unknown)" so
// fractional totals conserve the number of documents that have addresses.
inline constexpr std::string_view kUnknownCountry = "(unknown)";
std::map<std::string, double> country_counts(std::span<const corpus::Document> docs,
                                             CountingMode mode);

struct TrajectoryPoint {
    int year = 0;
    double t_mbits = 0.0;
};

// Per-year transmission over the union of the three sets ((0,0,0) = 0; the
// complement of the union is not observable in inclusive hit counts).
// Years must be strictly increasing; inconsistent counts raise errors
// carrying the year.
std::vector<TrajectoryPoint> t_trajectory(std::span<const YearlyHits> series);

struct TrendFit {
    double slope = 0.0; // mbits per year
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares of T against year, from `from_year` on.
TrendFit linear_trend(std::span<const TrajectoryPoint> trajectory, int from_year);

// CSV: header year,u,i,g,ui,ug,ig,uig (inclusive counts).
std::vector<YearlyHits> read_yearly_hits_csv(std::istream& in);
void write_yearly_hits_csv(std::span<const YearlyHits> series, std::ostream& out);

} // namespace trihelix::helix

#endif
