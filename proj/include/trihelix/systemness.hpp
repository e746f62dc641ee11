#ifndef TRIHELIX_SYSTEMNESS_HPP
#define TRIHELIX_SYSTEMNESS_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trihelix/infotheory.hpp"

namespace trihelix::systemness {

// Category x year count matrix (rows = years, in strictly increasing order).
class CategorySeries {
public:
    CategorySeries(std::vector<std::string> categories, std::vector<int> years,
                   std::vector<std::vector<double>> counts);

    const std::vector<std::string>& categories() const { return categories_; }
    const std::vector<int>& years() const { return years_; }
    const std::vector<std::vector<double>>& counts() const { return counts_; }

    std::optional<std::size_t> year_index(int year) const;
    std::span<const double> row(int year) const; // throws if the year is absent

    // Same years, columns limited to `subset` in the given order.
    CategorySeries restrict(std::span<const std::string> subset) const;

    // CSV: first column "year", remaining columns one per category.
    static CategorySeries read_csv(std::istream& in);
    void write_csv(std::ostream& out) const;

private:
    std::vector<std::string> categories_;
    std::vector<int> years_;
    std::vector<std::vector<double>> counts_;
};

enum class TrendModel { LogLinear, Linear };

TrendModel trend_model_from_name(std::string_view name); // "loglinear" | "linear"

// Column prediction: the category shares of target_year - 1 carried forward.
infotheory::Distribution predict_markov(const CategorySeries& series, int target_year);

// Row prediction: per-category extrapolation to target_year over the last
// `window` observed years before it, then normalization. LogLinear fits a
// line to log counts (geometric continuation); Linear fits counts directly
// and clamps negative forecasts to zero. A category whose window contains a
// zero falls back to its most recent count (the log fit is undefined there).
std::vector<double> trend_forecast_counts(const CategorySeries& series, int target_year,
                                          TrendModel model = TrendModel::LogLinear,
                                          int window = 2);
infotheory::Distribution predict_trend(const CategorySeries& series, int target_year,
                                       TrendModel model = TrendModel::LogLinear,
                                       int window = 2);

struct RowColumnForecast {
    std::vector<double> trend_counts;   // raw per-category forecasts
    infotheory::Distribution markov;    // current-state distribution
};

RowColumnForecast row_column_forecast(const CategorySeries& series, int target_year,
                                      TrendModel model = TrendModel::LogLinear,
                                      int window = 2);

struct Verdict {
    double systemness_mbits = 0.0;
    bool corroborated = false;
};

// systemness = info_trend - info_markov; corroborated iff positive (the
// information measure scores a prediction by how much surprise is left, so
// smaller is better and a positive difference favors the Markov reading).
Verdict combine_infos(double info_trend_mbits, double info_markov_mbits);

struct SubsetResult {
    std::string name; // subset labels joined with '+'
    double info_trend_mbits = 0.0;
    double info_markov_mbits = 0.0;
    double systemness_mbits = 0.0;
    bool corroborated = false;
};

struct SystemnessReport {
    int target_year = 0;
    std::optional<double> alpha; // smoothing used, echoed for transparency
    std::vector<SubsetResult> subsets;
};

struct Options {
    TrendModel model = TrendModel::LogLinear;
    int window = 2;
    std::optional<double> alpha; // additive smoothing on counts; off by default
};

// Scores both predictions against the observed target-year distribution for
// each category subset. Observed, Markov, and trend counts are all
// restricted to the subset and renormalized over it before comparison. When
// alpha is set it is added to every count vector before normalization.
SystemnessReport systemness_test(const CategorySeries& series, int target_year,
                                 std::span<const std::vector<std::string>> subsets,
                                 Options options = {});

} // namespace trihelix::systemness

#endif
