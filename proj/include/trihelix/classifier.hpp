#ifndef TRIHELIX_CLASSIFIER_HPP
#define TRIHELIX_CLASSIFIER_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "trihelix/corpus.hpp"

namespace trihelix::classifier {

enum class SectorLabel { University = 0, Industry = 1, Government = 2, Unidentified = 3 };

std::string_view to_string(SectorLabel label);
SectorLabel sector_from_name(std::string_view name);

struct Tier {
    SectorLabel label;
    std::vector<std::string> identifiers; // uppercase tokens
};

// Ordered identifier tiers; earlier tiers shadow later ones. Default mode
// matches whole tokens; substring mode (sensitivity analysis only) matches
// identifiers anywhere in the uppercased raw address.
class RuleSet {
public:
    explicit RuleSet(std::vector<Tier> tiers, bool substring_match = false);

    static RuleSet default_rules();

    // CSV columns: tier_index,label,identifier. Tier indices must be
    // contiguous from 1; label must be consistent within a tier.
    static RuleSet load_csv(std::istream& in);

    const std::vector<Tier>& tiers() const { return tiers_; }
    bool substring_match() const { return substring_; }
    void set_substring_match(bool on) { substring_ = on; }

    SectorLabel classify_tokens(std::span<const std::string> tokens) const;
    SectorLabel classify_raw(std::string_view raw) const;

private:
    std::vector<Tier> tiers_;
    std::vector<std::unordered_set<std::string>> token_sets_;
    bool substring_ = false;
};

SectorLabel classify_address(const corpus::Address& a, const RuleSet& rules);

struct SectorProfile {
    bool has_u = false, has_i = false, has_g = false;
    bool identified() const { return has_u || has_i || has_g; }
    bool operator==(const SectorProfile&) const = default;
};

SectorProfile profile_document(const corpus::Document& d, const RuleSet& rules);

// Address-level label tally. Percentages are of all addresses; an empty
// table reports 0.0 everywhere and flags itself via empty().
class ClassificationTable {
public:
    void add(SectorLabel label) { ++counts_[static_cast<std::size_t>(label)]; }
    void add_document(const corpus::Document& d, const RuleSet& rules);

    std::uint64_t count(SectorLabel label) const {
        return counts_[static_cast<std::size_t>(label)];
    }
    std::uint64_t total() const;
    bool empty() const { return total() == 0; }
    double percent(SectorLabel label) const;

private:
    std::uint64_t counts_[4] = {0, 0, 0, 0};
};

ClassificationTable classification_table(std::span<const corpus::Document> docs,
                                         const RuleSet& rules);

} // namespace trihelix::classifier

#endif
