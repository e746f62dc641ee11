#ifndef TRIHELIX_CORPUS_HPP
#define TRIHELIX_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace trihelix::corpus {

struct Address {
    std::string raw;
    std::vector<std::string> tokens;         // uppercased alnum tokens of raw
    std::optional<std::string> country;      // resolved trailing designator

    static Address from_raw(std::string raw_text);

    bool operator==(const Address&) const = default;
};

// Maps trailing address segments to canonical country codes. An alias whose
// canonical form is empty rejects that segment; unlisted segments pass
// through unchanged.
class CountryAliases {
public:
    CountryAliases() = default;

    // CSV columns: alias,canonical. Header row optional.
    static CountryAliases load_csv(std::istream& in);

    void add(std::string alias, std::string canonical);
    std::optional<std::string> resolve(std::string_view segment) const;
    bool empty() const { return map_.empty(); }

private:
    std::unordered_map<std::string, std::string> map_;
};

// Trailing comma-delimited segment of the raw address, trimmed and
// uppercased, run through the alias table. Requires a tokenizable address.
std::optional<std::string> extract_country(const Address& a,
                                           const CountryAliases& aliases = {});

struct Document {
    std::string id;
    int year = 0;
    std::vector<Address> addresses;
    int author_count = 0;
    std::vector<std::pair<std::string, std::string>> extras; // unknown tags, kept verbatim

    bool operator==(const Document&) const = default;
};

struct CorpusStats {
    std::uint64_t total_records = 0;
    std::uint64_t total_addresses = 0;
    std::uint64_t records_without_address = 0;
    std::map<std::string, std::uint64_t> records_by_country;

    double pct_without_address() const;
};

enum class RecordFormat { FieldTag };

RecordFormat record_format_from_name(std::string_view name); // "isi" | "fieldtag"

// Single forward pass over a field-tagged record stream; holds one record
// plus the set of ids seen (for duplicate detection).
class RecordReader {
public:
    RecordReader(std::istream& in, RecordFormat fmt,
                 const CountryAliases* aliases = nullptr);

    // Fills `out` with the next record; false at clean end of input.
    // Throws ParseError on malformed blocks, bad years, duplicate ids.
    bool next(Document& out);

private:
    std::istream& in_;
    const CountryAliases* aliases_;
    std::size_t line_no_ = 0;
    std::unordered_set<std::string> seen_ids_;
};

std::vector<Document> parse_records(std::istream& in,
                                    RecordFormat fmt = RecordFormat::FieldTag,
                                    const CountryAliases* aliases = nullptr);

void write_record(const Document& d, std::ostream& out);
void write_records(std::span<const Document> docs, std::ostream& out);

// Streaming stats so multi-million-record corpora never need to be resident.
class StatsAccumulator {
public:
    void add(const Document& d);
    const CorpusStats& stats() const { return stats_; }

private:
    CorpusStats stats_;
};

CorpusStats corpus_stats(std::span<const Document> docs);

} // namespace trihelix::corpus

#endif
