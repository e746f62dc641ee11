#include "trihelix/corpus.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <set>

#include "trihelix/errors.hpp"
#include "trihelix/text.hpp"

namespace trihelix::corpus {

namespace {

constexpr int kMinYear = 1900;
constexpr int kMaxYear = 2100;

bool is_blank(std::string_view s) {
    for (unsigned char c : s)
        if (!std::isspace(c)) return false;
    return true;
}

} // namespace

Address Address::from_raw(std::string raw_text) {
    Address a;
    a.tokens = text::tokenize_alnum(raw_text);
    a.raw = std::move(raw_text);
    return a;
}

CountryAliases CountryAliases::load_csv(std::istream& in) {
    CountryAliases table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line) || line[0] == '#') continue;
        auto fields = text::csv_fields(line);
        if (fields.size() != 2)
            throw ParseError("alias table row needs columns alias,canonical", line_no);
        std::string alias = text::to_upper(text::trim(fields[0]));
        if (alias == "ALIAS") continue; // header row
        table.add(alias, text::to_upper(text::trim(fields[1])));
    }
    return table;
}

void CountryAliases::add(std::string alias, std::string canonical) {
    map_[std::move(alias)] = std::move(canonical);
}

std::optional<std::string> CountryAliases::resolve(std::string_view segment) const {
    if (segment.empty()) return std::nullopt;
    auto it = map_.find(std::string(segment));
    if (it == map_.end()) return std::string(segment);
    if (it->second.empty()) return std::nullopt; // explicitly rejected
    return it->second;
}

std::optional<std::string> extract_country(const Address& a, const CountryAliases& aliases) {
    if (a.tokens.empty())
        throw Error("extract_country: address has no tokens: '" + a.raw + "'");
    // Last non-empty comma-delimited segment, uppercased. Multi-token
    // designators ("PEOPLES R CHINA") stay intact.
    auto segments = text::split(a.raw, ',');
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        std::string seg = text::to_upper(text::trim(*it));
        if (!seg.empty()) return aliases.resolve(seg);
    }
    return std::nullopt;
}

RecordFormat record_format_from_name(std::string_view name) {
    if (name == "isi" || name == "fieldtag") return RecordFormat::FieldTag;
    throw Error("unknown record format '" + std::string(name) + "' (expected: isi)");
}

RecordReader::RecordReader(std::istream& in, RecordFormat, const CountryAliases* aliases)
    : in_(in), aliases_(aliases) {}

bool RecordReader::next(Document& out) {
    static const CountryAliases kNoAliases;
    const CountryAliases& aliases = aliases_ ? *aliases_ : kNoAliases;

    out = Document{};
    bool in_record = false;
    bool saw_id = false, saw_year = false;
    std::size_t record_line = 0;
    std::string line;

    while (std::getline(in_, line)) {
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line)) continue;

        if (line == "ER" || (line.size() > 2 && line.compare(0, 3, "ER ") == 0)) {
            if (!in_record)
                throw ParseError("record terminator with no open record", line_no_);
            if (!saw_id) throw ParseError("record missing UT tag", line_no_);
            if (!saw_year) throw ParseError("record missing PY tag", line_no_);
            if (!seen_ids_.insert(out.id).second)
                throw ParseError("duplicate record id '" + out.id + "'", line_no_);
            return true;
        }

        std::size_t sp = line.find(' ');
        std::string tag = line.substr(0, sp);
        std::string value = sp == std::string::npos ? std::string() : line.substr(sp + 1);
        if (tag.empty())
            throw ParseError("malformed line: no field tag", line_no_);
        if (!in_record) {
            in_record = true;
            record_line = line_no_;
        }

        if (tag == "UT") {
            if (saw_id)
                throw ParseError("record has more than one UT tag", line_no_);
            out.id = text::trim(value);
            if (out.id.empty()) throw ParseError("empty record id", line_no_);
            saw_id = true;
        } else if (tag == "PY") {
            if (saw_year)
                throw ParseError("record has more than one PY tag", line_no_);
            long long year;
            try {
                year = text::parse_int(value, "year");
            } catch (const Error&) {
                throw ParseError("invalid year '" + text::trim(value) + "'", line_no_);
            }
            if (year < kMinYear || year > kMaxYear)
                throw ParseError("year " + std::to_string(year) + " outside [" +
                                     std::to_string(kMinYear) + ", " + std::to_string(kMaxYear) + "]",
                                 line_no_);
            out.year = static_cast<int>(year);
            saw_year = true;
        } else if (tag == "C1") {
            std::string addr = text::trim(value);
            if (addr.empty()) throw ParseError("C1 line has an empty address", line_no_);
            Address a = Address::from_raw(std::move(addr));
            a.country = extract_country(a, aliases);
            out.addresses.push_back(std::move(a));
        } else {
            out.extras.emplace_back(std::move(tag), std::move(value));
        }
    }

    if (in_record)
        throw ParseError("record starting here has no ER terminator", record_line);
    return false;
}

std::vector<Document> parse_records(std::istream& in, RecordFormat fmt,
                                    const CountryAliases* aliases) {
    std::vector<Document> docs;
    RecordReader reader(in, fmt, aliases);
    Document d;
    while (reader.next(d)) docs.push_back(std::move(d));
    return docs;
}

void write_record(const Document& d, std::ostream& out) {
    out << "UT " << d.id << '\n';
    out << "PY " << d.year << '\n';
    for (const auto& a : d.addresses) out << "C1 " << a.raw << '\n';
    for (const auto& [tag, value] : d.extras) out << tag << ' ' << value << '\n';
    out << "ER\n\n";
}

void write_records(std::span<const Document> docs, std::ostream& out) {
    for (const auto& d : docs) write_record(d, out);
}

void StatsAccumulator::add(const Document& d) {
    ++stats_.total_records;
    stats_.total_addresses += d.addresses.size();
    if (d.addresses.empty()) {
        ++stats_.records_without_address;
        return;
    }
    std::set<std::string_view> countries;
    for (const auto& a : d.addresses)
        if (a.country) countries.insert(*a.country);
    for (auto c : countries) ++stats_.records_by_country[std::string(c)];
}

CorpusStats corpus_stats(std::span<const Document> docs) {
    StatsAccumulator acc;
    for (const auto& d : docs) acc.add(d);
    return acc.stats();
}

double CorpusStats::pct_without_address() const {
    if (total_records == 0) return 0.0;
    return 100.0 * static_cast<double>(records_without_address) /
           static_cast<double>(total_records);
}

} // namespace trihelix::corpus
