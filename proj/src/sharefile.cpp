#include "mss/sharefile.hpp"

#include <charconv>
#include <limits>

namespace mss {

namespace {

constexpr std::string_view kMagic = "mss1";

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorCode::ParseError, "share file: " + what);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (start <= line.size()) {
        const std::size_t sep = line.find(' ', start);
        const std::size_t end = sep == std::string_view::npos ? line.size() : sep;
        tokens.push_back(line.substr(start, end - start));
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    return tokens;
}

std::uint64_t parse_number(std::string_view token, std::string_view what) {
    if (token.empty()) {
        parse_fail("empty " + std::string(what) + " field");
    }
    if (token.size() > 1 && token.front() == '0') {
        parse_fail(std::string(what) + " has a leading zero: '" + std::string(token) + "'");
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value, 10);
    if (ec != std::errc{} || ptr != token.end()) {
        parse_fail("bad " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

std::uint32_t narrow_u32(std::uint64_t value, std::string_view what) {
    if (value > std::numeric_limits<std::uint32_t>::max()) {
        parse_fail(std::string(what) + " out of range");
    }
    return static_cast<std::uint32_t>(value);
}

} // namespace

ShareFile::ShareFile(SchemeKind scheme, PrimeModulus p, std::uint32_t threshold,
                     std::uint32_t k_secrets)
    : scheme_(scheme), p_(p), threshold_(threshold), k_secrets_(k_secrets) {
    if (threshold < 2 || k_secrets < 1) {
        throw Error(ErrorCode::InvalidParams,
                    "share file needs threshold >= 2 and k_secrets >= 1");
    }
}

ShareFile ShareFile::parse(std::string_view text) {
    if (text.empty() || text.back() != '\n') {
        parse_fail("missing trailing newline");
    }
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty()) {
        parse_fail("no header line");
    }

    const auto header = split_tokens(lines[0]);
    if (header.size() != 5) {
        parse_fail("header needs 5 fields, got " + std::to_string(header.size()));
    }
    if (header[0] != kMagic) {
        parse_fail("unknown format tag '" + std::string(header[0]) + "'");
    }
    const SchemeKind scheme = scheme_from_tag(header[1]);
    const PrimeModulus p{parse_number(header[2], "modulus")};
    const std::uint32_t threshold = narrow_u32(parse_number(header[3], "threshold"), "threshold");
    const std::uint32_t k_secrets = narrow_u32(parse_number(header[4], "k_secrets"), "k_secrets");
    if (threshold < 2 || k_secrets < 1) {
        parse_fail("threshold or k_secrets out of range");
    }

    ShareFile file{scheme, p, threshold, k_secrets};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto tokens = split_tokens(lines[i]);
        if (tokens.size() != 3) {
            parse_fail("share line needs 3 fields, got " + std::to_string(tokens.size()));
        }
        Entry entry;
        entry.index = parse_number(tokens[0], "index");
        entry.x = parse_number(tokens[1], "x");
        entry.y = parse_number(tokens[2], "y");
        if (entry.x >= p.value() || entry.y >= p.value()) {
            parse_fail("share coordinates must be below p");
        }
        file.entries_.push_back(entry);
    }
    return file;
}

void ShareFile::add_entry(std::uint64_t index, const Share& share) {
    if (share.scheme() != scheme_ || share.modulus() != p_ ||
        share.threshold() != threshold_) {
        throw Error(ErrorCode::MixedShares,
                    "share does not match the file header");
    }
    entries_.push_back({index, share.x(), share.y()});
}

std::string ShareFile::serialize() const {
    std::string out{kMagic};
    out += ' ';
    out += scheme_tag(scheme_);
    out += ' ';
    out += std::to_string(p_.value());
    out += ' ';
    out += std::to_string(threshold_);
    out += ' ';
    out += std::to_string(k_secrets_);
    out += '\n';
    for (const Entry& e : entries_) {
        out += std::to_string(e.index);
        out += ' ';
        out += std::to_string(e.x);
        out += ' ';
        out += std::to_string(e.y);
        out += '\n';
    }
    return out;
}

std::vector<Share> ShareFile::to_shares() const {
    std::vector<Share> shares;
    shares.reserve(entries_.size());
    for (const Entry& e : entries_) {
        shares.emplace_back(scheme_, p_, threshold_, e.x, e.y);
    }
    return shares;
}

} // namespace mss
