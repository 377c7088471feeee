#ifndef MSS_SHAREFILE_HPP
#define MSS_SHAREFILE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mss/schemes.hpp"

namespace mss {

// Text container for shares. One header line, then one share per line:
//
//   mss1 <scheme> <p> <threshold> <k_secrets>
//   <index> <x> <y>
//
// Canonical form: single spaces, lowercase scheme tags, base-10 integers
// with no leading zeros, every line newline-terminated. parse() accepts
// canonical form only, so parse-then-serialize is byte-identical.
class ShareFile {
public:
    struct Entry {
        std::uint64_t index;
        std::uint64_t x;
        std::uint64_t y;
    };

    ShareFile(SchemeKind scheme, PrimeModulus p, std::uint32_t threshold,
              std::uint32_t k_secrets);

    static ShareFile parse(std::string_view text);

    SchemeKind scheme() const noexcept { return scheme_; }
    PrimeModulus modulus() const noexcept { return p_; }
    std::uint32_t threshold() const noexcept { return threshold_; }
    std::uint32_t k_secrets() const noexcept { return k_secrets_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    void add_entry(std::uint64_t index, const Share& share);

    std::string serialize() const;

    /// Materializes the entries as validated Share records.
    std::vector<Share> to_shares() const;

private:
    SchemeKind scheme_;
    PrimeModulus p_;
    std::uint32_t threshold_;
    std::uint32_t k_secrets_;
    std::vector<Entry> entries_;
};

} // namespace mss

#endif // MSS_SHAREFILE_HPP
