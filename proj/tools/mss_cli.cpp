// Command-line front end. All scheme/analysis/attack work goes through the
// C API in mss.h; this file only handles flags, files, and formatting.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mss.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int fail(int code, const std::string& message) {
    std::cerr << "error: " << message << " [" << mss_error_name(code) << "]\n";
    return code;
}

int fail_lib(int code) {
    return fail(code, mss_last_error());
}

std::optional<uint64_t> parse_u64(const std::string& text) {
    uint64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value, 10);
    if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
    return value;
}

std::optional<std::vector<uint64_t>> parse_secret_list(const std::string& text) {
    std::vector<uint64_t> values;
    std::stringstream stream{text};
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto value = parse_u64(item);
        if (!value) return std::nullopt;
        values.push_back(*value);
    }
    if (values.empty() || text.back() == ',') return std::nullopt;
    return values;
}

std::string join_u64(const std::vector<uint64_t>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string rational_str(mss_rational r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

struct ParsedShareFile {
    int scheme;
    uint64_t p;
    uint32_t threshold;
    uint32_t k_secrets;
    std::vector<mss_share> shares;
};

int read_share_file(const fs::path& path, ParsedShareFile& out) {
    std::ifstream in{path, std::ios::binary};
    if (!in) {
        return fail(MSS_ERR_IO, "cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    mss_sharefile* file = nullptr;
    int rc = mss_sharefile_parse(text.c_str(), &file);
    if (rc != MSS_OK) {
        return fail(rc, path.string() + ": " + mss_last_error());
    }
    out.scheme = mss_sharefile_scheme(file);
    out.p = mss_sharefile_p(file);
    out.threshold = mss_sharefile_threshold(file);
    out.k_secrets = mss_sharefile_k_secrets(file);
    const uint32_t count = mss_sharefile_count(file);
    for (uint32_t i = 0; i < count; ++i) {
        uint64_t index = 0;
        mss_share share;
        rc = mss_sharefile_entry(file, i, &index, &share);
        if (rc != MSS_OK) {
            mss_sharefile_free(file);
            return fail(rc, path.string() + ": " + mss_last_error());
        }
        out.shares.push_back(share);
    }
    mss_sharefile_free(file);
    return MSS_OK;
}

int write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    if (!out) {
        return fail(MSS_ERR_IO, "cannot write " + path.string());
    }
    out << contents;
    out.close();
    return out ? MSS_OK : fail(MSS_ERR_IO, "cannot write " + path.string());
}

struct SplitArgs {
    std::string scheme;
    uint64_t p = 0;
    uint32_t threshold = 0;
    uint32_t n = 0;
    std::string secrets_csv;
    std::string secret_file;
    std::optional<uint64_t> seed;
    std::string out_dir = ".";
};

int run_split(const SplitArgs& args) {
    int scheme;
    if (args.scheme == "shamir") scheme = MSS_SCHEME_SHAMIR;
    else if (args.scheme == "points") scheme = MSS_SCHEME_POINTS;
    else if (args.scheme == "coeff") scheme = MSS_SCHEME_COEFF;
    else return fail(MSS_EXIT_USAGE, "unknown scheme '" + args.scheme + "'");

    if (args.secrets_csv.empty() == args.secret_file.empty()) {
        return fail(MSS_EXIT_USAGE, "give exactly one of --secrets or --secret-file");
    }

    std::vector<uint64_t> secrets;
    size_t secret_len_bytes = 0;
    if (!args.secret_file.empty()) {
        if (scheme != MSS_SCHEME_COEFF) {
            return fail(MSS_EXIT_USAGE, "--secret-file is only valid with --scheme coeff");
        }
        std::ifstream in{args.secret_file, std::ios::binary};
        if (!in) {
            return fail(MSS_ERR_IO, "cannot open " + args.secret_file);
        }
        std::vector<uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
        secret_len_bytes = bytes.size();
        secrets.resize(args.threshold);
        const int rc = mss_chunk_secret(bytes.data(), bytes.size(), args.threshold,
                                        args.p, secrets.data());
        if (rc != MSS_OK) return fail_lib(rc);
    } else {
        const auto parsed = parse_secret_list(args.secrets_csv);
        if (!parsed) {
            return fail(MSS_EXIT_USAGE, "--secrets expects comma-separated decimals");
        }
        secrets = *parsed;
    }
    const uint32_t k = static_cast<uint32_t>(secrets.size());

    const bool needs_rng =
        scheme == MSS_SCHEME_SHAMIR ||
        (scheme == MSS_SCHEME_COEFF && args.threshold > k);
    if (needs_rng && !args.seed) {
        return fail(MSS_EXIT_USAGE, "--seed is required for this scheme");
    }

    mss_rng* rng = args.seed ? mss_rng_new(*args.seed) : nullptr;
    std::vector<mss_share> shares(args.n);
    int rc = MSS_OK;
    uint32_t k_secrets = k;
    switch (scheme) {
        case MSS_SCHEME_SHAMIR:
            if (k != 1) {
                mss_rng_free(rng);
                return fail(MSS_EXIT_USAGE, "shamir shares exactly one secret");
            }
            rc = mss_shamir_split(args.p, secrets[0], args.threshold, args.n, rng,
                                  shares.data());
            break;
        case MSS_SCHEME_POINTS:
            if (args.threshold != k) {
                mss_rng_free(rng);
                return fail(MSS_EXIT_USAGE,
                            "points scheme requires --threshold equal to the number "
                            "of secrets (" + std::to_string(k) + ")");
            }
            rc = mss_points_split(args.p, secrets.data(), k, args.n, shares.data());
            break;
        case MSS_SCHEME_COEFF:
            rc = mss_coeff_split(args.p, secrets.data(), k, args.threshold, args.n,
                                 needs_rng ? rng : nullptr, shares.data());
            break;
    }
    mss_rng_free(rng);
    if (rc != MSS_OK) return fail_lib(rc);

    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec) {
        return fail(MSS_ERR_IO, "cannot create directory " + args.out_dir);
    }

    std::vector<std::string> file_names;
    for (uint32_t i = 0; i < args.n; ++i) {
        mss_sharefile* file = nullptr;
        rc = mss_sharefile_create(scheme, args.p, args.threshold, k_secrets, &file);
        if (rc == MSS_OK) rc = mss_sharefile_add(file, i + 1, &shares[i]);
        size_t len = 0;
        if (rc == MSS_OK) {
            mss_sharefile_serialize(file, nullptr, 0, &len);
            std::string text(len + 1, '\0');
            rc = mss_sharefile_serialize(file, text.data(), text.size(), &len);
            text.resize(len);
            if (rc == MSS_OK) {
                const std::string name = "share_" + std::to_string(i + 1) + ".txt";
                const int wrc = write_file(fs::path(args.out_dir) / name, text);
                if (wrc != MSS_OK) {
                    mss_sharefile_free(file);
                    return wrc;
                }
                file_names.push_back(name);
            }
        }
        mss_sharefile_free(file);
        if (rc != MSS_OK) return fail_lib(rc);
    }

    json manifest;
    manifest["format"] = "mss1";
    manifest["scheme"] = args.scheme;
    manifest["p"] = args.p;
    manifest["threshold"] = args.threshold;
    manifest["n"] = args.n;
    manifest["k_secrets"] = k_secrets;
    manifest["share_files"] = file_names;
    if (!args.secret_file.empty()) {
        manifest["secret_len_bytes"] = secret_len_bytes;
    }
    const int wrc =
        write_file(fs::path(args.out_dir) / "manifest.json", manifest.dump(2) + "\n");
    if (wrc != MSS_OK) return wrc;

    std::cout << "wrote " << args.n << " share files and manifest.json to "
              << args.out_dir << "\n";
    return MSS_OK;
}

struct ReconstructArgs {
    std::vector<std::string> share_paths;
    uint32_t k_secrets = 0; // 0: take the share-file header value
    std::string secret_file_out;
    std::optional<uint64_t> secret_len;
};

int run_reconstruct(const ReconstructArgs& args) {
    std::vector<mss_share> shares;
    std::optional<ParsedShareFile> header;
    for (const auto& path : args.share_paths) {
        ParsedShareFile parsed;
        const int rc = read_share_file(path, parsed);
        if (rc != MSS_OK) return rc;
        if (header) {
            if (parsed.scheme != header->scheme || parsed.p != header->p ||
                parsed.threshold != header->threshold ||
                parsed.k_secrets != header->k_secrets) {
                return fail(MSS_ERR_MIXED_SHARES,
                            "share files disagree on scheme, p, threshold, or k_secrets");
            }
        } else {
            header = parsed;
        }
        shares.insert(shares.end(), parsed.shares.begin(), parsed.shares.end());
    }
    if (!header || shares.empty()) {
        return fail(MSS_ERR_EMPTY_INPUT, "no shares given");
    }

    const uint32_t count = static_cast<uint32_t>(shares.size());
    std::vector<uint64_t> secrets;
    int rc = MSS_OK;
    switch (header->scheme) {
        case MSS_SCHEME_SHAMIR: {
            secrets.resize(1);
            rc = mss_shamir_reconstruct(shares.data(), count, secrets.data());
            break;
        }
        case MSS_SCHEME_POINTS: {
            secrets.resize(header->threshold);
            rc = mss_points_reconstruct(shares.data(), count, secrets.data());
            break;
        }
        case MSS_SCHEME_COEFF: {
            const uint32_t k = args.k_secrets != 0 ? args.k_secrets : header->k_secrets;
            secrets.resize(k);
            rc = mss_coeff_reconstruct(shares.data(), count, k, secrets.data());
            break;
        }
        default:
            return fail(MSS_ERR_PARSE, "unknown scheme in share files");
    }
    if (rc != MSS_OK) return fail_lib(rc);

    std::cout << join_u64(secrets) << "\n";

    if (!args.secret_file_out.empty()) {
        if (header->scheme != MSS_SCHEME_COEFF) {
            return fail(MSS_EXIT_USAGE, "--secret-file-out is only valid for coeff shares");
        }
        if (!args.secret_len) {
            return fail(MSS_EXIT_USAGE,
                        "--secret-len (original byte length) is required with "
                        "--secret-file-out");
        }
        std::vector<uint8_t> bytes(*args.secret_len);
        rc = mss_unchunk_secret(secrets.data(), static_cast<uint32_t>(secrets.size()),
                                bytes.size(), bytes.data());
        if (rc != MSS_OK) return fail_lib(rc);
        const int wrc = write_file(args.secret_file_out,
                                   std::string(bytes.begin(), bytes.end()));
        if (wrc != MSS_OK) return wrc;
        std::cerr << "restored " << bytes.size() << " bytes to " << args.secret_file_out
                  << "\n";
    }
    return MSS_OK;
}

struct CensusArgs {
    uint64_t p = 0;
    uint32_t k = 0;
    std::string method = "interpolate";
};

int run_census(const CensusArgs& args) {
    int method;
    if (args.method == "interpolate") method = MSS_CENSUS_INTERPOLATE;
    else if (args.method == "vandermonde") method = MSS_CENSUS_VANDERMONDE;
    else return fail(MSS_EXIT_USAGE, "--method must be interpolate or vandermonde");

    mss_census_report report;
    int rc = mss_degeneracy_census(args.p, args.k, method, &report);
    if (rc != MSS_OK) return fail_lib(rc);
    int holds = 0;
    rc = mss_eq1_check(&report, &holds);
    if (rc != MSS_OK) return fail_lib(rc);

    const bool closed_form_ok = report.degenerate_count == report.closed_form;
    std::cout << "degeneracy census: p=" << report.p << " k=" << report.k
              << " method=" << args.method << "\n"
              << "  tuples total:        " << report.total_tuples << "\n"
              << "  degenerate:          " << report.degenerate_count << "\n"
              << "  closed form p^(k-1): " << report.closed_form << "\n"
              << "  failure rate:        " << rational_str(report.failure_percent)
              << " %  (100/p: " << (holds ? "yes" : "NO") << ")\n";
    std::cout << "RESULT degenerate=" << report.degenerate_count
              << " total=" << report.total_tuples
              << " percent=" << rational_str(report.failure_percent)
              << " closed_form_ok=" << (closed_form_ok ? "true" : "false") << "\n";
    if (!holds) {
        return fail(MSS_ERR_FAIL, "failure rate does not equal 100/p");
    }
    return MSS_OK;
}

struct BlowupArgs {
    std::string scheme;
    uint32_t n = 0;
    uint32_t threshold = 0; // 0: defaults to k_secrets
    uint32_t k_secrets = 1;
    uint64_t d = 1;
};

int run_blowup(const BlowupArgs& args) {
    int scheme;
    if (args.scheme == "shamir") scheme = MSS_SCHEME_SHAMIR;
    else if (args.scheme == "points") scheme = MSS_SCHEME_POINTS;
    else if (args.scheme == "coeff") scheme = MSS_SCHEME_COEFF;
    else return fail(MSS_EXIT_USAGE, "unknown scheme '" + args.scheme + "'");

    const uint32_t threshold = args.threshold != 0 ? args.threshold : args.k_secrets;
    mss_blowup_report report;
    const int rc = mss_blowup_factor(scheme, args.n, threshold, args.k_secrets,
                                     args.d, &report);
    if (rc != MSS_OK) return fail_lib(rc);

    std::cout << "blow-up: scheme=" << args.scheme << " n=" << report.n
              << " threshold=" << report.threshold << " k_secrets=" << report.k_secrets
              << " d=" << report.secret_size_units << "\n"
              << "  total share size / total secret size = "
              << rational_str(report.blowup) << "\n";
    std::cout << "RESULT blowup=" << rational_str(report.blowup) << "\n";
    return MSS_OK;
}

struct AttackArgs {
    std::string mode;
    std::string share_path;
    uint64_t r = 0;
    uint64_t d = 0;
};

int run_attack(const AttackArgs& args) {
    ParsedShareFile parsed;
    const int rrc = read_share_file(args.share_path, parsed);
    if (rrc != MSS_OK) return rrc;
    if (parsed.shares.empty()) {
        return fail(MSS_ERR_EMPTY_INPUT, "share file has no share lines");
    }
    const mss_share& share = parsed.shares.front();

    if (args.mode == "div") {
        mss_divisibility_report report;
        const int rc = mss_divisibility_attack(&share, args.r, &report);
        if (rc != MSS_OK) return fail_lib(rc);
        std::cout << "divisibility inference on share (x=" << report.u
                  << ", y=" << report.q_u << "), coefficient bound r=" << report.r
                  << "\n"
                  << "  q(u) divisible by u: " << (report.divisible ? "yes" : "no")
                  << "\n"
                  << "  candidates left for the free-term secret: "
                  << report.search_space_size << "\n";
        std::cout << "RESULT divisible=" << (report.divisible ? "true" : "false")
                  << " space=" << report.search_space_size << "\n";
        return MSS_OK;
    }
    if (args.mode == "related") {
        mss_share forged;
        const int rc = mss_related_share_forgery(&share, args.d, &forged);
        if (rc != MSS_OK) return fail_lib(rc);
        std::cout << "related-share forgery with multiplier d=" << args.d
                  << " on share (x=" << share.x << ", y=" << share.y << ")\n"
                  << "  forged share for the scaled group: (x=" << forged.x
                  << ", y=" << forged.y << ")\n";
        std::cout << "RESULT forged_x=" << forged.x << " forged_y=" << forged.y << "\n";
        return MSS_OK;
    }
    return fail(MSS_EXIT_USAGE, "--mode must be div or related");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"threshold multi-secret sharing toolkit"};
    app.require_subcommand(1);

    SplitArgs split_args;
    auto* split = app.add_subcommand("split", "split secrets into share files");
    split->add_option("--scheme", split_args.scheme, "shamir | points | coeff")->required();
    split->add_option("--p", split_args.p, "prime modulus")->required();
    split->add_option("--threshold", split_args.threshold, "reconstruction threshold")
        ->required();
    split->add_option("--n", split_args.n, "number of shares")->required();
    split->add_option("--secrets", split_args.secrets_csv, "comma-separated secrets");
    split->add_option("--secret-file", split_args.secret_file,
                      "raw byte file to chunk (coeff only; threshold-many chunks)");
    split->add_option("--seed", split_args.seed, "seed for the deterministic RNG");
    split->add_option("--out-dir", split_args.out_dir, "output directory");

    ReconstructArgs rec_args;
    auto* rec = app.add_subcommand("reconstruct", "recover secrets from share files");
    rec->add_option("--shares", rec_args.share_paths, "share files (order matters)")
        ->required()
        ->expected(1, -1);
    rec->add_option("--k-secrets", rec_args.k_secrets,
                    "number of secrets to recover (coeff; default from header)");
    rec->add_option("--secret-file-out", rec_args.secret_file_out,
                    "write the de-chunked byte string here (coeff)");
    rec->add_option("--secret-len", rec_args.secret_len,
                    "original secret length in bytes (with --secret-file-out)");

    CensusArgs census_args;
    auto* census = app.add_subcommand("census", "exhaustive degenerate-tuple census");
    census->add_option("--p", census_args.p, "prime modulus")->required();
    census->add_option("--k", census_args.k, "number of secrets")->required();
    census->add_option("--method", census_args.method, "interpolate | vandermonde");

    BlowupArgs blowup_args;
    auto* blowup = app.add_subcommand("blowup", "storage blow-up factor");
    blowup->add_option("--scheme", blowup_args.scheme, "shamir | points | coeff")
        ->required();
    blowup->add_option("--n", blowup_args.n, "number of shares")->required();
    blowup->add_option("--threshold", blowup_args.threshold,
                       "threshold (defaults to k-secrets)");
    blowup->add_option("--k-secrets", blowup_args.k_secrets, "number of secrets");
    blowup->add_option("--d", blowup_args.d, "size of one secret element");

    AttackArgs attack_args;
    auto* attack = app.add_subcommand("attack", "run an attack demonstration");
    attack->add_option("--mode", attack_args.mode, "div | related")->required();
    attack->add_option("--share", attack_args.share_path, "share file")->required();
    attack->add_option("--r", attack_args.r, "public coefficient bound (div)");
    attack->add_option("--d", attack_args.d, "known secret multiplier (related)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : MSS_EXIT_USAGE;
    }

    try {
        if (split->parsed()) return run_split(split_args);
        if (rec->parsed()) return run_reconstruct(rec_args);
        if (census->parsed()) return run_census(census_args);
        if (blowup->parsed()) return run_blowup(blowup_args);
        if (attack->parsed()) return run_attack(attack_args);
    } catch (const std::exception& e) {
        return fail(MSS_ERR_FAIL, e.what());
    }
    return MSS_EXIT_USAGE;
}
