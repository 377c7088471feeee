#include "mss.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "mss/analysis.hpp"
#include "mss/attacks.hpp"
#include "mss/errors.hpp"
#include "mss/random.hpp"
#include "mss/schemes.hpp"
#include "mss/sharefile.hpp"

struct mss_rng {
    mss::RandomSource source;
};

struct mss_sharefile {
    mss::ShareFile file;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* message) {
    g_last_error = message;
    return code;
}

// Runs fn, translating exceptions into error codes + the thread-local
// message. fn returns an error code itself so wrappers can fail directly.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        const int code = fn();
        if (code == MSS_OK) g_last_error.clear();
        return code;
    } catch (const mss::Error& e) {
        g_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return MSS_ERR_FAIL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MSS_ERR_FAIL;
    }
}

mss::Share to_share(const mss_share& s) {
    return {static_cast<mss::SchemeKind>(s.scheme), mss::PrimeModulus{s.p},
            s.threshold, s.x, s.y};
}

mss_share from_share(const mss::Share& s) {
    return {static_cast<int32_t>(s.scheme()), s.modulus().value(), s.threshold(),
            s.x(), s.y()};
}

std::vector<mss::Share> to_shares(const mss_share* shares, uint32_t count) {
    std::vector<mss::Share> out;
    out.reserve(count);
    for (uint32_t i = 0; i < count; ++i) out.push_back(to_share(shares[i]));
    return out;
}

mss::SchemeKind to_scheme(int scheme) {
    switch (scheme) {
        case MSS_SCHEME_SHAMIR: return mss::SchemeKind::Shamir;
        case MSS_SCHEME_POINTS: return mss::SchemeKind::Points;
        case MSS_SCHEME_COEFF: return mss::SchemeKind::Coeff;
        default:
            throw mss::Error(mss::ErrorCode::InvalidParams, "unknown scheme id");
    }
}

} // namespace

extern "C" {

const char* mss_error_name(int code) {
    return mss::error_name(static_cast<mss::ErrorCode>(code));
}

const char* mss_last_error(void) {
    return g_last_error.c_str();
}

mss_rng* mss_rng_new(uint64_t seed) {
    return new (std::nothrow) mss_rng{mss::RandomSource{seed}};
}

void mss_rng_free(mss_rng* rng) {
    delete rng;
}

int mss_shamir_split(uint64_t p, uint64_t secret, uint32_t threshold, uint32_t n,
                     mss_rng* rng, mss_share* shares_out) {
    return guarded([&]() -> int {
        if (rng == nullptr || shares_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const auto shares =
            mss::shamir_split(mss::PrimeModulus{p}, secret, threshold, n, rng->source);
        for (uint32_t i = 0; i < n; ++i) shares_out[i] = from_share(shares[i]);
        return MSS_OK;
    });
}

int mss_shamir_reconstruct(const mss_share* shares, uint32_t count,
                           uint64_t* secret_out) {
    return guarded([&]() -> int {
        if (shares == nullptr || secret_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        *secret_out = mss::shamir_reconstruct(to_shares(shares, count));
        return MSS_OK;
    });
}

int mss_points_split(uint64_t p, const uint64_t* secrets, uint32_t k, uint32_t n,
                     mss_share* shares_out) {
    return guarded([&]() -> int {
        if (secrets == nullptr || shares_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const mss::SecretSet set{mss::PrimeModulus{p},
                                 std::vector<uint64_t>(secrets, secrets + k)};
        const auto shares = mss::points_split(set, n);
        for (uint32_t i = 0; i < n; ++i) shares_out[i] = from_share(shares[i]);
        return MSS_OK;
    });
}

int mss_points_reconstruct(const mss_share* shares, uint32_t count,
                           uint64_t* secrets_out) {
    return guarded([&]() -> int {
        if (shares == nullptr || secrets_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const auto set = mss::points_reconstruct(to_shares(shares, count));
        for (uint32_t i = 0; i < set.count(); ++i) secrets_out[i] = set.values()[i];
        return MSS_OK;
    });
}

int mss_coeff_split(uint64_t p, const uint64_t* secrets, uint32_t k, uint32_t m,
                    uint32_t n, mss_rng* rng, mss_share* shares_out) {
    return guarded([&]() -> int {
        if (secrets == nullptr || shares_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const mss::SecretSet set{mss::PrimeModulus{p},
                                 std::vector<uint64_t>(secrets, secrets + k)};
        const auto shares =
            mss::coeff_split(set, m, n, rng == nullptr ? nullptr : &rng->source);
        for (uint32_t i = 0; i < n; ++i) shares_out[i] = from_share(shares[i]);
        return MSS_OK;
    });
}

int mss_coeff_reconstruct(const mss_share* shares, uint32_t count,
                          uint32_t k_secrets, uint64_t* secrets_out) {
    return guarded([&]() -> int {
        if (shares == nullptr || secrets_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const auto set = mss::coeff_reconstruct(to_shares(shares, count), k_secrets);
        for (uint32_t i = 0; i < set.count(); ++i) secrets_out[i] = set.values()[i];
        return MSS_OK;
    });
}

int mss_chunk_secret(const uint8_t* bytes, size_t len, uint32_t k, uint64_t p,
                     uint64_t* secrets_out) {
    return guarded([&]() -> int {
        if ((bytes == nullptr && len > 0) || secrets_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const auto set =
            mss::chunk_secret(std::span<const uint8_t>{bytes, len}, k, mss::PrimeModulus{p});
        for (uint32_t i = 0; i < set.count(); ++i) secrets_out[i] = set.values()[i];
        return MSS_OK;
    });
}

int mss_unchunk_secret(const uint64_t* secrets, uint32_t k, size_t byte_len,
                       uint8_t* bytes_out) {
    return guarded([&]() -> int {
        if (secrets == nullptr || (bytes_out == nullptr && byte_len > 0)) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const auto bytes =
            mss::unchunk_secret(std::span<const uint64_t>{secrets, k}, byte_len);
        std::memcpy(bytes_out, bytes.data(), bytes.size());
        return MSS_OK;
    });
}

int mss_degeneracy_census(uint64_t p, uint32_t k, int method,
                          mss_census_report* report_out) {
    return guarded([&]() -> int {
        if (report_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        if (method != MSS_CENSUS_INTERPOLATE && method != MSS_CENSUS_VANDERMONDE) {
            return fail(MSS_ERR_INVALID_PARAMS, "unknown census method");
        }
        const auto report = mss::degeneracy_census(
            mss::PrimeModulus{p}, k, static_cast<mss::CensusMethod>(method));
        report_out->p = report.p;
        report_out->k = report.k;
        report_out->total_tuples = report.total_tuples;
        report_out->degenerate_count = report.degenerate_count;
        report_out->closed_form = report.closed_form;
        report_out->failure_percent = {report.failure_percent.num,
                                       report.failure_percent.den};
        return MSS_OK;
    });
}

int mss_eq1_check(const mss_census_report* report, int* holds_out) {
    return guarded([&]() -> int {
        if (report == nullptr || holds_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        mss::CensusReport r;
        r.p = report->p;
        r.k = report->k;
        r.total_tuples = report->total_tuples;
        r.degenerate_count = report->degenerate_count;
        r.closed_form = report->closed_form;
        r.failure_percent = {report->failure_percent.num, report->failure_percent.den};
        *holds_out = mss::eq1_check(r) ? 1 : 0;
        return MSS_OK;
    });
}

int mss_blowup_factor(int scheme, uint32_t n, uint32_t threshold, uint32_t k_secrets,
                      uint64_t d, mss_blowup_report* report_out) {
    return guarded([&]() -> int {
        if (report_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const auto report = mss::blowup_factor(to_scheme(scheme), n, threshold,
                                               k_secrets, d);
        report_out->scheme = static_cast<int32_t>(report.scheme);
        report_out->n = report.n;
        report_out->threshold = report.threshold;
        report_out->k_secrets = report.k_secrets;
        report_out->secret_size_units = report.secret_size_units;
        report_out->blowup = {report.blowup.num, report.blowup.den};
        return MSS_OK;
    });
}

int mss_divisibility_attack(const mss_share* share, uint64_t r,
                            mss_divisibility_report* report_out) {
    return guarded([&]() -> int {
        if (share == nullptr || report_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const auto inference = mss::divisibility_attack(to_share(*share), r);
        report_out->u = inference.u;
        report_out->q_u = inference.q_u;
        report_out->r = inference.r;
        report_out->divisible = inference.divisible ? 1 : 0;
        report_out->search_space_size = inference.search_space_size;
        return MSS_OK;
    });
}

int mss_related_share_forgery(const mss_share* source, uint64_t d,
                              mss_share* forged_out) {
    return guarded([&]() -> int {
        if (source == nullptr || forged_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const auto forgery = mss::related_share_forgery(to_share(*source), d);
        *forged_out = from_share(forgery.forged);
        return MSS_OK;
    });
}

int mss_sharefile_create(int scheme, uint64_t p, uint32_t threshold,
                         uint32_t k_secrets, mss_sharefile** file_out) {
    return guarded([&]() -> int {
        if (file_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        *file_out = new mss_sharefile{
            mss::ShareFile{to_scheme(scheme), mss::PrimeModulus{p}, threshold, k_secrets}};
        return MSS_OK;
    });
}

int mss_sharefile_parse(const char* text, mss_sharefile** file_out) {
    return guarded([&]() -> int {
        if (text == nullptr || file_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        *file_out = new mss_sharefile{mss::ShareFile::parse(text)};
        return MSS_OK;
    });
}

void mss_sharefile_free(mss_sharefile* file) {
    delete file;
}

int mss_sharefile_add(mss_sharefile* file, uint64_t index, const mss_share* share) {
    return guarded([&]() -> int {
        if (file == nullptr || share == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        file->file.add_entry(index, to_share(*share));
        return MSS_OK;
    });
}

int mss_sharefile_serialize(const mss_sharefile* file, char* buf, size_t cap,
                            size_t* len_out) {
    return guarded([&]() -> int {
        if (file == nullptr || len_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        const std::string text = file->file.serialize();
        *len_out = text.size();
        if (buf == nullptr || cap < text.size() + 1) {
            return fail(MSS_ERR_BUFFER_TOO_SMALL, "output buffer too small");
        }
        std::memcpy(buf, text.c_str(), text.size() + 1);
        return MSS_OK;
    });
}

int mss_sharefile_scheme(const mss_sharefile* file) {
    return file == nullptr ? -1 : static_cast<int>(file->file.scheme());
}

uint64_t mss_sharefile_p(const mss_sharefile* file) {
    return file == nullptr ? 0 : file->file.modulus().value();
}

uint32_t mss_sharefile_threshold(const mss_sharefile* file) {
    return file == nullptr ? 0 : file->file.threshold();
}

uint32_t mss_sharefile_k_secrets(const mss_sharefile* file) {
    return file == nullptr ? 0 : file->file.k_secrets();
}

uint32_t mss_sharefile_count(const mss_sharefile* file) {
    return file == nullptr ? 0 : static_cast<uint32_t>(file->file.entries().size());
}

int mss_sharefile_entry(const mss_sharefile* file, uint32_t i, uint64_t* index_out,
                        mss_share* share_out) {
    return guarded([&]() -> int {
        if (file == nullptr || index_out == nullptr || share_out == nullptr) {
            return fail(MSS_ERR_INVALID_PARAMS, "null pointer argument");
        }
        if (i >= file->file.entries().size()) {
            return fail(MSS_ERR_INVALID_PARAMS, "entry index out of range");
        }
        const auto& entry = file->file.entries()[i];
        *index_out = entry.index;
        // Materialize through Share to apply the per-scheme validity rules.
        const mss::Share share{file->file.scheme(), file->file.modulus(),
                               file->file.threshold(), entry.x, entry.y};
        *share_out = from_share(share);
        return MSS_OK;
    });
}

} // extern "C"
