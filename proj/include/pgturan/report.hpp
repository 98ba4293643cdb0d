#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pgturan {

inline constexpr const char* kVersion = "1.0.0";

enum class ClaimOrigin {
    Published, // number printed in the source text
    Trivial,   // follows from a definition or direct substitution
    Derived,   // computed here from an independent method
};

enum class ClaimStatus { Pass, Fail, Timeout };

const char* origin_name(ClaimOrigin o);
const char* status_name(ClaimStatus s);

struct Claim
{
    std::string id;
    std::string anchor; // where the claim comes from, in words
    ClaimOrigin origin = ClaimOrigin::Published;
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::Fail;
    std::optional<double> runtime_seconds;
};

struct RunOptions
{
    /// Per-task search budget; 0 marks every search-based claim as timeout.
    double budget_seconds = 900;
    /// Worker threads; 0 means hardware concurrency capped by PGTURAN_THREADS.
    unsigned threads = 0;
    /// Negative control: build the geometry claims over a reducible modulus.
    bool corrupt_modulus = false;
    /// Only tasks whose claim-id prefix matches one of these (empty = all).
    std::vector<std::string> only;
};

struct VerificationReport
{
    std::vector<Claim> claims; // sorted by id
    double budget_seconds = 0;
    bool corrupt_modulus = false;

    int passed() const;
    int failed() const;
    int timed_out() const;
    /// 0 iff no claim failed.
    int exit_code() const;
};

/// Worker count: requested (or hardware concurrency), capped by the
/// PGTURAN_THREADS environment variable, at least 1.
unsigned worker_count(unsigned requested);

VerificationReport run_all(const RunOptions& options = {});

/// Claim-id prefixes run_all knows (task names).
std::vector<std::string> task_names();

std::string report_to_json(const VerificationReport& r, bool timings = false);
std::string report_to_markdown(const VerificationReport& r, bool timings = false);

} // namespace pgturan
