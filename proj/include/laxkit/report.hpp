#ifndef LAXKIT_REPORT_HPP
#define LAXKIT_REPORT_HPP

// Check bookkeeping shared by the suites and the CLI.  A CheckRecord is one
// named residual test; a CheckReport is an ordered collection with an overall
// verdict.  Wall time is tracked but deliberately kept out of the serialized
// report so that repeated runs with the same seed are byte-identical.

#include <cstdint>
#include <string>
#include <vector>

namespace laxkit {

// verified      - identity held within tolerance on all samples
// falsified     - identity failed; the failure is reproducible and expected
//                 (a genuine property of the model, not a code bug)
// not_applicable- check does not make sense for this model/backend
enum class ConjectureStatus { verified, falsified, not_applicable };

inline const char* to_string(ConjectureStatus s) {
    switch (s) {
        case ConjectureStatus::verified: return "verified";
        case ConjectureStatus::falsified: return "falsified";
        default: return "not_applicable";
    }
}

struct CheckRecord {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;  // always max_residual <= tolerance
    int samples = 0;
    std::uint64_t seed = 0;
    ConjectureStatus status = ConjectureStatus::verified;
    std::string note;  // free-form commentary (kept short)
};

struct CheckReport {
    std::string title;
    std::vector<CheckRecord> records;
    double wall_time_s = 0.0;  // informational only; never serialized

    void add(CheckRecord rec) { records.push_back(std::move(rec)); }

    // A report passes when every record either passes or is explicitly
    // expected to fail (falsified) / excluded (not_applicable).
    bool all_pass() const {
        for (const auto& r : records)
            if (!r.pass && r.status == ConjectureStatus::verified) return false;
        return true;
    }

    // True when every applicable record passed numerically (falsified rows
    // count as failures here; used by callers that refuse known violations).
    bool all_verified() const {
        for (const auto& r : records)
            if (r.status != ConjectureStatus::not_applicable && !r.pass) return false;
        return true;
    }
};

// Convenience builder used throughout the suites.
inline CheckRecord make_record(std::string name, double max_residual, double tolerance,
                               int samples, std::uint64_t seed,
                               ConjectureStatus status = ConjectureStatus::verified,
                               std::string note = {}) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.max_residual = max_residual;
    rec.tolerance = tolerance;
    rec.pass = max_residual <= tolerance;
    rec.samples = samples;
    rec.seed = seed;
    rec.status = status;
    rec.note = std::move(note);
    return rec;
}

}  // namespace laxkit

#endif
