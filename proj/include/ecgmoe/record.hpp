#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ecgmoe/errors.hpp"

namespace ecgmoe {

// Per-record targets. Each field is optional; present fields must lie in the
// documented range (validate() enforces this).
struct TaskLabels {
    std::optional<double> rr_interval_ms; // >= 0
    std::optional<double> age_years;      // [0, 120]
    std::optional<int> sex;               // 0/1
    std::optional<int> potassium_abnormal; // 0/1
    std::optional<int> arrhythmia_class;   // [0, 14]

    bool operator==(const TaskLabels&) const = default;
    void validate() const;
};

// A multi-lead ECG signal in millivolts, lead-major storage [C x T].
struct EcgRecord {
    std::string record_id;
    std::size_t num_leads = 0;   // C
    std::size_t num_samples = 0; // T
    double sample_rate_hz = 0.0;
    std::vector<double> samples; // size C*T, lead-major
    TaskLabels labels;

    double at(std::size_t lead, std::size_t t) const {
        return samples[lead * num_samples + t];
    }
    double& at(std::size_t lead, std::size_t t) {
        return samples[lead * num_samples + t];
    }

    double duration_s() const {
        return static_cast<double>(num_samples) / sample_rate_hz;
    }

    // Enforces: C >= 1, at least 2 s of signal, all samples finite.
    void validate() const;

    bool operator==(const EcgRecord&) const = default;
};

// Per-lead z-score. Throws ZeroVarianceLead if a lead is constant.
EcgRecord znormalize(const EcgRecord& record);

} // namespace ecgmoe
