#include "ecgmoe/record.hpp"

#include <cmath>

namespace ecgmoe {

void TaskLabels::validate() const {
    if (rr_interval_ms && !(*rr_interval_ms >= 0.0))
        throw Error("labels.rr_interval_ms must be >= 0");
    if (age_years && !(*age_years >= 0.0 && *age_years <= 120.0))
        throw Error("labels.age_years must be in [0, 120]");
    if (sex && !(*sex == 0 || *sex == 1))
        throw Error("labels.sex must be 0 or 1");
    if (potassium_abnormal && !(*potassium_abnormal == 0 || *potassium_abnormal == 1))
        throw Error("labels.potassium_abnormal must be 0 or 1");
    if (arrhythmia_class && !(*arrhythmia_class >= 0 && *arrhythmia_class <= 14))
        throw Error("labels.arrhythmia_class must be in [0, 14]");
}

void EcgRecord::validate() const {
    if (num_leads < 1) throw Error("record must have at least one lead");
    if (sample_rate_hz <= 0.0) throw Error("sample_rate_hz must be positive");
    if (static_cast<double>(num_samples) < 2.0 * sample_rate_hz)
        throw TooShortSignal("record '" + record_id + "' is shorter than 2 s");
    if (samples.size() != num_leads * num_samples)
        throw ShapeMismatch("sample buffer size does not match C*T");
    for (double v : samples) {
        if (!std::isfinite(v))
            throw Error("record '" + record_id + "' contains non-finite samples");
    }
    labels.validate();
}

EcgRecord znormalize(const EcgRecord& record) {
    EcgRecord out = record;
    const std::size_t T = record.num_samples;
    for (std::size_t lead = 0; lead < record.num_leads; ++lead) {
        double mean = 0.0;
        for (std::size_t t = 0; t < T; ++t) mean += record.at(lead, t);
        mean /= static_cast<double>(T);
        double var = 0.0;
        for (std::size_t t = 0; t < T; ++t) {
            const double d = record.at(lead, t) - mean;
            var += d * d;
        }
        var /= static_cast<double>(T);
        const double stddev = std::sqrt(var);
        if (stddev < 1e-15)
            throw ZeroVarianceLead("lead " + std::to_string(lead) + " is constant");
        for (std::size_t t = 0; t < T; ++t)
            out.at(lead, t) = (record.at(lead, t) - mean) / stddev;
    }
    return out;
}

} // namespace ecgmoe
