#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ecgmoe/record.hpp"

namespace ecgmoe {

// One beat is a sum of five Gaussian bumps (P, Q, R, S, T) at fixed phase
// offsets within the beat. A morphology template perturbs the bump
// amplitudes/widths so that the 15 rhythm classes are distinguishable from
// the waveform alone. The table is test scaffolding, not a clinical model.
struct MorphologyTemplate {
    const char* name;
    // amplitude multipliers applied to the base P,Q,R,S,T amplitudes
    double amp[5];
    // width multipliers applied to the base P,Q,R,S,T widths
    double width[5];
    // onset jitter multiplier (rhythm irregularity baked into the class)
    double rr_irregularity;
    // whether the class carries the tall/narrow T shape used as the
    // potassium-abnormality flag
    bool peaked_t;
};

inline constexpr int kMorphologyTableVersion = 1;
inline constexpr int kNumMorphologyClasses = 15;

const std::array<MorphologyTemplate, kNumMorphologyClasses>& morphology_table();

struct SyntheticConfig {
    std::uint64_t seed = 0;
    double heart_rate_bpm = 72.0;   // [30, 220]
    double hr_jitter_pct = 0.0;     // [0, 0.3], relative RR jitter
    double noise_std_mv = 0.0;      // >= 0
    int leads = 1;                  // >= 1
    double duration_s = 10.0;       // > 0
    double sample_rate_hz = 500.0;
    int morphology_class = 0;       // [0, 14]

    void validate() const;
};

// Generator output plus the ground-truth annotations the oracles compare
// against. `r_peak_samples` are the realized R bump centers rounded to the
// nearest sample; `r_peak_times_s` are the exact continuous-time centers.
struct SyntheticEcg {
    EcgRecord record;
    std::vector<std::int64_t> r_peak_samples;
    std::vector<double> r_peak_times_s;
};

// Deterministic: identical config -> bit-identical output. All five task
// labels are filled in (RR from realized gaps, age as an affine function of
// heart rate plus noise, sex from the realized T-wave amplitude, potassium
// from the template's peaked-T flag, arrhythmia class from the template id).
SyntheticEcg generate_synthetic_ecg_with_truth(const SyntheticConfig& cfg);

EcgRecord generate_synthetic_ecg(const SyntheticConfig& cfg);

} // namespace ecgmoe
