#pragma once

#include <filesystem>

#include "ecgmoe/record.hpp"

namespace ecgmoe {

// Binary record format:
//   16-byte magic: "ECGMOE01" followed by 8 zero bytes
//   u32 C, u32 T (little-endian)
//   f64 sample_rate_hz
//   u8 label-presence bitmask (bit 0 rr, 1 age, 2 sex, 3 ka, 4 ad)
//   present labels as f64, fixed order rr, age, sex, ka, ad
//   C*T little-endian f32 samples, lead-major
// Samples are f32 on disk; in-memory doubles that are not exactly
// representable in f32 are narrowed on save.
void save_record(const EcgRecord& record, const std::filesystem::path& path);
EcgRecord load_record(const std::filesystem::path& path);

// CSV export for external tooling: header lead_0..lead_{C-1}, one row per
// sample.
void export_csv(const EcgRecord& record, const std::filesystem::path& path);

} // namespace ecgmoe
