// Copyright 2026 The VCP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VCP_ENCODER_HPP
#define VCP_ENCODER_HPP

#include <optional>
#include <string>
#include <vector>

#include "vcp/instructions.hpp"
#include "vcp/mixture.hpp"

namespace vcp {

/// One binary dataset bound to the analyte that will carry it.
struct Dataset {
    AnalyteId analyte = 0;
    std::vector<bool> bits;

    std::string to_json() const;
    static Dataset from_json(const std::string& text);
    static Dataset load_json(const std::string& path);
};

/// Bit-index -> well assignment plus the write-phase parameters.
struct EncodingPlan {
    std::vector<WellAddress> bit_wells;          // index = bit position
    std::optional<WellAddress> bias_well;        // constant-1 feature well
    double write_volume_ul = 20.0;
    PlateDims plate_dims;

    std::size_t n_bits() const { return bit_wells.size(); }
    bool uses(WellAddress a) const;

    std::string to_json() const;
    static EncodingPlan from_json(const std::string& text);
};

/// Assigns n_bits wells in a row-major block whose width is chosen so square
/// inputs (e.g. 16x16 images) keep their geometry on the plate. Reserves one
/// extra well for the constant-1 bias feature when requested.
EncodingPlan layout(int n_bits, PlateDims dims = {}, bool with_bias_well = false,
                    double write_volume_ul = 20.0);

/// Emits the write-phase transfers: for every dataset, each well receives one
/// write of the plan volume — analyte stock when the bit is 1, pure solvent
/// when it is 0. Every well therefore ends at M * write_volume regardless of
/// content. Solvent writes for a dataset are grouped before its stock writes
/// so a tip can be reused within each group.
InstructionSequence emit_write_instructions(const std::vector<Dataset>& datasets,
                                            const EncodingPlan& plan);

/// Reads one dataset back out of an encoded plate by thresholding each bit
/// well's concentration of the dataset's analyte at half the written level.
std::vector<bool> read_bits(const PlateState& plate, const EncodingPlan& plan,
                            AnalyteId analyte, double threshold_mg_per_ml);

/// One analyte-compatibility finding.
struct ChemistryViolation {
    AnalyteId analyte = 0;
    int criterion = 0;  // 1 = miscible, 2 = inert, 3 = quantifiable
    std::string message;
};

struct ChemistryReport {
    std::vector<ChemistryViolation> violations;
    bool ok() const { return violations.empty(); }
};

class HplcProfile;  // from vcp/hplc.hpp

/// Checks every registered analyte against the encoding criteria: miscible in
/// the solvent, inert, and quantifiable (has a retention-time profile).
/// Report-only; never throws.
ChemistryReport validate_chemistry(const AnalyteRegistry& reg,
                                   const HplcProfile& profile);

/// Plain-text bit grid (rows of 0/1 characters), e.g. a 16x16 image.
std::vector<bool> load_bit_grid(const std::string& path, int* rows = nullptr,
                                int* cols = nullptr);
void save_bit_grid(const std::string& path, const std::vector<bool>& bits,
                   int rows, int cols);

}  // namespace vcp

#endif  // VCP_ENCODER_HPP
