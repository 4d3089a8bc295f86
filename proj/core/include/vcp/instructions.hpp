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

#ifndef VCP_INSTRUCTIONS_HPP
#define VCP_INSTRUCTIONS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "vcp/mixture.hpp"

namespace vcp {

enum class OpKind {
    TransferFromWell,  // data well -> pool well
    TransferStock,     // analyte stock reservoir -> well
    TransferSolvent,   // solvent reservoir -> well
};

std::string to_string(OpKind op);
OpKind op_from_string(const std::string& s);

/// One volumetric transfer. Volumes are always >= 0; zero-volume transfers
/// are never emitted.
struct Instruction {
    OpKind op = OpKind::TransferSolvent;
    WellAddress source;       // valid when op == TransferFromWell
    AnalyteId stock_id = 0;   // valid when op == TransferStock
    WellAddress dest;
    double volume_ul = 0.0;
    bool new_tip = false;

    std::string source_name() const;
    bool operator==(const Instruction&) const = default;
};

/// Ordered, deterministically replayable list of transfers plus the metadata
/// needed to interpret the pools it fills.
struct InstructionSequence {
    std::vector<Instruction> instructions;

    // Metadata (not part of the JSONL wire format).
    std::string classifier_id;
    WellAddress pool_positive;
    WellAddress pool_negative;
    double pool_volume_ul = 0.0;  // V_p after top-up; 0 for write-phase plans
    bool has_pools = false;

    std::size_t size() const { return instructions.size(); }

    void append(const InstructionSequence& other);

    /// Wire format: one instruction per line,
    ///   {"op":...,"src":...,"dst":...,"vol_ul":...,"new_tip":...}
    /// with fixed field order and volumes printed with 3 decimals. The output
    /// is byte-stable for identical sequences.
    std::string to_jsonl() const;
    static InstructionSequence from_jsonl(const std::string& text);

    void save_jsonl(const std::string& path) const;
    static InstructionSequence load_jsonl(const std::string& path);
};

}  // namespace vcp

#endif  // VCP_INSTRUCTIONS_HPP
