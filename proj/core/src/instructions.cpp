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

#include "vcp/instructions.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "vcp/errors.hpp"

#include <nlohmann/json.hpp>

namespace vcp {

std::string to_string(OpKind op) {
    switch (op) {
        case OpKind::TransferFromWell: return "well";
        case OpKind::TransferStock: return "stock";
        case OpKind::TransferSolvent: return "solvent";
    }
    return "?";
}

OpKind op_from_string(const std::string& s) {
    if (s == "well") return OpKind::TransferFromWell;
    if (s == "stock") return OpKind::TransferStock;
    if (s == "solvent") return OpKind::TransferSolvent;
    throw ConfigError("unknown instruction op '" + s + "'");
}

std::string Instruction::source_name() const {
    switch (op) {
        case OpKind::TransferFromWell: return source.name();
        case OpKind::TransferStock: return std::to_string(stock_id);
        case OpKind::TransferSolvent: return "solvent";
    }
    return "?";
}

void InstructionSequence::append(const InstructionSequence& other) {
    instructions.insert(instructions.end(), other.instructions.begin(),
                        other.instructions.end());
}

std::string InstructionSequence::to_jsonl() const {
    std::string out;
    out.reserve(instructions.size() * 80);
    char line[192];
    for (const Instruction& ins : instructions) {
        std::snprintf(line, sizeof(line),
                      "{\"op\":\"%s\",\"src\":\"%s\",\"dst\":\"%s\",\"vol_ul\":%.3f,"
                      "\"new_tip\":%s}\n",
                      to_string(ins.op).c_str(), ins.source_name().c_str(),
                      ins.dest.name().c_str(), ins.volume_ul,
                      ins.new_tip ? "true" : "false");
        out += line;
    }
    return out;
}

InstructionSequence InstructionSequence::from_jsonl(const std::string& text) {
    InstructionSequence seq;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        Instruction ins;
        ins.op = op_from_string(j.at("op").get<std::string>());
        const std::string src = j.at("src").get<std::string>();
        switch (ins.op) {
            case OpKind::TransferFromWell:
                ins.source = WellAddress::parse(src);
                break;
            case OpKind::TransferStock:
                ins.stock_id = std::stoi(src);
                break;
            case OpKind::TransferSolvent:
                break;
        }
        ins.dest = WellAddress::parse(j.at("dst").get<std::string>());
        ins.volume_ul = j.at("vol_ul").get<double>();
        ins.new_tip = j.at("new_tip").get<bool>();
        seq.instructions.push_back(ins);
    }
    return seq;
}

void InstructionSequence::save_jsonl(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << to_jsonl();
}

InstructionSequence InstructionSequence::load_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_jsonl(buf.str());
}

}  // namespace vcp
