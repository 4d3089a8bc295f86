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

#include "vcp/mixture.hpp"

#include <cmath>
#include <cstdio>

#include "vcp/errors.hpp"

#include <nlohmann/json.hpp>

namespace vcp {

namespace {

// Capacity checks tolerate accumulated float rounding from many transfers.
constexpr double kVolumeEps = 1e-9;

}  // namespace

// ---------------------------------------------------------------------------
// AnalyteRegistry

void AnalyteRegistry::add(Analyte a) {
    if (a.stock_mg_per_ml <= 0.0) {
        throw ConfigError("analyte " + a.name + ": stock concentration must be > 0");
    }
    for (const auto& existing : analytes_) {
        if (existing.id == a.id) {
            throw ConfigError("duplicate analyte id " + std::to_string(a.id));
        }
    }
    analytes_.push_back(std::move(a));
}

const Analyte& AnalyteRegistry::get(AnalyteId id) const {
    for (const auto& a : analytes_) {
        if (a.id == id) return a;
    }
    throw BadAddress("unknown analyte id " + std::to_string(id));
}

bool AnalyteRegistry::contains(AnalyteId id) const {
    for (const auto& a : analytes_) {
        if (a.id == id) return true;
    }
    return false;
}

AnalyteRegistry AnalyteRegistry::default_phenols() {
    AnalyteRegistry reg;
    reg.add({1, "2,4,6-tri-tert-butylphenol", 62.5});
    reg.add({2, "2,6-dimethylphenol", 62.5});
    reg.add({3, "4-nitrophenol", 62.5});
    return reg;
}

// ---------------------------------------------------------------------------
// SolutionState

double SolutionState::concentration(AnalyteId m) const {
    if (volume_ul <= 0.0) {
        throw EmptySolution("concentration undefined for an empty solution");
    }
    auto it = masses_mg.find(m);
    if (it == masses_mg.end()) return 0.0;
    return it->second / (volume_ul / 1000.0);  // mg per mL
}

double SolutionState::mass(AnalyteId m) const {
    auto it = masses_mg.find(m);
    return it == masses_mg.end() ? 0.0 : it->second;
}

void SolutionState::add(const SolutionState& other) {
    volume_ul += other.volume_ul;
    for (const auto& [id, mg] : other.masses_mg) {
        masses_mg[id] += mg;
    }
}

SolutionState SolutionState::take(double volume_ul_out) {
    if (volume_ul_out < 0.0) {
        throw InsufficientVolume("cannot take a negative volume");
    }
    if (volume_ul_out > volume_ul + kVolumeEps) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "take %.6f uL from %.6f uL", volume_ul_out,
                      volume_ul);
        throw InsufficientVolume(buf);
    }
    SolutionState aliquot;
    if (volume_ul_out == 0.0 || volume_ul <= 0.0) {
        return aliquot;
    }
    aliquot.volume_ul = volume_ul_out;
    if (volume_ul_out >= volume_ul - kVolumeEps) {
        // Exhaustion: move everything so no residual mass is stranded.
        aliquot.volume_ul = volume_ul_out;
        aliquot.masses_mg = std::move(masses_mg);
        masses_mg.clear();
        volume_ul = 0.0;
        return aliquot;
    }
    const double frac = volume_ul_out / volume_ul;
    for (auto& [id, mg] : masses_mg) {
        const double moved = mg * frac;
        aliquot.masses_mg[id] = moved;
        mg -= moved;
    }
    volume_ul -= volume_ul_out;
    return aliquot;
}

SolutionState SolutionState::stock_aliquot(const Analyte& a, double volume_ul) {
    SolutionState s;
    s.volume_ul = volume_ul;
    if (volume_ul > 0.0) {
        s.masses_mg[a.id] = a.stock_mg_per_ml * (volume_ul / 1000.0);
    }
    return s;
}

SolutionState SolutionState::solvent(double volume_ul) {
    SolutionState s;
    s.volume_ul = volume_ul;
    return s;
}

// ---------------------------------------------------------------------------
// WellAddress

std::string WellAddress::name() const {
    std::string out;
    int r = row;
    // Rows A..Z, then AA.. for oversized plates.
    do {
        out.insert(out.begin(), static_cast<char>('A' + r % 26));
        r = r / 26 - 1;
    } while (r >= 0);
    out += std::to_string(col + 1);
    return out;
}

WellAddress WellAddress::parse(const std::string& name) {
    std::size_t i = 0;
    int row = 0;
    while (i < name.size() && name[i] >= 'A' && name[i] <= 'Z') {
        row = row * 26 + (name[i] - 'A' + 1);
        ++i;
    }
    if (i == 0 || i >= name.size()) {
        throw BadAddress("bad well name '" + name + "'");
    }
    int col = 0;
    for (; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') {
            throw BadAddress("bad well name '" + name + "'");
        }
        col = col * 10 + (name[i] - '0');
    }
    if (col == 0) throw BadAddress("bad well name '" + name + "'");
    return {row - 1, col - 1};
}

// ---------------------------------------------------------------------------
// PlateState

PlateState::PlateState(PlateDims dims, double default_capacity_ul)
    : dims_(dims),
      default_capacity_ul_(default_capacity_ul),
      wells_(static_cast<std::size_t>(dims.well_count())) {}

bool PlateState::in_bounds(WellAddress a) const {
    return a.row >= 0 && a.row < dims_.rows && a.col >= 0 && a.col < dims_.cols;
}

int PlateState::index(WellAddress a) const {
    if (!in_bounds(a)) {
        throw BadAddress("well " + a.name() + " outside " +
                         std::to_string(dims_.rows) + "x" + std::to_string(dims_.cols) +
                         " plate");
    }
    return a.row * dims_.cols + a.col;
}

const SolutionState& PlateState::well(WellAddress a) const {
    return wells_[static_cast<std::size_t>(index(a))];
}

SolutionState& PlateState::well(WellAddress a) {
    return wells_[static_cast<std::size_t>(index(a))];
}

double PlateState::capacity(WellAddress a) const {
    auto it = capacity_overrides_.find(a);
    return it == capacity_overrides_.end() ? default_capacity_ul_ : it->second;
}

void PlateState::set_capacity(WellAddress a, double capacity_ul) {
    index(a);  // bounds check
    capacity_overrides_[a] = capacity_ul;
}

SolutionState PlateState::aspirate(WellAddress from, double volume_ul) {
    try {
        return well(from).take(volume_ul);
    } catch (const InsufficientVolume& e) {
        throw InsufficientVolume("well " + from.name() + ": " + e.what());
    }
}

void PlateState::dispense(WellAddress to, SolutionState aliquot) {
    SolutionState& dest = well(to);
    if (dest.volume_ul + aliquot.volume_ul > capacity(to) + kVolumeEps) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "well %s: %.3f + %.3f uL exceeds %.3f uL",
                      to.name().c_str(), dest.volume_ul, aliquot.volume_ul,
                      capacity(to));
        throw WellOverflow(buf);
    }
    dest.add(aliquot);
}

void PlateState::discard_to_waste(WellAddress from, double volume_ul) {
    waste_.add(aspirate(from, volume_ul));
}

double PlateState::total_mass(AnalyteId m) const {
    double total = waste_.mass(m);
    for (const auto& w : wells_) total += w.mass(m);
    return total;
}

double PlateState::total_volume() const {
    double total = waste_.volume_ul;
    for (const auto& w : wells_) total += w.volume_ul;
    return total;
}

namespace {

nlohmann::json solution_to_json(const SolutionState& s) {
    nlohmann::json masses = nlohmann::json::object();
    for (const auto& [id, mg] : s.masses_mg) {
        masses[std::to_string(id)] = mg;
    }
    return {{"volume_ul", s.volume_ul}, {"masses_mg", masses}};
}

SolutionState solution_from_json(const nlohmann::json& j) {
    SolutionState s;
    s.volume_ul = j.at("volume_ul").get<double>();
    for (const auto& [key, val] : j.at("masses_mg").items()) {
        s.masses_mg[std::stoi(key)] = val.get<double>();
    }
    return s;
}

}  // namespace

std::string PlateState::to_json() const {
    nlohmann::json wells = nlohmann::json::array();
    for (int r = 0; r < dims_.rows; ++r) {
        for (int c = 0; c < dims_.cols; ++c) {
            const SolutionState& s = well({r, c});
            if (s.volume_ul == 0.0 && s.masses_mg.empty()) continue;
            nlohmann::json w = solution_to_json(s);
            w["row"] = r;
            w["col"] = c;
            wells.push_back(std::move(w));
        }
    }
    nlohmann::json caps = nlohmann::json::array();
    for (const auto& [addr, cap] : capacity_overrides_) {
        caps.push_back({{"row", addr.row}, {"col", addr.col}, {"capacity_ul", cap}});
    }
    nlohmann::json j = {
        {"dims", {{"rows", dims_.rows}, {"cols", dims_.cols}}},
        {"default_capacity_ul", default_capacity_ul_},
        {"capacity_overrides", caps},
        {"wells", wells},
        {"waste", solution_to_json(waste_)},
    };
    return j.dump(2);
}

PlateState PlateState::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PlateDims dims{j.at("dims").at("rows").get<int>(),
                   j.at("dims").at("cols").get<int>()};
    PlateState plate(dims, j.at("default_capacity_ul").get<double>());
    for (const auto& w : j.at("wells")) {
        WellAddress addr{w.at("row").get<int>(), w.at("col").get<int>()};
        plate.well(addr) = solution_from_json(w);
    }
    for (const auto& c : j.at("capacity_overrides")) {
        plate.set_capacity({c.at("row").get<int>(), c.at("col").get<int>()},
                           c.at("capacity_ul").get<double>());
    }
    plate.waste_ = solution_from_json(j.at("waste"));
    return plate;
}

// ---------------------------------------------------------------------------
// Deck

Deck Deck::make(const AnalyteRegistry& reg, PlateDims dims, double stock_volume_ul,
                double solvent_volume_ul) {
    Deck deck{PlateState(dims), {}, solvent_volume_ul};
    for (const Analyte& a : reg.all()) {
        deck.stocks[a.id] = SolutionState::stock_aliquot(a, stock_volume_ul);
    }
    return deck;
}

double Deck::total_mass(AnalyteId m) const {
    double total = plate.total_mass(m);
    for (const auto& [id, s] : stocks) total += s.mass(m);
    return total;
}

double Deck::total_volume() const {
    double total = plate.total_volume() + solvent_ul;
    for (const auto& [id, s] : stocks) total += s.volume_ul;
    return total;
}

}  // namespace vcp
