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

#ifndef VCP_MIXTURE_HPP
#define VCP_MIXTURE_HPP

#include <map>
#include <string>
#include <vector>

namespace vcp {

using AnalyteId = int;

/// One chemical species. Its concentration pattern across the plate carries
/// one dataset.
struct Analyte {
    AnalyteId id = 0;
    std::string name;
    double stock_mg_per_ml = 62.5;  // concentration of the prepared stock
    // Compatibility flags checked by encoder::validate_chemistry.
    bool miscible = true;
    bool inert = true;
};

/// Unique-id collection of analytes available on the bench.
class AnalyteRegistry {
public:
    void add(Analyte a);
    const Analyte& get(AnalyteId id) const;
    bool contains(AnalyteId id) const;
    const std::vector<Analyte>& all() const { return analytes_; }
    std::size_t size() const { return analytes_.size(); }

    /// The three phenols used by the bundled experiments, 62.5 mg/mL stocks.
    static AnalyteRegistry default_phenols();

private:
    std::vector<Analyte> analytes_;
};

/// A liquid volume with per-analyte dissolved mass. Masses are stored as
/// extensive quantities (mg); concentrations are always derived, so repeated
/// volume changes cannot drift the stored state.
struct SolutionState {
    double volume_ul = 0.0;
    std::map<AnalyteId, double> masses_mg;

    bool empty() const { return volume_ul <= 0.0; }

    /// mg/mL of analyte m; 0 if absent. Throws EmptySolution when volume is 0.
    double concentration(AnalyteId m) const;

    double mass(AnalyteId m) const;

    /// Adds another solution into this one (volumes and masses add).
    void add(const SolutionState& other);

    /// Removes `volume_ul` with the current composition (perfect mixing) and
    /// returns it. Throws InsufficientVolume if more than available.
    SolutionState take(double volume_ul_out);

    /// A stock aliquot: volume v at the analyte's stock concentration.
    static SolutionState stock_aliquot(const Analyte& a, double volume_ul);

    /// Pure solvent (no analytes).
    static SolutionState solvent(double volume_ul);
};

struct PlateDims {
    int rows = 16;
    int cols = 24;
    int well_count() const { return rows * cols; }
};

/// 0-based well coordinate. Default geometry is a 384-well plate (16x24).
struct WellAddress {
    int row = 0;
    int col = 0;

    bool operator==(const WellAddress&) const = default;
    auto operator<=>(const WellAddress&) const = default;

    /// Standard plate naming: row letter + 1-based column ("A1".."P24").
    std::string name() const;
    static WellAddress parse(const std::string& name);
};

/// Addressed grid of wells, each a SolutionState, plus a waste reservoir so
/// that global mass accounting closes for discarded liquid.
class PlateState {
public:
    explicit PlateState(PlateDims dims = {}, double default_capacity_ul = 120.0);

    const PlateDims& dims() const { return dims_; }
    bool in_bounds(WellAddress a) const;

    const SolutionState& well(WellAddress a) const;
    SolutionState& well(WellAddress a);
    const SolutionState& waste() const { return waste_; }

    double capacity(WellAddress a) const;
    /// Raises (or lowers) the working capacity of one well, e.g. for a
    /// deep-well pool position.
    void set_capacity(WellAddress a, double capacity_ul);
    double default_capacity() const { return default_capacity_ul_; }
    const std::map<WellAddress, double>& capacity_overrides() const {
        return capacity_overrides_;
    }

    /// Removes `volume_ul` from a well at its current composition.
    SolutionState aspirate(WellAddress from, double volume_ul);

    /// Adds an aliquot to a well. Throws WellOverflow past capacity.
    void dispense(WellAddress to, SolutionState aliquot);

    /// Moves liquid from a well into the waste reservoir.
    void discard_to_waste(WellAddress from, double volume_ul);

    /// Total dissolved mass of analyte m across wells and waste.
    double total_mass(AnalyteId m) const;
    /// Total liquid volume across wells and waste.
    double total_volume() const;

    /// Lossless JSON snapshot (and its inverse).
    std::string to_json() const;
    static PlateState from_json(const std::string& text);

private:
    PlateDims dims_;
    double default_capacity_ul_;
    std::vector<SolutionState> wells_;
    std::map<WellAddress, double> capacity_overrides_;
    SolutionState waste_;

    int index(WellAddress a) const;
};

/// The full bench: one plate plus the stock and solvent reservoirs the robot
/// draws from. Keeping the reservoirs in the ledger makes per-analyte mass
/// and total volume conserved under every executable instruction, including
/// data writes.
struct Deck {
    PlateState plate;
    std::map<AnalyteId, SolutionState> stocks;
    double solvent_ul = 0.0;

    static Deck make(const AnalyteRegistry& reg, PlateDims dims = {},
                     double stock_volume_ul = 100000.0,
                     double solvent_volume_ul = 1000000.0);

    /// Stock + wells + waste mass of analyte m.
    double total_mass(AnalyteId m) const;
    /// Reservoirs + wells + waste volume.
    double total_volume() const;
};

}  // namespace vcp

#endif  // VCP_MIXTURE_HPP
