#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qopt/rational.hpp"

namespace qopt {

struct SampleEntry {
    std::vector<int> bits;  // bits[i] is qubit i
    Rational energy;
    std::int64_t count = 0;
};

/// Multiset of measurement outcomes from a shot-based solver. Entries are
/// unique by assignment and kept sorted by (energy, bits); counts sum to
/// shots. Solver name, seed and parameters ride along for reproducibility.
class SampleSet {
public:
    SampleSet() = default;

    /// Aggregates raw per-shot outcomes (deduplicates and sorts).
    static SampleSet from_shots(std::string solver, std::uint64_t seed,
                                std::map<std::string, double> params,
                                std::vector<SampleEntry> raw);

    const std::vector<SampleEntry>& entries() const { return entries_; }
    std::int64_t shots() const { return shots_; }
    const std::string& solver() const { return solver_; }
    std::uint64_t seed() const { return seed_; }
    const std::map<std::string, double>& params() const { return params_; }

    /// Lowest-energy entry; throws when empty.
    const SampleEntry& best() const;

    std::string to_json() const;
    static SampleSet from_json(const std::string& text);

private:
    std::string solver_;
    std::uint64_t seed_ = 0;
    std::int64_t shots_ = 0;
    std::map<std::string, double> params_;
    std::vector<SampleEntry> entries_;
};

std::string bits_to_string(const std::vector<int>& bits);
std::vector<int> bits_from_string(const std::string& s);

}  // namespace qopt
