#include "qopt/sample_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace qopt {

std::string bits_to_string(const std::vector<int>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (int b : bits) s.push_back(b != 0 ? '1' : '0');
    return s;
}

std::vector<int> bits_from_string(const std::string& s) {
    std::vector<int> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string must be 0/1");
        bits.push_back(c == '1' ? 1 : 0);
    }
    return bits;
}

SampleSet SampleSet::from_shots(std::string solver, std::uint64_t seed,
                                std::map<std::string, double> params,
                                std::vector<SampleEntry> raw) {
    SampleSet set;
    set.solver_ = std::move(solver);
    set.seed_ = seed;
    set.params_ = std::move(params);

    std::map<std::vector<int>, SampleEntry> unique;
    for (SampleEntry& e : raw) {
        auto [it, inserted] = unique.try_emplace(e.bits, e);
        if (!inserted)
            it->second.count += e.count;
        set.shots_ += e.count;
    }
    set.entries_.reserve(unique.size());
    for (auto& [bits, e] : unique) set.entries_.push_back(std::move(e));
    std::stable_sort(set.entries_.begin(), set.entries_.end(),
                     [](const SampleEntry& a, const SampleEntry& b) {
                         if (a.energy != b.energy) return a.energy < b.energy;
                         return a.bits < b.bits;
                     });
    return set;
}

const SampleEntry& SampleSet::best() const {
    if (entries_.empty()) throw std::logic_error("empty sample set");
    return entries_.front();
}

std::string SampleSet::to_json() const {
    nlohmann::json j;
    j["solver"] = solver_;
    j["seed"] = seed_;
    j["shots"] = shots_;
    j["params"] = params_;
    j["entries"] = nlohmann::json::array();
    for (const SampleEntry& e : entries_) {
        j["entries"].push_back({{"bits", bits_to_string(e.bits)},
                                {"energy", to_double(e.energy)},
                                {"count", e.count}});
    }
    return j.dump(2) + "\n";
}

SampleSet SampleSet::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<SampleEntry> raw;
    for (const auto& e : j.at("entries")) {
        SampleEntry entry;
        entry.bits = bits_from_string(e.at("bits").get<std::string>());
        // Energies in JSON are informational doubles; consumers that need
        // exactness recompute them from the bits.
        double energy = e.at("energy").get<double>();
        entry.energy = Rational(static_cast<std::int64_t>(energy * 1048576.0), 1048576);
        entry.count = e.at("count").get<std::int64_t>();
        raw.push_back(std::move(entry));
    }
    SampleSet set = from_shots(j.at("solver").get<std::string>(),
                               j.at("seed").get<std::uint64_t>(),
                               j.value("params", std::map<std::string, double>{}),
                               std::move(raw));
    if (set.shots() != j.at("shots").get<std::int64_t>())
        throw std::invalid_argument("sample set counts do not sum to shots");
    return set;
}

}  // namespace qopt
