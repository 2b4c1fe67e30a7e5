#pragma once

// Output schemas. JSON and CSV emission for factor sets, B-sequence dumps,
// multiplicity sweeps, and the Farey atlas. All numbers are exact integers.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sturmian/bseq.hpp"
#include "sturmian/factor.hpp"
#include "sturmian/farey.hpp"

namespace sturmian {

// {"n": ..., "slope": "...", "factors": ["0101...", ...]}
std::string to_json(const FactorSet& set);

// Header "k,B,case,parity_predicted"; parity[i] corresponds to records[i].
std::string bseq_csv(const std::vector<BSeqRecord>& records, const std::vector<int>& parity);

// Header "n,m".
std::string sweep_csv(const std::vector<std::pair<std::int64_t, std::int64_t>>& values);

// {"slope": "...", "lambda": L, "values": [[n,m],...]}
std::string sweep_json(const Slope& slope, std::int64_t lambda,
                       const std::vector<std::pair<std::int64_t, std::int64_t>>& values);

struct AtlasEntry {
    FareyInterval interval;
    FactorSet set;
};

// [{"lo":"p1/q1","hi":"p2/q2","rep":"p/q","factors":[...]}, ...]
std::string atlas_json(const std::vector<AtlasEntry>& entries);

}  // namespace sturmian
