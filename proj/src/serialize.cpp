#include "sturmian/serialize.hpp"

#include <json.hpp>

namespace sturmian {

namespace {

using json = nlohmann::ordered_json;

std::string fraction(std::int64_t p, std::int64_t q) {
    return std::to_string(p) + "/" + std::to_string(q);
}

json factor_array(const FactorSet& set) {
    json arr = json::array();
    for (const Factor& w : set.factors) arr.push_back(w.to_string());
    return arr;
}

}  // namespace

std::string to_json(const FactorSet& set) {
    json out;
    out["n"] = set.n;
    out["slope"] = set.slope.spec_string();
    out["factors"] = factor_array(set);
    return out.dump();
}

std::string bseq_csv(const std::vector<BSeqRecord>& records, const std::vector<int>& parity) {
    std::string out = "k,B,case,parity_predicted\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        out += std::to_string(records[i].k);
        out += ',';
        out += std::to_string(records[i].value);
        out += ',';
        out += to_string(records[i].cls);
        out += ',';
        out += std::to_string(parity[i]);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<std::pair<std::int64_t, std::int64_t>>& values) {
    std::string out = "n,m\n";
    for (const auto& [n, m] : values) {
        out += std::to_string(n);
        out += ',';
        out += std::to_string(m);
        out += '\n';
    }
    return out;
}

std::string sweep_json(const Slope& slope, std::int64_t lambda,
                       const std::vector<std::pair<std::int64_t, std::int64_t>>& values) {
    json out;
    out["slope"] = slope.spec_string();
    out["lambda"] = lambda;
    json arr = json::array();
    for (const auto& [n, m] : values) arr.push_back(json::array({n, m}));
    out["values"] = arr;
    return out.dump();
}

std::string atlas_json(const std::vector<AtlasEntry>& entries) {
    json arr = json::array();
    for (const AtlasEntry& entry : entries) {
        const auto* rep = entry.interval.rep.as_rational();
        json item;
        item["lo"] = fraction(entry.interval.p1, entry.interval.q1);
        item["hi"] = fraction(entry.interval.p2, entry.interval.q2);
        item["rep"] = rep == nullptr ? entry.interval.rep.spec_string()
                                     : fraction(rep->p.get_si(), rep->q.get_si());
        item["factors"] = factor_array(entry.set);
        arr.push_back(item);
    }
    return arr.dump();
}

}  // namespace sturmian
