#include "wdist/serialize.hpp"

#include <limits>
#include <sstream>

#include "wdist/error.hpp"

namespace wdist::serialize {

namespace {

std::int64_t narrow(Int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::Overflow, "coefficient " + to_string(v) + " does not fit the JSON schema");
    }
    return static_cast<std::int64_t>(v);
}

// json::at throws its own exception types; the CLI reports them as ParseError.
template <typename F>
auto parsing(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace

json cyc_to_json(const cyclo::CycInt& value) {
    json arr = json::array();
    for (Int128 c : value.coeffs()) arr.push_back(narrow(c));
    return arr;
}

cyclo::CycInt cyc_from_json(std::uint32_t p, const json& j) {
    return parsing([&] {
        if (j.is_number_integer()) return cyclo::CycInt::integer(p, j.get<std::int64_t>());
        std::vector<cyclo::Coeff> c;
        for (const auto& x : j) c.push_back(x.get<std::int64_t>());
        if (c.size() != p) throw Error(ErrorCode::ParseError, "CycInt array must have p entries");
        return cyclo::CycInt(p, std::move(c));
    });
}

json to_json(const DistributionRecord& r) {
    json rows = json::array();
    for (const auto& [w, a] : r.dist.entries) rows.push_back({w, a});
    json j;
    j["p"] = r.p;
    j["m"] = r.m;
    j["t"] = r.t;
    j["k"] = r.k ? json(*r.k) : json(nullptr);
    j["tau"] = r.tau ? json(*r.tau) : json(nullptr);
    j["case"] = r.case_tag ? json(std::string(structure::to_string(*r.case_tag))) : json(nullptr);
    j["n"] = r.dist.n;
    j["dimension"] = r.dist.dimension;
    j["modulus"] = r.modulus;
    j["distribution"] = std::move(rows);
    return j;
}

DistributionRecord distribution_from_json(const json& j) {
    return parsing([&] {
        DistributionRecord r;
        r.p = j.at("p").get<std::uint32_t>();
        r.m = j.at("m").get<unsigned>();
        r.t = j.at("t").get<std::uint64_t>();
        if (!j.at("k").is_null()) r.k = j["k"].get<unsigned>();
        if (!j.at("tau").is_null()) r.tau = j["tau"].get<unsigned>();
        if (!j.at("case").is_null()) {
            r.case_tag = structure::case_tag_from_string(j["case"].get<std::string>());
            if (!r.case_tag) throw Error(ErrorCode::ParseError, "unknown case tag");
        }
        r.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
        r.dist.n = j.at("n").get<std::uint64_t>();
        r.dist.dimension = j.at("dimension").get<unsigned>();
        for (const auto& row : j.at("distribution")) {
            r.dist.entries[row.at(0).get<std::uint64_t>()] = row.at(1).get<std::uint64_t>();
        }
        return r;
    });
}

ReportRecord make_report_record(const predict::VerifyReport& report, const std::vector<std::uint32_t>& modulus) {
    const auto& s = report.spec;
    DistributionRecord base{s.p, s.m, s.t, s.k, s.tau, s.case_tag, modulus, {}};
    ReportRecord r{report.pass, base, base, report.diff};
    r.predicted.dist = report.predicted;
    r.computed.dist = report.computed;
    return r;
}

json to_json(const ReportRecord& r) {
    json diff = json::array();
    for (const auto& d : r.diff) diff.push_back({{"weight", d.weight}, {"predicted", d.predicted}, {"computed", d.computed}});
    return {{"status", r.pass ? "PASS" : "FAIL"},
            {"predicted", to_json(r.predicted)},
            {"computed", to_json(r.computed)},
            {"diff", std::move(diff)}};
}

ReportRecord report_from_json(const json& j) {
    return parsing([&] {
        ReportRecord r;
        const auto status = j.at("status").get<std::string>();
        if (status != "PASS" && status != "FAIL") throw Error(ErrorCode::ParseError, "status must be PASS or FAIL");
        r.pass = status == "PASS";
        r.predicted = distribution_from_json(j.at("predicted"));
        r.computed = distribution_from_json(j.at("computed"));
        for (const auto& d : j.at("diff")) {
            r.diff.push_back({d.at("weight").get<std::uint64_t>(), d.at("predicted").get<std::uint64_t>(),
                              d.at("computed").get<std::uint64_t>()});
        }
        return r;
    });
}

json to_json(const SumRecord& r) {
    json entries = json::array();
    for (const auto& [value, count] : r.sums.entries) {
        const auto rational = value.as_rational_integer();
        entries.push_back({rational ? json(narrow(*rational)) : cyc_to_json(value), count});
    }
    return {{"p", r.p},           {"m", r.m},       {"k", r.k},          {"which", r.which},
            {"modulus", r.modulus}, {"total", r.sums.total}, {"entries", std::move(entries)}};
}

SumRecord sum_from_json(const json& j) {
    return parsing([&] {
        SumRecord r;
        r.p = j.at("p").get<std::uint32_t>();
        r.m = j.at("m").get<unsigned>();
        r.k = j.at("k").get<unsigned>();
        r.which = j.at("which").get<std::string>();
        r.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
        for (const auto& e : j.at("entries")) r.sums.add(cyc_from_json(r.p, e.at(0)), e.at(1).get<std::uint64_t>());
        if (r.sums.total != j.at("total").get<std::uint64_t>()) throw Error(ErrorCode::ParseError, "total mismatch");
        return r;
    });
}

json to_json(const CosetRecord& r) { return {{"p", r.p}, {"m", r.m}, {"i", r.i}, {"coset", r.coset}}; }

CosetRecord coset_from_json(const json& j) {
    return parsing([&] {
        return CosetRecord{j.at("p").get<std::uint32_t>(), j.at("m").get<unsigned>(), j.at("i").get<std::uint64_t>(),
                           j.at("coset").get<std::vector<std::uint64_t>>()};
    });
}

json to_json(const MinpolyRecord& r) {
    return {{"p", r.p}, {"m", r.m}, {"t", r.t}, {"modulus", r.modulus}, {"h1", r.h1}, {"h2", r.h2}};
}

MinpolyRecord minpoly_from_json(const json& j) {
    return parsing([&] {
        return MinpolyRecord{j.at("p").get<std::uint32_t>(),
                             j.at("m").get<unsigned>(),
                             j.at("t").get<std::uint64_t>(),
                             j.at("modulus").get<std::vector<std::uint32_t>>(),
                             j.at("h1").get<std::vector<std::uint32_t>>(),
                             j.at("h2").get<std::vector<std::uint32_t>>()};
    });
}

std::string to_csv(const codes::WeightDistribution& dist) {
    std::string out = "weight,frequency\n";
    for (const auto& [w, a] : dist.entries) out += std::to_string(w) + "," + std::to_string(a) + "\n";
    return out;
}

codes::WeightDistribution distribution_from_csv(const std::string& text, std::uint64_t n, unsigned dimension) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "weight,frequency") throw Error(ErrorCode::ParseError, "missing CSV header");
    codes::WeightDistribution dist{{}, n, dimension};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "bad CSV row: " + line);
        try {
            dist.entries[std::stoull(line.substr(0, comma))] = std::stoull(line.substr(comma + 1));
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::ParseError, "bad CSV row: " + line);
        }
    }
    return dist;
}

std::string to_csv(const expsums::SumDistribution& sums) {
    std::string out = "value,count\n";
    for (const auto& [value, count] : sums.entries) {
        if (auto r = value.as_rational_integer()) {
            out += to_string(*r);
        } else {
            out += "[";
            for (std::size_t i = 0; i < value.coeffs().size(); ++i) {
                out += (i ? " " : "") + to_string(value.coeffs()[i]);
            }
            out += "]";
        }
        out += "," + std::to_string(count) + "\n";
    }
    return out;
}

}  // namespace wdist::serialize
