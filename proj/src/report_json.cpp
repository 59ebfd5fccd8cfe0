#include "equidist/report_json.hpp"

#include <limits>
#include <sstream>

#include "equidist/error.hpp"

namespace equidist {

namespace {

Json integer_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return Json(v.convert_to<std::int64_t>());
    }
    return Json(v.str());
}

BigInt integer_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InvalidInput("expected an integer in JSON");
}

}  // namespace

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Json to_json(const Family& f) {
    Json members = Json::array();
    for (const auto& w : f.members()) members.push_back(w);
    return Json{{"n", f.n()}, {"q", f.q()}, {"m", f.size()}, {"members", std::move(members)}};
}

Json to_json(const BoundReport& r) {
    Json j;
    j["bound"] = integer_json(r.bound);
    j["source"] = std::string(to_string(r.source));
    j["exceptional"] = r.exceptional;
    j["excluded_value"] = r.excluded_value ? Json(to_string(*r.excluded_value)) : Json(nullptr);
    j["conjectural"] = r.conjectural;
    return j;
}

Json to_json(const GramCertificate& c) {
    Json j;
    j["m"] = c.m;
    j["n"] = c.n;
    j["lambda"] = c.lambda;
    j["det_value"] = c.det_value.str();
    j["rank_value"] = c.rank_value;
    j["pd"] = c.pd;
    j["gram_matches_structure"] = c.gram_matches_structure;
    j["conclusion"] = std::string(to_string(c.conclusion));
    return j;
}

Json to_json(const Family& f, const EquidistanceCheck& check) {
    Json j;
    j["n"] = f.n();
    j["q"] = f.q();
    j["m"] = f.size();
    if (const auto* cert = std::get_if<EquidistanceCertificate>(&check)) {
        j["equidistant"] = true;
        j["lambda"] = cert->lambda;
        j["pair_count"] = cert->pair_count;
    } else {
        const auto& v = std::get<EquidistanceViolation>(check);
        j["equidistant"] = false;
        j["violation"] = Json{{"pair", {f[v.i], f[v.j]}},
                              {"distance", v.distance},
                              {"reference_pair", {f[v.reference_i], f[v.reference_j]}},
                              {"reference_distance", v.reference_distance}};
    }
    return j;
}

Json to_json(const SearchResult& r) {
    Json j;
    j["n"] = r.witness.n();
    j["q"] = r.witness.q();
    j["lambda"] = r.witness.size() >= 2 ? r.witness.distance(0, 1) : 0;
    j["max_size"] = r.max_size;
    j["witness"] = to_json(r.witness);
    j["nodes_explored"] = r.nodes_explored;
    j["complete"] = r.complete;
    j["bound_comparison"] = to_json(r.bound_comparison);
    return j;
}

Json to_json(const SweepRow& row) {
    Json j;
    j["n"] = row.n;
    j["q"] = row.q;
    j["lambda"] = row.lambda;
    j["max_size"] = row.max_size;
    j["bound"] = integer_json(row.bound);
    j["exceptional"] = row.exceptional;
    j["complete"] = row.complete;
    j["nodes"] = row.nodes;
    return j;
}

Json to_json(const SweepReport& report) {
    Json rows = Json::array();
    for (const auto& row : report.rows) rows.push_back(to_json(row));
    Json j;
    j["rows"] = std::move(rows);
    j["counterexample_flag"] = report.counterexample_flag;
    return j;
}

SweepRow sweep_row_from_json(const Json& j) {
    try {
        SweepRow row;
        row.n = j.at("n").get<int>();
        row.q = j.at("q").get<int>();
        row.lambda = j.at("lambda").get<int>();
        row.max_size = j.at("max_size").get<std::size_t>();
        row.bound = integer_from_json(j.at("bound"));
        row.exceptional = j.at("exceptional").get<bool>();
        row.complete = j.at("complete").get<bool>();
        row.nodes = j.at("nodes").get<std::uint64_t>();
        return row;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed sweep row: ") + e.what());
    }
}

std::string to_csv(const SweepReport& report) {
    std::ostringstream os;
    os << "n,q,lambda,max_size,bound,exceptional,complete,nodes\n";
    for (const auto& r : report.rows) {
        os << r.n << ',' << r.q << ',' << r.lambda << ',' << r.max_size << ',' << r.bound << ','
           << (r.exceptional ? "true" : "false") << ',' << (r.complete ? "true" : "false") << ',' << r.nodes << '\n';
    }
    return os.str();
}

}  // namespace equidist
