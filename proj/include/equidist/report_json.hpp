#pragma once

#include <string>

#include <json.hpp>

#include "equidist/bounds.hpp"
#include "equidist/certify.hpp"
#include "equidist/core.hpp"
#include "equidist/search.hpp"
#include "equidist/sweep.hpp"

namespace equidist {

// Stable JSON shapes for reports. Keys keep declaration order. Integers that
// can outgrow 64 bits (determinants) are decimal strings; rationals are
// "p/q" strings (or "p" when integral).

using Json = nlohmann::ordered_json;

std::string to_string(const Rational& r);

Json to_json(const Family& f);
Json to_json(const BoundReport& r);
Json to_json(const GramCertificate& c);
Json to_json(const Family& f, const EquidistanceCheck& check);
Json to_json(const SearchResult& r);
Json to_json(const SweepRow& row);
Json to_json(const SweepReport& report);

SweepRow sweep_row_from_json(const Json& j);

/// Header n,q,lambda,max_size,bound,exceptional,complete,nodes and one line per row.
std::string to_csv(const SweepReport& report);

}  // namespace equidist
