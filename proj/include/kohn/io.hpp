#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kohn/berger.hpp"
#include "kohn/genfun.hpp"
#include "kohn/harmonic.hpp"
#include "kohn/search.hpp"

// Text formats for results. Big integers are written as decimal strings in
// JSON so that no consumer rounds them through a double.

namespace kohn::io {

using nlohmann::json;

/// Header `p\q,0,1,...,qmax`, then one row per p.
std::string dim_table_to_csv(const harmonic::DimTable& T);
harmonic::DimTable dim_table_from_csv(const std::string& text, const std::string& descriptor, int n);

/// {"descriptor", "n", "pmax", "qmax", "table": [["1", ...], ...]}.
json dim_table_to_json(const harmonic::DimTable& T);
harmonic::DimTable dim_table_from_json(const json& j);

/// Sparse triples [alpha, beta, "a"] in lexicographic order.
json poly_to_json(const genfun::BivariatePoly& P);
genfun::BivariatePoly poly_from_json(const json& j);

/// {"n", "k", "members": [[s...], ...]}.
json family_to_json(const search::IsospectralFamily& f);
search::IsospectralFamily family_from_json(const json& j);

/// One JSON object per line.
std::string families_to_jsonl(const std::vector<search::IsospectralFamily>& families);
std::vector<search::IsospectralFamily> families_from_jsonl(const std::string& text);

/// Columns `2n-1,k,family`; the family cell lists the weight vectors.
std::string families_csv_header();
std::string families_to_csv_rows(const std::vector<search::IsospectralFamily>& families);

/// Columns `c_s,c_r,multiplicity,bidegrees`.
std::string berger_to_csv(const std::vector<berger::BergerLine>& lines);
std::vector<berger::BergerLine> berger_from_csv(const std::string& text);

json berger_to_json(const std::vector<berger::BergerLine>& lines);

}  // namespace kohn::io
