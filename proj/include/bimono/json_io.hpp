#ifndef BIMONO_JSON_IO_HPP
#define BIMONO_JSON_IO_HPP

#include "bimono/cumulants.hpp"
#include "bimono/distributions.hpp"
#include "bimono/partitions.hpp"
#include "bimono/positivity.hpp"
#include "bimono/series.hpp"
#include "bimono/type2.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// JSON encoding shared by the command-line tool. Every document carries
// "schema": "bimono/1" and a "kind"; rationals are strings "p/q" or "p".

namespace bimono::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema = "bimono/1";

Json document(std::string_view kind);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const WordDistribution& d);
Json to_json(const GridDistribution& g);
Json to_json(const CumulantTable& k);
Json to_json(const CumulantGrid& k);
Json to_json(const AtomicPlanarMeasure& mu);
Json to_json(const RationalMatrix& x);
Json to_json(const Series1Q& s);
Json to_json(const Series2Q& s);
Json to_json(const TimePolynomial& p);
Json to_json(const Series2T& s);
Json to_json(const SetPartition& pi);
Json to_json(const OrderedPartition& p);
Json to_json(const PsdVerdict& v);

/// The "kind" of a document; throws invalid_input when it is missing.
std::string kind_of(const Json& j);

WordDistribution word_distribution_from_json(const Json& j);
GridDistribution grid_from_json(const Json& j);
CumulantTable cumulant_table_from_json(const Json& j);
CumulantGrid cumulant_grid_from_json(const Json& j);
AtomicPlanarMeasure measure_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
std::vector<PointedSpace> spaces_from_json(const Json& j);
std::vector<Type2Letter> type2_word_from_json(const Json& j);

} // namespace bimono::io

#endif
