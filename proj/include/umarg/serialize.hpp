#pragma once

#include <string>

#include <json.hpp>

#include "umarg/kronecker.hpp"
#include "umarg/partition.hpp"
#include "umarg/quantum.hpp"
#include "umarg/strip_type.hpp"

namespace umarg {

// Insertion-ordered JSON keeps emitted objects in documented field order.
using Json = nlohmann::ordered_json;

// Shortest decimal string that parses back to the same double.
std::string double_to_string(double x);
double string_to_double(const std::string& s);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json spectrum_to_json(const RationalSpectrum& s);   // array of "p/q" strings

Json phi_to_json(const PhiSet& phi);
Json strip_to_json(const StripDerivation& d);
Json maxlex_to_json(const MaxLexResult& r);
Json counterexample_to_json(const CounterexampleReport& r);

// {dim_a, dim_b, entries: [[re, im], ...]} row-major, A-major tensor index.
Json density_to_json(const DensityOperator& rho);
DensityOperator density_from_json(const Json& j);

// Nested arrays of decimal strings.
Json weight_to_json(const WeightMatrix& w);
WeightMatrix weight_from_json(const Json& j);

} // namespace umarg
