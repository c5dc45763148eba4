#pragma once

#include "cmgr/baker.hpp"
#include "cmgr/cm.hpp"
#include "cmgr/partition.hpp"
#include "cmgr/quasi_exp.hpp"
#include "cmgr/window.hpp"

#include <json.hpp>

namespace cmgr {

// Insertion-ordered documents keep report bytes reproducible.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const MultiPartition& p);
MultiPartition multipartition_from_json(const Json& j);

Json to_json(const CMPoint& p);
CMPoint cmpoint_from_json(const Json& j);

Json to_json(const SupportDivisor& d);
SupportDivisor supportdivisor_from_json(const Json& j);

Json to_json(const WindowSubspace& w);
WindowSubspace window_from_json(const Json& j);

Json to_json(const FlagSpec& f);
FlagSpec flagspec_from_json(const Json& j);

Json to_json(const QuasiExpSpace& c);
QuasiExpSpace quasiexp_from_json(const Json& j);

Json to_json(const DiffOperator& d);
DiffOperator diffop_from_json(const Json& j);

Json to_json(const ExponentSet& e);

}  // namespace cmgr
