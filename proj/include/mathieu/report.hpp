#pragma once

#include <vector>

#include <json.hpp>

#include "mathieu/charp.hpp"
#include "mathieu/gvc.hpp"
#include "mathieu/image_map.hpp"
#include "mathieu/mathieu_harness.hpp"
#include "mathieu/ortho.hpp"

namespace mathieu {

/// Field order is part of the output format (see docs/report_schema.md).
using Json = nlohmann::ordered_json;

Json to_json(const MembershipCertificate& c);
Json to_json(const Decomposition& d);
Json to_json(const PowerScan& s);
Json to_json(const MonomialCountScan& s);
Json to_json(const WitnessSearch& s);
Json to_json(const Ic1Report& r);
Json to_json(const ScanReport& r);
Json to_json(const OnePropertyProbe& p);
Json to_json(const GvcScan& s);
Json to_json(const Prop74Report& r);
Json to_json(const std::vector<RouteComparison>& rows);
Json to_json(const MomentFunctional& m);
Json to_json(const ImPrimeMembership& m);
Json to_json(const SufficientWitness& w);
Json to_json(const DescentWitness& w);
Json to_json(const Theorem51Report& r);
Json to_json(const WillemsReport& r);
Json to_json(const Example12Report& r);
Json to_json(const FrobeniusReport& r);
Json to_json(const Lemma81Report& r);

Json polynomial_list(const std::vector<Polynomial>& ps);

}  // namespace mathieu
