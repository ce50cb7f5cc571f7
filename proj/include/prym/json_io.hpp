#pragma once

#include <nlohmann/json.hpp>

#include "prym/curves.hpp"
#include "prym/fibers.hpp"
#include "prym/moduli.hpp"
#include "prym/prym.hpp"
#include "prym/report.hpp"

namespace prym {

using Json = nlohmann::json;

Json complex_json(Complex z);               // [re, im]
Json p1_json(const P1Point& p);             // [re, im] or "inf"
Json moduli_json(const ModuliPoint& p);     // {"t": [[re,im] x3]}
Json cover_json(const CoverDatum& c);       // labeled point list
Json curve_system_json(const CurveSystem& cs);
Json descriptor_json(const PrymDescriptor& d);
Json fiber_sample_json(const FiberSample& s);
Json report_json(const Report& r);
Json error_json(const Error& e);

std::string fiber_sample_csv(const FiberSample& s);

}  // namespace prym
