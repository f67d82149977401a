#ifndef SDLAB_IO_HPP
#define SDLAB_IO_HPP

#include <json.hpp>

#include "sdlab/monomial.hpp"
#include "sdlab/polarization.hpp"
#include "sdlab/posetmaps.hpp"
#include "sdlab/stanley.hpp"

namespace sdlab {

using Json = nlohmann::json;

Json to_json(const ExponentVector& a);
ExponentVector exponent_from_json(const Json& j);

/// [{"lo": [...], "hi": [...]}, ...]
Json partition_to_json(const IntervalPartition& p);
IntervalPartition partition_from_json(const Json& j, const ExponentVector& bound);

/// [{"a": [...], "Z": ["x", ...]}, ...]
Json decomposition_to_json(const StanleyDecomposition& d, const RingContext& ring);

Json hilbert_to_json(const HilbertSeries& h);

/// {"kind": ..., "g": [...], "g_prime": [...], <kind parameters>}
Json map_to_json(const BoxedPosetMap& phi);
BoxedPosetMap map_from_json(const Json& j);

Json trace_to_json(const PolarizationTrace& t);
PolarizationTrace trace_from_json(const Json& j);

}  // namespace sdlab

#endif
