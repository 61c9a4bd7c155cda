#pragma once

// Spec-file parsing, shape and word literals, and JSON reports.

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nivatlab/complexity.hpp"
#include "nivatlab/configuration.hpp"
#include "nivatlab/geometry.hpp"
#include "nivatlab/structure.hpp"
#include "nivatlab/verifier.hpp"
#include "nivatlab/words.hpp"

namespace nivatlab {

/// Malformed input; the message names the source, line and field.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON configuration spec, or a plain text grid (first row on top) read
/// as a window anchored at the origin. `base_dir` resolves "grid_file".
Configuration parse_configuration(std::string_view text, const std::string& source = "<config>",
                                  const std::string& base_dir = ".");
Configuration load_configuration(const std::string& path);

/// `rect:N,K`, `points:x1,y1;x2,y2;...` or `file:<path>` with `x y` per line.
ConvexLatticeSet parse_shape(const std::string& literal);

/// `dx,dy` with an optional `@offset`, or one of h, v, d (the (1,1) diagonal).
OrientedLine parse_line(const std::string& literal);

/// Inline letters, or `file:<path>` (whitespace ignored).
Word parse_word(const std::string& literal);

std::string read_file(const std::string& path);

using Json = nlohmann::ordered_json;

Json to_json(LatticePoint p);
Json to_json(const std::vector<LatticePoint>& pts);
Json to_json(const Rational& r);
Json to_json(const OrientedLine& l);
Json to_json(const ConvexLatticeSet& s);
Json to_json(const QuasiRegularity& q, const ConvexLatticeSet& s);
Json to_json(const ComplexityReport& r);
Json to_json(const ComplexityTable& t);
Json to_json(const MhResult& r);
Json to_json(const FineWilfResult& r);
Json to_json(const PeriodReport& r);
Json to_json(const NullAreaReport& r);
Json to_json(const InequalityInstance& i);
Json to_json(const GeneratingSetResult& r);
Json to_json(const PhiResult& r);
Json to_json(const BalancedSetCertificate& c);
Json to_json(const StripLemmaReport& r);
Json to_json(const WitnessResult& r);
Json to_json(const NivatReport& r);
Json to_json(const ExampleSuite& s);

/// Report wrapper carrying the schema version.
Json report(const std::string& command, Json body);

}  // namespace nivatlab
