#pragma once

// JSON / CSV / ASCII emitters shared by the CLI.

#include <string>
#include <vector>

#include "json.hpp"

#include "dycktile/catalan.hpp"
#include "dycktile/exact.hpp"
#include "dycktile/matrix_m.hpp"
#include "dycktile/qpoly.hpp"
#include "dycktile/tiling.hpp"

namespace dycktile::io {

using nlohmann::json;

json exact(const Rational& q);
json exact(const Integer& z);
json approx(const HighFloat& x, unsigned digits);

/// {"terms": {"0": "1", "1/2": "-2", ...}, "text": "..."}; keys are exponents.
json qpoly(const QPoly& p);

/// The three labels of a path: BPE, confining set, pairing.
json path_labels(const DyckPath& h);

enum class Format { Json, Csv, Ascii };
Format parse_format(const std::string& text);

/// M: rows labelled by confining set, columns by pairing.
/// M^{-1}: rows by pairing, columns by confining set. BPE always shown.
std::string render_matrix(const PathIndex& paths, const TriMatrix& m, bool inverse, Format format);

json tiling_json(const SkewShape& shape, const DyckTiling& t);

}  // namespace dycktile::io
