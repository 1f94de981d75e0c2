#ifndef SWARMOPT_OBJECTIVES_HPP
#define SWARMOPT_OBJECTIVES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swarmopt/core.hpp"

namespace swarmopt {

enum class Modality { unimodal, multimodal, fixed_dimension_multimodal };

const char* to_string(Modality m);

/// A named benchmark function. Evaluators are pure except for stochastic
/// ones (noisy quartic), which draw their noise from the caller's stream so
/// whole runs stay seed-reproducible.
struct ObjectiveSpec {
    std::string id;
    std::string name;
    std::size_t dimension = 0;
    Bounds bounds;
    std::function<double(const RealVector&, RandomStream*)> evaluator;
    std::optional<double> known_min;
    std::optional<RealVector> known_argmin;
    Modality modality = Modality::unimodal;
    bool scalable = false;   // accepts a dimension override
    bool stochastic = false; // evaluator consumes random draws
};

/// Evaluate spec at x. Rejects dimension mismatches and out-of-bounds
/// inputs. Stochastic objectives require a stream.
double evaluate(const ObjectiveSpec& spec, const RealVector& x,
                RandomStream* rng = nullptr);

/// The 23 classical benchmark functions: F1-F7 unimodal (dim 30),
/// F8-F13 multimodal (dim 30), F14-F23 fixed-dimension multimodal.
std::vector<ObjectiveSpec> classical_suite();

/// The 10 basic CEC2019 functions, in base (unshifted, unrotated) form
/// with a +1 bias so every global minimum value is 1.
std::vector<ObjectiveSpec> cec2019_suite();

/// Build one function by 1-based catalog index, optionally overriding the
/// dimension (allowed only for scalable functions).
ObjectiveSpec classical_function(std::size_t index,
                                 std::optional<std::size_t> dim = {});
ObjectiveSpec cec2019_function(std::size_t index,
                               std::optional<std::size_t> dim = {});

/// Shift/rotation/bias data for building shifted benchmark variants from
/// externally supplied files.
struct TransformData {
    std::size_t dimension = 0;
    RealVector shift;
    std::optional<std::vector<RealVector>> rotation; // row-major, square
    double bias = 0.0;
};

/// Wrap base as x -> base(R * (x - shift)) + bias; R is the identity when
/// rotation is absent. Bounds are copied from base.
ObjectiveSpec shifted_wrap(const ObjectiveSpec& base, const TransformData& t);

/// Parse and validate a transform-data file: a JSON object with fields
/// dim (integer), shift (array), optional rotation (array of rows), and
/// bias (number). Each validation failure names the offending field.
TransformData load_transform_data(const std::string& path);

/// CEC2005 catalog metadata (names, biases, ranges, admissible dimensions).
/// Evaluators for these need official shift/rotation files via
/// load_transform_data + shifted_wrap; none are bundled.
struct Cec2005Entry {
    int index;
    std::string name;
    double bias;
    double lo, hi;
    std::vector<int> dims;
};
const std::vector<Cec2005Entry>& cec2005_catalog();

} // namespace swarmopt

#endif
