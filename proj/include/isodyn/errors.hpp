#pragma once

#include <stdexcept>
#include <string>

namespace isodyn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

struct DegenerateFrame : Error {
    explicit DegenerateFrame(const std::string& what) : Error("degenerate frame: " + what) {}
};

/// A genericity guard tripped; `expression` names the vanishing quantity so
/// randomized suites can report reproducible failures.
struct DegenerateParameter : Error {
    explicit DegenerateParameter(const std::string& expr)
        : Error("degenerate parameter: " + expr + " vanishes"), expression(expr) {}
    std::string expression;
};

struct SpectrumMismatch : Error {
    explicit SpectrumMismatch(const std::string& what) : Error("spectrum mismatch: " + what) {}
};

struct InvalidIndex : Error {
    explicit InvalidIndex(const std::string& what) : Error("invalid index: " + what) {}
};

struct InvalidTransform : Error {
    explicit InvalidTransform(const std::string& what) : Error("invalid transform: " + what) {}
};

struct ConstraintViolated : Error {
    explicit ConstraintViolated(const std::string& what) : Error("projector constraint violated: " + what) {}
};

/// The input of a model map step is one of its indeterminate points.
struct BasePointHit : Error {
    BasePointHit(const std::string& label_, int step_)
        : Error("base point " + label_ + " hit at step " + std::to_string(step_)),
          label(label_),
          step(step_) {}
    std::string label;
    int step;
};

struct NoAccessorySolution : Error {
    explicit NoAccessorySolution(const std::string& what) : Error("no accessory solution: " + what) {}
};

struct InconsistentSlice : Error {
    explicit InconsistentSlice(const std::string& what) : Error("inconsistent slice: " + what) {}
};

struct ResidualGaugeUnsolvable : Error {
    explicit ResidualGaugeUnsolvable(const std::string& what)
        : Error("residual gauge unsolvable: " + what) {}
};

struct NotTranslation : Error {
    explicit NotTranslation(const std::string& what) : Error("not a translation: " + what) {}
};

struct BasisMismatch : Error {
    BasisMismatch() : Error("lattice classes use different bases") {}
};

struct UnknownMap : Error {
    explicit UnknownMap(const std::string& name) : Error("unknown lattice map: " + name) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("configuration error: " + what) {}
};

}  // namespace isodyn
