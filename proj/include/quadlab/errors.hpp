#pragma once

#include <stdexcept>
#include <string>

namespace quadlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// geom_core
class ModeMismatch : public Error { using Error::Error; };
class ParallelLines : public Error { using Error::Error; };
class NonPythagorean : public Error { using Error::Error; };

// cyclic_quad
class BadArcs : public Error { using Error::Error; };
class BadDiameter : public Error { using Error::Error; };

// transforms
class InfeasibleMorph : public Error { using Error::Error; };
class DegenerateDiagonal : public Error { using Error::Error; };

// fiber
class NonPythagoreanExact : public Error { using Error::Error; };
class InconsistentFit : public Error { using Error::Error; };
class NotCyclic : public Error { using Error::Error; };
class NonGeneric : public Error { using Error::Error; };
class DegenerateSlope : public Error { using Error::Error; };
class BadSlopes : public Error { using Error::Error; };

// reduction
class NotPerpendicular : public Error { using Error::Error; };

}  // namespace quadlab
