#pragma once

#include <stdexcept>

namespace polyrecon {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegeneratePoints : public Error { public: using Error::Error; };
class InvalidAngleSequence : public Error { public: using Error::Error; };
class RankOutOfRange : public Error { public: using Error::Error; };
class InvalidIndex : public Error { public: using Error::Error; };
class InvalidPolygon : public Error { public: using Error::Error; };
class GenerationFailed : public Error { public: using Error::Error; };
class InconsistentInput : public Error { public: using Error::Error; };
class PreconditionViolated : public Error { public: using Error::Error; };
class MalformedGraph : public Error { public: using Error::Error; };
class NumericallyDegenerate : public Error { public: using Error::Error; };
class SizeMismatch : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

}  // namespace polyrecon
