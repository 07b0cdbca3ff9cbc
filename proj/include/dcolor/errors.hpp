#pragma once

#include <stdexcept>
#include <string>

namespace dcolor {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegreeTooLarge : public Error { public: using Error::Error; };
class MissingColor : public Error { public: using Error::Error; };
class RoundLimitExceeded : public Error { public: using Error::Error; };
class InvalidAlpha : public Error { public: using Error::Error; };
class SlackTooSmall : public Error { public: using Error::Error; };
class SubInstanceSlackViolation : public Error { public: using Error::Error; };
class UncoloredNodeRemains : public Error { public: using Error::Error; };
class DefectExceeded : public Error { public: using Error::Error; };
class InvalidPartition : public Error { public: using Error::Error; };
class SizeLimit : public Error { public: using Error::Error; };
class SearchTimeout : public Error { public: using Error::Error; };
class BadDelta : public Error { public: using Error::Error; };
class InfeasibleParams : public Error { public: using Error::Error; };
class SpecParse : public Error { public: using Error::Error; };
class InvalidInput : public Error { public: using Error::Error; };

}  // namespace dcolor
