#pragma once

#include <stdexcept>
#include <string>

namespace nilorb {

enum class ErrorKind {
    IncomparableSize,
    UnsupportedType,
    InternalConsistency,
    RankMismatch,
    NotInImage,
    Domain,
    BaseCase,
    NotNilpotent,
    ParameterUnavailable,
    Construction,
    Parse,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Thrown on a broken internal invariant; callers should never see it.
#define NILORB_ASSERT(cond, msg)                                                       \
    do {                                                                               \
        if (!(cond))                                                                   \
            throw ::nilorb::Error(::nilorb::ErrorKind::InternalConsistency,            \
                                  std::string(msg) + " [" #cond "]");                  \
    } while (0)

}  // namespace nilorb
