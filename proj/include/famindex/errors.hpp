#pragma once

#include <stdexcept>
#include <string>

namespace famindex {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FAMINDEX_DEFINE_ERROR(Name)                  \
  class Name : public Error {                        \
   public:                                           \
    explicit Name(const std::string& what)           \
        : Error(std::string(#Name ": ") + what) {}   \
  }

FAMINDEX_DEFINE_ERROR(NotIntervalFamily);
FAMINDEX_DEFINE_ERROR(NotInZeroV);
FAMINDEX_DEFINE_ERROR(AmbientMismatch);
FAMINDEX_DEFINE_ERROR(BadIndex);
FAMINDEX_DEFINE_ERROR(NotInFamily);
FAMINDEX_DEFINE_ERROR(UnknownTag);
FAMINDEX_DEFINE_ERROR(NotNormal);
FAMINDEX_DEFINE_ERROR(NotIsomorphic);
FAMINDEX_DEFINE_ERROR(SizeCap);
FAMINDEX_DEFINE_ERROR(TrivialGroup);
FAMINDEX_DEFINE_ERROR(BadPair);
FAMINDEX_DEFINE_ERROR(NoBijection);
FAMINDEX_DEFINE_ERROR(NotUnique);
FAMINDEX_DEFINE_ERROR(NotAntisymmetric);
FAMINDEX_DEFINE_ERROR(UnknownHost);
FAMINDEX_DEFINE_ERROR(Unrealizable);
FAMINDEX_DEFINE_ERROR(RankCap);

#undef FAMINDEX_DEFINE_ERROR

}  // namespace famindex
