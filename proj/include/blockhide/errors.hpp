#pragma once

#include <stdexcept>

namespace blockhide {

// Base class for every recoverable failure raised by this library.
// std::invalid_argument is reserved for plain API misuse (bad enum value,
// out-of-range bit group) and is not part of this hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// file parsing
class MalformedHeader final : public Error { public: using Error::Error; };
class TruncatedData final : public Error { public: using Error::Error; };
class InvalidToken final : public Error { public: using Error::Error; };

// geometry
class DimensionMismatch final : public Error { public: using Error::Error; };
class ImageTooSmall final : public Error { public: using Error::Error; };
class IndexOutOfGrid final : public Error { public: using Error::Error; };

// coding and stream handling
class NotInTable final : public Error { public: using Error::Error; };
class InsufficientCapacity final : public Error { public: using Error::Error; };
class PayloadTooLarge final : public Error { public: using Error::Error; };
class CorruptStream final : public Error { public: using Error::Error; };
class HeaderExceedsCapacity final : public Error { public: using Error::Error; };
class NotByteAligned final : public Error { public: using Error::Error; };
class NotEnoughData final : public Error { public: using Error::Error; };

}  // namespace blockhide
