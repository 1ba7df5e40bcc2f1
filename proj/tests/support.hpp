#pragma once

#include "rimfloer/error.hpp"

#include <doctest.h>

#include <optional>

namespace support {

// Error code raised by f, or nullopt when it returns normally.
template <class F> std::optional<rimfloer::ErrorCode> error_of(F &&f) {
    try {
        f();
    } catch (const rimfloer::Error &e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace support
