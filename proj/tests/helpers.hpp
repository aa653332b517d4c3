#pragma once

#include <utility>

#include "doctest.h"

#include "bifactor/error.hpp"

// Runs f, which must throw bifactor::Error, and returns the error code.
template <typename F>
bifactor::errc error_code_of(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const bifactor::Error& e) {
        return e.code();
    } catch (...) {
        FAIL("threw something other than bifactor::Error");
    }
    FAIL("expected a bifactor::Error, nothing was thrown");
    return bifactor::errc::internal_invariant_violation; // unreachable
}
