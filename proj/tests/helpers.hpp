#pragma once

#include <random>

#include "doctest.h"
#include "mll/complex.hpp"
#include "mll/error.hpp"

// Fixed seed for every property test.
inline constexpr unsigned long kTestSeed = 20261019;

#define CHECK_ERROR_CODE(expr, expected_code)                  \
  do {                                                         \
    bool thrown_ = false;                                      \
    try {                                                      \
      (void)(expr);                                            \
    } catch (const mll::Error& e_) {                           \
      thrown_ = true;                                          \
      CHECK_MESSAGE(e_.code() == (expected_code), e_.what());  \
    }                                                          \
    CHECK_MESSAGE(thrown_, "expected an mll::Error from " #expr); \
  } while (0)

inline void check_close(mll::Complex got, mll::Complex want, double tol) {
  INFO("got " << got << " want " << want);
  CHECK(std::abs(got - want) <= tol);
}
