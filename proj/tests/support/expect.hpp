#ifndef ZEL_TESTS_EXPECT_HPP
#define ZEL_TESTS_EXPECT_HPP

#include <gtest/gtest.h>

#include "zel/error.hpp"

namespace zel::testing {

// Code of the zel::Error thrown by f; records a failure if nothing is thrown.
template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InternalInconsistency;
}

}  // namespace zel::testing

#endif  // ZEL_TESTS_EXPECT_HPP
