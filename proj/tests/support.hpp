#pragma once

#include <gtest/gtest.h>

#include "generators.hpp"
#include "reebsym/error.hpp"

#define EXPECT_REEBSYM_ERROR(statement, expected_code)                        \
  do {                                                                        \
    try {                                                                     \
      statement;                                                              \
      ADD_FAILURE() << "expected " << ::reebsym::error_name(expected_code);   \
    } catch (const ::reebsym::Error& e) {                                     \
      EXPECT_EQ(e.code(), expected_code) << e.what();                         \
    }                                                                         \
  } while (false)
