#pragma once

#include <gtest/gtest.h>

#include <ostream>

#include "test_helpers.hpp"

namespace parinv {

// Readable failure messages.
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Root& r, std::ostream* os) { *os << to_string(r); }
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << m.to_string(); }

}  // namespace parinv
