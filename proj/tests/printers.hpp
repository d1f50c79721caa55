// Readable gtest output for exact values.
#pragma once

#include <ostream>

#include "qes/exactnum.hpp"
#include "qes/weylop.hpp"

namespace qes {
inline void PrintTo(const QuadExt& q, std::ostream* os) { *os << q.str(); }
inline void PrintTo(const XPoly& p, std::ostream* os) { *os << p.str("t"); }
inline void PrintTo(const DiffOperator& op, std::ostream* os) { *os << op.str(); }
}  // namespace qes
