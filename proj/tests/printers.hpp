#pragma once

#include <ostream>

#include "heckelab/charring.hpp"
#include "heckelab/laurent.hpp"

namespace heckelab {

inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.to_ascii(); }
inline void PrintTo(const SymLaurent& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace heckelab
