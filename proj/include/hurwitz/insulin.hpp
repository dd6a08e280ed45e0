#pragma once

#include <string_view>

#include "hurwitz/matrix.hpp"

namespace hurwitz {

/// Bundled text of data/insulin_a7.json (7-compartment insulin subsystem, exact fractions).
std::string_view insulin_a7_json();

/// A7 parsed from the bundled data.
const Matrix& insulin_a7();

/// Schur complement of A7 around its last row/column, exact.
const Matrix& insulin_b6();

}  // namespace hurwitz
