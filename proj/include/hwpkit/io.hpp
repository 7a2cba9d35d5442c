#pragma once

#include <string>

#include "hwpkit/frames.hpp"
#include "hwpkit/operators.hpp"
#include "hwpkit/wigner_weyl.hpp"

namespace hwp {

// JSON schema for operators: {"d": 3, "rows": [[[re, im], ...], ...]} in
// row-major storage order.  Doubles serialize shortest-round-trip, so
// load_matrix(dump_matrix(x)) == x bitwise.  Malformed input raises
// std::runtime_error carrying the parser's line/column location.
std::string dump_matrix(const Operator& op);
Operator load_matrix(const std::string& text);
void save_matrix_file(const std::string& path, const Operator& op);
Operator load_matrix_file(const std::string& path);

// State vectors: {"d": 3, "values": [[re, im], ...]} in ascending centered
// label order.
std::string dump_ket(const Ket& v);
Ket load_ket(const std::string& text);
void save_ket_file(const std::string& path, const Ket& v);
Ket load_ket_file(const std::string& path);

// JSON schema for phase-space tables:
// {"d": 3, "descriptor": "...", "values": [slice0, slice1]} with each slice a
// d x d array of [re, im] entries in ascending centered order.
std::string dump_table(const WWTable& table);
WWTable load_table(const std::string& text);

// CSV emitters.  Full precision by default (%.17g); round_digits >= 0
// switches the data columns to fixed-point presentation.  Rows run nu-major,
// then alpha, then beta, ascending centered.
std::string bargmann_csv(const BargmannTable& table, int round_digits = -1);
std::string ww_csv(const WWTable& table, int round_digits = -1);

// Bargmann coefficients, Q values, and the phase-space table of the analyzed
// state side by side.  Requires the doubled-frame layout so every table row
// has both nu slices.
std::string table1_csv(const BargmannTable& coeffs, const WWTable& table, int round_digits = -1);

}  // namespace hwp
