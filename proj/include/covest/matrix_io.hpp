#pragma once

// Text matrix format shared by the CLI.
//
//   line 1:  "N M" for inputs, "dim" for covariance outputs
//   then:    one matrix row per line, whitespace-separated entries "re{+|-}imi"
//
// Covariance outputs are written densely (the full Hermitian matrix). Values
// are printed with 17 significant digits, enough for an exact decimal
// round-trip of every finite double.

#include <iosfwd>
#include <string>
#include <string_view>

#include "covest/core.hpp"

namespace covest {

std::string format_complex(const Complex& z);

/// Parses "1.5-0.25i", "-3e-05+2i", "0+0i". Throws FormatError.
Complex parse_complex(std::string_view text);

void write_matrix(std::ostream& out, const InputMatrix& a);
void write_matrix(std::ostream& out, const CovarianceMatrix& c);

InputMatrix read_input_matrix(std::istream& in);

/// Reads a dense covariance file, keeping the upper triangle.
CovarianceMatrix read_covariance_matrix(std::istream& in);

void save_matrix(const std::string& path, const InputMatrix& a);
void save_matrix(const std::string& path, const CovarianceMatrix& c);
InputMatrix load_input_matrix(const std::string& path);
CovarianceMatrix load_covariance_matrix(const std::string& path);

} // namespace covest
