#pragma once

#include "carnot/coords2.hpp"
#include "carnot/frames.hpp"

#include <string>

namespace carnot {

enum class Format { Text, Latex, Json };

/// "z1 = x1 + y1" per line; LaTeX mirrors the itemized catalog style.
std::string render_law(const GroupLaw &g, Format f);

/// Vector fields as polynomials in x's and d1..dn ("X1 = d1 - 1/2*x2*d3").
std::string render_frame(const Frame &fr, Format f,
                         const std::string &symbol = "X");

/// 1-forms as polynomials in x's and dx1..dxn.
std::string render_coframe(const Coframe &cf, Format f);

std::string render_matrix(const PolyMatrix &m, Format f);

/// Bracket table plus the diagram as an adjacency list.
std::string render_algebra(const LieAlgebra &alg);

/// phi (second -> first), psi (first -> second), and the second-kind frame,
/// in one text artifact.
std::string render_second_kind(const GroupLaw &g,
                               const std::vector<int> &order = {});

/// Helpers shared by golden tests and the CLI.
std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace carnot
