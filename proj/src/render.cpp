#include "carnot/render.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace carnot {

namespace {

// frame/coframe rows become polynomials over x's plus formal d/dx symbols
Polynomial column_as_poly(const PolyMatrix &m, int col,
                          const VarTablePtr &ext, int n) {
  Polynomial acc = Polynomial::zero(ext);
  for (int k = 0; k < n; ++k) {
    if (m.at(k, col).is_zero()) continue;
    acc += m.at(k, col).substitute(ext, {}) *
           Polynomial::variable(ext, n + k);
  }
  return acc;
}

Polynomial row_as_poly(const PolyMatrix &m, int row, const VarTablePtr &ext,
                       int n) {
  Polynomial acc = Polynomial::zero(ext);
  for (int k = 0; k < n; ++k) {
    if (m.at(row, k).is_zero()) continue;
    acc += m.at(row, k).substitute(ext, {}) *
           Polynomial::variable(ext, n + k);
  }
  return acc;
}

VarTablePtr extend_with(const VarTablePtr &base, const std::string &prefix,
                        int n) {
  std::vector<std::string> coords, params;
  for (int i = 0; i < base->arity(); ++i)
    (base->kind(i) == VarKind::Coordinate ? coords : params)
        .push_back(base->name(i));
  for (int i = 1; i <= n; ++i) coords.push_back(prefix + std::to_string(i));
  return make_table(coords, params);
}

} // namespace

std::string render_law(const GroupLaw &g, Format f) {
  std::ostringstream os;
  if (f == Format::Json) {
    os << "{\"law\":[";
    for (int k = 0; k < g.dim(); ++k)
      os << (k ? "," : "") << g.z[k].text_json();
    os << "]}";
    return os.str();
  }
  for (int k = 0; k < g.dim(); ++k) {
    if (f == Format::Latex)
      os << "\\item $z_{" << k + 1 << "}=" << g.z[k].text_latex() << "$\n";
    else
      os << "z" << k + 1 << " = " << g.z[k].text() << "\n";
  }
  return os.str();
}

std::string render_frame(const Frame &fr, Format f, const std::string &symbol) {
  const int n = fr.m.rows();
  auto ext = extend_with(fr.m.table(), "d", n);
  std::ostringstream os;
  if (f == Format::Json) {
    os << "{\"frame\":[";
    for (int j = 0; j < n; ++j)
      os << (j ? "," : "") << column_as_poly(fr.m, j, ext, n).text_json();
    os << "]}";
    return os.str();
  }
  for (int j = 0; j < n; ++j) {
    Polynomial p = column_as_poly(fr.m, j, ext, n);
    if (f == Format::Latex)
      os << "\\item $" << symbol << "_{" << j + 1 << "}=" << p.text_latex()
         << "$\n";
    else
      os << symbol << j + 1 << " = " << p.text() << "\n";
  }
  return os.str();
}

std::string render_coframe(const Coframe &cf, Format f) {
  const int n = cf.w.rows();
  auto ext = extend_with(cf.w.table(), "dx", n);
  std::ostringstream os;
  if (f == Format::Json) {
    os << "{\"coframe\":[";
    for (int i = 0; i < n; ++i)
      os << (i ? "," : "") << row_as_poly(cf.w, i, ext, n).text_json();
    os << "]}";
    return os.str();
  }
  for (int i = 0; i < n; ++i) {
    Polynomial p = row_as_poly(cf.w, i, ext, n);
    if (f == Format::Latex)
      os << "\\item $\\theta_{" << i + 1 << "}=" << p.text_latex() << "$\n";
    else
      os << "theta" << i + 1 << " = " << p.text() << "\n";
  }
  return os.str();
}

std::string render_matrix(const PolyMatrix &m, Format f) {
  if (f == Format::Text) return m.text();
  std::ostringstream os;
  if (f == Format::Json) {
    os << "{\"rows\":" << m.rows() << ",\"cols\":" << m.cols()
       << ",\"entries\":[";
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        os << ((i || j) ? "," : "") << m.at(i, j).text_json();
    os << "]}";
    return os.str();
  }
  os << "\\left[\\begin{matrix}\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j)
      os << (j ? " & " : "") << m.at(i, j).text_latex();
    os << " \\\\\n";
  }
  os << "\\end{matrix}\\right]\n";
  return os.str();
}

std::string render_algebra(const LieAlgebra &alg) {
  std::ostringstream os;
  const auto &m = alg.meta;
  os << "id " << m.id << "\n";
  os << "dim " << alg.dim() << "\n";
  if (!m.gong.empty()) os << "gong " << m.gong << "\n";
  if (!m.degraaf.empty()) os << "degraaf " << m.degraaf << "\n";
  if (!m.delbarco.empty()) os << "delbarco " << m.delbarco << "\n";
  if (!m.magnin.empty()) os << "magnin " << m.magnin << "\n";
  if (m.claimed_rank >= 0) os << "rank " << m.claimed_rank << "\n";
  if (m.claimed_step >= 0) os << "step " << m.claimed_step << "\n";
  os << "stratifiable "
     << (m.stratifiable == StratFlag::Yes  ? "yes"
         : m.stratifiable == StratFlag::No ? "no"
                                           : "unknown")
     << "\n";
  if (m.missing_source) {
    os << "missing_source yes\n";
    return os.str();
  }
  for (const auto &[ij, vec] : alg.constants()) {
    os << "bracket " << ij.first << " " << ij.second << " =";
    bool first = true;
    for (const auto &[k, c] : vec) {
      std::string ct = c.text();
      if (ct == "1")
        os << (first ? " " : " + ") << k;
      else if (ct == "-1")
        os << (first ? " -" : " - ") << k;
      else if (!ct.empty() && ct[0] == '-' && !first)
        os << " - " << ct.substr(1) << "*" << k;
      else
        os << (first ? " " : " + ") << ct << "*" << k;
      first = false;
    }
    os << "\n";
  }
  // diagram as adjacency: one line per edge of the bracket diagram
  for (const auto &[ij, vec] : alg.constants())
    for (const auto &[k, c] : vec)
      os << "edge " << ij.first << " " << ij.second << " -> " << k
         << (c.text() == "1" ? "" : " [" + c.text() + "]") << "\n";
  return os.str();
}

std::string render_second_kind(const GroupLaw &g,
                               const std::vector<int> &order) {
  std::ostringstream os;
  PolyMap phi = second_to_first(g, order);
  PolyMap psi = first_to_second(g, order);
  Frame fr = second_frame(g, order);
  os << "phi\n";
  for (int k = 0; k < g.dim(); ++k)
    os << "a" << k + 1 << " = " << phi.comps[k].text() << "\n";
  os << "psi\n";
  for (int k = 0; k < g.dim(); ++k)
    os << "al" << k + 1 << " = " << psi.comps[k].text() << "\n";
  os << "frame\n";
  os << render_frame(fr, Format::Text, "Xs");
  return os.str();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::filesystem::create_directories(
      std::filesystem::path(path).parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

} // namespace carnot
