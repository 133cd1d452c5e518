#include "carnot/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace carnot {

namespace {

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string &s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// "3", "-2*7", "lam*7", "10 + 13", "-1*6 + 2*9"
void parse_bracket_rhs(LieAlgebra &alg, int i, int j, const std::string &rhs,
                       const std::string &what) {
  std::vector<std::pair<int, std::string>> terms; // sign, text
  std::string cur;
  int sign = 1;
  auto flush = [&](int next_sign) {
    cur = trim(cur);
    if (!cur.empty()) terms.emplace_back(sign, cur);
    cur.clear();
    sign = next_sign;
  };
  for (char c : rhs) {
    if (c == '+')
      flush(1);
    else if (c == '-')
      flush(-1);
    else
      cur += c;
  }
  flush(1);
  if (terms.empty())
    throw std::invalid_argument(what + ": empty bracket right-hand side");
  for (auto &[sg, term] : terms) {
    auto star = term.rfind('*');
    std::string coef_text = "1";
    std::string idx_text = term;
    if (star != std::string::npos) {
      coef_text = trim(term.substr(0, star));
      idx_text = trim(term.substr(star + 1));
    }
    int k = 0;
    try {
      k = std::stoi(idx_text);
    } catch (...) {
      throw std::invalid_argument(what + ": bad basis index '" + idx_text +
                                  "'");
    }
    Polynomial coef = Polynomial::parse(alg.params(), coef_text);
    if (sg < 0) coef = -coef;
    alg.add_bracket(i, j, k, coef);
  }
}

} // namespace

CatalogEntry parse_alg_text(const std::string &text, const std::string &what) {
  CatalogEntry entry;
  AlgebraMeta meta;
  std::vector<std::string> params;
  struct PendingBracket {
    int i, j;
    std::string rhs;
  };
  std::vector<PendingBracket> brackets;
  std::vector<int> grading;
  int dim = -1;
  int lineno = 0;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = what + ":" + std::to_string(lineno);
    auto sp = line.find(' ');
    std::string key = (sp == std::string::npos) ? line : line.substr(0, sp);
    std::string rest = (sp == std::string::npos) ? "" : trim(line.substr(sp));
    if (key == "id") meta.id = rest;
    else if (key == "dim") dim = std::stoi(rest);
    else if (key == "gong") meta.gong = rest;
    else if (key == "degraaf") meta.degraaf = rest;
    else if (key == "delbarco") meta.delbarco = rest;
    else if (key == "magnin") meta.magnin = rest;
    else if (key == "rank") meta.claimed_rank = std::stoi(rest);
    else if (key == "step") meta.claimed_step = std::stoi(rest);
    else if (key == "stratifiable")
      meta.stratifiable = (rest == "yes")  ? StratFlag::Yes
                          : (rest == "no") ? StratFlag::No
                                           : StratFlag::Unknown;
    else if (key == "param") params.push_back(rest);
    else if (key == "missing_source") meta.missing_source = (rest == "yes");
    else if (key == "note") meta.note = rest;
    else if (key == "asymptotic_cone") meta.asymptotic_cone = rest;
    else if (key == "tangent_cone") {
      // "<target>" or "<target> if <condition>"
      auto ifpos = rest.find(" if ");
      if (ifpos == std::string::npos)
        meta.tangent_cones.emplace_back("", rest);
      else
        meta.tangent_cones.emplace_back(trim(rest.substr(ifpos + 4)),
                                        trim(rest.substr(0, ifpos)));
    } else if (key == "product") {
      entry.is_product = true;
      entry.product_of = split_ws(rest);
    } else if (key == "grading") {
      for (auto &t : split_ws(rest)) grading.push_back(std::stoi(t));
    } else if (key == "second_order") {
      for (auto &t : split_ws(rest))
        entry.second_order.push_back(std::stoi(t));
    } else if (key == "bracket") {
      auto eq = rest.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument(where + ": bracket needs '='");
      auto lhs = split_ws(rest.substr(0, eq));
      if (lhs.size() != 2)
        throw std::invalid_argument(where + ": bracket needs two indices");
      brackets.push_back(
          {std::stoi(lhs[0]), std::stoi(lhs[1]), trim(rest.substr(eq + 1))});
    } else {
      throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
  }
  if (meta.id.empty()) throw std::invalid_argument(what + ": missing id");
  if (dim < 0 && !meta.missing_source)
    throw std::invalid_argument(what + ": missing dim");
  entry.dim = dim < 0 ? 0 : dim;
  if (!meta.missing_source && !entry.is_product) {
    LieAlgebra alg(entry.dim, make_table({}, params));
    for (auto &b : brackets) parse_bracket_rhs(alg, b.i, b.j, b.rhs, what);
    alg.meta = meta;
    entry.alg = std::move(alg);
  } else {
    entry.alg = LieAlgebra(0, make_table({}));
    entry.alg.meta = meta;
  }
  if (!grading.empty()) {
    entry.displayed_grading.assign(1, 0);
    entry.displayed_grading.insert(entry.displayed_grading.end(),
                                   grading.begin(), grading.end());
  }
  return entry;
}

std::string Catalog::default_data_dir() {
  if (const char *env = std::getenv("CARNOT_CATALOG")) return env;
  return CARNOT_SOURCE_DATA_DIR;
}

Catalog Catalog::load(const std::string &data_dir) {
  Catalog cat;
  cat.data_dir_ = data_dir;
  fs::path root = fs::path(data_dir) / "catalog";
  if (!fs::exists(root))
    throw std::runtime_error("catalog directory not found: " + root.string());
  std::vector<fs::path> files;
  for (const auto &dirent : fs::recursive_directory_iterator(root))
    if (dirent.is_regular_file() && dirent.path().extension() == ".alg")
      files.push_back(dirent.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> products;
  for (const auto &f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    CatalogEntry e = parse_alg_text(ss.str(), f.string());
    e.source_file = f.string();
    if (e.is_product)
      products.push_back(std::move(e));
    else
      cat.entries_[e.alg.meta.id] = std::move(e);
  }
  for (auto &p : products) {
    LieAlgebra acc;
    bool first = true;
    for (const auto &fid : p.product_of) {
      auto it = cat.entries_.find(fid);
      if (it == cat.entries_.end())
        throw std::runtime_error(p.source_file + ": unknown product factor " +
                                 fid);
      acc = first ? it->second.alg : direct_product(acc, it->second.alg);
      first = false;
    }
    auto meta = p.alg.meta;
    p.alg = std::move(acc);
    p.alg.meta = meta;
    if (p.dim != 0 && p.dim != p.alg.dim())
      throw std::runtime_error(p.source_file + ": product dim mismatch");
    p.dim = p.alg.dim();
    cat.entries_[p.alg.meta.id] = std::move(p);
  }
  return cat;
}

const CatalogEntry *Catalog::find(const std::string &id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> Catalog::ids(const ListFilter &f) const {
  std::vector<std::string> out;
  for (const auto &[id, e] : entries_) {
    if (f.dim && e.dim != *f.dim) continue;
    if (f.step && e.alg.meta.claimed_step != *f.step) continue;
    if (f.stratifiable && e.alg.meta.stratifiable != *f.stratifiable) continue;
    out.push_back(id);
  }
  return out;
}

std::vector<QVec> parameter_samples(const LieAlgebra &alg) {
  int k = alg.params()->arity();
  if (k == 0) return {QVec{}};
  std::vector<QVec> out;
  for (Rat v : {Rat(2), Rat(3), Rat(7, 2)}) out.push_back(QVec(k, v));
  return out;
}

CheckReport validate_entry(const CatalogEntry &entry) {
  CheckReport rep;
  const LieAlgebra &alg = entry.alg;
  if (alg.meta.missing_source) return rep; // stubs carry no data to validate
  if (!is_triangular_basis(alg))
    rep.fail(alg.meta.id + ": basis not filtration-adapted (needs "
                           "c_ij^k = 0 unless k > j)");
  if (!jacobi_residual(alg).empty())
    rep.fail(alg.meta.id + ": Jacobi identity fails");
  try {
    for (const auto &pt : parameter_samples(alg)) {
      LieAlgebra spec = alg.params()->arity() ? alg.specialize(pt) : alg;
      auto [rank, step] = rank_step(spec);
      if (alg.meta.claimed_rank >= 0 && rank != alg.meta.claimed_rank)
        rep.fail(alg.meta.id + ": computed rank " + std::to_string(rank) +
                 " != claimed " + std::to_string(alg.meta.claimed_rank));
      if (alg.meta.claimed_step >= 0 && step != alg.meta.claimed_step)
        rep.fail(alg.meta.id + ": computed step " + std::to_string(step) +
                 " != claimed " + std::to_string(alg.meta.claimed_step));
      if (alg.meta.stratifiable != StratFlag::Unknown) {
        bool strat = stratification_exists(spec);
        if (strat != (alg.meta.stratifiable == StratFlag::Yes))
          rep.fail(alg.meta.id + ": stratifiability claim mismatch");
      }
      if (alg.params()->arity() == 0) break;
    }
  } catch (const std::exception &ex) {
    rep.fail(alg.meta.id + ": " + ex.what());
  }
  if (!entry.displayed_grading.empty()) {
    auto g = verify_grading(alg, entry.displayed_grading, false);
    if (!g.ok) {
      rep.fail(alg.meta.id + ": displayed grading fails");
      rep.merge(g);
    }
  }
  return rep;
}

} // namespace carnot
