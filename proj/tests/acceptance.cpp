// Acceptance suite: runs every catalog-level requirement and prints one
// PASS/FAIL line per criterion. Golden files are byte-exact engine output;
// display/ files are hand transcriptions of the published tables and are
// compared algebraically.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/coords2.hpp"
#include "carnot/free_nilpotent.hpp"
#include "carnot/render.hpp"
#include "carnot/verify.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace carnot;
namespace fs = std::filesystem;

namespace {

Catalog &cat() {
  static Catalog c = Catalog::load(Catalog::default_data_dir());
  return c;
}

struct Criterion {
  std::string label;
  bool ok = true;
  int live_exceptions;
  std::vector<std::string> notes;
  explicit Criterion(std::string l)
      : label(std::move(l)), live_exceptions(std::uncaught_exceptions()) {}
  void check(bool c, const std::string &what) {
    if (!c) {
      ok = false;
      notes.push_back(what);
    }
    CHECK_MESSAGE(c, label, ": ", what);
  }
  void note(const std::string &n) { notes.push_back(n); }
  ~Criterion() {
    if (std::uncaught_exceptions() > live_exceptions) ok = false;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << label;
    for (const auto &n : notes) std::cout << "\n      - " << n;
    std::cout << std::endl;
  }
};

fs::path display_dir(const std::string &id) {
  return fs::path(cat().data_dir()) / "display" / id;
}
fs::path golden_dir(const std::string &id) {
  return fs::path(cat().data_dir()) / "golden" / id;
}

// "name = expr" lines, '#' comments allowed
std::vector<std::pair<std::string, std::string>>
parse_lines(const std::string &text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    while (!key.empty() && key.back() == ' ') key.pop_back();
    out.emplace_back(key, line.substr(eq + 1));
  }
  return out;
}

std::string strip_comments(const std::string &text) {
  std::istringstream is(text);
  std::ostringstream os;
  std::string line;
  while (std::getline(is, line))
    if (line.empty() || line[0] != '#') os << line << "\n";
  return os.str();
}

VarTablePtr with_extra(const VarTablePtr &base, const std::string &prefix,
                       int n) {
  std::vector<std::string> coords, params;
  for (int i = 0; i < base->arity(); ++i)
    (base->kind(i) == VarKind::Coordinate ? coords : params)
        .push_back(base->name(i));
  for (int i = 1; i <= n; ++i) coords.push_back(prefix + std::to_string(i));
  return make_table(coords, params);
}

Polynomial row_form(const PolyMatrix &w, int row, const VarTablePtr &ext,
                    int n) {
  Polynomial acc = Polynomial::zero(ext);
  for (int k = 0; k < n; ++k)
    acc += w.at(row, k).substitute(ext, {}) *
           Polynomial::variable(ext,
                                ext->index_of("dx" + std::to_string(k + 1)));
  return acc;
}

Polynomial col_field(const PolyMatrix &m, int col, const VarTablePtr &ext,
                     int n) {
  Polynomial acc = Polynomial::zero(ext);
  for (int k = 0; k < n; ++k)
    acc += m.at(k, col).substitute(ext, {}) *
           Polynomial::variable(ext,
                                ext->index_of("d" + std::to_string(k + 1)));
  return acc;
}

std::vector<std::string> displayed_ids() {
  std::vector<std::string> out;
  fs::path root = fs::path(cat().data_dir()) / "display";
  for (const auto &d : fs::directory_iterator(root))
    if (d.is_directory()) out.push_back(d.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

struct AutFixture {
  VarTablePtr table;
  PolyMatrix mat;
};

AutFixture load_aut(const std::string &name) {
  std::string text = strip_comments(read_file(
      (fs::path(cat().data_dir()) / "fixtures" / "aut" / name).string()));
  std::istringstream is(text);
  std::string header;
  std::getline(is, header);
  REQUIRE(header.rfind("params ", 0) == 0);
  std::vector<std::string> params;
  {
    std::istringstream hs(header.substr(7));
    std::string p;
    while (hs >> p) params.push_back(p);
  }
  std::stringstream rest;
  rest << is.rdbuf();
  auto table = make_table({}, params);
  return AutFixture{table, PolyMatrix::parse(table, rest.str())};
}

QMat fixture_matrix(const std::string &file) {
  auto table = make_table({});
  PolyMatrix pm = PolyMatrix::parse(
      table,
      read_file((fs::path(cat().data_dir()) / "fixtures" / file).string()));
  QMat m(pm.rows(), QVec(pm.cols()));
  for (int i = 0; i < pm.rows(); ++i)
    for (int j = 0; j < pm.cols(); ++j) m[i][j] = pm.at(i, j).constant_value();
  return m;
}

} // namespace

TEST_CASE("criterion 1: golden group laws") {
  Criterion cr("criterion 1: golden group laws match the published displays");
  int with_law = 0;
  for (const auto &id : displayed_ids()) {
    fs::path lawfile = display_dir(id) / "law.txt";
    if (!fs::exists(lawfile)) continue;
    ++with_law;
    const CatalogEntry *e = cat().find(id);
    REQUIRE(e != nullptr);
    GroupLaw g = group_law(e->alg);
    auto lines = parse_lines(read_file(lawfile.string()));
    cr.check(static_cast<int>(lines.size()) == g.dim(),
             id + ": law display line count");
    for (auto &[key, expr] : lines) {
      int k = std::stoi(key.substr(1));
      Polynomial want = Polynomial::parse(g.table, expr);
      if (!(want == g.z[k - 1]))
        cr.check(false, id + ": " + key + " differs from the display");
    }
    // canonical serialization is frozen byte-exact
    std::string golden = read_file((golden_dir(id) / "law.txt").string());
    cr.check(golden == render_law(g, Format::Text), id + ": golden law bytes");
  }
  cr.check(with_law == 35, "expected 35 transcribed law displays");
  cr.note("35 displayed composition laws available in the provided source "
          "text (remaining catalog sections are missing_source stubs); all "
          "compared exactly, including the 1/720 cases and the symbolic "
          "lambda family");
}

TEST_CASE("criterion 2: golden frames, coframes, translation differentials") {
  Criterion cr("criterion 2: frames/coframes/d(L)/d(R) match the displays");
  for (const auto &id : displayed_ids()) {
    const CatalogEntry *e = cat().find(id);
    REQUIRE(e != nullptr);
    if (!fs::exists(display_dir(id) / "dl.txt")) continue;
    DerivedArtifacts art = derive_artifacts(e->alg);
    auto xt = art.dl.table();
    PolyMatrix dl_want = PolyMatrix::parse(
        xt, strip_comments(read_file((display_dir(id) / "dl.txt").string())));
    PolyMatrix dr_want = PolyMatrix::parse(
        xt, strip_comments(read_file((display_dir(id) / "dr.txt").string())));
    if (!(dl_want == art.dl)) cr.check(false, id + ": d(L_x)_0 differs");
    if (!(dr_want == art.dr)) cr.check(false, id + ": d(R_x)_0 differs");
    // coframe display
    auto ext = with_extra(xt, "dx", e->alg.dim());
    auto lines = parse_lines(
        strip_comments(read_file((display_dir(id) / "coframe.txt").string())));
    cr.check(static_cast<int>(lines.size()) == e->alg.dim(),
             id + ": coframe display line count");
    for (auto &[key, expr] : lines) {
      int k = std::stoi(key.substr(5));
      Polynomial want = Polynomial::parse(ext, expr);
      if (!(want == row_form(art.cofr.w, k - 1, ext, e->alg.dim())))
        cr.check(false, id + ": " + key + " differs from the display");
    }
    // golden bytes
    cr.check(read_file((golden_dir(id) / "dl.txt").string()) == art.dl.text(),
             id + ": golden dl bytes");
    cr.check(read_file((golden_dir(id) / "dr.txt").string()) == art.dr.text(),
             id + ": golden dr bytes");
    cr.check(read_file((golden_dir(id) / "frame.txt").string()) ==
                 render_frame(art.frame, Format::Text),
             id + ": golden frame bytes");
    cr.check(read_file((golden_dir(id) / "coframe.txt").string()) ==
                 render_coframe(art.cofr, Format::Text),
             id + ": golden coframe bytes");
    // duality pins the coframe to the frame exactly
    cr.check(art.cofr.w * art.dl == PolyMatrix::identity(e->alg.dim(), xt),
             id + ": W(x) * M(x) = I");
  }
  cr.note("includes N_5_2_1 theta5 (+x1^2*x2/24 dx1) and the 14x14 F_3_3 "
          "matrices");
}

TEST_CASE("criterion 3: bracket realization") {
  Criterion cr("criterion 3: frame commutators realize the structure "
               "constants (zero tolerance)");
  for (const auto &[id, e] : cat().entries()) {
    if (e.alg.meta.missing_source) continue;
    DerivedArtifacts art = derive_artifacts(e.alg);
    CheckReport rep = bracket_realization_check(e.alg, art.frame);
    if (!rep.ok) cr.check(false, id + ": " + rep.failures.front());
  }
}

TEST_CASE("criterion 4: Maurer-Cartan") {
  Criterion cr("criterion 4: dtheta_k = -sum c_ij^k theta_i^theta_j");
  for (const auto &[id, e] : cat().entries()) {
    if (e.alg.meta.missing_source) continue;
    DerivedArtifacts art = derive_artifacts(e.alg);
    CheckReport rep = maurer_cartan_check(e.alg, art.cofr);
    if (!rep.ok) cr.check(false, id + ": " + rep.failures.front());
  }
}

TEST_CASE("criterion 5: group axioms") {
  Criterion cr("criterion 5: identity/inverse/antisymmetry everywhere; "
               "associativity symbolic (dim<=8) or sampled (dim<=14)");
  for (const auto &[id, e] : cat().entries()) {
    if (e.alg.meta.missing_source) continue;
    GroupLaw g = group_law(e.alg);
    bool symbolic = e.alg.dim() <= 8;
    CheckReport rep = law_checks_symbolic(g, symbolic);
    if (!rep.ok) cr.check(false, id + ": " + rep.failures.front());
    if (!symbolic) {
      CheckReport s = law_checks_sampled(g, SampleSpec{100, 20240601});
      if (!s.ok) cr.check(false, id + ": " + s.failures.front());
    }
  }
}

TEST_CASE("criterion 6: free nilpotent algebras") {
  Criterion cr("criterion 6: free-nilpotent dimensions, bracket tables, and "
               "second-kind coordinate tables");
  const std::pair<const char *, std::pair<int, int>> cases[] = {
      {"F_2_3", {2, 3}},
      {"F_2_4", {2, 4}},
      {"F_3_3", {3, 3}},
      {"F_2_5", {2, 5}}};
  for (auto &[id, rs] : cases) {
    FreeNilpotent f = free_structure_constants(rs.first, rs.second);
    const CatalogEntry *e = cat().find(id);
    REQUIRE(e != nullptr);
    cr.check(f.basis.dim() == e->alg.dim(), std::string(id) + ": dimension");
    // engine-built constants equal the transcribed catalog table exactly
    bool same = f.alg.constants() == e->alg.constants();
    cr.check(same, std::string(id) +
                       ": engine Hall table equals the transcribed table");
    for (int d = 1; d <= rs.second; ++d) {
      int count = 0;
      for (int i = 1; i <= f.basis.dim(); ++i)
        if (f.basis.degree_of(i) == d) ++count;
      cr.check(Int(count) == witt_dimension(rs.first, d),
               std::string(id) + ": Witt dimension in degree " +
                   std::to_string(d));
    }
  }
  // second-kind artifacts (X^s frames and both coordinate-change tables)
  for (const auto &id : displayed_ids()) {
    fs::path f = display_dir(id) / "second.txt";
    if (!fs::exists(f)) continue;
    const CatalogEntry *e = cat().find(id);
    GroupLaw g = group_law(e->alg);
    const int n = g.dim();
    PolyMap phi = second_to_first(g, e->second_order);
    PolyMap psi = first_to_second(g, e->second_order);
    Frame sf = second_frame(g, e->second_order);
    auto ext = with_extra(x_table(e->alg), "d", n);
    std::string section;
    std::istringstream is(read_file(f.string()));
    std::string line;
    while (std::getline(is, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (line == "frame" || line == "phi" || line == "psi") {
        section = line;
        continue;
      }
      auto eq = line.find('=');
      REQUIRE(eq != std::string::npos);
      std::string key = line.substr(0, eq);
      while (!key.empty() && key.back() == ' ') key.pop_back();
      std::string expr = line.substr(eq + 1);
      if (section == "frame") {
        int k = std::stoi(key.substr(2));
        Polynomial want = Polynomial::parse(ext, expr);
        if (!(want == col_field(sf.m, k - 1, ext, n)))
          cr.check(false, id + ": X^s_" + std::to_string(k) + " differs");
      } else if (section == "phi") {
        int k = std::stoi(key.substr(1));
        Polynomial want = Polynomial::parse(phi.domain, expr);
        if (!(want == phi.comps[k - 1]))
          cr.check(false, id + ": first-kind coordinate a" +
                              std::to_string(k) + " differs");
      } else if (section == "psi") {
        int k = std::stoi(key.substr(2));
        Polynomial want = Polynomial::parse(psi.domain, expr);
        if (!(want == psi.comps[k - 1]))
          cr.check(false, id + ": second-kind coordinate al" +
                              std::to_string(k) + " differs");
      }
    }
    cr.check(roundtrip_check(g, e->second_order).ok,
             id + ": psi(phi) = id");
    if (has_second_kind_golden(id))
      cr.check(read_file((golden_dir(id) / "second.txt").string()) ==
                   render_second_kind(g, e->second_order),
               id + ": golden second-kind bytes");
  }
}

TEST_CASE("criterion 7: gradings and stratifiability claims") {
  Criterion cr("criterion 7: displayed gradings verify; stratifiable / "
               "non-stratifiable claims match");
  const char *nonstrat[] = {"N_5_1",   "N_5_2_2", "N_6_1_1",
                            "N_6_1_2", "N_6_1_4", "N_6_2_3",
                            "N_6_2_4", "N_6_2_8", "N_6_3_2"};
  for (const char *id : nonstrat) {
    const CatalogEntry *e = cat().find(id);
    REQUIRE(e != nullptr);
    cr.check(!e->displayed_grading.empty(),
             std::string(id) + ": displayed grading present");
    cr.check(verify_grading(e->alg, e->displayed_grading, false).ok,
             std::string(id) + ": displayed grading verifies");
    cr.check(e->alg.meta.stratifiable == StratFlag::No,
             std::string(id) + ": catalog records non-stratifiable");
    cr.check(!stratification_exists(e->alg),
             std::string(id) + ": proven non-stratifiable (derivation "
                               "system infeasible)");
  }
  for (const auto &[id, e] : cat().entries()) {
    if (e.alg.meta.missing_source || e.alg.is_parametric()) continue;
    bool strat = stratification_exists(e.alg);
    cr.check(strat == (e.alg.meta.stratifiable == StratFlag::Yes),
             id + ": stratifiability claim matches the decision procedure");
    if (strat) {
      Grading nat = natural_grading(e.alg);
      cr.check(verify_grading(e.alg, nat, true).ok,
               id + ": lower-central-series grading is a stratification");
    }
  }
  // lambda family: stratifiable for sampled lambda > 1
  {
    const CatalogEntry *e = cat().find("G7_147E1");
    for (const auto &pt : parameter_samples(e->alg))
      cr.check(stratification_exists(e->alg.specialize(pt)),
               "G7_147E1: stratifiable at sampled lambda");
  }
  cr.check(homogeneous_dimension(cat().find("N_6_1_4")->displayed_grading) ==
               18,
           "N_6_1_4 displayed grading has Q = 18");
}

TEST_CASE("criterion 8: automorphism residuals") {
  Criterion cr("criterion 8: published automorphism matrices verify");
  const std::pair<const char *, const char *> empties[] = {
      {"N_5_1", "N_5_1.txt"},     {"N_5_2_2", "N_5_2_2.txt"},
      {"N_6_2_8", "N_6_2_8.txt"}, {"N_6_3_2", "N_6_3_2.txt"},
      {"N_6_2_4", "N_6_2_4.txt"}, {"N_6_2_3", "N_6_2_3.txt"},
      {"N_6_1_1", "N_6_1_1.txt"}, {"N_6_1_4", "N_6_1_4_a.txt"},
      {"N_6_1_4", "N_6_1_4_b.txt"}};
  for (auto &[id, file] : empties) {
    AutFixture fx = load_aut(file);
    auto residual = automorphism_residual(cat().find(id)->alg, fx.mat);
    if (!residual.empty()) {
      for (const auto &r : residual)
        cr.note(std::string(id) + " residual: " + r.text());
    }
    cr.check(residual.empty(), std::string(id) + " (" + file +
                                   "): residual empty for all parameters");
  }
  {
    AutFixture fx = load_aut("N_6_1_2.txt");
    auto residual = automorphism_residual(cat().find("N_6_1_2")->alg, fx.mat);
    cr.check(!residual.empty(), "N_6_1_2: matrix is only conditionally an "
                                "automorphism");
    Polynomial gen = Polynomial::parse(fx.table, "2*u2_4 - u2_3^2");
    std::map<int, Polynomial> root{
        {fx.table->index_of("u2_4"), Polynomial::parse(fx.table, "u2_3^2/2")}};
    bool generator_seen = false;
    for (const auto &r : residual) {
      cr.check(r.substitute(root).is_zero(),
               "N_6_1_2: residual lies in (2*u2_4 - u2_3^2)");
      Rat lead = r.terms().begin()->second;
      Polynomial normalized = r * (Rat(1) / lead);
      Polynomial gen_norm = gen * (Rat(1) / gen.terms().begin()->second);
      if (normalized == gen_norm) generator_seen = true;
    }
    cr.check(generator_seen,
             "N_6_1_2: the residual ideal is generated by 2*u2_4 - u2_3^2");
  }
}

TEST_CASE("criterion 9: cones") {
  Criterion cr("criterion 9: asymptotic/tangent cone identifications, "
               "fingerprints, and the Hausdorff-dimension grid");
  std::istringstream is(read_file(
      (fs::path(cat().data_dir()) / "fixtures" / "cones.txt").string()));
  std::string line;
  int verified = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind, src, target, file;
    ls >> kind >> src >> target >> file;
    const CatalogEntry *se = cat().find(src);
    const CatalogEntry *te = cat().find(target);
    REQUIRE(se != nullptr);
    REQUIRE(te != nullptr);
    ConeResult cone =
        (kind == "asymptotic")
            ? asymptotic_cone(se->alg)
            : polarization_cone(se->alg, standard_polarization(se->alg, {}));
    cr.check(fingerprint(cone.cone) == fingerprint(te->alg),
             src + " -> " + target + ": fingerprint prescreen");
    cr.check(verify_isomorphism(fixture_matrix(file), cone.cone, te->alg).ok,
             src + " -> " + target + ": explicit isomorphism verifies");
    cr.check(jacobi_residual(cone.cone).empty(),
             src + ": cone satisfies Jacobi");
    ++verified;
  }
  cr.check(verified == 14, "all 14 stated cone identifications with "
                           "available targets verified");
  cr.note("targets N_6_2_5, N_6_2_5a, N_6_2_6, N_6_3_3, N_6_3_6 are "
          "missing_source stubs; those identifications stay recorded as "
          "metadata only");

  // N_6_1_4: the two maximal polarization classes have distinct tangents
  {
    const LieAlgebra &alg = cat().find("N_6_1_4")->alg;
    ConeResult t0 =
        polarization_cone(alg, standard_polarization(alg, {{{5, 3}, Rat(0)}}));
    ConeResult t1 = polarization_cone(
        alg, standard_polarization(alg, {{{5, 3}, Rat(-1)}}));
    cr.check(!(fingerprint(t0.cone) == fingerprint(t1.cone)),
             "N_6_1_4: tangent cones at u5_3 = 0 and u5_3 = -1 have "
             "distinct fingerprints");
    std::vector<Rat> grid{Rat(-2), Rat(-1),   Rat(-1, 2),
                          Rat(0),  Rat(1, 2), Rat(1)};
    int qmax = 0;
    std::map<std::string, int> qs;
    for (const auto &v : grid) {
      ConeResult t =
          polarization_cone(alg, standard_polarization(alg, {{{5, 3}, v}}));
      qs[rat_text(v)] = t.hausdorff_dimension;
      qmax = std::max(qmax, t.hausdorff_dimension);
    }
    for (const auto &v : grid) {
      bool is_max = qs[rat_text(v)] == qmax;
      bool should = (v == Rat(0) || v == Rat(-1));
      cr.check(is_max == should,
               "N_6_1_4: Q maximal iff u5_3 in {0,-1} (u5_3 = " + rat_text(v) +
                   ")");
    }
  }
  // N_6_2_4: maximal Hausdorff dimension iff u5_3 = 0
  {
    const LieAlgebra &alg = cat().find("N_6_2_4")->alg;
    std::vector<Rat> grid{Rat(-2), Rat(-1),   Rat(-1, 2),
                          Rat(0),  Rat(1, 2), Rat(1)};
    int qmax = 0;
    std::map<std::string, int> qs;
    for (const auto &v : grid) {
      qs[rat_text(v)] =
          polarization_cone(alg, standard_polarization(alg, {{{5, 3}, v}}))
              .hausdorff_dimension;
      qmax = std::max(qmax, qs[rat_text(v)]);
    }
    for (const auto &v : grid)
      cr.check((qs[rat_text(v)] == qmax) == (v == Rat(0)),
               "N_6_2_4: Q maximal iff u5_3 = 0 (u5_3 = " + rat_text(v) + ")");
  }
  // N_6_2_3: maximal iff u3_5 + u1_4 = 0
  {
    const LieAlgebra &alg = cat().find("N_6_2_3")->alg;
    std::vector<std::pair<Rat, Rat>> grid{
        {Rat(0), Rat(0)},       {Rat(1), Rat(-1)}, {Rat(1, 2), Rat(-1, 2)},
        {Rat(1), Rat(0)},       {Rat(0), Rat(1)},  {Rat(-1), Rat(-1)}};
    int qmax = 0;
    std::vector<int> q;
    for (auto &[a, b] : grid) {
      q.push_back(
          polarization_cone(
              alg, standard_polarization(alg, {{{3, 5}, a}, {{1, 4}, b}}))
              .hausdorff_dimension);
      qmax = std::max(qmax, q.back());
    }
    for (size_t i = 0; i < grid.size(); ++i)
      cr.check((q[i] == qmax) == (grid[i].first + grid[i].second == 0),
               "N_6_2_3: Q maximal iff u3_5 + u1_4 = 0 (case " +
                   std::to_string(i) + ")");
  }
}

TEST_CASE("criterion 10: headless deep verification") {
  Criterion cr("criterion 10: carnot verify --all --deep passes");
  auto start = std::chrono::steady_clock::now();
  VerifyOptions opts;
  opts.deep = true;
  VerifyOutcome out = verify_many(cat(), cat().ids(), opts);
  for (const auto &it : out.items)
    if (it.status == "fail")
      cr.check(false, it.id + "/" + it.check + ": " + it.witness);
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  cr.check(out.ok, "deep verification outcome");
  cr.check(secs < 900, "runtime under 15 minutes");
  cr.note("deep verification of the full catalog took " +
          std::to_string(secs) + "s");
}
