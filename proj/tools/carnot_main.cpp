#include "carnot/render.hpp"
#include "carnot/verify.hpp"

#include "carnot/free_nilpotent.hpp"

#include <CLI11.hpp>
#include <iostream>

using namespace carnot;

namespace {

Format parse_format(const std::string &f) {
  if (f == "latex") return Format::Latex;
  if (f == "json") return Format::Json;
  return Format::Text;
}

// "u1_3=0,u5_4=1/2" (also accepts u1^3=...)
std::map<std::pair<int, int>, Rat> parse_u(const std::string &spec) {
  std::map<std::pair<int, int>, Rat> u;
  std::string item;
  std::istringstream is(spec);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad u assignment: " + item);
    std::string key = item.substr(0, eq);
    if (!key.empty() && (key[0] == 'u' || key[0] == 'U')) key = key.substr(1);
    auto sep = key.find_first_of("_^");
    if (sep == std::string::npos)
      throw std::invalid_argument("bad u key (want uA_J=value): " + item);
    int a = std::stoi(key.substr(0, sep));
    int j = std::stoi(key.substr(sep + 1));
    u[{a, j}] = rat_parse(item.substr(eq + 1));
  }
  return u;
}

const CatalogEntry *find_or_exit(const Catalog &cat, const std::string &id) {
  const CatalogEntry *e = cat.find(id);
  if (!e) {
    std::cerr << "unknown id: " << id << "\n";
    std::exit(2);
  }
  if (e->alg.meta.missing_source) {
    std::cerr << id << ": entry is a missing_source stub (no bracket data in "
                       "the available source text)\n";
    std::exit(2);
  }
  return e;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"carnot: exact symbolic toolkit for low-dimensional Carnot "
               "groups and nilpotent Lie algebras"};
  app.require_subcommand(1);
  std::string catalog_dir = Catalog::default_data_dir();
  app.add_option("--catalog", catalog_dir,
                 "data directory (default: bundled; env CARNOT_CATALOG)");

  // list
  auto *list = app.add_subcommand("list", "list catalog entries");
  int list_dim = 0, list_step = 0;
  std::string list_strat;
  list->add_option("--dim", list_dim, "filter by dimension");
  list->add_option("--step", list_step, "filter by step");
  list->add_option("--stratifiable", list_strat, "yes|no");

  // show
  auto *show = app.add_subcommand("show", "print one entry");
  std::string show_id;
  show->add_option("id", show_id)->required();

  // group-law
  auto *law = app.add_subcommand("group-law", "derive the composition law");
  std::string law_id, law_fmt = "text";
  law->add_option("id", law_id)->required();
  law->add_option("--format", law_fmt, "text|latex|json");

  // frames
  auto *frames = app.add_subcommand("frames", "left/right invariant frames");
  std::string fr_id, fr_side = "left", fr_coords = "first", fr_fmt = "text",
              fr_order;
  bool fr_fields = false;
  frames->add_option("id", fr_id)->required();
  frames->add_option("--side", fr_side, "left|right");
  frames->add_option("--coords", fr_coords, "first|second");
  frames->add_option("--format", fr_fmt, "text|latex|json");
  frames->add_option("--order", fr_order,
                     "second-kind product order: desc|asc (default: the "
                     "entry's published order)");
  frames->add_flag("--fields", fr_fields,
                   "print right-invariant vector fields instead of the "
                   "d(R_x)_0 matrix");

  // coframe
  auto *cof = app.add_subcommand("coframe", "left-invariant 1-forms");
  std::string cof_id, cof_fmt = "text";
  cof->add_option("id", cof_id)->required();
  cof->add_option("--format", cof_fmt, "text|latex|json");

  // free
  auto *fr = app.add_subcommand("free", "free nilpotent Lie algebra");
  int free_r = 0, free_s = 0;
  bool free_law = false;
  fr->add_option("r", free_r)->required();
  fr->add_option("s", free_s)->required();
  fr->add_flag("--law", free_law, "also print the group law");

  // cone
  auto *cone = app.add_subcommand("cone", "asymptotic or tangent cone");
  std::string cone_id, cone_u;
  bool cone_asym = false, cone_tan = false;
  cone->add_option("id", cone_id)->required();
  cone->add_flag("--asymptotic", cone_asym);
  cone->add_flag("--tangent", cone_tan);
  cone->add_option("--u", cone_u, "polarization corrections, e.g. u1_3=1/2");

  // verify
  auto *verify = app.add_subcommand("verify", "run the verification suite");
  std::vector<std::string> verify_ids;
  bool verify_all = false, verify_deep = false;
  int verify_jobs = 0;
  std::string verify_report;
  verify->add_option("ids", verify_ids, "entry ids");
  verify->add_flag("--all", verify_all);
  verify->add_flag("--deep", verify_deep,
                   "symbolic associativity + Maurer-Cartan + bracket "
                   "realization + cones");
  verify->add_option("--jobs", verify_jobs, "parallel workers");
  verify->add_option("--report", verify_report, "json");

  // golden-emit (maintenance)
  auto *golden = app.add_subcommand(
      "golden-emit", "regenerate golden artifacts from the engine");
  golden->group(""); // hidden from default help

  CLI11_PARSE(app, argc, argv);

  try {
    Catalog cat = Catalog::load(catalog_dir);

    if (*list) {
      ListFilter f;
      if (list_dim) f.dim = list_dim;
      if (list_step) f.step = list_step;
      if (list_strat == "yes") f.stratifiable = StratFlag::Yes;
      if (list_strat == "no") f.stratifiable = StratFlag::No;
      for (const auto &id : cat.ids(f)) {
        const CatalogEntry *e = cat.find(id);
        std::cout << id;
        if (e->alg.meta.missing_source) std::cout << "  [missing_source]";
        std::cout << "\n";
      }
      return 0;
    }
    if (*show) {
      const CatalogEntry *e = cat.find(show_id);
      if (!e) {
        std::cerr << "unknown id: " << show_id << "\n";
        return 2;
      }
      std::cout << render_algebra(e->alg);
      if (!e->displayed_grading.empty()) {
        std::cout << "grading";
        for (size_t i = 1; i < e->displayed_grading.size(); ++i)
          std::cout << " " << e->displayed_grading[i];
        std::cout << "\n";
      }
      if (!e->alg.meta.asymptotic_cone.empty())
        std::cout << "asymptotic_cone " << e->alg.meta.asymptotic_cone << "\n";
      for (const auto &[cond, id] : e->alg.meta.tangent_cones)
        std::cout << "tangent_cone " << id
                  << (cond.empty() ? "" : " if " + cond) << "\n";
      return 0;
    }
    if (*law) {
      const CatalogEntry *e = find_or_exit(cat, law_id);
      std::cout << render_law(group_law(e->alg), parse_format(law_fmt));
      return 0;
    }
    if (*frames) {
      const CatalogEntry *e = find_or_exit(cat, fr_id);
      GroupLaw g = group_law(e->alg);
      Format f = parse_format(fr_fmt);
      if (fr_coords == "second") {
        std::vector<int> order = e->second_order;
        if (fr_order == "asc") order = ascending_order(g.dim());
        if (fr_order == "desc") order = descending_order(g.dim());
        std::cout << render_frame(second_frame(g, order), f, "Xs");
      } else if (fr_side == "right") {
        PolyMatrix dr = d_translation(g, Side::Right);
        if (fr_fields)
          std::cout << render_frame(Frame{dr}, f, "Xr");
        else
          std::cout << render_matrix(dr, f);
      } else {
        std::cout << render_frame(left_frame(g), f);
      }
      return 0;
    }
    if (*cof) {
      const CatalogEntry *e = find_or_exit(cat, cof_id);
      GroupLaw g = group_law(e->alg);
      std::cout << render_coframe(left_coframe(g), parse_format(cof_fmt));
      return 0;
    }
    if (*fr) {
      FreeNilpotent f = free_structure_constants(free_r, free_s);
      std::cout << "dim " << f.basis.dim() << "\n";
      for (int i = 1; i <= f.basis.dim(); ++i)
        std::cout << "X" << i << " = " << f.basis.bracket_text(i)
                  << "  (degree " << f.basis.degree_of(i) << ")\n";
      std::cout << render_algebra(f.alg);
      if (free_law) std::cout << render_law(group_law(f.alg), Format::Text);
      return 0;
    }
    if (*cone) {
      const CatalogEntry *e = find_or_exit(cat, cone_id);
      if (cone_asym == cone_tan) {
        std::cerr << "choose exactly one of --asymptotic / --tangent\n";
        return 2;
      }
      LieAlgebra alg = e->alg;
      if (alg.is_parametric()) {
        std::cerr << "cone: parametric entry; fix the parameter first\n";
        return 2;
      }
      ConeResult r = cone_asym
                         ? asymptotic_cone(alg)
                         : polarization_cone(
                               alg, standard_polarization(alg, parse_u(cone_u)));
      r.cone.meta.id =
          cone_id + (cone_asym ? ".asymptotic-cone" : ".tangent-cone");
      std::cout << "filtration dims:";
      for (int d : r.filtration_dims) std::cout << " " << d;
      std::cout << "\nhausdorff dimension " << r.hausdorff_dimension << "\n";
      std::cout << "fingerprint " << fingerprint(r.cone).text() << "\n";
      std::cout << render_algebra(r.cone);
      return 0;
    }
    if (*verify) {
      VerifyOptions opts;
      opts.deep = verify_deep;
      opts.jobs = verify_jobs;
      std::vector<std::string> ids = verify_ids;
      if (verify_all || ids.empty()) ids = cat.ids();
      for (const auto &id : ids)
        if (!cat.find(id)) {
          std::cerr << "unknown id: " << id << "\n";
          return 2;
        }
      VerifyOutcome out = verify_many(cat, ids, opts);
      if (verify_report == "json") {
        std::cout << verify_report_json(out) << "\n";
      } else {
        for (const auto &it : out.items)
          if (it.status != "pass")
            std::cout << it.id << " " << it.check << " " << it.status
                      << (it.witness.empty() ? "" : " (" + it.witness + ")")
                      << "\n";
        std::cout << (out.ok ? "all checks passed" : "FAILURES above") << "\n";
      }
      return out.ok ? 0 : 1;
    }
    if (*golden) {
      emit_golden(cat, cat.data_dir());
      std::cout << "golden artifacts written under " << cat.data_dir()
                << "/golden\n";
      return 0;
    }
  } catch (const std::exception &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
