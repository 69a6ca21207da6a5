#include "shelf/cli.hpp"

#include <chrono>
#include <filesystem>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "shelf/fixtures.hpp"
#include "shelf/io.hpp"
#include "shelf/multishelf.hpp"
#include "shelf/permutation.hpp"

namespace shelf::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char *kSearchHeader =
    "Every member of a distributive subgroup of Bin_inv(X) is an invertible self-distributive "
    "operation (a rack), so the search ranges over racks only. Two mutually distributive racks "
    "that do not commute generate a non-abelian distributive group; conversely a non-abelian "
    "distributive subgroup contains two non-commuting members, which are such a pair. Commuting "
    "pairs generate abelian groups. The first member of each pair ranges over relabeling-orbit "
    "representatives, which loses nothing since compatibility and commutation are invariant under "
    "relabeling.";

ojson rows_json(const OpTable &op) {
  ojson rows = ojson::array();
  for (const auto &row : op.rows())
    rows.push_back(row);
  return rows;
}

ojson integer_json(const BigInt &v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

ojson triple_json(const Triple &t) { return ojson{{"a", t.a}, {"b", t.b}, {"c", t.c}}; }

std::string render(const ojson &doc) { return doc.dump(2) + "\n"; }

void emit(const std::string &doc, const std::string &path, std::ostream &out) {
  if (path.empty() || path == "-")
    out << doc;
  else
    io::write_file(path, doc);
}

std::vector<std::int64_t> parse_weights(const std::string &text) {
  std::vector<std::int64_t> weights;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t w = 0;
    try {
      w = std::stoll(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw std::invalid_argument("bad weight '" + item + "'");
    weights.push_back(w);
  }
  return weights;
}

struct Options {
  std::string out;
  std::string set_path;
  std::vector<std::string> op_paths;
  std::string op_path;
  std::string group;
  std::size_t n = 0;
  bool prune = false;
  double budget = std::numeric_limits<double>::infinity();
  std::vector<std::string> seed_pair;
  std::string report;
  bool exhaustive = false;
  bool timing = false;
  bool no_distributive_check = false;
  std::string weights;
  std::size_t max_degree = 3;
  std::size_t max_dimension = HomologyOptions{}.max_dimension;
  std::string fixture;
  bool list = false;
  std::string verify;
  unsigned jobs = 1;
  bool verbose = false;
};

int cmd_validate(const Options &o, std::ostream &out) {
  const auto family = io::load_set(o.set_path);
  ojson doc;
  doc["n"] = family.n;
  doc["ops"] = family.ops.size();
  int code = kOk;
  if (auto w = first_set_violation(family.ops)) {
    doc["distributive"] = false;
    doc["witness"] = ojson{{"first", w->first}, {"second", w->second}, {"triple", triple_json(w->triple)}};
    code = kWitness;
  } else {
    doc["distributive"] = true;
    bool invertible = true;
    for (const auto &op : family.ops)
      invertible = invertible && is_invertible(op);
    doc["invertible"] = invertible;
    const DistributiveSet set(family.n, family.ops);
    ojson idempotents = ojson::array();
    for (const auto &flag : idempotent_center_report(set))
      idempotents.push_back({{"index", flag.index}, {"commutes_with_all", flag.commutes_with_all}});
    doc["idempotents"] = idempotents;
  }
  emit(render(doc), o.out, out);
  return code;
}

int cmd_compose(const Options &o, std::ostream &out) {
  if (o.op_paths.empty())
    throw std::invalid_argument("compose needs at least one table");
  OpTable acc = io::load_table(o.op_paths.front());
  for (std::size_t i = 1; i < o.op_paths.size(); ++i)
    acc = compose(acc, io::load_table(o.op_paths[i]));
  emit(io::dump_table(acc), o.out, out);
  return kOk;
}

int cmd_embed(const Options &o, std::ostream &out) {
  const FiniteGroup g = io::resolve_group(o.group);
  const RegularEmbedding e = regular_embed(g, false);
  const EmbeddingChecks checks = check_embedding(e, !o.no_distributive_check);
  std::vector<std::string> files;
  for (std::size_t h = 0; h < g.order(); ++h)
    files.push_back("element-" + std::to_string(h) + ".json");
  const std::string manifest = embedding_manifest(e, checks, files);
  if (o.out.empty() || o.out == "-") {
    out << manifest;
  } else {
    std::filesystem::create_directories(o.out);
    const std::filesystem::path dir(o.out);
    for (std::size_t h = 0; h < g.order(); ++h)
      io::save_table(dir / files[h], e.images[h]);
    io::write_file(dir / "manifest.json", manifest);
  }
  return checks.all() ? kOk : kWitness;
}

int cmd_alpha(const Options &o, std::ostream &out) {
  const auto v = alpha(io::load_table(o.op_path));
  std::ostringstream text;
  for (const auto &p : v) {
    for (std::size_t x = 0; x < p.size(); ++x)
      text << (x ? " " : "") << p(static_cast<Element>(x));
    text << "\n";
  }
  emit(text.str(), o.out, out);
  return kOk;
}

int cmd_check_conjugation(const Options &o, std::ostream &out) {
  if (o.op_paths.size() != 2)
    throw std::invalid_argument("check-conjugation needs exactly two tables");
  const OpTable a = io::load_table(o.op_paths[0]);
  const OpTable b = io::load_table(o.op_paths[1]);
  const auto w = conjugation_condition(alpha(a), alpha(b));
  ojson doc;
  doc["condition_holds"] = !w.has_value();
  if (w)
    doc["witness"] = ojson{{"y", w->y}, {"z", w->z}};
  doc["agrees_with_table_check"] = distributivity_equivalence_check(a, b);
  emit(render(doc), o.out, out);
  return w ? kWitness : kOk;
}

int cmd_search(const Options &o, std::ostream &out, std::ostream &err) {
  SearchOptions opts;
  opts.prune = o.prune;
  opts.budget_seconds = o.budget;
  opts.exhaustive = o.exhaustive;
  opts.jobs = o.jobs;
  if (!o.seed_pair.empty()) {
    if (o.seed_pair.size() != 2)
      throw std::invalid_argument("--seed-pair takes two table files");
    opts.seed_pairs.emplace_back(io::load_table(o.seed_pair[0]), io::load_table(o.seed_pair[1]));
  }
  const SearchReport r = certify_no_nonabelian(o.n, opts);
  emit(search_report(r, o.timing), o.report, out);
  if (o.verbose)
    err << "search n=" << o.n << ": " << to_string(r.conclusion) << " in " << r.wall_seconds << " s\n";
  switch (r.conclusion) {
  case Conclusion::commutative_only:
    return kOk;
  case Conclusion::nonabelian_found:
    return kWitness;
  case Conclusion::partial:
    return kPartial;
  }
  return kPartial;
}

int cmd_homology(const Options &o, std::ostream &out) {
  const auto family = io::load_set(o.set_path);
  ChainSpec spec{family.ops, parse_weights(o.weights), o.max_degree};
  spec.carrier_size();
  try {
    chain_dimension(family.n, spec.max_degree, o.max_dimension);
  } catch (const std::domain_error &) {
    throw BudgetExceeded("C_" + std::to_string(spec.max_degree) + " exceeds --max-dim " +
                         std::to_string(o.max_dimension));
  }
  if (!verify_differential(spec)) {
    ojson doc{{"convention", kBoundaryConvention}, {"differential_squares_to_zero", false}};
    emit(render(doc), o.out, out);
    return kWitness;
  }
  HomologyOptions hopts;
  hopts.max_dimension = o.max_dimension;
  emit(homology_report(spec, homology_groups(spec, hopts)), o.out, out);
  return kOk;
}

int cmd_fixtures(const Options &o, std::ostream &out, std::ostream &err) {
  if (o.list) {
    std::ostringstream text;
    for (const auto &f : fixtures::all())
      text << f.name << "  " << fixtures::checksum(fixtures::document(f)) << "  " << f.description
           << "\n";
    emit(text.str(), o.out, out);
    return kOk;
  }
  const auto &f = fixtures::get(o.fixture);
  fixtures::revalidate(f);
  const std::string doc = fixtures::document(f);
  if (!o.verify.empty()) {
    const std::string expected = fixtures::checksum(doc);
    const std::string actual = fixtures::checksum(io::read_file(o.verify));
    if (expected != actual) {
      err << o.verify << ": checksum " << actual << " does not match bundled " << f.name << " ("
          << expected << ")\n";
      return kWitness;
    }
    out << f.name << " " << expected << " OK\n";
    return kOk;
  }
  emit(doc, o.out, out);
  return kOk;
}

} // namespace

std::string search_report(const SearchReport &r, bool with_timing) {
  ojson doc;
  doc["header"] = kSearchHeader;
  doc["n"] = r.n;
  doc["conclusion"] = to_string(r.conclusion);
  doc["catalog_built"] = r.catalog_built;
  doc["racks_found"] = r.racks_found;
  doc["rack_classes"] = r.rack_classes;
  doc["compatible_pairs"] = r.compatible_pairs;
  doc["noncommuting_pairs"] = r.noncommuting_pairs;
  ojson groups = ojson::array();
  for (const auto &g : r.nonabelian_groups)
    groups.push_back({{"first", rows_json(g.first)},
                      {"second", rows_json(g.second)},
                      {"closure_order", g.order}});
  doc["nonabelian_groups"] = groups;
  ojson stats{{"nodes", r.nodes}, {"pruned", r.pruned}, {"pairs_checked", r.pairs_checked}};
  if (with_timing)
    stats["wall_seconds"] = r.wall_seconds;
  doc["statistics"] = stats;
  return render(doc);
}

std::string homology_report(const ChainSpec &spec, const std::vector<HomologyGroup> &groups) {
  ojson doc;
  doc["convention"] = kBoundaryConvention;
  doc["basis_order"] = kBasisOrder;
  doc["n"] = spec.carrier_size();
  doc["weights"] = spec.weights;
  doc["max_degree"] = spec.max_degree;
  doc["differential_squares_to_zero"] = true;
  ojson degrees = ojson::array();
  for (const auto &h : groups) {
    ojson torsion = ojson::array();
    for (const auto &t : h.torsion)
      torsion.push_back(integer_json(t));
    degrees.push_back({{"degree", h.degree}, {"free_rank", h.free_rank}, {"torsion", torsion}});
  }
  doc["homology"] = degrees;
  return render(doc);
}

EmbeddingChecks check_embedding(const RegularEmbedding &e, bool check_distributive) {
  EmbeddingChecks c;
  c.distributive_checked = check_distributive;
  c.distributive = check_distributive && !verify_distributive(e.images).has_value();
  c.homomorphism = verify_homomorphism(e);
  c.injective = verify_injective(e);
  c.inverse_images = verify_inverse_images(e);
  return c;
}

std::string embedding_manifest(const RegularEmbedding &e, const EmbeddingChecks &checks,
                               const std::vector<std::string> &files) {
  ojson doc;
  doc["group"] = ojson::parse(io::dump_group(e.group));
  doc["formula"] = "a *_g b = a b^-1 g b";
  doc["elements"] = files;
  ojson v;
  if (checks.distributive_checked)
    v["distributive"] = checks.distributive;
  else
    v["distributive"] = "skipped";
  v["homomorphism"] = checks.homomorphism;
  v["injective"] = checks.injective;
  v["inverse_images"] = checks.inverse_images;
  doc["verification"] = v;
  return render(doc);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Finite binary-operation tables: distributive sets, regular embeddings, rack "
               "search and multi-term homology"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads for parallel sweeps")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", o.verbose, "Print progress to stderr");

  auto *validate = app.add_subcommand("validate", "Check that a set file is a distributive set");
  validate->add_option("--set", o.set_path)->required();
  validate->add_option("--out", o.out);

  auto *compose_cmd = app.add_subcommand("compose", "Compose tables left to right");
  compose_cmd->add_option("--ops", o.op_paths)->required()->expected(1, -1);
  compose_cmd->add_option("--out", o.out);

  auto *embed = app.add_subcommand("embed-regular", "Regular embedding of a group into Bin(G)");
  embed->add_option("--group", o.group, "cyclic:k, dihedral:k, symmetric:k or a group file")->required();
  embed->add_option("--out", o.out, "Output directory");
  embed->add_flag("--no-distributive-check", o.no_distributive_check);

  auto *alpha_cmd = app.add_subcommand("alpha", "Column permutations of an invertible table");
  alpha_cmd->add_option("--op", o.op_path)->required();
  alpha_cmd->add_option("--out", o.out);

  auto *conj = app.add_subcommand("check-conjugation", "Permutation form of distributivity");
  conj->add_option("--ops", o.op_paths)->required()->expected(2);
  conj->add_option("--out", o.out);

  auto *search = app.add_subcommand("search", "Search for non-abelian distributive subgroups");
  search->add_option("--n", o.n)->required();
  search->add_flag("--prune", o.prune, "Backtracking rack enumeration");
  search->add_option("--budget", o.budget, "Seconds")->check(CLI::PositiveNumber);
  search->add_option("--seed-pair", o.seed_pair)->expected(2);
  search->add_option("--report", o.report)->required();
  search->add_flag("--exhaustive", o.exhaustive, "Sweep even when a seed pair settles existence");
  search->add_flag("--timing", o.timing, "Include wall time in the report");

  auto *hom = app.add_subcommand("homology", "Multi-term distributive homology");
  hom->add_option("--set", o.set_path)->required();
  hom->add_option("--weights", o.weights)->required();
  hom->add_option("--max-degree", o.max_degree);
  hom->add_option("--max-dim", o.max_dimension)->check(CLI::PositiveNumber);
  hom->add_option("--out", o.out);

  auto *fix = app.add_subcommand("fixtures", "Bundled tables");
  fix->add_option("name", o.fixture);
  fix->add_flag("--list", o.list);
  fix->add_option("--out", o.out);
  fix->add_option("--verify", o.verify, "Compare a file against the bundled bytes");

  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate)
      return cmd_validate(o, out);
    if (*compose_cmd)
      return cmd_compose(o, out);
    if (*embed)
      return cmd_embed(o, out);
    if (*alpha_cmd)
      return cmd_alpha(o, out);
    if (*conj)
      return cmd_check_conjugation(o, out);
    if (*search)
      return cmd_search(o, out, err);
    if (*hom)
      return cmd_homology(o, out);
    if (*fix) {
      if (!o.list && o.fixture.empty())
        throw std::invalid_argument("fixtures needs a name or --list");
      return cmd_fixtures(o, out, err);
    }
  } catch (const BudgetExceeded &e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kPartial;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

} // namespace shelf::cli
