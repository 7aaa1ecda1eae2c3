// Command-line front end: orders, censuses, Green's structure and
// idempotent bitmaps of the standard diagram monoids.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "diagsemi/diagsemi.hpp"

namespace {

  using namespace diagsemi;

  constexpr std::size_t kDefaultEnumerationBound = 1'000'000;
  constexpr std::size_t kDefaultFernDegree       = 12;

  // Published numbers of subsemigroups up to conjugacy (the S row counts
  // subgroups), indexed by family and degree.
  std::optional<std::uint64_t> published_census(Family f, std::size_t n) {
    static std::map<std::pair<Family, std::size_t>, std::uint64_t> const table = {
        {{Family::partitioned_binary_relation, 1}, 1262},
        {{Family::binary_relation, 1}, 4},
        {{Family::binary_relation, 2}, 385},
        {{Family::partition, 1}, 4},
        {{Family::partition, 2}, 272},
        {{Family::partial_transformation, 1}, 4},
        {{Family::partial_transformation, 2}, 50},
        {{Family::partial_transformation, 3}, 94232},
        {{Family::partial_permutation, 1}, 4},
        {{Family::partial_permutation, 2}, 23},
        {{Family::partial_permutation, 3}, 2963},
        {{Family::dual_symmetric_inverse, 1}, 2},
        {{Family::dual_symmetric_inverse, 2}, 6},
        {{Family::dual_symmetric_inverse, 3}, 795},
        {{Family::transformation, 1}, 2},
        {{Family::transformation, 2}, 8},
        {{Family::transformation, 3}, 283},
        {{Family::transformation, 4}, 132069776},
        {{Family::brauer, 1}, 2},
        {{Family::brauer, 2}, 6},
        {{Family::brauer, 3}, 42},
        {{Family::brauer, 4}, 10411},
        {{Family::temperley_lieb, 1}, 2},
        {{Family::temperley_lieb, 2}, 4},
        {{Family::temperley_lieb, 3}, 12},
        {{Family::temperley_lieb, 4}, 232},
        {{Family::temperley_lieb, 5}, 12592},
        {{Family::temperley_lieb, 6}, 324835618},
        {{Family::symmetric_group, 1}, 1},
        {{Family::symmetric_group, 2}, 2},
        {{Family::symmetric_group, 3}, 4},
        {{Family::symmetric_group, 4}, 11},
        {{Family::symmetric_group, 5}, 19},
        {{Family::symmetric_group, 6}, 56}};
    auto it = table.find({f, n});
    if (it == table.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  struct RunConfig {
    std::string command;
    std::string family;
    std::size_t degree         = 1;
    std::string output;
    std::size_t max_elements   = kDefaultEnumerationBound;
    std::size_t census_bound   = kDefaultCensusBound;
    unsigned    jobs           = 1;
    bool        up_to_conjugacy = true;
    bool        stats          = false;
    bool        split_ideal    = false;
    std::size_t dclass         = 0;
    std::size_t max_fern_degree = kDefaultFernDegree;

    std::string describe() const {
      std::ostringstream os;
      os << "diagsemi " << command << " family=" << family << " n=" << degree;
      if (command == "census") {
        os << " mode=" << (up_to_conjugacy ? "up-to-conjugacy" : "raw")
           << " stats=" << stats << " jobs=" << jobs
           << " census_bound=" << census_bound;
      }
      if (command == "fern") {
        os << " dclass=" << dclass;
      }
      os << " max_elements=" << max_elements;
      return os.str();
    }

    nlohmann::json to_json() const {
      return {{"command", command},
              {"family", family},
              {"degree", degree},
              {"mode", up_to_conjugacy ? "up-to-conjugacy" : "raw"},
              {"stats", stats},
              {"jobs", jobs},
              {"max_elements", max_elements},
              {"census_bound", census_bound}};
    }
  };

  void apply_environment(RunConfig& cfg) {
    if (char const* env = std::getenv("DIAGSEMI_MAX_ELEMENTS")) {
      try {
        std::size_t v    = std::stoull(env);
        cfg.max_elements = v;
        cfg.census_bound = std::min(v, kMaxCensusElements);
      } catch (std::exception const&) {
        throw Error("DIAGSEMI_MAX_ELEMENTS must be a positive integer");
      }
    }
  }

  void validate(RunConfig const& cfg, Family f) {
    if (!has_standard_generators(f, cfg.degree)) {
      throw Error("unsupported family/degree " + cfg.family + " "
                  + std::to_string(cfg.degree));
    }
  }

  int run_order(RunConfig const& cfg) {
    Family const f     = family_from_string(cfg.family);
    BigCount const order = family_order(f, cfg.degree);
    std::cout << cfg.family << " " << cfg.degree << ": order " << order << "\n";
    if (!has_standard_generators(f, cfg.degree)) {
      std::cout << "enumeration skipped (no standard generating set)\n";
      return 0;
    }
    if (order > cfg.max_elements) {
      std::cout << "enumeration skipped (order exceeds bound "
                << cfg.max_elements << ")\n";
      return 0;
    }
    std::size_t size = with_standard_monoid(
        f, cfg.degree, cfg.max_elements,
        [](auto const& S) { return S.size(); });
    bool const match = BigCount(size) == order;
    std::cout << "enumerated " << size << " " << (match ? "MATCH" : "MISMATCH")
              << "\n";
    return match ? 0 : 1;
  }

  void write_census_outputs(RunConfig const& cfg, CensusResult const& c) {
    namespace fs = std::filesystem;
    fs::path dir = cfg.output.empty() ? fs::path(".") : fs::path(cfg.output);
    fs::create_directories(dir);
    std::string const stem    = cfg.family + std::to_string(cfg.degree);
    std::string const comment = cfg.describe();
    auto open = [&](std::string const& name) {
      std::ofstream os(dir / name);
      if (!os) {
        throw Error("cannot write " + (dir / name).string());
      }
      return os;
    };
    {
      auto os = open(stem + "_sizes.csv");
      write_csv(os, size_histogram(c), comment);
    }
    {
      auto os = open(stem + "_sizes_nontrivial_perm.csv");
      write_csv(os, size_histogram(c, true), comment + " filter=nontrivial-perm");
    }
    for (auto metric : {CensusMetric::d_classes, CensusMetric::idempotents}) {
      auto os = open(stem + "_size_vs_" + std::string(to_string(metric)) + ".csv");
      write_csv(os, joint_histogram(c, metric), metric, comment);
    }
    {
      auto os = open(stem + "_records.jsonl");
      os << nlohmann::json{{"run_config", cfg.to_json()}}.dump() << "\n";
      write_jsonl(os, c);
    }
    std::cout << "wrote statistics to " << dir.string() << "\n";
  }

  int run_census(RunConfig const& cfg) {
    Family const f = family_from_string(cfg.family);
    validate(cfg, f);
    CensusOptions opts;
    opts.jobs         = cfg.jobs;
    opts.stats        = cfg.stats;
    opts.max_elements = cfg.census_bound;

    auto [classes, total, result] = with_standard_monoid(
        f, cfg.degree, cfg.max_elements, [&](auto const& S) {
          TableSemigroup T = to_table(S);
          if (cfg.split_ideal) {
            auto total = count_subsemigroups_split(T, minimal_ideal(T), opts);
            return std::tuple<std::uint64_t, std::uint64_t, CensusResult>(
                total, total, {});
          }
          SymmetryGroup G = cfg.up_to_conjugacy
                                ? symmetry_group(S)
                                : SymmetryGroup::trivial(T.size(), S.degree());
          CensusResult c = f == Family::symmetric_group
                               ? subgroup_census(T, G, opts)
                               : census_up_to_conjugacy(T, G, opts);
          return std::tuple<std::uint64_t, std::uint64_t, CensusResult>(
              c.classes(), c.total, std::move(c));
        });

    std::cout << cfg.family << " " << cfg.degree << " "
              << (cfg.up_to_conjugacy && !cfg.split_ideal ? "up-to-conjugacy"
                                                          : "raw")
              << ": " << classes << "\n";
    if (cfg.up_to_conjugacy && !cfg.split_ideal) {
      std::cout << "total subsemigroups (sum of orbit sizes): " << total << "\n";
    }
    int status = 0;
    if (cfg.up_to_conjugacy && !cfg.split_ideal) {
      if (auto expected = published_census(f, cfg.degree)) {
        bool const match = *expected == classes;
        std::cout << "published " << *expected << " "
                  << (match ? "MATCH" : "MISMATCH") << "\n";
        status = match ? 0 : 1;
      }
    }
    if (cfg.stats && !cfg.split_ideal) {
      write_census_outputs(cfg, result);
    }
    return status;
  }

  int run_green(RunConfig const& cfg) {
    Family const f = family_from_string(cfg.family);
    validate(cfg, f);
    return with_standard_monoid(
        f, cfg.degree, cfg.max_elements, [&](auto const& S) {
          GreenStructure const g = green_structure(S);
          std::cout << cfg.family << " " << cfg.degree << ": " << S.size()
                    << " elements, " << g.number_of_d_classes()
                    << " D-classes, " << g.number_of_idempotents()
                    << " idempotents\n";
          std::cout << "D-classes linearly ordered: "
                    << (g.is_d_order_linear() ? "yes" : "no") << "\n";
          for (std::size_t d = 0; d < g.number_of_d_classes(); ++d) {
            Eggbox const box = g.eggbox(d);
            std::cout << "D" << d << ": " << g.d_class_elements(d).size()
                      << " elements, eggbox " << box.rows << "x" << box.cols
                      << ", H-class size " << box.cells[0].size() << ", "
                      << g.number_of_idempotents(d) << " idempotents\n";
          }
          if (!cfg.output.empty()) {
            std::ofstream os(cfg.output);
            if (!os) {
              throw Error("cannot write " + cfg.output);
            }
            nlohmann::json j = to_json(g);
            j["run_config"]  = cfg.to_json();
            os << j.dump() << "\n";
          }
          return g.d_equals_j() ? 0 : 1;
        });
  }

  int run_fern(RunConfig const& cfg) {
    if (cfg.degree > cfg.max_fern_degree) {
      throw Error("fern degree " + std::to_string(cfg.degree)
                  + " exceeds the cap " + std::to_string(cfg.max_fern_degree)
                  + " (raise with --max-degree)");
    }
    if (cfg.output.empty()) {
      throw Error("fern needs --out");
    }
    auto gens = bipartition_generators(Family::temperley_lieb, cfg.degree);
    auto S    = enumerate(gens.elements, cfg.max_elements);
    GreenStructure const g   = green_structure(S);
    Eggbox const         box = g.eggbox(cfg.dclass);

    std::ofstream os(cfg.output);
    if (!os) {
      throw Error("cannot write " + cfg.output);
    }
    box.write_pgm(os, cfg.describe());

    // black pixels against x * x == x evaluated on the diagrams themselves
    std::size_t direct = 0;
    for (auto x : g.d_class_elements(cfg.dclass)) {
      direct += (S.at(x) * S.at(x)) == S.at(x);
    }
    std::size_t const black = box.number_of_idempotent_cells();
    bool const        match = black == direct;
    std::cout << "TL" << cfg.degree << " D-class " << cfg.dclass << " (rank "
              << rank(S.at(g.d_class_elements(cfg.dclass)[0])) << "): "
              << box.rows << "x" << box.cols << " eggbox, " << black
              << " idempotent cells, " << direct << " idempotents "
              << (match ? "MATCH" : "MISMATCH") << "\n";
    std::cout << "wrote " << cfg.output << "\n";
    return match ? 0 : 1;
  }

  int run_gens(RunConfig const& cfg) {
    Family const f = family_from_string(cfg.family);
    validate(cfg, f);
    nlohmann::json out = std::visit(
        [&](auto const& gens) {
          nlohmann::json list = nlohmann::json::array();
          for (std::size_t i = 0; i < gens.elements.size(); ++i) {
            list.push_back({{"label", gens.labels[i]},
                            {"element", to_json(gens.elements[i])}});
          }
          return nlohmann::json{{"family", cfg.family},
                                {"degree", cfg.degree},
                                {"generators", list}};
        },
        standard_generators(f, cfg.degree));
    std::cout << out.dump(2) << "\n";
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagsemi: diagram semigroup orders, censuses and Green's structure"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--max-elements", cfg.max_elements,
                 "enumeration bound (env DIAGSEMI_MAX_ELEMENTS overrides)");

  auto* order = app.add_subcommand("order", "closed-form order, checked by enumeration");
  order->add_option("family", cfg.family, "PB B P PT IS T I Br S TL")->required();
  order->add_option("n", cfg.degree, "degree")->required();

  auto* census = app.add_subcommand("census", "count subsemigroups");
  census->add_option("family", cfg.family)->required();
  census->add_option("n", cfg.degree)->required();
  bool raw = false;
  auto* raw_flag = census->add_flag("--raw", raw, "count every subsemigroup");
  census->add_flag("--up-to-conjugacy", "count up to conjugacy (default)")
      ->excludes(raw_flag);
  census->add_flag("--stats", cfg.stats, "write histogram CSVs and JSON lines");
  census->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  census->add_option("--out-dir", cfg.output, "directory for --stats output");
  census->add_flag("--split-ideal", cfg.split_ideal,
                   "raw count split along the minimal ideal");

  auto* green = app.add_subcommand("green", "Green's structure summary");
  green->add_option("family", cfg.family)->required();
  green->add_option("n", cfg.degree)->required();
  green->add_option("--json", cfg.output, "write the Green's structure as JSON");

  auto* fern = app.add_subcommand("fern", "idempotent bitmap of a Temperley-Lieb D-class");
  fern->add_option("n", cfg.degree)->required();
  fern->add_option("dclass", cfg.dclass, "D-class index, 0 = identity class")->required();
  fern->add_option("--out", cfg.output, "PGM output file")->required();
  fern->add_option("--max-degree", cfg.max_fern_degree, "degree cap");

  auto* gens = app.add_subcommand("gens", "print the standard generators as JSON");
  gens->add_option("family", cfg.family)->required();
  gens->add_option("n", cfg.degree)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    apply_environment(cfg);
    cfg.up_to_conjugacy = !raw;
    if (cfg.split_ideal) {
      cfg.up_to_conjugacy = false;
    }
    if (*order) {
      cfg.command = "order";
      return run_order(cfg);
    }
    if (*census) {
      cfg.command = "census";
      return run_census(cfg);
    }
    if (*green) {
      cfg.command = "green";
      return run_green(cfg);
    }
    if (*fern) {
      cfg.command = "fern";
      cfg.family  = "TL";
      return run_fern(cfg);
    }
    if (*gens) {
      cfg.command = "gens";
      return run_gens(cfg);
    }
  } catch (diagsemi::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
