#include "colorcode/cli.hpp"

#include <algorithm>
#include <ostream>
#include <regex>

#include "CLI11.hpp"

#include "colorcode/category.hpp"
#include "colorcode/config.hpp"
#include "colorcode/errors.hpp"
#include "colorcode/io.hpp"
#include "colorcode/parallel.hpp"
#include "colorcode/render.hpp"
#include "colorcode/tables.hpp"
#include "colorcode/verify.hpp"

namespace colorcode {

namespace {

std::pair<int, int> parse_size(const std::string& s) {
  static const std::regex kSize(R"((\d+)x(\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, kSize)) throw ParseError("size must look like 12x12, got '" + s + "'");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

struct LatticeFlags {
  std::string torus;
  std::string planar;
  std::string file;

  void attach(CLI::App* app) {
    auto* t = app->add_option("--torus", torus, "brick-wall torus WxH");
    auto* p = app->add_option("--planar", planar, "open patch WxH");
    auto* f = app->add_option("--lattice", file, "lattice JSON file");
    t->excludes(p)->excludes(f);
    p->excludes(f);
  }

  ColoredLattice build(const Config& cfg, const std::string& fallback) const {
    if (!file.empty()) return lattice_from_json(read_json_file(file));
    if (!planar.empty()) {
      const auto [w, h] = parse_size(planar);
      return build_planar(w, h);
    }
    const std::string size = !torus.empty() ? torus : cfg.get_string("lattice.torus").value_or(fallback);
    const auto [w, h] = parse_size(size);
    return build_torus(w, h);
  }
};

struct OperatorFlags {
  std::string op_file;
  std::string pauli;
  std::string string_file;
  std::string kind = "x";

  void attach(CLI::App* app) {
    auto* o = app->add_option("--op", op_file, "operator JSON file");
    auto* p = app->add_option("--pauli", pauli, "operator text, e.g. \"+ XIZY\"");
    auto* s = app->add_option("--string", string_file, "string JSON file");
    app->add_option("--kind", kind, "Pauli kind for --string")->check(CLI::IsMember({"x", "y", "z"}));
    o->excludes(p)->excludes(s);
    p->excludes(s);
  }

  bool given() const { return !op_file.empty() || !pauli.empty() || !string_file.empty(); }

  PauliOperator build(const ColoredLattice& lattice) const {
    const auto n = static_cast<std::size_t>(lattice.num_vertices());
    PauliOperator p;
    if (!op_file.empty()) {
      p = operator_from_json(read_json_file(op_file));
    } else if (!pauli.empty()) {
      p = from_text(pauli);
    } else if (!string_file.empty()) {
      p = string_operator(string_from_json(lattice, read_json_file(string_file)), parse_kind(kind), n);
    } else {
      throw ParseError("one of --op, --pauli or --string is required");
    }
    if (p.num_qubits() != n) {
      throw DimensionMismatch("operator acts on " + std::to_string(p.num_qubits()) + " qubits, lattice has " +
                              std::to_string(n));
    }
    return p;
  }
};

struct Settings {
  Config config;
  bool json = false;
  int threads = 1;
};

int resolve_int(const Config& cfg, const std::string& key, const CLI::Option* flag, int flag_value, int fallback) {
  if (flag != nullptr && flag->count() > 0) return flag_value;
  return static_cast<int>(cfg.get_int(key).value_or(fallback));
}

std::string sign_text(int s) { return s > 0 ? "1" : "-1"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Color code stabilizer and anyon toolkit"};
  app.require_subcommand(1);
  Settings settings;
  std::string config_path;
  int threads_flag = 0;
  app.add_flag("--json", settings.json, "machine-readable output");
  app.add_option("--config", config_path, "TOML-style settings file")->check(CLI::ExistingFile);
  app.add_option("--threads", threads_flag, "worker threads (capped by COLORCODE_THREADS)")->check(CLI::PositiveNumber);

  // gsd
  LatticeFlags gsd_lattice;
  auto* gsd = app.add_subcommand("gsd", "ground-space dimension");
  gsd_lattice.attach(gsd);

  // omega
  LatticeFlags omega_lattice;
  OperatorFlags omega_op;
  auto* omega = app.add_subcommand("omega", "ground-state expectation of a Pauli monomial");
  omega_lattice.attach(omega);
  omega_op.attach(omega);

  // syndrome
  LatticeFlags syn_lattice;
  OperatorFlags syn_op;
  auto* syndrome = app.add_subcommand("syndrome", "faces whose stabilizers anticommute with an operator");
  syn_lattice.attach(syndrome);
  syn_op.attach(syndrome);

  // fuse
  LatticeFlags fuse_lattice;
  std::string fuse_a;
  std::string fuse_b;
  std::string fuse_side = "both";
  int radius_value = 1;
  auto* fuse = app.add_subcommand("fuse", "fusion of two anyon labels");
  fuse_lattice.attach(fuse);
  fuse->add_option("--a", fuse_a)->required();
  fuse->add_option("--b", fuse_b)->required();
  fuse->add_option("--side", fuse_side)->check(CLI::IsMember({"lattice", "category", "both"}));
  auto* fuse_radius = fuse->add_option("--radius", radius_value, "detector region radius");

  // braid
  LatticeFlags braid_lattice;
  std::string braid_a;
  std::string braid_b;
  std::string orientation;
  int separation_value = 6;
  auto* braid = app.add_subcommand("braid", "braiding sign or monodromy of two anyon labels");
  braid_lattice.attach(braid);
  braid->add_option("--a", braid_a)->required();
  braid->add_option("--b", braid_b)->required();
  braid->add_option("--orientation", orientation)->check(CLI::IsMember({"left", "right"}));
  auto* braid_sep = braid->add_option("--separation", separation_value, "transport distance in half-bricks");

  // tables
  LatticeFlags tables_lattice;
  std::string which = "fusion";
  std::string side = "lattice";
  std::string format = "csv";
  int tables_radius = 1;
  int tables_separation = 6;
  auto* tables = app.add_subcommand("tables", "fusion or monodromy table");
  tables_lattice.attach(tables);
  tables->add_option("--which", which)->check(CLI::IsMember({"fusion", "monodromy"}));
  tables->add_option("--side", side)->check(CLI::IsMember({"lattice", "category"}));
  tables->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  auto* tables_radius_opt = tables->add_option("--radius", tables_radius);
  auto* tables_sep_opt = tables->add_option("--separation", tables_separation);

  // verify
  std::vector<int> check_ids;
  bool oracle_only = false;
  std::string golden_dir;
  std::string fixture;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--check", check_ids, "check numbers (default: all)")->check(CLI::Range(1, kNumChecks));
  verify->add_flag("--oracle", oracle_only, "only the dense-oracle check");
  verify->add_option("--golden", golden_dir, "directory with reference tables");
  verify->add_option("--fixture", fixture, "micro lattice JSON for the oracle");
  auto* seed_opt = verify->add_option("--seed", seed);

  // render
  LatticeFlags render_lattice;
  std::vector<std::string> render_strings;
  OperatorFlags render_op;
  std::string render_out;
  auto* render = app.add_subcommand("render", "SVG drawing of a lattice with overlays");
  render_lattice.attach(render);
  render->add_option("--overlay", render_strings, "string JSON files to draw");
  render_op.attach(render);
  render->add_option("--out", render_out, "output file (default stdout)");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!config_path.empty()) settings.config = Config::load(config_path);
    const Config& cfg = settings.config;
    settings.threads = std::min(threads_flag > 0 ? threads_flag : thread_limit(), thread_limit());
    auto detector_options = [&](const CLI::Option* flag, int value) {
      DetectorOptions d;
      d.region_radius = resolve_int(cfg, "detector.radius", flag, value, 1);
      d.center_face = static_cast<int>(cfg.get_int("detector.center_face").value_or(-1));
      return d;
    };

    if (*gsd) {
      const auto lattice = gsd_lattice.build(cfg, "6x6");
      const auto group = face_stabilizers(lattice);
      const auto dim = ground_space_dim(group);
      if (settings.json) {
        out << Json{{"n", group.num_qubits()}, {"rank", group.rank()}, {"gsd", dim},
                    {"logical_qubits", logical_qubits(group)}}
                   .dump()
            << "\n";
      } else {
        out << "n=" << group.num_qubits() << " rank=" << group.rank() << " gsd=" << dim << "\n";
      }
      return kExitOk;
    }

    if (*omega || *syndrome) {
      const bool is_omega = omega->parsed();
      const auto lattice = (is_omega ? omega_lattice : syn_lattice).build(cfg, "6x6");
      const auto group = face_stabilizers(lattice);
      const PauliOperator p = (is_omega ? omega_op : syn_op).build(lattice);
      if (is_omega) {
        const UnitValue v = group.omega0(p);
        if (settings.json) {
          out << Json{{"value", to_string(v)}}.dump() << "\n";
        } else {
          out << to_string(v) << "\n";
        }
        return kExitOk;
      }
      const Syndrome syn = group.syndrome(p);
      Json list = Json::array();
      for (const FaceSyndrome& s : syn) {
        list.push_back({{"face", s.face},
                        {"color", color_name(lattice.face(s.face).color)},
                        {"k", s.violates_k},
                        {"j", s.violates_j}});
      }
      if (settings.json) {
        out << list.dump() << "\n";
      } else if (syn.empty()) {
        out << "no violated faces\n";
      } else {
        for (const FaceSyndrome& s : syn) {
          out << "face " << s.face << " " << color_name(lattice.face(s.face).color) << " "
              << (s.violates_k ? "K" : "") << (s.violates_j ? "J" : "") << "\n";
        }
      }
      return kExitOk;
    }

    if (*fuse) {
      const SectorLabel a = parse_label(fuse_a);
      const SectorLabel b = parse_label(fuse_b);
      const SectorLabel expected = category_fuse(a, b);
      std::optional<SectorLabel> measured;
      if (fuse_side != "category") {
        const auto lattice = fuse_lattice.build(cfg, "12x12");
        const auto group = face_stabilizers(lattice);
        const SectorLab lab(lattice, group, detector_options(fuse_radius, radius_value));
        measured = lab.fuse_measure(a, b);
      }
      const SectorLabel shown = measured ? *measured : expected;
      const bool agree = !measured || fuse_side != "both" || *measured == expected;
      if (settings.json) {
        Json j{{"a", label_name(a)}, {"b", label_name(b)}, {"fusion", label_name(shown)}};
        if (fuse_side == "both") j["category"] = label_name(expected);
        j["agree"] = agree;
        out << j.dump() << "\n";
      } else {
        out << label_name(a) << " x " << label_name(b) << " = " << label_name(shown);
        if (!agree) out << " (category: " << label_name(expected) << ")";
        out << "\n";
      }
      return agree ? kExitOk : kExitMismatch;
    }

    if (*braid) {
      const SectorLabel a = parse_label(braid_a);
      const SectorLabel b = parse_label(braid_b);
      const auto lattice = braid_lattice.build(cfg, "12x12");
      const BraidingGeometry geometry(lattice, resolve_int(cfg, "braiding.separation", braid_sep, separation_value, 6));
      if (!orientation.empty()) {
        const Orientation o = parse_orientation(orientation);
        const int s = braiding_sign(geometry, a, b, o);
        if (settings.json) {
          out << Json{{"a", label_name(a)}, {"b", label_name(b)}, {"orientation", orientation_name(o)}, {"sign", s}}
                     .dump()
              << "\n";
        } else {
          out << "sign=" << sign_text(s) << "\n";
        }
        return kExitOk;
      }
      const int m = monodromy_measure(geometry, a, b);
      const int expected = category_monodromy(a, b);
      if (settings.json) {
        out << Json{{"a", label_name(a)}, {"b", label_name(b)}, {"monodromy", m}, {"category", expected}}.dump()
            << "\n";
      } else {
        out << "monodromy=" << sign_text(m) << "\n";
      }
      return m == expected ? kExitOk : kExitMismatch;
    }

    if (*tables) {
      const bool as_json = settings.json || format == "json";
      std::string text;
      if (which == "fusion") {
        LabelTable t;
        if (side == "category") {
          t = category_fusion_table();
        } else {
          const auto lattice = tables_lattice.build(cfg, "12x12");
          const auto group = face_stabilizers(lattice);
          const SectorLab lab(lattice, group, detector_options(tables_radius_opt, tables_radius));
          t = fusion_table(lab, settings.threads);
        }
        text = as_json ? to_json(t).dump() + "\n" : to_csv(t);
      } else {
        SignTable t;
        if (side == "category") {
          t = category_monodromy_table();
        } else {
          const auto lattice = tables_lattice.build(cfg, "12x12");
          const BraidingGeometry geometry(
              lattice, resolve_int(cfg, "braiding.separation", tables_sep_opt, tables_separation, 6));
          t = monodromy_table(geometry, settings.threads);
        }
        text = as_json ? to_json(t).dump() + "\n" : to_csv(t);
      }
      out << text;
      return kExitOk;
    }

    if (*verify) {
      VerifyOptions options;
      options.threads = settings.threads;
      options.golden_dir = !golden_dir.empty() ? golden_dir : cfg.get_string("verify.golden").value_or(COLORCODE_GOLDEN_DIR);
      if (!fixture.empty()) {
        options.micro_fixture = fixture;
      } else if (auto f = cfg.get_string("verify.fixture")) {
        options.micro_fixture = *f;
      }
      if (seed_opt->count() > 0) {
        options.seed = seed;
      } else if (auto s = cfg.get_int("verify.seed")) {
        options.seed = static_cast<std::uint64_t>(*s);
      }
      options.detector = detector_options(nullptr, 1);
      options.braiding_separation = static_cast<int>(cfg.get_int("braiding.separation").value_or(6));
      options.truncation = static_cast<int>(cfg.get_int("fermion.truncation").value_or(3));
      std::vector<int> ids = check_ids;
      if (oracle_only) ids = {2};
      if (ids.empty()) {
        for (int i = 1; i <= kNumChecks; ++i) ids.push_back(i);
      }
      const auto results = run_checks(ids, options);
      const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
      if (settings.json) {
        Json list = Json::array();
        for (const CheckResult& r : results) {
          list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        out << Json{{"passed", all}, {"checks", list}}.dump() << "\n";
      } else {
        for (const CheckResult& r : results) {
          out << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail << "\n";
        }
      }
      return all ? kExitOk : kExitMismatch;
    }

    if (*render) {
      const auto lattice = render_lattice.build(cfg, "6x6");
      RenderOverlay overlay;
      for (const std::string& path : render_strings) overlay.strings.push_back(string_from_json(lattice, read_json_file(path)));
      if (render_op.given()) overlay.syndrome = face_stabilizers(lattice).syndrome(render_op.build(lattice));
      const std::string svg = render_svg(lattice, overlay);
      if (render_out.empty()) {
        out << svg;
      } else {
        write_text_file(render_out, svg);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace colorcode
