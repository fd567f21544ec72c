#include "colorcode/verify.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "colorcode/category.hpp"
#include "colorcode/errors.hpp"
#include "colorcode/io.hpp"
#include "colorcode/oracle.hpp"
#include "colorcode/parallel.hpp"
#include "colorcode/sampling.hpp"
#include "colorcode/tables.hpp"

namespace colorcode {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures; passes when none were recorded.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    return std::to_string(failed_) + "/" + std::to_string(total_) + " failed, first: " + first_failure_;
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

CheckResult ground_state_degeneracy(const VerifyOptions&) {
  Tally t;
  std::ostringstream detail;
  for (auto [bx, rows] : {std::pair{6, 6}, std::pair{12, 6}}) {
    const auto t0 = Clock::now();
    const auto lattice = build_torus(bx, rows);
    const auto group = face_stabilizers(lattice);
    const auto gsd = ground_space_dim(group);
    const double took = seconds_since(t0);
    t.expect(gsd == 16, "torus " + std::to_string(bx) + "x" + std::to_string(rows) + " gsd " + std::to_string(gsd));
    t.expect(took < 1.0, "torus " + std::to_string(bx) + "x" + std::to_string(rows) + " slower than 1 s");
    if (detail.tellp() > 0) detail << "; ";
    detail << bx << "x" << rows << ": n=" << group.num_qubits() << " rank=" << group.rank() << " gsd=" << gsd;
  }
  return {1, "", t.ok(), t.summary(detail.str()), 0};
}

ColoredLattice micro_lattice(const VerifyOptions& options) {
  if (options.micro_fixture.empty()) return build_torus_relaxed(3, 2);
  return lattice_from_json(read_json_file(options.micro_fixture));
}

CheckResult oracle_agreement(const VerifyOptions& options) {
  Tally t;
  const auto t0 = Clock::now();
  const ColoredLattice lattice = micro_lattice(options);
  const ValidationReport report = validate(lattice);
  for (ViolationKind k : {ViolationKind::Degree, ViolationKind::FaceSize, ViolationKind::FaceBoundary,
                          ViolationKind::ImproperColoring}) {
    t.expect(report.count(k) == 0, "micro lattice fails " + std::string(violation_kind_name(k)));
  }
  const StabilizerGroup group = face_stabilizers(lattice);
  const DenseGroundSpace dense(group);
  t.expect(dense.dimension() == ground_space_dim(group),
           "dense trace " + std::to_string(dense.dimension()) + " vs " + std::to_string(ground_space_dim(group)));

  Rng rng(options.seed);
  const auto logicals = group.logical_basis();
  int flagged = 0;
  for (int trial = 0; trial < 200; ++trial) {
    PauliOperator p;
    switch (trial % 4) {
      case 0:
        p = random_pauli(group.num_qubits(), rng);
        break;
      case 1:
        p = random_group_element(group, rng);
        break;
      case 2:
        p = multiply(random_group_element(group, rng), logicals[static_cast<std::size_t>(trial) % logicals.size()]);
        break;
      default:
        p = multiply(random_group_element(group, rng),
                     PauliOperator::single(static_cast<std::size_t>(trial) % group.num_qubits(), random_kind(rng),
                                           group.num_qubits()));
        break;
    }
    const UnitValue symbolic = group.omega0(p);
    const auto averaged = to_unit_value(dense.trace_average(p));
    t.expect(averaged && *averaged == symbolic, "trial " + std::to_string(trial) + ": " + to_text(p));
    if (dense.is_logical(p)) {
      ++flagged;
      t.expect(symbolic.zero, "logical coset with nonzero symbolic value");
    } else {
      const auto pure = to_unit_value(dense.state_expectation(p));
      t.expect(pure && *pure == symbolic, "pure-state trial " + std::to_string(trial));
    }
  }
  const double took = seconds_since(t0);
  t.expect(took < 30.0, "oracle slower than 30 s");
  return {2, "", t.ok(),
          t.summary("n=" + std::to_string(group.num_qubits()) + " trace=" + std::to_string(dense.dimension()) +
                    " 200 monomials agree, " + std::to_string(flagged) + " logical"),
          0};
}

CheckResult ground_state_functional(const VerifyOptions& options) {
  Tally t;
  const auto lattice = build_torus(12, 12);
  const auto group = face_stabilizers(lattice);
  const std::size_t n = group.num_qubits();
  for (std::size_t g = 0; g < group.num_generators(); ++g) {
    t.expect(group.omega0(group.generators()[g]) == UnitValue::Unit(0), "generator " + std::to_string(g));
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (PauliKind k : kAllKinds) {
      t.expect(group.omega0(PauliOperator::single(v, k, n)).zero, "single-site operator at " + std::to_string(v));
    }
  }
  Rng rng(options.seed + 3);
  for (int i = 0; i < 50; ++i) {
    const Color c = color_from_index(i);
    const PauliKind k = kAllKinds[(i / 3) % 3];
    const auto loop = random_contractible_loop(lattice, rng, c);
    t.expect(group.omega0(string_operator(loop, k, n)) == UnitValue::Unit(0), "closed string " + std::to_string(i));
    const auto open = random_open_string(lattice, rng, c);
    t.expect(group.omega0(string_operator(open, k, n)).zero, "open string " + std::to_string(i));
  }
  return {3, "", t.ok(), t.summary("faces, single sites, 50 closed and 50 open strings"), 0};
}

CheckResult endpoint_law(const VerifyOptions& options) {
  Tally t;
  const auto lattice = build_torus(12, 12);
  const auto group = face_stabilizers(lattice);
  Rng rng(options.seed + 4);
  for (int i = 0; i < 100; ++i) {
    const Color c = random_color(rng);
    const PauliKind k = random_kind(rng);
    const auto s = random_open_string(lattice, rng, c);
    const Syndrome syn = group.syndrome(string_operator(s, k, group.num_qubits()));
    const bool k_hit = k != PauliKind::X;  // Z and Y anticommute with X-type face operators
    const bool j_hit = k != PauliKind::Z;
    Syndrome expected;
    for (int f : {std::min(s.start(), s.end()), std::max(s.start(), s.end())}) expected.push_back({f, k_hit, j_hit});
    t.expect(syn == expected, "string " + std::to_string(i));
  }
  return {4, "", t.ok(), t.summary("100 random open strings"), 0};
}

CheckResult deformation(const VerifyOptions& options) {
  Tally t;
  const auto lattice = build_torus(12, 12);
  const auto group = face_stabilizers(lattice);
  const std::size_t n = group.num_qubits();
  Rng rng(options.seed + 5);
  for (int i = 0; i < 100; ++i) {
    const Color c = color_from_index(i);
    const PauliKind k = kAllKinds[(i / 3) % 3];
    const auto [s1, s2] = random_homotopic_pair(lattice, rng, c);
    const auto w = deformation_witness(group, s1, s2, k, n);
    t.expect(w.has_value(), "pair " + std::to_string(i) + " has no witness");
    if (w) {
      const PauliOperator rebuilt = multiply(string_operator(s2, k, n), group.product(w->generators)).scaled(w->sign_phase);
      t.expect(rebuilt == string_operator(s1, k, n), "pair " + std::to_string(i) + " witness does not reproduce");
    }
  }
  for (int i = 0; i < 20; ++i) {
    const Color c = color_from_index(i);
    const PauliKind k = random_kind(rng);
    const int start = random_face_of_color(lattice, c, rng);
    const auto vertical = vertical_cycle(lattice, start);
    const auto horizontal = horizontal_cycle(lattice, start);
    t.expect(!deformation_witness(group, vertical, horizontal, k, n), "loop pair " + std::to_string(i));
  }
  return {5, "", t.ok(), t.summary("100 homotopic pairs deformed, 20 winding pairs rejected"), 0};
}

struct SectorContext {
  ColoredLattice lattice = build_torus(12, 12);
  StabilizerGroup group = face_stabilizers(lattice);
};

CheckResult sector_classification(const VerifyOptions& options) {
  Tally t;
  SectorContext ctx;
  const SectorLab lab(ctx.lattice, ctx.group, options.detector);
  std::set<DetectorSignature> seen;
  for (SectorLabel a : all_labels()) {
    seen.insert(lab.reference_signature(a));
    t.expect(lab.classify(lab.reference_signature(a)) == a, "classify " + std::string(label_name(a)));
  }
  t.expect(seen.size() == kNumLabels, std::to_string(seen.size()) + " distinct signatures");
  return {6, "", t.ok(), t.summary(std::to_string(seen.size()) + " distinct signatures, bijective"), 0};
}

CheckResult fusion(const VerifyOptions& options) {
  Tally t;
  SectorContext ctx;
  const SectorLab lab(ctx.lattice, ctx.group, options.detector);
  const LabelTable measured = fusion_table(lab, options.threads);
  const LabelTable golden = parse_label_table(options.golden_dir / "fusion.csv");
  const LabelTable category = category_fusion_table();
  int matches = 0;
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    for (std::size_t j = 0; j < kNumLabels; ++j) {
      const bool ok = measured[i][j] == golden[i][j] && measured[i][j] == category[i][j];
      matches += ok ? 1 : 0;
      t.expect(ok, std::string(label_name(label_from_index(static_cast<int>(i)))) + " x " +
                       std::string(label_name(label_from_index(static_cast<int>(j)))));
    }
  }
  return {7, "", t.ok(), t.summary(std::to_string(matches) + "/256 match"), 0};
}

CheckResult monodromy(const VerifyOptions& options) {
  Tally t;
  SectorContext ctx;
  const BraidingGeometry geometry(ctx.lattice, options.braiding_separation);
  const SignTable measured = monodromy_table(geometry, options.threads);
  const SignTable golden = parse_sign_table(options.golden_dir / "monodromy.csv");
  const SignTable category = category_monodromy_table();
  int matches = 0;
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    for (std::size_t j = 0; j < kNumLabels; ++j) {
      const bool ok = measured[i][j] == golden[i][j] && measured[i][j] == category[i][j];
      matches += ok ? 1 : 0;
      t.expect(ok, std::string(label_name(label_from_index(static_cast<int>(i)))) + " / " +
                       std::string(label_name(label_from_index(static_cast<int>(j)))));
    }
  }
  for (Color c1 : kAllColors) {
    for (PauliKind k1 : kAllKinds) {
      for (Color c2 : kAllColors) {
        for (PauliKind k2 : kAllKinds) {
          const int left = braiding_sign(geometry, c1, k1, c2, k2, Orientation::LeftOf);
          const int right = braiding_sign(geometry, c1, k1, c2, k2, Orientation::RightOf);
          if (c1 == c2 || k1 == k2) {
            t.expect(left == 1 && right == 1, "trivial braiding for shared color or kind");
          } else {
            t.expect(left != right, "orientation asymmetry for a mixed pair");
          }
        }
      }
    }
  }
  return {8, "", t.ok(), t.summary(std::to_string(matches) + "/256 match, boson braiding structure holds"), 0};
}

CheckResult fermion_identities(const VerifyOptions& options) {
  Tally t;
  SectorContext ctx;
  t.expect(rx_bz_identity_holds(ctx.lattice, ctx.group, options.truncation), "rx*bz*J = sigma*ry*gz");
  const auto identities = fermion_equivalence_check(ctx.lattice, ctx.group, options.truncation);
  int holding = 0;
  for (const FermionIdentity& id : identities) {
    holding += id.holds ? 1 : 0;
    t.expect(id.holds && !id.residual_support.empty(),
             std::string(label_name(id.fermion)) + ": " + std::string(label_name(id.rhs.first)) + "*" +
                 std::string(label_name(id.rhs.second)));
  }
  return {9, "", t.ok(),
          t.summary("explicit identity and " + std::to_string(holding) + "/" + std::to_string(identities.size()) +
                    " alternatives hold at N=" + std::to_string(options.truncation)),
          0};
}

CheckResult category_module(const VerifyOptions& options) {
  Tally t;
  const RationalMatrix s = s_matrix();
  const Rational quarter(1, 4);
  for (const auto& row : s) {
    for (const Rational& x : row) t.expect(x == quarter || x == -quarter, "S entry not +-1/4");
  }
  t.expect(s == transpose(s), "S not symmetric");
  const RationalMatrix ss = matmul(s, transpose(s));
  for (std::size_t i = 0; i < ss.size(); ++i) {
    for (std::size_t j = 0; j < ss.size(); ++j) t.expect(ss[i][j] == Rational(i == j ? 1 : 0), "S not unitary");
  }
  t.expect(s == kronecker(toric_s_block(), toric_s_block()), "S is not the toric Kronecker square");
  const auto n = verlinde_fusion();
  for (int x = 0; x < 16; ++x) {
    for (int y = 0; y < 16; ++y) {
      const int z_expected = object_index(fuse(object_from_index(x), object_from_index(y)));
      for (int z = 0; z < 16; ++z) {
        t.expect(n[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)][static_cast<std::size_t>(z)] ==
                     Rational(z == z_expected ? 1 : 0),
                 "Verlinde coefficient");
      }
    }
  }
  const auto anyons = read_anyon_csv(options.golden_dir / "anyons.csv");
  int bosons = 0;
  for (const AnyonRow& row : anyons) {
    const Correspondence c = correspondence(row.label);
    t.expect(category_twist(row.label) == row.spin, "twist of " + std::string(label_name(row.label)));
    t.expect(std::string{c.toric_first, c.toric_second} == row.toric, "toric pair of " + std::string(label_name(row.label)));
    bosons += category_twist(row.label) == 1 ? 1 : 0;
  }
  t.expect(bosons == 10, std::to_string(bosons) + " bosons");
  for (SectorLabel a : all_labels()) {
    for (SectorLabel b : all_labels()) {
      t.expect(category_monodromy(a, b) ==
                   category_twist(category_fuse(a, b)) * category_twist(a) * category_twist(b),
               "ribbon relation");
    }
  }
  return {10, "", t.ok(), t.summary("S, Verlinde, twists (10 bosons, 6 fermions), ribbon relation"), 0};
}

CheckResult nontraciality(const VerifyOptions&) {
  Tally t;
  SectorContext ctx;
  const auto w = nontraciality_witness(ctx.lattice, ctx.group);
  t.expect(w.value == UnitValue::Unit(0), "omega0 of the triple product is " + to_string(w.value));
  t.expect(w.reorder_negates, "reordering does not negate");
  return {11, "", t.ok(), t.summary("omega0 = 1, reordered product is its negative"), 0};
}

}  // namespace

std::string check_name(int id) {
  static const char* kNames[kNumChecks] = {"ground-state degeneracy", "oracle agreement", "ground-state functional",
                                           "endpoint law",            "deformation",      "sector classification",
                                           "fusion table",            "monodromy table",  "fermion equivalences",
                                           "category module",         "non-traciality"};
  if (id < 1 || id > kNumChecks) throw IndexOutOfRange("check " + std::to_string(id));
  return kNames[id - 1];
}

CheckResult run_check(int id, const VerifyOptions& options) {
  using Fn = CheckResult (*)(const VerifyOptions&);
  static const Fn kChecks[kNumChecks] = {ground_state_degeneracy, oracle_agreement, ground_state_functional,
                                         endpoint_law,            deformation,      sector_classification,
                                         fusion,                  monodromy,        fermion_identities,
                                         category_module,         nontraciality};
  const std::string name = check_name(id);
  const auto t0 = Clock::now();
  CheckResult r;
  try {
    r = kChecks[id - 1](options);
  } catch (const Error& e) {
    r = {id, name, false, e.what(), 0};
  }
  r.id = id;
  r.name = name;
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<CheckResult> run_checks(const std::vector<int>& ids, const VerifyOptions& options) {
  std::vector<CheckResult> out(ids.size());
  VerifyOptions inner = options;
  inner.threads = 1;
  parallel_for(ids.size(), options.threads, [&](std::size_t i) { out[i] = run_check(ids[i], inner); });
  return out;
}

}  // namespace colorcode
