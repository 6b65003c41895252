// mtkit: validate, classify, and transform finite spaces and frames, run the
// census and the theorem suite.
//
// Exit codes: 0 success, 1 validation error, 2 theorem violation found,
// 3 schema error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mtkit/census.hpp"
#include "mtkit/envelope.hpp"
#include "mtkit/frame.hpp"
#include "mtkit/functor.hpp"
#include "mtkit/json_io.hpp"
#include "mtkit/separation.hpp"
#include "mtkit/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitViolation = 2;
constexpr int kExitSchema = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mtkit::ValidationError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

mtkit::Mask parse_mask(const std::string& text) {
  return static_cast<mtkit::Mask>(std::stoul(text, nullptr, 0));
}

std::string mask_to_set(mtkit::Mask m) {
  std::string out = "{";
  bool first = true;
  for (int p : mtkit::mask_points(m)) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

void print_profile(const mtkit::FinSpace& space) {
  using mtkit::MtAxiom;
  const mtkit::SeparationProfile p = mtkit::classify(space);
  const struct {
    const char* name;
    bool holds;
    MtAxiom axiom;
  } rows[] = {
      {"T0", p.t0, MtAxiom::T0},
      {"T1/2", p.t_half, MtAxiom::THalf},
      {"T1", p.t1, MtAxiom::T1},
      {"weakly sober", p.weakly_sober, MtAxiom::WeaklySober},
      {"sober", p.sober, MtAxiom::Sober},
      {"T2", p.t2, MtAxiom::T2},
      {"T3", p.t3, MtAxiom::T3},
      {"T3 1/2", p.t3half, MtAxiom::T3Half},
      {"T4", p.t4, MtAxiom::T4},
  };
  std::cout << "space " << space.id() << " (" << space.points() << " points, "
            << space.opens().size() << " opens)\n";
  for (const auto& row : rows) {
    std::cout << "  " << row.name << ": " << (row.holds ? "yes" : "no");
    const auto& witness = p.witnesses[static_cast<std::size_t>(row.axiom)];
    if (!witness.empty()) {
      std::cout << "  (witness:";
      for (mtkit::Mask w : witness) std::cout << " " << mask_to_set(w);
      std::cout << ")";
    }
    std::cout << "\n";
  }
  const mtkit::FrameProfile f = mtkit::frame_profile(mtkit::omega(space).frame);
  std::cout << "open frame: subfit=" << f.subfit << " fit=" << f.fit
            << " hausdorff=" << f.hausdorff << " regular=" << f.regular
            << " completely_regular=" << f.completely_regular << " normal=" << f.normal
            << " spatial=" << f.spatial << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"finite model kit for interior algebras, frames, and separation axioms"};
  app.require_subcommand(1);

  std::string file;
  mtkit::Mask closed_mask = 0, open_mask = 0;
  int depth = 4;
  int census_n = 2;
  std::string closed_text, open_text;

  auto* validate = app.add_subcommand("validate", "validate a space or lattice document");
  validate->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "print the separation and frame profiles");
  classify->add_option("file", file)->required();

  auto* frame = app.add_subcommand("frame", "emit the frame of opens as a lattice document");
  frame->add_option("file", file)->required();

  auto* points = app.add_subcommand("points", "emit the point space of a frame");
  points->add_option("file", file)->required();

  auto* complete = app.add_subcommand("complete", "cut completion of a poset document");
  complete->add_option("file", file)->required();

  auto* envelope =
      app.add_subcommand("envelope", "realize a frame as the opens of a powerset algebra");
  envelope->add_option("file", file)->required();

  auto* soberify = app.add_subcommand("soberify", "emit the point space of the opens");
  soberify->add_option("file", file)->required();

  auto* urysohn = app.add_subcommand("urysohn", "build a dyadic family in a normal algebra");
  urysohn->add_option("file", file)->required();
  urysohn->add_option("--closed", closed_text, "closed element, as a bitmask")->required();
  urysohn->add_option("--open", open_text, "open element, as a bitmask")->required();
  urysohn->add_option("--depth", depth, "dyadic depth (default 4)");

  auto* census = app.add_subcommand("census", "classify every labeled topology on n points");
  census->add_option("--n", census_n)->required();

  auto* theorems = app.add_subcommand("theorems", "run the theorem suite on the n-census");
  theorems->add_option("--n", census_n)->required();

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    const auto doc = mtkit::parse_document(read_file(file));
    if (std::holds_alternative<mtkit::FinSpace>(doc)) {
      const auto& s = std::get<mtkit::FinSpace>(doc);
      std::cout << "valid space: " << s.points() << " points, " << s.opens().size()
                << " opens, id " << s.id() << "\n";
    } else {
      const auto& l = std::get<mtkit::FiniteLattice>(doc);
      std::cout << "valid lattice: " << l.size() << " elements, bottom " << l.bot() << ", top "
                << l.top() << "\n";
    }
  } else if (classify->parsed()) {
    print_profile(mtkit::parse_space_document(read_file(file)));
  } else if (frame->parsed()) {
    const auto space = mtkit::parse_space_document(read_file(file));
    std::cout << mtkit::serialize_lattice(mtkit::omega(space).frame.base()) << "\n";
  } else if (points->parsed()) {
    const auto lattice = mtkit::parse_lattice_document(read_file(file));
    const auto pt = mtkit::pt_space(mtkit::validate_frame(lattice));
    std::cout << mtkit::serialize_space(pt.space) << "\n";
  } else if (complete->parsed()) {
    const auto poset = mtkit::parse_poset_document(read_file(file));
    std::cout << mtkit::serialize_lattice(mtkit::macneille(poset).lattice) << "\n";
  } else if (envelope->parsed()) {
    const auto lattice = mtkit::parse_lattice_document(read_file(file));
    const auto space = mtkit::mt_from_frame(mtkit::validate_frame(lattice));
    std::cout << mtkit::serialize_space(space) << "\n";
  } else if (soberify->parsed()) {
    const auto space = mtkit::parse_space_document(read_file(file));
    std::cout << mtkit::serialize_space(mtkit::soberify(space)) << "\n";
  } else if (urysohn->parsed()) {
    const auto space = mtkit::parse_space_document(read_file(file));
    closed_mask = parse_mask(closed_text);
    open_mask = parse_mask(open_text);
    const auto fam = mtkit::urysohn_family(space, closed_mask, open_mask, depth);
    std::cout << "{\"kind\":\"urysohn\",\"depth\":" << fam.depth << ",\"members\":[";
    for (std::size_t k = 0; k < fam.members.size(); ++k) {
      if (k != 0) std::cout << ",";
      std::cout << "{\"index\":\"" << k << "/" << (std::size_t{1} << fam.depth)
                << "\",\"set\":[";
      const auto pts = mtkit::mask_points(fam.members[k]);
      for (std::size_t i = 0; i < pts.size(); ++i)
        std::cout << (i ? "," : "") << pts[i];
      std::cout << "]}";
    }
    std::cout << "]}\n";
  } else if (census->parsed()) {
    std::cout << mtkit::render_census(census_n, mtkit::census(census_n));
  } else if (theorems->parsed()) {
    bool violated = false;
    for (const auto& report : mtkit::run_theorem_suite(census_n)) {
      std::cout << report.id << ": instances=" << report.instances
                << " violations=" << report.violations.size() << "\n";
      for (const auto& v : report.violations) {
        std::cout << "  " << v << "\n";
        violated = true;
      }
    }
    if (violated) return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mtkit::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const mtkit::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitValidation;
  }
}
