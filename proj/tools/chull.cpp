#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include "CLI11.hpp"
#include "chull/degrees.hpp"
#include "chull/edgesurface.hpp"
#include "chull/error.hpp"
#include "chull/factor.hpp"
#include "chull/sample.hpp"
#include "chull/spec_io.hpp"
#include "chull/tritangent.hpp"
#include "json.hpp"

using namespace chull;
using nlohmann::ordered_json;

namespace {

enum Exit { Success = 0, Failure = 1, Partial = 2, InputError = 3 };

struct Config {
  std::string input;
  std::string output;
  std::string route = "grassmannian";
  bool raw = false;
  bool modular = false;
  bool json = false;
  bool chow = false;
  bool quiet = false;
  unsigned threads = 1;
  std::size_t max_pairs = 0;
  unsigned degree_cap = 8;
  unsigned seed = 0;
  std::string cache_dir;
  long d = 0, g = 0, n = 0, k = 0;
  std::vector<double> bbox{-2, 2};
  unsigned resolution = 50;
};

std::mutex stderr_mutex;

GroebnerOptions groebner_options(const Config& c) {
  GroebnerOptions o;
  o.max_pairs = c.max_pairs;
  if (!c.quiet)
    o.heartbeat = [](const GroebnerProgress& p) {
      std::lock_guard lock(stderr_mutex);
      std::cerr << "heartbeat: pairs " << p.pairs_processed << " pending " << p.pairs_pending << " basis "
                << p.basis_size << " sugar " << p.sugar << "\n";
    };
  return o;
}

TritangentOptions tritangent_options(const Config& c) {
  TritangentOptions o;
  o.groebner = groebner_options(c);
  o.degree_cap = c.degree_cap;
  o.cache_dir = c.cache_dir;
  o.seed = c.seed;
  return o;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

const char* status_name(ComponentStatus s) {
  switch (s) {
    case ComponentStatus::Done:
      return "done";
    case ComponentStatus::NonPrincipal:
      return "non-principal";
    case ComponentStatus::ResourceLimit:
      return "resource-limit";
  }
  return "";
}

int run_pencil(const Config& c, const QuadricPencilSpec& p) {
  Polynomial s = pencil_edge_surface(p);
  Output out(c.output);
  if (c.json) {
    ordered_json j;
    j["components"] = ordered_json::array({{{"source", "pencil"}, {"status", "done"}, {"degree", s.total_degree()},
                                            {"surface", s.to_string()}}});
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream() << "component 1\n  source: pencil\n  status: done\n  degree: " << s.total_degree()
                 << "\n  surface: " << s.to_string() << "\n";
  }
  return Success;
}

int cmd_edge(const Config& c) {
  CurveSpec spec = load_spec(c.input);
  if (spec.is_pencil()) return run_pencil(c, spec.pencil());
  EdgeOptions o;
  if (c.route == "grassmannian")
    o.route = EdgeRoute::Grassmannian;
  else if (c.route == "direct")
    o.route = EdgeRoute::Direct;
  else if (c.route == "interpolation")
    o.route = EdgeRoute::Interpolation;
  else
    throw Error(ErrorCode::InvalidArgument, "route must be grassmannian, direct or interpolation");
  o.groebner = groebner_options(c);
  o.threads = c.threads;
  o.modular = c.modular;
  std::vector<EdgeComponent> comps = edge_components(spec.curve(), o);

  bool partial = false;
  Output out(c.output);
  ordered_json list = ordered_json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const EdgeComponent& e = comps[i];
    partial = partial || e.status == ComponentStatus::ResourceLimit;
    ordered_json j{{"phi_factor", e.phi_factor.to_string()}, {"status", status_name(e.status)}};
    text << "component " << i + 1 << "\n  phi_factor: " << e.phi_factor.to_string() << "\n  status: "
         << status_name(e.status) << "\n";
    if (e.status != ComponentStatus::ResourceLimit) {
      j["degree"] = e.degree;
      j["raw_degree"] = e.raw_degree;
      j["reduced"] = e.reduced;
      j["surface"] = e.surface.to_string();
      text << "  degree: " << e.degree << "\n  raw_degree: " << e.raw_degree
           << "\n  reduced: " << (e.reduced ? "true" : "false") << "\n  surface: " << e.surface.to_string() << "\n";
      if (c.raw || e.status == ComponentStatus::NonPrincipal) {
        ordered_json gens = ordered_json::array();
        for (const auto& g : e.ideal.generators()) {
          gens.push_back(g.to_string());
          text << "  ideal: " << g.to_string() << "\n";
        }
        j["ideal"] = gens;
      }
    }
    list.push_back(j);
  }
  if (c.json)
    out.stream() << ordered_json{{"curve_degree", spec.curve().degree()}, {"components", list}}.dump(2) << "\n";
  else
    out.stream() << "curve_degree: " << spec.curve().degree() << "\n" << text.str();
  if (partial) std::cerr << "warning: some components hit the resource limit\n";
  return partial ? Partial : Success;
}

int cmd_tritangents(const Config& c) {
  CurveSpec spec = load_spec(c.input);
  TritangentOptions o = tritangent_options(c);
  const ProjectiveCurve& curve = spec.curve();
  TritangentIdeal t = tritangent_ideal(curve, squares_ideal(static_cast<unsigned>(curve.degree()), o));
  ChowResult r = chow_form(t, o);
  Output out(c.output);
  ordered_json j{{"finite", r.finite}, {"dimension", r.dimension}};
  std::ostringstream text;
  text << "finite: " << (r.finite ? "true" : "false") << "\ndimension: " << r.dimension << "\n";
  if (r.finite) {
    j["count"] = r.degree;
    text << "count: " << r.degree << "\n";
  }
  if (c.chow && r.finite) {
    j["chow"] = r.chow.to_string();
    text << "chow: " << r.chow.to_string() << "\n";
  } else {
    ordered_json gens = ordered_json::array();
    for (const auto& g : r.saturated.generators()) {
      gens.push_back(g.to_string());
      text << "ideal: " << g.to_string() << "\n";
    }
    j["ideal"] = gens;
  }
  out.stream() << (c.json ? j.dump(2) + "\n" : text.str());
  return Success;
}

int cmd_degrees(const Config& c) {
  DegreeReport r = report({c.d, c.g, c.n, c.k});
  ordered_json j{{"d", c.d},
                 {"g", c.g},
                 {"n", c.n},
                 {"k", c.k},
                 {"edge_degree", r.edge_degree},
                 {"tritangent_count", to_string(r.tritangent_count)},
                 {"dual_degree", r.dual_degree},
                 {"stalls", r.stalls},
                 {"multiplicity_along_curve", r.multiplicity_along_curve},
                 {"cuspidal_edge_degree", r.cuspidal_edge_degree},
                 {"double_curve_degree", r.double_curve_degree},
                 {"bisecant_curve_genus", r.bisecant_curve_genus}};
  if (r.cusp_cone_degree) j["cusp_cone_degree"] = *r.cusp_cone_degree;
  Output out(c.output);
  if (c.json) {
    out.stream() << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it)
      out.stream() << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  }
  return Success;
}

int cmd_phi(const Config& c) {
  CurveSpec spec = load_spec(c.input);
  Polynomial phi = stationary_form(spec.curve());
  Factorization f = factor_homogeneous(phi, 64);
  Output out(c.output);
  ordered_json factors = ordered_json::array();
  std::ostringstream text;
  text << "phi: " << phi.to_string() << "\n";
  for (const auto& [p, e] : f.factors) {
    factors.push_back({{"factor", p.to_string()}, {"multiplicity", e}});
    text << "factor: " << p.to_string() << (e > 1 ? " ^" + std::to_string(e) : "") << "\n";
  }
  if (c.json)
    out.stream() << ordered_json{{"phi", phi.to_string()}, {"factors", factors}}.dump(2) << "\n";
  else
    out.stream() << text.str();
  return Success;
}

int cmd_squares(const Config& c) {
  SquaresIdeal p = squares_ideal(static_cast<unsigned>(c.d), tritangent_options(c));
  Output out(c.output);
  if (c.json) {
    ordered_json gens = ordered_json::array();
    for (const auto& g : p.ideal.generators()) gens.push_back(g.to_string());
    out.stream() << ordered_json{{"d", c.d}, {"generators", gens}}.dump(2) << "\n";
  } else {
    out.stream() << p.ideal.to_string();
  }
  return Success;
}

int cmd_pencil(const Config& c) {
  CurveSpec spec = load_spec(c.input);
  return run_pencil(c, spec.pencil());
}

int cmd_sample(const Config& c) {
  Polynomial f = load_polynomial(space_ring(), c.input);
  SampleOptions o;
  if (c.bbox.size() == 2) {
    o.lo.fill(c.bbox[0]);
    o.hi.fill(c.bbox[1]);
  } else if (c.bbox.size() == 6) {
    for (int a = 0; a < 3; ++a) {
      o.lo[a] = c.bbox[2 * a];
      o.hi[a] = c.bbox[2 * a + 1];
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "--bbox takes lo,hi or xlo,xhi,ylo,yhi,zlo,zhi");
  }
  o.resolution = c.resolution;
  auto points = sample_sign_changes(f, o);
  Output out(c.output);
  write_csv(out.stream(), points);
  if (points.empty()) std::cerr << "warning: EmptyOutput: no sign changes in the bounding box\n";
  return Success;
}

bool input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidProfile:
    case ErrorCode::DegenerateSpec:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::NotSymmetric:
    case ErrorCode::DegeneratePencil:
    case ErrorCode::DegreeCapExceeded:
    case ErrorCode::ExponentOverflow:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Edge surfaces and tritangent planes of space curves"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--quiet", c.quiet, "No heartbeat lines on stderr");

  auto common = [&](CLI::App* s, bool spec) {
    if (spec) s->add_option("spec", c.input, "Curve spec file (JSON)")->required();
    s->add_option("-o,--output", c.output, "Output file (default stdout)");
    s->add_flag("--json", c.json, "JSON output");
    s->add_option("--max-pairs", c.max_pairs, "S-pair budget, 0 = unlimited");
  };

  auto* edge = app.add_subcommand("edge", "Components of the edge surface");
  common(edge, true);
  edge->add_option("--route", c.route, "grassmannian, direct or interpolation")->capture_default_str();
  edge->add_flag("--raw", c.raw, "Also print the elimination ideals");
  edge->add_flag("--modular", c.modular, "Eliminate modulo primes and lift the result to Q");
  edge->add_option("--threads", c.threads, "Components computed in parallel")->capture_default_str();

  auto* tri = app.add_subcommand("tritangents", "Tritangent planes");
  common(tri, true);
  tri->add_flag("--chow", c.chow, "Print the Chow form");
  tri->add_option("--seed", c.seed, "Seed for chart changes")->capture_default_str();
  tri->add_option("--cache-dir", c.cache_dir, "Directory for cached squares ideals");
  tri->add_option("--degree-cap", c.degree_cap, "Largest curve degree")->capture_default_str();

  auto* deg = app.add_subcommand("degrees", "Enumerative invariants");
  deg->add_option("-d", c.d, "Degree")->required();
  deg->add_option("-g", c.g, "Geometric genus")->capture_default_str();
  deg->add_option("-n", c.n, "Ordinary nodes")->capture_default_str();
  deg->add_option("-k", c.k, "Ordinary cusps")->capture_default_str();
  deg->add_option("-o,--output", c.output, "Output file (default stdout)");
  deg->add_flag("--json", c.json, "JSON output");

  auto* phi = app.add_subcommand("phi", "Stationary form and its factors");
  common(phi, true);

  auto* sq = app.add_subcommand("squares-ideal", "Ideal of binary forms that are squares");
  common(sq, false);
  sq->add_option("-d", c.d, "Even degree >= 6")->required();
  sq->add_option("--cache-dir", c.cache_dir, "Directory for cached squares ideals");
  sq->add_option("--degree-cap", c.degree_cap, "Largest degree")->capture_default_str();

  auto* pen = app.add_subcommand("pencil", "Edge surface of a quadric pencil curve");
  common(pen, true);

  auto* smp = app.add_subcommand("sample", "Grid cells where a polynomial in x, y, z changes sign");
  smp->add_option("poly", c.input, "Polynomial file")->required();
  smp->add_option("--bbox", c.bbox, "lo,hi or xlo,xhi,ylo,yhi,zlo,zhi")->delimiter(',')->expected(2, 6);
  smp->add_option("--resolution", c.resolution, "Cells per axis")->capture_default_str();
  smp->add_option("-o,--output", c.output, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Success : InputError;
  }

  try {
    if (*edge) return cmd_edge(c);
    if (*tri) return cmd_tritangents(c);
    if (*deg) return cmd_degrees(c);
    if (*phi) return cmd_phi(c);
    if (*sq) return cmd_squares(c);
    if (*pen) return cmd_pencil(c);
    if (*smp) return cmd_sample(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::ResourceLimit) return Partial;
    return input_error(e.code()) ? InputError : Failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Failure;
  }
  return Failure;
}
