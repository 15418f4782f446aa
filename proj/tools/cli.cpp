#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "z2tri/certify.hpp"
#include "z2tri/flips.hpp"
#include "z2tri/generators.hpp"

namespace z2tri {

namespace {

// Input could not be read or parsed; exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_parse_error(ErrorKind k) {
  return k == ErrorKind::SyntaxError || k == ErrorKind::NonInvolutiveGluing || k == ErrorKind::FaceGluedToItself ||
         k == ErrorKind::IndexOutOfRange;
}

class Io {
public:
  Io(std::istream& in) : in_(in) {}

  Triangulation load(const std::string& path) {
    std::string text;
    if (path == "-") {
      if (stdin_used_) throw InputError("standard input can be read only once");
      stdin_used_ = true;
      std::ostringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw InputError("cannot read " + path);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    try {
      return parse_triangulation(text);
    } catch (const Error& e) {
      if (is_parse_error(e.kind())) throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
      throw;
    }
  }

private:
  std::istream& in_;
  bool stdin_used_ = false;
};

bool report_passes(const AnalysisReport& r) {
  if (r.quad.euler_sum_holds && !*r.quad.euler_sum_holds) return false;
  for (const auto& sr : r.subgroups) {
    if (!sr.identities.all_hold() || !sr.equality.consequence_holds()) return false;
    if (sr.equality.all() && (sr.candidate_lower_bound != r.summary.tets || !sr.quad_duals_match)) return false;
  }
  return true;
}

struct Options {
  std::string gen_kind;
  int k = 0;
  std::vector<int> seq;

  std::vector<std::string> analyze_files;
  int jobs = 1;

  std::string file;
  int edge = -1;
  int axis = 0;

  int max_steps = -1;
  int subgroup = 0;

  std::string file2;
};

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.gen_kind == "twisted-loop")
    out << serialize(twisted_layered_loop(o.k));
  else
    out << serialize(layered_solid_torus(o.seq).tri);
  return 0;
}

int cmd_analyze(const Options& o, Io& io, std::ostream& out) {
  std::vector<Triangulation> inputs;
  for (const auto& f : o.analyze_files) inputs.push_back(io.load(f));
  std::vector<AnalysisReport> reports(inputs.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, o.jobs));
  for (std::size_t start = 0; start < inputs.size(); start += jobs) {
    std::vector<std::future<AnalysisReport>> batch;
    for (std::size_t i = start; i < std::min(inputs.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&inputs, i] { return analyze(inputs[i]); }));
    for (std::size_t i = 0; i < batch.size(); ++i) reports[start + i] = batch[i].get();
  }
  bool ok = true;
  if (reports.size() == 1) {
    out << render_report(reports.front());
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string text = render_report(reports[i]);
      text.pop_back();
      out << text << (i + 1 < reports.size() ? ",\n" : "\n");
    }
    out << "]\n";
  }
  for (const auto& r : reports) ok = ok && report_passes(r);
  return ok ? 0 : 1;
}

int cmd_flip(const Options& o, Io& io, std::ostream& out) {
  const auto t = io.load(o.file);
  const Skeleton s(t);
  out << serialize(edge_flip(t, flip_site(s, o.edge), o.axis));
  return 0;
}

int cmd_promote(const Options& o, Io& io, std::ostream& out) {
  const auto t = io.load(o.file);
  check_closed_orientable(t);
  const Skeleton s(t);
  const auto subgroups = enumerate_rank2_subgroups(h1_z2(s));
  if (o.subgroup < 0 || o.subgroup >= static_cast<int>(subgroups.size()))
    throw Error(ErrorKind::BadParameter, "subgroup index " + std::to_string(o.subgroup) + " out of range (" +
                                             std::to_string(subgroups.size()) + " subgroups)");
  const int max_steps = o.max_steps >= 0 ? o.max_steps : default_max_steps(static_cast<int>(t.size()));
  const auto r = promote_to_ii4_free(t, subgroups[static_cast<std::size_t>(o.subgroup)], max_steps);
  out << "# subgroup " << o.subgroup << ", " << r.trace.size() << " flips\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto& step = r.trace[i];
    out << "# step " << i + 1 << ": edge " << step.edge << " axis " << step.axis << " -> ii4 " << step.ii4_count
        << ", type IV " << step.type_iv_count << "\n";
  }
  for (int i = 0; i < 2; ++i) out << "# class " << i + 1 << ": " << r.subgroup.phi[i].str() << "\n";
  out << serialize(r.tri);
  return 0;
}

int cmd_iso(const Options& o, Io& io, std::ostream& out) {
  const auto a = io.load(o.file);
  const auto b = io.load(o.file2);
  const bool iso = are_isomorphic(a, b).has_value();
  out << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? 0 : 1;
}

int cmd_skeleton(const Options& o, Io& io, std::ostream& out) {
  const auto t = io.load(o.file);
  const Skeleton s(t);
  out << "T=" << s.num_tets() << " V=" << s.num_vertices() << " E=" << s.num_edges() << " F=" << s.num_faces() << "\n";
  out << "degrees";
  for (auto [d, n] : s.degree_histogram()) out << " " << d << ":" << n;
  out << "\n";
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z/2 cohomology analysis of 3-manifold triangulations", "z2tri"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a triangulation in TRI-v1");
  gen->require_subcommand(1);
  auto* loop = gen->add_subcommand("twisted-loop", "Twisted layered loop with k tetrahedra");
  loop->add_option("--k", o.k, "Number of tetrahedra")->required()->check(CLI::PositiveNumber);
  auto* lst = gen->add_subcommand("lst", "Layered solid torus from a layering sequence");
  lst->add_option("--seq", o.seq, "Boundary edge ranks 0, 1 or 2, one per layer")->delimiter(',')->check(CLI::Range(0, 2));
  loop->callback([&] { o.gen_kind = "twisted-loop"; });
  lst->callback([&] { o.gen_kind = "lst"; });

  auto* analyze_cmd = app.add_subcommand("analyze", "Print the analysis report");
  analyze_cmd->add_option("files", o.analyze_files, "Input files, - for standard input")->required();
  analyze_cmd->add_option("--jobs", o.jobs, "Inputs analysed in parallel")->check(CLI::PositiveNumber);

  auto* flip = app.add_subcommand("flip", "Apply a 4-4 edge flip");
  flip->add_option("file", o.file, "Input file, - for standard input")->required();
  flip->add_option("--edge", o.edge, "Edge class of degree 4")->required();
  flip->add_option("--axis", o.axis, "New axis")->required()->check(CLI::IsMember({0, 1}));

  auto* promote = app.add_subcommand("promote", "Flip until no (II,4) layered solid torus remains");
  promote->add_option("file", o.file, "Input file, - for standard input")->required();
  promote->add_option("--max-steps", o.max_steps, "Flip budget (default 10 T^2)")->check(CLI::NonNegativeNumber);
  promote->add_option("--subgroup", o.subgroup, "Index of the rank-2 subgroup, as listed by analyze");

  auto* iso = app.add_subcommand("iso", "Test two triangulations for isomorphism");
  iso->add_option("file1", o.file, "First input")->required();
  iso->add_option("file2", o.file2, "Second input")->required();

  auto* skeleton = app.add_subcommand("skeleton", "Print cell counts and the edge degree histogram");
  skeleton->add_option("file", o.file, "Input file, - for standard input")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Io io(in);
  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (analyze_cmd->parsed()) return cmd_analyze(o, io, out);
    if (flip->parsed()) return cmd_flip(o, io, out);
    if (promote->parsed()) return cmd_promote(o, io, out);
    if (iso->parsed()) return cmd_iso(o, io, out);
    if (skeleton->parsed()) return cmd_skeleton(o, io, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace z2tri
