#include "toric/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "toric/classify.hpp"
#include "toric/complex.hpp"
#include "toric/ehrhart.hpp"
#include "toric/homology.hpp"
#include "toric/sheaf.hpp"
#include "toric/verify.hpp"

namespace toric {

using nlohmann::json;

namespace {

Integer integer_from_json(const json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    const Rational r = parse_rational(v.get<std::string>());
    if (r.get_den() != 1) throw ToricError("expected an integer, got '" + v.get<std::string>() + "'");
    return r.get_num();
  }
  throw ToricError("expected an integer, got " + v.dump());
}

IntVector vector_from_json(const json& v) {
  if (!v.is_array()) throw ToricError("expected an array of integers, got " + v.dump());
  IntVector out;
  for (const auto& c : v) out.push_back(integer_from_json(c));
  return out;
}

json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(integer_to_json(c));
  return out;
}

json rationals_to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(format_rational(c));
  return out;
}

json labels(const FaceLattice& l, const FaceSubset& s) {
  json out = json::array();
  for (FaceId f : s.members()) out.push_back(l.label(f));
  return out;
}

std::string joined(const FaceLattice& l, const FaceSubset& s) {
  if (s.empty()) return "(none)";
  std::string out;
  for (FaceId f : s.members()) out += (out.empty() ? "" : " ") + l.label(f);
  return out;
}

json group_to_json(const DegreeGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(integer_to_json(t));
  return {{"freeRank", g.free_rank}, {"torsion", torsion}};
}

std::string group_text(const DegreeGroup& g, const Ring& ring) {
  if (g.is_zero()) return "0";
  std::string out;
  if (g.free_rank > 0) out = ring.name() + (g.free_rank > 1 ? "^" + std::to_string(g.free_rank) : "");
  for (const auto& t : g.torsion) out += (out.empty() ? "" : " + ") + ("Z/" + t.get_str());
  return out;
}

IntVector parse_int_point(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const Rational r = parse_rational(part);
    if (r.get_den() != 1) throw ToricError("vertex coordinates must be integers: '" + text + "'");
    out.push_back(r.get_num());
  }
  if (out.empty()) throw ToricError("empty point '" + text + "'");
  return out;
}

RatVector parse_rat_point(const std::string& text) {
  RatVector out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_rational(part));
  if (out.empty()) throw ToricError("empty point '" + text + "'");
  return out;
}

FaceId parse_face(const FaceLattice& l, const std::string& text) {
  std::vector<std::size_t> idx;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    const IntVector v = parse_int_point(part);
    const auto& verts = l.polytope().vertices();
    auto it = std::find(verts.begin(), verts.end(), v);
    if (it == verts.end()) throw ToricError(format_point(v) + " is not a vertex");
    idx.push_back(static_cast<std::size_t>(it - verts.begin()));
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const auto f = l.find(idx);
  if (!f) throw ToricError("'" + text + "' is not the vertex set of a face");
  if (*f == l.top()) throw ToricError("'" + text + "' is the whole polytope, not a proper face");
  return *f;
}

unsigned thread_cap() {
  const char* env = std::getenv("TORIC_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw ToricError(std::string("TORIC_THREADS must be a non-negative integer, got '") + env + "'");
  return static_cast<unsigned>(v);
}

struct Common {
  std::string input;
  std::string output;
  bool as_json = false;
  bool timing = false;
  std::optional<std::uint64_t> seed;
};

// Text of the report, either JSON or the human-readable table.
struct Report {
  json results;
  std::string text;
  bool passed = true;
  json suites;
};

Report cmd_faces(const LatticePolytope& p, const std::string& star_arg) {
  const FaceLattice l(p);
  Report r;
  std::ostringstream os;
  json faces = json::array();
  std::vector<std::size_t> fvec(p.dim() + 1, 0);
  os << "dimension " << p.dim() << ", " << l.size() << " faces\n";
  for (const auto& f : l.faces()) {
    ++fvec[f.dim];
    json verts = json::array();
    for (std::size_t v : f.vertices) verts.push_back(vector_to_json(p.vertices()[v]));
    faces.push_back({{"id", f.id}, {"dim", f.dim}, {"label", l.label(f.id)}, {"vertices", verts}});
    os << "  " << std::setw(3) << f.id << "  dim " << f.dim << "  " << l.label(f.id) << '\n';
  }
  json facets = json::array();
  os << "facets:\n";
  for (const auto& f : p.facets()) {
    facets.push_back({{"normal", vector_to_json(f.normal)}, {"offset", integer_to_json(f.offset)}});
    os << "  <x," << format_point(f.normal) << "> + " << f.offset.get_str() << " >= 0\n";
  }
  r.results = {{"dimension", p.dim()}, {"faceCount", l.size()}, {"fVector", fvec}, {"faces", faces}, {"facets", facets}};
  if (!p.discarded_points().empty()) {
    json dropped = json::array();
    for (const auto& v : p.discarded_points()) dropped.push_back(vector_to_json(v));
    r.results["discardedPoints"] = dropped;
  }
  if (!star_arg.empty()) {
    const FaceId a = parse_face(l, star_arg);
    const std::pair<const char*, FaceSubset> rows[] = {{"star", star(l, a)},
                                                       {"closedStar", closed_star(l, a)},
                                                       {"link", link(l, a)},
                                                       {"openAntistar", open_antistar(l, a)},
                                                       {"closedAntistar", closed_antistar(l, a)}};
    json table{{"face", l.label(a)}};
    os << "around " << l.label(a) << ":\n";
    for (const auto& [name, set] : rows) {
      table[name] = labels(l, set);
      os << "  " << std::left << std::setw(15) << name << std::right << ' ' << joined(l, set) << '\n';
    }
    r.results["star"] = table;
  }
  r.text = os.str();
  return r;
}

Report cmd_classify(const LatticePolytope& p, const std::string& kind_arg, const std::string& x_arg) {
  ClassKind kind;
  const char* filter_name;
  const char* complex_name;
  if (kind_arg == "vis") {
    kind = ClassKind::Visibility, filter_name = "Inv", complex_name = "Vis";
  } else if (kind_arg == "frontback") {
    kind = ClassKind::FrontBack, filter_name = "Front", complex_name = "Back";
  } else if (kind_arg == "lowup") {
    kind = ClassKind::LowerUpper, filter_name = "Up", complex_name = "Low";
  } else {
    throw ToricError("unknown kind '" + kind_arg + "' (expected vis, frontback or lowup)");
  }
  const RatVector x = parse_rat_point(x_arg);
  if (x.size() != p.dim()) throw ToricError("point dimension does not match polytope");
  const FaceLattice l(p);
  const auto c = classify(kind, l, x);
  Report r;
  r.results = {{"kind", kind_arg},
               {"x", rationals_to_json(x)},
               {"filterName", filter_name},
               {"complexName", complex_name},
               {"filterSide", labels(l, c.filter_side)},
               {"complexSide", labels(l, c.complex_side)},
               {"boundary", labels(l, c.boundary)}};
  std::ostringstream os;
  os << to_string(kind) << " at " << format_point(x) << '\n'
     << "  " << std::left << std::setw(8) << filter_name << joined(l, c.filter_side) << '\n'
     << "  " << std::setw(8) << complex_name << joined(l, c.complex_side) << '\n'
     << "  " << std::setw(8) << "common" << std::right << joined(l, c.boundary) << '\n';
  r.text = os.str();
  return r;
}

Report cmd_ehrhart(const LatticePolytope& p, int kmax) {
  const auto e = ehrhart_polynomial(p);
  const auto s = splitting_index(p, e);
  const auto rec = reciprocity_check(p, e, kmax);
  Report r;
  json coeffs = json::array(), roots = json::array(), rows = json::array();
  for (const auto& c : e.coefficients()) coeffs.push_back(format_rational(c));
  for (const auto& root : s.roots) roots.push_back(integer_to_json(root));
  std::ostringstream os;
  os << "E(T) coefficients (T^0 first):";
  for (const auto& c : e.coefficients()) os << ' ' << format_rational(c);
  os << "\nintegral roots:";
  if (s.roots.empty()) os << " (none)";
  for (const auto& root : s.roots) os << ' ' << root.get_str();
  os << "\nsplitting index " << s.index << " (first dilate with interior points: " << s.first_interior_dilate
     << ")\n   j  (-1)^n E(-j)  #int(-jP)\n";
  for (const auto& row : rec.rows) {
    rows.push_back({{"j", integer_to_json(row.j)},
                    {"signedValue", format_rational(row.signed_value)},
                    {"interiorCount", integer_to_json(row.interior_count)}});
    os << std::setw(4) << row.j.get_str() << std::setw(14) << format_rational(row.signed_value) << std::setw(10)
       << row.interior_count.get_str() << '\n';
  }
  os << "reciprocity " << (rec.holds ? "holds" : "FAILS") << '\n';
  r.results = {{"coefficients", coeffs},
               {"integralRoots", roots},
               {"splittingIndex", s.index},
               {"firstInteriorDilate", s.first_interior_dilate},
               {"reciprocity", rows},
               {"reciprocityHolds", rec.holds}};
  r.passed = rec.holds;
  r.text = os.str();
  return r;
}

Report cmd_cohomology(const LatticePolytope& p, long twist, const std::string& ring_arg, int margin,
                      std::uint64_t seed, unsigned threads) {
  const Ring ring = Ring::parse(ring_arg);
  const FaceLattice l(p);
  ScanOptions options;
  options.margin = margin;
  options.threads = threads;
  options.seed = seed;
  const auto g = global_cohomology(l, Integer(twist), ring, options);
  Report r;
  json per_degree = json::array(), contributors = json::array();
  std::ostringstream os;
  os << "H^j(X_P; F(" << twist << ")) over " << ring.name() << '\n';
  for (std::size_t i = 0; i < g.total.groups.size(); ++i) {
    const int degree = g.total.lowest_degree + static_cast<int>(i);
    json entry = group_to_json(g.total.groups[i]);
    entry["degree"] = degree;
    per_degree.push_back(entry);
    os << "  H^" << degree << " = " << group_text(g.total.groups[i], ring) << '\n';
  }
  os << "contributors:";
  if (g.contributors.empty()) os << " (none)";
  os << '\n';
  for (const auto& c : g.contributors) {
    json entry = group_to_json(c.group);
    entry["x"] = vector_to_json(c.x);
    entry["degree"] = c.degree;
    contributors.push_back(entry);
    os << "  " << format_point(c.x) << "  H^" << c.degree << " = " << group_text(c.group, ring) << '\n';
  }
  os << "scanned " << g.points_scanned << " points in " << g.sign_classes << " sign classes, box "
     << format_point(IntVector(g.box_lo)) << ".." << format_point(IntVector(g.box_hi)) << '\n'
     << "shell certified: " << (g.shell_certified ? "yes" : "no")
     << ", distant points certified: " << (g.distant_certified ? "yes" : "no") << '\n';
  r.results = {{"twist", twist},
               {"ring", ring.name()},
               {"margin", margin},
               {"perDegree", per_degree},
               {"contributors", contributors},
               {"boxLow", vector_to_json(g.box_lo)},
               {"boxHigh", vector_to_json(g.box_hi)},
               {"pointsScanned", g.points_scanned},
               {"signClasses", g.sign_classes},
               {"shellCertified", g.shell_certified},
               {"distantCertified", g.distant_certified}};
  r.passed = g.shell_certified && g.distant_certified;
  r.text = os.str();
  return r;
}

Report cmd_verify(const LatticePolytope& p, const std::string& suite_arg, std::uint64_t seed, unsigned threads) {
  SuiteOptions options;
  options.seed = seed;
  options.threads = threads;
  const auto checks = run_suite(p, parse_suite(suite_arg), options);
  Report r;
  r.suites = json::array();
  std::ostringstream os;
  for (const auto& c : checks) {
    json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) entry["detail"] = c.detail;
    r.suites.push_back(entry);
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) os << ": " << c.detail;
    os << '\n';
    r.passed = r.passed && c.passed;
  }
  r.results = {{"suite", suite_arg}, {"checks", checks.size()}};
  os << (r.passed ? "all checks passed" : "verification failed") << '\n';
  r.text = os.str();
  return r;
}

}  // namespace

json integer_to_json(const Integer& v) {
  static const Integer limit("9007199254740992");
  if (abs(v) <= limit) return v.fits_slong_p() ? json(v.get_si()) : json(v.get_str());
  return v.get_str();
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

LatticePolytope polytope_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices")) throw ToricError("polytope JSON needs a \"vertices\" array");
  const json& vs = doc.at("vertices");
  if (!vs.is_array() || vs.empty()) throw ToricError("\"vertices\" must be a non-empty array");
  std::vector<IntVector> points;
  for (const auto& v : vs) points.push_back(vector_from_json(v));
  const std::size_t n = points.front().size();
  for (const auto& v : points)
    if (v.size() != n) throw ToricError("vertices have mixed dimensions");
  if (!doc.contains("facets")) return LatticePolytope::build(points);

  const json& fs = doc.at("facets");
  if (!fs.is_array() || fs.empty()) throw ToricError("\"facets\" must be a non-empty array");
  std::vector<Facet> facets;
  for (const auto& f : fs) {
    if (!f.is_object() || !f.contains("normal") || !f.contains("offset"))
      throw ToricError("each facet needs \"normal\" and \"offset\"");
    Facet facet{vector_from_json(f.at("normal")), integer_from_json(f.at("offset"))};
    if (facet.normal.size() != n) throw ToricError("facet normal has the wrong dimension");
    facets.push_back(std::move(facet));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return LatticePolytope::assemble_unchecked(std::move(points), std::move(facets));
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics, Ehrhart theory and sheaf cohomology of lattice polytopes", "toric"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--input", common.input, "polytope JSON file")->required();
    sub->add_option("--output", common.output, "also write the JSON report to this file");
    sub->add_flag("--json", common.as_json, "print the JSON report instead of the table");
    sub->add_flag("--timing", common.timing, "include wall-clock time in the report");
    sub->add_option("--seed", common.seed, "seed for sampled viewpoints and distant points");
  };

  std::string star_arg;
  auto* faces = app.add_subcommand("faces", "list the face lattice");
  add_common(faces);
  faces->add_option("--star", star_arg, "vertices of a proper face, e.g. \"0,0\" or \"0,0;1,0\"");

  std::string kind_arg, x_arg;
  auto* cls = app.add_subcommand("classify", "split the boundary faces seen from a viewpoint");
  add_common(cls);
  cls->add_option("--kind", kind_arg, "vis, frontback or lowup")->required();
  cls->add_option("--x", x_arg, "comma separated coordinates, p/q allowed")->required();

  int kmax = 0;
  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial, roots and reciprocity");
  add_common(ehr);
  ehr->add_option("--kmax", kmax, "reciprocity rows j = 1..kmax (default n + 2)");

  long twist = 0;
  std::string ring_arg = "Z";
  int margin = 2;
  auto* coh = app.add_subcommand("cohomology", "cohomology of the twisted structure sheaf");
  add_common(coh);
  coh->add_option("--twist", twist, "twist k")->required();
  coh->add_option("--ring", ring_arg, "Z, Q or Zp:<p>");
  coh->add_option("--margin", margin, "inflation of the scan box");

  std::string suite_arg = "all";
  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  add_common(ver);
  ver->add_option("--suite", suite_arg, "all, combinatorics, classify, ehrhart or cohomology");

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    const unsigned threads = thread_cap();
    std::ifstream in(common.input, std::ios::binary);
    if (!in) throw ToricError("cannot read '" + common.input + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ToricError(std::string("malformed JSON: ") + e.what());
    }
    const LatticePolytope p = polytope_from_json(doc);

    const auto start = std::chrono::steady_clock::now();
    Report report;
    if (command == "faces") {
      report = cmd_faces(p, star_arg);
    } else if (command == "classify") {
      report = cmd_classify(p, kind_arg, x_arg);
    } else if (command == "ehrhart") {
      report = cmd_ehrhart(p, kmax > 0 ? kmax : static_cast<int>(p.dim()) + 2);
    } else if (command == "cohomology") {
      report = cmd_cohomology(p, twist, ring_arg, margin, common.seed.value_or(ScanOptions{}.seed), threads);
    } else {
      report = cmd_verify(p, suite_arg, common.seed.value_or(SuiteOptions{}.seed), threads);
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;

    json full{{"command", command},
              {"input_digest", fnv1a_hex(text)},
              {"results", report.results},
              {"passed", report.passed}};
    if (common.seed) full["seed"] = *common.seed;
    if (!report.suites.is_null()) full["suites"] = report.suites;
    if (common.timing) full["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    const std::string dumped = full.dump(2) + "\n";

    if (common.as_json)
      out << dumped;
    else
      out << report.text;
    if (!common.output.empty()) {
      std::ofstream file(common.output, std::ios::binary);
      if (!file || !(file << dumped)) throw ToricError("cannot write '" + common.output + "'");
    }
    return report.passed ? kExitOk : kExitFailure;
  } catch (const ToricError& e) {
    err << "toric " << command << ": " << e.what() << '\n';
    const bool scan_failure = std::string(e.what()).rfind("margin too small", 0) == 0;
    return scan_failure ? kExitFailure : kExitInputError;
  } catch (const std::exception& e) {
    err << "toric " << command << ": " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace toric
