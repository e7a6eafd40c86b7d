#include "betticone/cli.hpp"

#include "betticone/bigraded.hpp"
#include "betticone/bs_cone.hpp"
#include "betticone/error.hpp"
#include "betticone/es_construct.hpp"
#include "betticone/json_io.hpp"
#include "betticone/local_cone.hpp"
#include "betticone/module_engine.hpp"
#include "betticone/ray_enumeration.hpp"
#include "betticone/tables.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace betticone {

namespace {

template <class Range, class F>
std::string joined(const Range& r, const std::string& sep, F&& fmt) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : r) {
    if (!first) os << sep;
    first = false;
    os << fmt(v);
  }
  return os.str();
}

std::string int_tuple(const std::vector<int>& v) {
  return "(" + joined(v, ",", [](int x) { return std::to_string(x); }) + ")";
}

std::string rational_tuple(const std::vector<Rational>& v) {
  return "(" + joined(v, ",", [](const Rational& x) { return format_rational(x); }) + ")";
}

Json rational_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& x : v) a.push_back(format_rational(x));
  return a;
}

std::string weighted(Bidegree a, std::int64_t b) {
  return to_string(a) + (b == 1 ? "" : "^" + std::to_string(b));
}

void print_bigraded(std::ostream& out, const BigradedBettiTable& t) {
  for (int i = 0; i <= 2; ++i) {
    std::vector<std::string> cells;
    for (const auto& [key, value] : t.entries()) {
      if (key.i == i) cells.push_back(weighted(key.degree, value));
    }
    if (cells.empty()) continue;
    out << "i=" << i << ": " << joined(cells, " ", [](const std::string& s) { return s; })
        << '\n';
  }
}

std::string compact(const BigradedBettiTable& t) {
  std::vector<std::string> parts;
  for (int i = 0; i <= 2; ++i) {
    std::vector<std::string> cells;
    for (const auto& [key, value] : t.entries()) {
      if (key.i == i) cells.push_back(weighted(key.degree, value));
    }
    if (!cells.empty()) {
      parts.push_back("b" + std::to_string(i) + ":" +
                      joined(cells, ",", [](const std::string& s) { return s; }));
    }
  }
  return joined(parts, " ", [](const std::string& s) { return s; });
}

Json certificate_json(const CertificateVerdict& v) {
  Json failures = Json::array();
  for (const CertificateFailure& f : v.failures) {
    Json vertices = Json::array();
    for (const Bidegree& a : f.vertices) vertices.push_back(to_json(a));
    Json jf{{"condition", to_string(f.condition)}, {"vertices", std::move(vertices)}};
    if (!f.counts.empty()) jf["counts"] = f.counts;
    failures.push_back(std::move(jf));
  }
  return {{"verdict", v.certified() ? "CertifiedExtremal" : "Inconclusive"},
          {"failures", std::move(failures)}};
}

void print_certificate(std::ostream& out, const CertificateVerdict& v) {
  out << (v.certified() ? "CERTIFIED EXTREMAL" : "INCONCLUSIVE") << '\n';
  for (const CertificateFailure& f : v.failures) {
    out << "  " << to_string(f.condition) << ':';
    for (std::size_t k = 0; k < f.vertices.size(); ++k) {
      out << ' ' << to_string(f.vertices[k]);
      if (k < f.counts.size()) out << '[' << f.counts[k] << ']';
    }
    out << '\n';
  }
}

void write_dot(const std::string& path, const BigradedBettiTable& t) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  file << to_dot(matching_graph(t));
}

std::string format_part(const DecompositionPart& p) {
  std::vector<std::string> mult;
  for (const Integer& m : p.pure.multiplicities) mult.push_back(m.str());
  return format_rational(p.coefficient) + " × " + int_tuple(p.pure.degrees.values()) + "/(" +
         joined(mult, ",", [](const std::string& s) { return s; }) + ")";
}

std::string format_residual(const GradedBettiTable& t) {
  if (t.empty()) return "0";
  std::vector<std::string> cells;
  for (const auto& [key, value] : t.entries()) {
    cells.push_back("(" + std::to_string(key.i) + "," + std::to_string(key.j) +
                    ")=" + format_rational(value));
  }
  return joined(cells, " ", [](const std::string& s) { return s; });
}

Json decomposition_json(const Decomposition& d) {
  Json parts = Json::array();
  for (const DecompositionPart& p : d.parts) {
    parts.push_back({{"coefficient", format_rational(p.coefficient)}, {"pure", to_json(p.pure)}});
  }
  return {{"kind", "decomposition"},
          {"parts", std::move(parts)},
          {"residual", to_json(d.residual)},
          {"iterations", d.iterations},
          {"complete", d.complete()}};
}

GradedBettiTable read_graded(const std::string& path) {
  const Json j = read_json_file(path);
  if (j.is_object() && j.contains("kind") && j["kind"] == "pure") {
    return pure_from_json(j).to_table();
  }
  return graded_from_json(j);
}

BigradedBettiTable read_bigraded_or_module(const std::string& path) {
  const Json j = read_json_file(path);
  if (j.is_object() && j.contains("kind") && j["kind"] == "bigraded") {
    return bigraded_from_json(j);
  }
  return bigraded_betti(build_module(module_input_from_json(j)));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti tables: pure resolutions, Boij-Soderberg cones, bigraded extremality",
               "betticone"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::function<int()> action;

  auto* hk = app.add_subcommand("hk", "Minimal pure table of a degree sequence");
  std::string hk_degrees;
  hk->add_option("degrees", hk_degrees, "Comma-separated strictly increasing degrees")
      ->required();
  hk->callback([&] {
    action = [&] {
      const PureTable p = hk_pure_table(DegreeSequence(parse_int_list(hk_degrees)));
      if (json) {
        emit(out, to_json(p));
      } else {
        std::vector<std::string> mult;
        for (const Integer& m : p.multiplicities) mult.push_back(m.str());
        out << int_tuple(p.degrees.values()) << " : "
            << joined(mult, " ", [](const std::string& s) { return s; }) << '\n';
      }
      return 0;
    };
  });

  auto* esp = app.add_subcommand("es-plan", "Twist table and ranks of the pushforward construction");
  std::string es_degrees;
  esp->add_option("degrees", es_degrees, "Comma-separated strictly increasing degrees")
      ->required();
  esp->callback([&] {
    action = [&] {
      const ESPlan plan = es_plan(DegreeSequence(parse_int_list(es_degrees)));
      const TwistTable table = twist_table(plan);
      const PureTable ranks = es_ranks(plan);
      if (json) {
        Json factors = Json::array();
        for (const ProjectiveFactor& f : plan.factors) {
          factors.push_back(
              {{"gap_index", f.gap_index}, {"dimension", f.dimension}, {"twist", f.twist}});
        }
        Json rows = Json::array();
        for (const TwistRow& r : table.rows) {
          rows.push_back({{"t", r.koszul_index},
                          {"ambient", r.ambient_degree},
                          {"twists", r.twists},
                          {"collapsed", !r.survivor}});
        }
        emit(out, {{"kind", "es_plan"},
                   {"degrees", plan.degrees.values()},
                   {"shift", plan.shift},
                   {"gaps", plan.gaps},
                   {"factors", std::move(factors)},
                   {"rows", std::move(rows)},
                   {"ranks", to_json(ranks)}});
        return 0;
      }
      std::vector<std::string> header{"Spec(S')"};
      for (const ProjectiveFactor& f : plan.factors) {
        header.push_back("P^" + std::to_string(f.dimension));
      }
      std::vector<std::size_t> width;
      for (const std::string& h : header) width.push_back(std::max<std::size_t>(h.size(), 3));
      auto line = [&](const std::vector<std::string>& cells, bool star) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << cells[c];
        }
        out << (star ? "  *" : "") << '\n';
      };
      line(header, false);
      for (const TwistRow& r : table.rows) {
        std::vector<std::string> cells{std::to_string(r.ambient_degree)};
        for (int t : r.twists) cells.push_back(std::to_string(t));
        line(cells, !r.survivor);
      }
      std::vector<std::string> mult;
      for (const Integer& m : ranks.multiplicities) mult.push_back(m.str());
      out << "ranks " << int_tuple(ranks.degrees.values()) << " : "
          << joined(mult, " ", [](const std::string& s) { return s; }) << '\n';
      return 0;
    };
  });

  auto* dec = app.add_subcommand("decompose", "Greedy pure-table decomposition of a graded table");
  std::string dec_path;
  dec->add_option("table", dec_path, "JSON file (kind graded or pure)")->required();
  dec->callback([&] {
    action = [&] {
      const GradedBettiTable t = read_graded(dec_path);
      auto report = [&](const Decomposition& d) {
        if (json) {
          emit(out, decomposition_json(d));
        } else {
          for (const DecompositionPart& p : d.parts) out << format_part(p) << '\n';
          out << "residual: " << format_residual(d.residual) << '\n';
        }
      };
      try {
        const Decomposition d = decompose_graded(t);
        report(d);
        return d.complete() ? 0 : 1;
      } catch (const DecompositionStuck& stuck) {
        report(stuck.partial());
        err << "error: " << stuck.what() << '\n';
        return 1;
      }
    };
  });

  auto* local = app.add_subcommand("local", "Ungraded Betti vectors over a regular local ring");
  local->require_subcommand(1);

  auto* lcheck = local->add_subcommand("check", "Cone membership of a Betti vector");
  std::string lcheck_vec;
  lcheck->add_option("vector", lcheck_vec, "Comma-separated rationals")->required();
  lcheck->callback([&] {
    action = [&] {
      const LocalBettiVector v{parse_rational_list(lcheck_vec)};
      const LocalVerdict verdict = is_in_local_cone(v);
      std::optional<std::vector<Rational>> coeffs;
      if (verdict.alternating_sum == 0) coeffs = local_ray_coefficients(v);
      if (json) {
        Json j{{"kind", "local_verdict"},
               {"verdict", to_string(verdict.kind)},
               {"alternating_sum", format_rational(verdict.alternating_sum)},
               {"partial_sums", rational_array(verdict.partial_sums)}};
        if (coeffs) j["coefficients"] = rational_array(*coeffs);
        emit(out, j);
      } else if (coeffs) {
        out << to_string(verdict.kind) << " c=" << rational_tuple(*coeffs) << '\n';
      } else {
        out << to_string(verdict.kind)
            << " alternating_sum=" << format_rational(verdict.alternating_sum) << '\n';
      }
      return 0;
    };
  });

  auto* lcoeffs = local->add_subcommand("coeffs", "Coordinates in the rays e_i + e_{i+1}");
  std::string lcoeffs_vec;
  lcoeffs->add_option("vector", lcoeffs_vec, "Comma-separated rationals")->required();
  lcoeffs->callback([&] {
    action = [&] {
      const auto c = local_ray_coefficients(LocalBettiVector{parse_rational_list(lcoeffs_vec)});
      if (json) {
        emit(out, {{"kind", "local_coefficients"}, {"coefficients", rational_array(c)}});
      } else {
        out << "c=" << rational_tuple(c) << '\n';
      }
      return 0;
    };
  });

  auto* llimit = local->add_subcommand("limit", "Normalized pure table approaching a ray");
  int li = 0;
  int lj = 2;
  int ln = 2;
  llimit->add_option("--i", li, "Ray index")->required();
  llimit->add_option("--j", lj, "Spacing parameter (>= 2)")->required();
  llimit->add_option("--n", ln, "Ring dimension")->required();
  llimit->callback([&] {
    action = [&] {
      const LocalBettiVector v = limit_table(li, lj, ln);
      const Rational dist = sup_distance(v, LocalRay{li}.materialize(ln));
      if (json) {
        emit(out, {{"kind", "local_limit"},
                   {"i", li},
                   {"j", lj},
                   {"n", ln},
                   {"vector", rational_array(v.entries)},
                   {"sup_distance", format_rational(dist)}});
      } else {
        out << rational_tuple(v.entries) << " sup_distance=" << format_rational(dist) << '\n';
      }
      return 0;
    };
  });

  auto* big = app.add_subcommand("bigraded", "Bigraded Betti tables over k[x,y]");
  big->require_subcommand(1);

  auto* bcheck = big->add_subcommand("check", "Matching-graph extremality certificate");
  std::string bcheck_path;
  std::string bcheck_dot;
  bcheck->add_option("table", bcheck_path, "JSON file (bigraded table or module)")->required();
  bcheck->add_option("--dot", bcheck_dot, "Write the matching graph in DOT format");
  bcheck->callback([&] {
    action = [&] {
      const BigradedBettiTable t = read_bigraded_or_module(bcheck_path);
      const CertificateVerdict v = check_extremality_certificate(t);
      if (!bcheck_dot.empty()) write_dot(bcheck_dot, t);
      if (json) {
        emit(out, certificate_json(v));
      } else {
        print_certificate(out, v);
      }
      return 0;
    };
  });

  auto* brays = big->add_subcommand("rays", "Certified extremal rays in a box");
  std::string brays_box = "3,3";
  brays->add_option("--box", brays_box, "Upper corner B1,B2")->capture_default_str();
  brays->callback([&] {
    action = [&] {
      const std::vector<int> b = parse_int_list(brays_box);
      if (b.size() != 2) throw Error(ErrorCode::InvalidArgument, "--box expects B1,B2");
      const RayEnumeration e = enumerate_box_rays({b[0], b[1]});
      if (json) {
        Json rays = Json::array();
        for (const BoxRay& r : e.rays) {
          rays.push_back({{"table", to_json(r.table)},
                          {"witness", r.witness},
                          {"monomial", r.from_monomial},
                          {"catalogue", r.from_catalogue}});
        }
        emit(out, {{"kind", "box_rays"},
                   {"box", b},
                   {"count", e.rays.size()},
                   {"monomial", e.monomial_rays},
                   {"catalogue_only", e.catalogue_only_rays},
                   {"up_to_swap", e.swap_classes},
                   {"modules_examined", e.modules_examined},
                   {"rays", std::move(rays)}});
        return 0;
      }
      for (const BoxRay& r : e.rays) out << compact(r.table) << "  <- " << r.witness << '\n';
      out << "rays: " << e.rays.size() << " (monomial " << e.monomial_rays
          << ", catalogue only " << e.catalogue_only_rays << ", up to swap " << e.swap_classes
          << ", modules examined " << e.modules_examined << ")\n";
      return 0;
    };
  });

  auto* res = app.add_subcommand("resolve", "Bigraded Betti table of a module");
  std::string res_path;
  std::string res_dot;
  bool res_check = false;
  res->add_option("module", res_path, "JSON file (monomial_quotient or presentation)")
      ->required();
  res->add_flag("--check", res_check, "Also run the matching-graph certificate");
  res->add_option("--dot", res_dot, "Write the matching graph in DOT format");
  res->callback([&] {
    action = [&] {
      const FiniteModule m = build_module(module_input_from_json(read_json_file(res_path)));
      const BigradedBettiTable t = bigraded_betti(m);
      std::optional<CertificateVerdict> v;
      if (res_check) v = check_extremality_certificate(t);
      if (!res_dot.empty()) write_dot(res_dot, t);
      if (json) {
        Json j = to_json(t);
        if (v) j["certificate"] = certificate_json(*v);
        emit(out, j);
      } else {
        print_bigraded(out, t);
        if (v) print_certificate(out, *v);
      }
      return 0;
    };
  });

  auto* ver = app.add_subcommand("version", "Print the version");
  ver->callback([&] {
    action = [&] {
      if (json) {
        emit(out, {{"version", kVersion}});
      } else {
        out << "betticone " << kVersion << '\n';
      }
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace betticone
