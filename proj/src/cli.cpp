#include "pfrigid/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "pfrigid/errors.hpp"
#include "pfrigid/finite_group.hpp"
#include "pfrigid/gl2z.hpp"
#include "pfrigid/mapping_torus.hpp"
#include "pfrigid/presentation.hpp"
#include "pfrigid/quotients.hpp"
#include "pfrigid/zlinalg.hpp"

namespace pfrigid::cli {

namespace {

using json = nlohmann::ordered_json;
using gl2z::Mat2Z;

std::string str(const Int& x) { return x.get_str(); }
std::string str(long x) { return std::to_string(x); }
std::string str(std::size_t x) { return std::to_string(x); }

json int_list(const std::vector<Int>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(str(x));
  return a;
}

json homology_json(const zlinalg::HomologySummary& h) {
  return json{{"b1", str(h.b1)}, {"torsion", int_list(h.torsion)}, {"group", h.to_string()}};
}

json class_json(const gl2z::MatClass& c) {
  json j{{"kind", gl2z::kind_name(c.kind)}};
  j["order"] = c.kind == gl2z::Kind::Elliptic ? json(str(static_cast<long>(c.order))) : json(nullptr);
  return j;
}

json spec_list(const std::vector<fp::GroupSpec>& specs) {
  json a = json::array();
  for (const auto& s : specs) a.push_back(s.id());
  return a;
}

zlinalg::IntMatrix parse_int_matrix(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Int> r;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      const auto b = cell.find_first_not_of(' ');
      const auto e = cell.find_last_not_of(' ');
      if (b == std::string::npos) throw InputError("empty matrix entry in '" + text + "'");
      Int x;
      if (x.set_str(cell.substr(b, e - b + 1), 10) != 0) {
        throw InputError("bad matrix entry '" + cell + "'");
      }
      r.push_back(x);
    }
    if (!rows.empty() && r.size() != rows.front().size()) throw InputError("ragged matrix '" + text + "'");
    rows.push_back(std::move(r));
  }
  if (rows.empty() || rows.front().empty()) throw InputError("empty matrix");
  std::vector<Int> entries;
  for (auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
  return zlinalg::IntMatrix(rows.size(), rows.front().size(), std::move(entries));
}

Int parse_int(const std::string& text, const char* what) {
  Int x;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || x.set_str(t, 10) != 0) throw InputError(std::string("bad integer for ") + what + ": '" + text + "'");
  return x;
}

unsigned catalog_ceiling(const std::optional<unsigned>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PF_CATALOG_MAX")) {
    try {
      const long v = std::stol(env);
      if (v >= 2 && v <= 100000) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("PF_CATALOG_MAX must be an integer >= 2, got '") + env + "'");
  }
  return fp::kDefaultCatalogMax;
}

// Flattens the result document into "key  value" rows.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
    if (scalars) {
      std::string line;
      for (const auto& x : j) {
        if (!line.empty()) line += ", ";
        line += x.is_string() ? x.get<std::string>() : x.dump();
      }
      rows.emplace_back(prefix, line.empty() ? "-" : line);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    }
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else if (j.is_null()) {
    rows.emplace_back(prefix, "-");
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

std::string render_text(const json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", doc["command"].get<std::string>());
  flatten(doc["inputs"], "", rows);
  flatten(doc["result"], "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

struct Options {
  bool json = false;
  std::string mat1, mat2, pres1, pres2, text;
  long depth = torus::kDefaultProfileDepth;
  long bound = 0;
  long exponent = 1;
  std::string trace, det, modulus, target;
  bool count = false;
  std::optional<unsigned> max_order;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Profinite invariants of free-by-cyclic groups F2 x| Z", "pfrigid"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "emit a single JSON document");

  std::map<std::string, std::function<json(json&)>> handlers;
  std::string used;

  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto mat = [](CLI::App* s, std::string& slot, const char* name) {
    s->add_option(name, slot, "matrix a11,a12;a21,a22")->required();
  };
  auto pres = [](CLI::App* s, std::string& slot, const char* name) {
    s->add_option(name, slot, "presentation 'gens | relators'")->required();
  };

  auto* c = sub("classify", "elliptic / parabolic / hyperbolic");
  mat(c, o.mat1, "MAT");
  handlers["classify"] = [&](json& in) {
    const Mat2Z m = gl2z::parse_matrix(o.mat1);
    in["matrix"] = gl2z::format_matrix(m);
    json r = class_json(gl2z::classify(m));
    r["trace"] = str(m.trace());
    r["det"] = str(static_cast<long>(m.det()));
    return r;
  };

  c = sub("h1", "first homology of the mapping torus");
  mat(c, o.mat1, "MAT");
  handlers["h1"] = [&](json& in) {
    const Mat2Z m = gl2z::parse_matrix(o.mat1);
    in["matrix"] = gl2z::format_matrix(m);
    return homology_json(torus::h1(m));
  };

  c = sub("profile", "b1 of the mapping tori of phi^r, r = 1..depth");
  mat(c, o.mat1, "MAT");
  c->add_option("--depth", o.depth, "largest power")->capture_default_str();
  handlers["profile"] = [&](json& in) {
    const Mat2Z m = gl2z::parse_matrix(o.mat1);
    in["matrix"] = gl2z::format_matrix(m);
    in["depth"] = str(o.depth);
    json b = json::array();
    for (auto x : torus::b1_profile(m, o.depth)) b.push_back(str(x));
    return json{{"b1", b}};
  };

  c = sub("fingerprint", "det, trace, H1, type and b1 profile");
  mat(c, o.mat1, "MAT");
  c->add_option("--depth", o.depth, "profile depth (>= 12)")->capture_default_str();
  handlers["fingerprint"] = [&](json& in) {
    const Mat2Z m = gl2z::parse_matrix(o.mat1);
    in["matrix"] = gl2z::format_matrix(m);
    in["depth"] = str(o.depth);
    const auto f = torus::fingerprint(m, o.depth);
    json b = json::array();
    for (auto x : f.b1_profile) b.push_back(str(x));
    return json{{"det", str(static_cast<long>(f.det))},
                {"trace", str(f.trace)},
                {"h1", homology_json(f.h1)},
                {"class", class_json(f.matrix_class)},
                {"b1_profile", b}};
  };

  c = sub("compatible", "necessary conditions for isomorphic profinite completions");
  mat(c, o.mat1, "MAT1");
  mat(c, o.mat2, "MAT2");
  handlers["compatible"] = [&](json& in) {
    const Mat2Z a = gl2z::parse_matrix(o.mat1), b = gl2z::parse_matrix(o.mat2);
    in["first"] = gl2z::format_matrix(a);
    in["second"] = gl2z::format_matrix(b);
    const auto v = torus::completion_compatible(a, b);
    json r{{"verdict", v.distinguished ? "distinguished" : "compatible"}};
    r["reason"] = v.distinguished ? json(v.reason) : json(nullptr);
    return r;
  };

  c = sub("identify", "figure-eight / trefoil / gieseking when H1 = Z");
  mat(c, o.mat1, "MAT");
  handlers["identify"] = [&](json& in) {
    const Mat2Z m = gl2z::parse_matrix(o.mat1);
    in["matrix"] = gl2z::format_matrix(m);
    return json{{"identity", torus::identity_name(torus::identify_b1_one(m))}};
  };

  c = sub("conj", "conjugacy in GL(2,Z)");
  mat(c, o.mat1, "MAT1");
  mat(c, o.mat2, "MAT2");
  handlers["conj"] = [&](json& in) {
    const Mat2Z a = gl2z::parse_matrix(o.mat1), b = gl2z::parse_matrix(o.mat2);
    in["first"] = gl2z::format_matrix(a);
    in["second"] = gl2z::format_matrix(b);
    const auto v = gl2z::is_conjugate_z(a, b);
    json r{{"conjugate", v.conjugate}};
    r["witness"] = v.witness ? json(gl2z::format_matrix(*v.witness)) : json(nullptr);
    return r;
  };

  c = sub("conjmod", "conjugacy in GL(2,Z/m)");
  mat(c, o.mat1, "MAT1");
  mat(c, o.mat2, "MAT2");
  c->add_option("--modulus", o.modulus, "m >= 2")->required();
  handlers["conjmod"] = [&](json& in) {
    const Mat2Z a = gl2z::parse_matrix(o.mat1), b = gl2z::parse_matrix(o.mat2);
    const Int m = parse_int(o.modulus, "--modulus");
    in["first"] = gl2z::format_matrix(a);
    in["second"] = gl2z::format_matrix(b);
    in["modulus"] = str(m);
    const auto v = gl2z::is_conjugate_mod(a, b, m);
    json r{{"conjugate", v.conjugate}};
    if (v.witness) {
      const auto& w = *v.witness;
      r["witness"] = str(w[0]) + "," + str(w[1]) + ";" + str(w[2]) + "," + str(w[3]);
    } else {
      r["witness"] = nullptr;
    }
    return r;
  };

  c = sub("localconj", "conjugacy in GL(2,Z/m) for every 2 <= m <= bound");
  mat(c, o.mat1, "MAT1");
  mat(c, o.mat2, "MAT2");
  c->add_option("--bound", o.bound, "largest modulus")->required();
  handlers["localconj"] = [&](json& in) {
    const Mat2Z a = gl2z::parse_matrix(o.mat1), b = gl2z::parse_matrix(o.mat2);
    in["first"] = gl2z::format_matrix(a);
    in["second"] = gl2z::format_matrix(b);
    in["bound"] = str(o.bound);
    const auto rep = gl2z::local_conjugacy(a, b, o.bound);
    json f = json::array();
    for (long m : rep.failures) f.push_back(str(m));
    return json{{"all_pass", rep.all_pass()}, {"failures", f}};
  };

  c = sub("census", "GL(2,Z) conjugacy classes with given trace and determinant");
  c->add_option("--tr", o.trace, "trace")->required();
  c->add_option("--det", o.det, "determinant, 1 or -1")->required();
  handlers["census"] = [&](json& in) {
    const Int tr = parse_int(o.trace, "--tr");
    const Int det = parse_int(o.det, "--det");
    in["trace"] = str(tr);
    in["det"] = str(det);
    if (det != 1 && det != -1) throw NotUnimodular("determinant must be 1 or -1");
    const auto classes = gl2z::enumerate_classes(tr, static_cast<int>(det.get_si()));
    json list = json::array();
    for (const auto& m : classes) {
      list.push_back(json{{"matrix", gl2z::format_matrix(m)}, {"class", gl2z::classify(m).to_string()}});
    }
    return json{{"count", str(classes.size())}, {"classes", list}};
  };

  c = sub("power", "exact matrix power");
  mat(c, o.mat1, "MAT");
  c->add_option("--exp", o.exponent, "exponent (may be negative)")->required();
  handlers["power"] = [&](json& in) {
    const Mat2Z m = gl2z::parse_matrix(o.mat1);
    in["matrix"] = gl2z::format_matrix(m);
    in["exp"] = str(o.exponent);
    return json{{"matrix", gl2z::format_matrix(gl2z::power(m, o.exponent))}};
  };

  c = sub("nielsen", "word in R, L, S, E with product MAT");
  mat(c, o.mat1, "MAT");
  handlers["nielsen"] = [&](json& in) {
    const Mat2Z m = gl2z::parse_matrix(o.mat1);
    in["matrix"] = gl2z::format_matrix(m);
    const auto w = gl2z::nielsen_decompose(m);
    return json{{"word", gl2z::format_word(w)}, {"length", str(w.size())}};
  };

  c = sub("present", "presentation of the mapping torus");
  mat(c, o.mat1, "MAT");
  handlers["present"] = [&](json& in) {
    const Mat2Z m = gl2z::parse_matrix(o.mat1);
    in["matrix"] = gl2z::format_matrix(m);
    const auto p = torus::presentation_of(m);
    return json{{"presentation", p.to_string()}, {"abelianization", homology_json(fp::abelianization(p))}};
  };

  c = sub("snf", "Smith normal form of an integer matrix 'r1c1,r1c2;r2c1,...'");
  c->add_option("MATRIX", o.text, "integer matrix")->required();
  handlers["snf"] = [&](json& in) {
    const auto a = parse_int_matrix(o.text);
    in["matrix"] = a.to_string();
    const auto s = zlinalg::smith_normal_form(a);
    return json{{"d", s.d.to_string()},
                {"u", s.u.to_string()},
                {"v", s.v.to_string()},
                {"cokernel", homology_json(zlinalg::cokernel_invariants(a))}};
  };

  c = sub("abel", "abelianization of a presentation");
  pres(c, o.pres1, "PRES");
  handlers["abel"] = [&](json& in) {
    const auto p = fp::parse_presentation(o.pres1);
    in["presentation"] = p.to_string();
    return homology_json(fp::abelianization(p));
  };

  c = sub("epi", "epimorphisms onto a catalog group");
  pres(c, o.pres1, "PRES");
  c->add_option("--target", o.target, "family:parameter, e.g. dihedral:10")->required();
  c->add_flag("--count", o.count, "count all epimorphisms");
  handlers["epi"] = [&](json& in) {
    const auto p = fp::parse_presentation(o.pres1);
    const auto spec = fp::GroupSpec::parse(o.target);
    in["presentation"] = p.to_string();
    in["target"] = spec.id();
    const auto g = fp::build_catalog_group(spec);
    json r{{"order", str(g.order())}};
    if (o.count) {
      const auto s = fp::epimorphism_count(p, g);
      r["exists"] = s.count > 0;
      r["count"] = std::to_string(s.count);
    } else {
      r["exists"] = fp::has_epimorphism(p, g);
    }
    return r;
  };

  c = sub("quotients", "catalog groups that are quotients of PRES");
  pres(c, o.pres1, "PRES");
  c->add_option("--max-order", o.max_order, "catalog ceiling (default 60 or PF_CATALOG_MAX)");
  handlers["quotients"] = [&](json& in) {
    const auto p = fp::parse_presentation(o.pres1);
    const unsigned ceiling = catalog_ceiling(o.max_order);
    in["presentation"] = p.to_string();
    in["max_order"] = std::to_string(ceiling);
    const auto catalog = fp::default_catalog(ceiling);
    const auto f = fp::quotient_fingerprint(p, catalog);
    return json{{"catalog", f.catalog_version}, {"quotients", spec_list(f.members)}};
  };

  c = sub("compare", "symmetric difference of quotient fingerprints");
  pres(c, o.pres1, "PRES1");
  pres(c, o.pres2, "PRES2");
  c->add_option("--max-order", o.max_order, "catalog ceiling (default 60 or PF_CATALOG_MAX)");
  handlers["compare"] = [&](json& in) {
    const auto p = fp::parse_presentation(o.pres1);
    const auto q = fp::parse_presentation(o.pres2);
    const unsigned ceiling = catalog_ceiling(o.max_order);
    in["first"] = p.to_string();
    in["second"] = q.to_string();
    in["max_order"] = std::to_string(ceiling);
    const auto catalog = fp::default_catalog(ceiling);
    const auto d = fp::compare_fingerprints(fp::quotient_fingerprint(p, catalog),
                                            fp::quotient_fingerprint(q, catalog));
    json r{{"catalog", catalog.version},
           {"distinguished", !d.empty()},
           {"only_first", spec_list(d.only_first)},
           {"only_second", spec_list(d.only_second)},
           {"difference", spec_list(d.symmetric_difference)}};
    r["min_order"] = d.empty() ? json(nullptr)
                               : json(std::to_string(d.symmetric_difference.front().expected_order()));
    return r;
  };

  for (auto* s : app.get_subcommands({})) {
    const std::string name = s->get_name();
    s->callback([&used, name] { used = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  json doc;
  doc["command"] = used;
  doc["inputs"] = json::object();
  try {
    doc["result"] = handlers.at(used)(doc["inputs"]);
    doc["version"] = json{{"tool", kToolVersion},
                          {"catalog", fp::catalog_version(catalog_ceiling(o.max_order))}};
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << render_text(doc);
  }
  return 0;
}

}  // namespace pfrigid::cli
