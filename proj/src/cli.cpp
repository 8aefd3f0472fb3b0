#include "eiscomp/cli.hpp"

#include <json.hpp>

#include <CLI11.hpp>

#include "eiscomp/euler.hpp"
#include "eiscomp/ghost.hpp"
#include "eiscomp/spectral.hpp"

namespace eiscomp::cli {

namespace {

using json = nlohmann::ordered_json;
using faces::FacesTable;
using levi::Branch;
using levi::FactsRegistry;
using spectral::BoundaryResult;

json weight_json(const Weight& w) { return json(w); }

json class_json(const faces::FaceClass& c) {
  json j;
  j["label"] = c.label.str();
  j["dim"] = c.label.dim();
  j["origin"] = c.origin.str();
  j["levi_degree"] = c.levi_degree;
  j["degree"] = c.total_degree;
  const auto torus = levi::torus_restriction(c.label);
  j["torus"] = torus ? weight_json(*torus) : json();
  j["face_restriction_zero"] = c.face_restriction_zero;
  return j;
}

json table_json(const FacesTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r;
    r["w"] = row.w.str();
    r["length"] = row.length;
    r["dot_weight"] = weight_json(row.dot_weight);
    json entries = json::object();
    for (const auto& [f, classes] : row.entries) {
      json cell = json::array();
      for (const auto& c : classes) cell.push_back(class_json(c));
      entries[faces::face_name(t.faces[f])] = cell;
    }
    r["entries"] = entries;
    rows.push_back(r);
  }
  json j;
  j["command"] = "kostant";
  j["n"] = t.n;
  j["weight"] = weight_json(t.lambda);
  j["rows"] = rows;
  return j;
}

json e2page_json(const spectral::E2Page& page) {
  json cells = json::array();
  for (const auto& [pq, entries] : page.cells) {
    json cell;
    cell["p"] = pq.first;
    cell["q"] = pq.second;
    json labels = json::array();
    for (const auto& e : entries) {
      json l;
      l["label"] = e.display.str();
      l["dim"] = e.dim;
      l["torus"] = e.torus ? weight_json(*e.torus) : json();
      labels.push_back(l);
    }
    cell["labels"] = labels;
    cells.push_back(cell);
  }
  return cells;
}

json boundary_json(const BoundaryResult& r) {
  json j;
  j["command"] = "boundary";
  json e1 = json::array();
  for (const auto& [p, by_q] : r.e1_page.cells)
    for (const auto& [q, classes] : by_q) {
      if (classes.empty()) continue;
      json cell;
      cell["p"] = p;
      cell["q"] = q;
      json labels = json::array();
      for (const auto& c : classes) labels.push_back(class_json(c));
      cell["labels"] = labels;
      e1.push_back(cell);
    }
  j["E1"] = e1;
  j["E2"] = e2page_json(r.e2_page);
  json arrows = json::array();
  for (const auto& a : r.arrows) {
    json aj;
    aj["p"] = a.p;
    aj["q"] = a.q;
    aj["torus"] = a.torus ? weight_json(*a.torus) : json();
    aj["source_dim"] = a.source_dim;
    aj["target_dim"] = a.target_dim;
    aj["feasible"] = a.feasible;
    aj["forced_rank"] = a.forced_rank;
    if (a.forced_rank > 0) aj["forcing_citation"] = a.forcing_citation;
    arrows.push_back(aj);
  }
  j["d2_arrows"] = arrows;
  j["E3"] = e2page_json(r.e3_page);
  if (r.contradiction) {
    const auto& c = *r.contradiction;
    json cj;
    cj["survivor"] = c.survivor.str();
    cj["torus"] = c.torus ? weight_json(*c.torus) : json();
    cj["total_degree"] = c.total_degree;
    cj["constraint"] = "H^" + std::to_string(c.violated.total_degree) +
                       "_boundary = " + std::to_string(c.violated.dim);
    cj["citation"] = c.violated.citation;
    cj["detail"] = c.detail;
    j["contradiction"] = cj;
  } else {
    json bnd = json::array();
    for (const auto& [k, entries] : r.boundary) {
      json deg;
      deg["degree"] = k;
      json labels = json::array();
      for (const auto& e : entries) {
        json l;
        l["label"] = e.display.str();
        l["dim"] = e.dim;
        l["p"] = e.p;
        l["q"] = e.q;
        labels.push_back(l);
      }
      deg["labels"] = labels;
      bnd.push_back(deg);
    }
    j["h_boundary"] = bnd;
  }
  j["notes"] = r.notes;
  return j;
}

json graded_json(const levi::GradedSum& g) {
  json out = json::array();
  for (const auto& [q, labels] : g.cells()) {
    json deg;
    deg["degree"] = q;
    json ls = json::array();
    for (const auto& l : labels) ls.push_back(l.str());
    deg["labels"] = ls;
    deg["dim"] = g.dim_at(q);
    out.push_back(deg);
  }
  return out;
}

Branch parse_branch(const std::string& value, const FactsRegistry& reg) {
  if (value == "ghost") return Branch::Ghost;
  if (value == "no-ghost") return Branch::NoGhost;
  if (value.empty()) return reg.default_branch();
  throw CLI::ValidationError("--branch must be 'ghost' or 'no-ghost'");
}

void emit(std::ostream& out, const std::string& format, const std::string& text,
          const json& j) {
  if (format == "struct")
    out << j.dump(2) << "\n";
  else
    out << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact boundary/Eisenstein cohomology calculator for GL_n(Z), n <= 4"};
  app.require_subcommand(1);

  std::string weight_arg, face_arg, branch_arg, format = "text";
  std::string family_arg, weights_arg;
  int n = 0, count = 3;
  std::vector<std::string> constraint_args;
  bool no_default_constraints = false;

  auto add_common = [&](CLI::App* cmd, bool needs_n, bool needs_weight) {
    if (needs_n) cmd->add_option("--n", n, "group size n")->required();
    if (needs_weight)
      cmd->add_option("--weight", weight_arg, "highest weight, e.g. 1,1,0")->required();
    cmd->add_option("--format", format, "text or struct")
        ->check(CLI::IsMember({"text", "struct"}));
  };

  CLI::App* kostant = app.add_subcommand("kostant", "Weyl table with per-face Kostant classes");
  add_common(kostant, true, true);
  kostant->add_option("--branch", branch_arg, "ghost or no-ghost");

  CLI::App* faces_cmd = app.add_subcommand("faces", "cohomology of boundary faces");
  add_common(faces_cmd, true, true);
  faces_cmd->add_option("--face", face_arg, "face alias (P_13, Q_0, B) or parts (2,1,1)");
  faces_cmd->add_option("--branch", branch_arg, "ghost or no-ghost");

  CLI::App* euler_cmd = app.add_subcommand("euler", "homological Euler characteristic");
  add_common(euler_cmd, true, true);

  CLI::App* table1_cmd = app.add_subcommand("table1", "torsion classes of GL_4(Z)");
  add_common(table1_cmd, false, false);

  CLI::App* boundary_cmd = app.add_subcommand("boundary", "boundary spectral sequence");
  add_common(boundary_cmd, true, true);
  boundary_cmd->add_option("--branch", branch_arg, "ghost or no-ghost");
  boundary_cmd->add_option("--constraint", constraint_args,
                           "total-degree constraint, e.g. H4=0 (repeatable)");
  boundary_cmd->add_flag("--no-default-constraints", no_default_constraints,
                         "drop the built-in H^4 = 0 constraint for GL_4 det");

  CLI::App* pgh_cmd = app.add_subcommand("pgh", "potentially ghost classes of GL_3(Z)");
  pgh_cmd->add_option("--weight", weight_arg, "dominant GL_3 weight")->required();
  pgh_cmd->add_option("--format", format, "text or struct")
      ->check(CLI::IsMember({"text", "struct"}));

  CLI::App* scan_cmd = app.add_subcommand("pgh-scan", "potentially ghost scan over a family");
  scan_cmd->add_option("--family", family_arg, "odd-sym-det or odd-sym-dual");
  scan_cmd->add_option("--count", count, "family size");
  scan_cmd->add_option("--weights", weights_arg, "explicit list, e.g. 1,1,0;2,1,1");
  scan_cmd->add_option("--format", format, "text or struct")
      ->check(CLI::IsMember({"text", "struct"}));

  CLI::App* prove_cmd = app.add_subcommand("ghost-prove", "replay the ghost-class deduction");
  prove_cmd->add_option("--format", format, "text or struct")
      ->check(CLI::IsMember({"text", "struct"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const FactsRegistry reg = FactsRegistry::load_default();
    const Branch branch = parse_branch(branch_arg, reg);

    if (kostant->parsed()) {
      const Weight lambda = parse_weight(weight_arg);
      const FacesTable t = faces::all_faces_table(reg, n, lambda, branch);
      emit(out, format, faces::render_table(t), table_json(t));
      return 0;
    }
    if (faces_cmd->parsed()) {
      const Weight lambda = parse_weight(weight_arg);
      if (face_arg.empty()) {
        json j;
        j["command"] = "faces";
        j["n"] = n;
        j["weight"] = weight_json(lambda);
        json all = json::array();
        for (const auto& face : faces::standard_faces(n)) {
          const auto coh = faces::face_cohomology(reg, n, lambda, face, branch);
          json f;
          f["face"] = faces::face_name(face);
          f["composition"] = face.parts();
          json degs = json::array();
          for (const auto& [q, classes] : coh.by_degree) {
            json d;
            d["degree"] = q;
            json cs = json::array();
            for (const auto& c : classes) cs.push_back(class_json(c));
            d["classes"] = cs;
            degs.push_back(d);
          }
          f["cohomology"] = degs;
          all.push_back(f);
        }
        j["faces"] = all;
        emit(out, format, faces::render_face_displays(reg, n, lambda, branch), j);
        return 0;
      }
      const faces::Composition face = faces::parse_face(face_arg, n);
      const auto coh = faces::face_cohomology(reg, n, lambda, face, branch);
      std::string text = "H^q(" + faces::face_name(face) + ", V_" + weight_str(lambda) + "):\n";
      if (coh.by_degree.empty()) text += "  0\n";
      json degs = json::array();
      for (const auto& [q, classes] : coh.by_degree) {
        text += "  q=" + std::to_string(q) + ":";
        json d;
        d["degree"] = q;
        json cs = json::array();
        for (const auto& c : classes) {
          text += " " + c.label.str();
          if (c.label.dim() > 1) text += " (dim " + std::to_string(c.label.dim()) + ")";
          cs.push_back(class_json(c));
        }
        d["classes"] = cs;
        degs.push_back(d);
        text += "\n";
      }
      json j;
      j["command"] = "faces";
      j["n"] = n;
      j["weight"] = weight_json(lambda);
      j["face"] = faces::face_name(face);
      j["composition"] = face.parts();
      j["cohomology"] = degs;
      emit(out, format, text, j);
      return 0;
    }
    if (euler_cmd->parsed()) {
      const Weight lambda = parse_weight(weight_arg);
      if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("weight length must equal n");
      const Rational chi = euler::euler_characteristic(n, lambda);
      json j;
      j["command"] = "euler";
      j["n"] = n;
      j["weight"] = weight_json(lambda);
      j["chi"] = chi.str();
      emit(out, format, chi.str() + "\n", j);
      return 0;
    }
    if (table1_cmd->parsed()) {
      const euler::Table1 t = euler::table1();
      json rows = json::array();
      for (const auto& row : t.rows) {
        json r;
        r["polynomial"] = row.cls.str();
        r["centralizer"] = row.cent.kind;
        r["det"] = row.det;
        r["chi"] = row.cent.chi.str();
        r["res"] = row.res;
        r["product"] = row.product.str();
        rows.push_back(r);
      }
      json zero = json::array();
      for (const auto& [cls, cent] : t.zero_rows) {
        json r;
        r["polynomial"] = cls.str();
        r["rationale"] = cent.rationale;
        zero.push_back(r);
      }
      json j;
      j["command"] = "table1";
      j["rows"] = rows;
      j["zero_rows"] = zero;
      j["chi_trivial"] = t.total_trivial.str();
      j["chi_det"] = t.total_det.str();
      emit(out, format, euler::render_table1(t), j);
      return 0;
    }
    if (boundary_cmd->parsed()) {
      const Weight lambda = parse_weight(weight_arg);
      std::vector<spectral::Constraint> constraints;
      if (n == 4 && lambda == Weight{1, 1, 1, 1} && !no_default_constraints)
        constraints.push_back({4, 0,
                               "H^4_boundary(GL_4(Z), det) = 0 (Poincare duality and the "
                               "vanishing of H^4(SL_4(Z), Q))"});
      for (const std::string& c : constraint_args) {
        // "H4=0"
        if (c.size() < 4 || (c[0] != 'H' && c[0] != 'h'))
          throw std::invalid_argument("constraint must look like H4=0");
        const auto eq = c.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("constraint must look like H4=0");
        constraints.push_back({std::stoi(c.substr(1, eq - 1)), std::stoi(c.substr(eq + 1)),
                               "user-supplied constraint " + c});
      }
      const BoundaryResult r = spectral::boundary_cohomology(reg, n, lambda, branch, constraints);
      emit(out, format, spectral::render_boundary(r), boundary_json(r));
      return 0;
    }
    if (pgh_cmd->parsed()) {
      const Weight lambda = parse_weight(weight_arg);
      const levi::GradedSum pgh = ghost::potentially_ghost(lambda);
      std::string text;
      if (!pgh.has(2)) text += "pGh^2(GL_3(Z), V_" + weight_str(lambda) + ") = 0\n";
      for (const auto& [q, labels] : pgh.cells()) {
        text += "pGh^" + std::to_string(q) + "(GL_3(Z), V_" + weight_str(lambda) + ") =";
        for (const auto& l : labels) text += " " + l.str();
        text += "\n";
      }
      json j;
      j["command"] = "pgh";
      j["weight"] = weight_json(lambda);
      j["spaces"] = graded_json(pgh);
      emit(out, format, text, j);
      return 0;
    }
    if (scan_cmd->parsed()) {
      std::vector<Weight> weights;
      if (!family_arg.empty()) {
        weights = ghost::scan_family(family_arg, count);
      } else if (!weights_arg.empty()) {
        std::size_t pos = 0;
        while (pos < weights_arg.size()) {
          std::size_t semi = weights_arg.find(';', pos);
          const std::string tok =
              weights_arg.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
          weights.push_back(parse_weight(tok));
          if (semi == std::string::npos) break;
          pos = semi + 1;
        }
      } else {
        throw std::invalid_argument("pgh-scan needs --family or --weights");
      }
      const auto rows = ghost::pgh_scan(weights);
      std::string text;
      json jrows = json::array();
      for (const auto& row : rows) {
        text += weight_str(row.lambda) + ": ";
        if (!row.pgh.has(2)) text += "pGh^2 = 0";
        for (const auto& [q, labels] : row.pgh.cells()) {
          text += "pGh^" + std::to_string(q) + " =";
          for (const auto& l : labels) text += " " + l.str();
        }
        text += "\n";
        json r;
        r["weight"] = weight_json(row.lambda);
        r["pgh"] = graded_json(row.pgh);
        jrows.push_back(r);
      }
      json j;
      j["command"] = "pgh-scan";
      j["rows"] = jrows;
      emit(out, format, text, j);
      return 0;
    }
    if (prove_cmd->parsed()) {
      const ghost::Transcript t = ghost::prove_ghost(reg);
      json steps = json::array();
      for (const auto& s : t.steps) {
        json sj;
        sj["id"] = s.id;
        sj["statement"] = s.statement;
        sj["inputs"] = s.inputs;
        sj["rule"] = s.rule;
        sj["citation"] = s.citation;
        steps.push_back(sj);
      }
      json j;
      j["command"] = "ghost-prove";
      j["steps"] = steps;
      j["result"] = t.final_result;
      emit(out, format, t.str(), j);
      return 0;
    }
  } catch (const ghost::TranscriptError& e) {
    err << "contradiction: " << e.what() << "\n";
    return 3;
  } catch (const levi::RegistryMiss& e) {
    err << "registry: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace eiscomp::cli
