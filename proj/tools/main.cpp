// kul: command-line front end for the Kuznetsov-lattice library.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "kul/config.hpp"
#include "kul/error.hpp"
#include "kul/expr.hpp"
#include "kul/k3picard.hpp"
#include "kul/lift.hpp"
#include "kul/replay.hpp"

namespace {

using namespace kul;

struct Globals {
  bool json = false;
  std::string config_path;
  std::optional<Config> config;

  const Config* cfg() const { return config ? &*config : nullptr; }
  long box(std::optional<long> flag) const {
    if (flag) return *flag;
    if (config && config->box) return *config->box;
    return default_box;
  }
};

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::optional<IntMatrix> gram_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_gram(text);
}

// Accepts "a b" as two arguments or "a,b" as one.
IntVector pair_argument(const std::vector<std::string>& args) {
  std::vector<std::string> parts;
  for (const std::string& a : args) {
    std::stringstream in(a);
    std::string item;
    while (std::getline(in, item, ',')) parts.push_back(item);
  }
  if (parts.size() != 2) throw InputError("expected two integer coordinates");
  IntVector out;
  for (const std::string& p : parts) {
    const Rational q = parse_rational(p);
    if (!is_integer(q)) throw InputError("coordinates must be integers: " + p);
    out.push_back(q.get_num());
  }
  return out;
}

std::optional<KuBasis> basis_on(const VarietyModel& model) {
  switch (model.kind()) {
    case VarietyKind::QuarticDoubleSolid: return mu_basis(model);
    case VarietyKind::GM3fold: return kappa_basis(model);
    case VarietyKind::GM4fold: return lambda_basis(model);
    default: return std::nullopt;
  }
}

KuBasis basis_named(const std::string& name) {
  if (name == "mu") return mu_basis(make_variety_model(VarietyKind::QuarticDoubleSolid));
  if (name == "kappa") return kappa_basis(make_variety_model(VarietyKind::GM3fold));
  if (name == "lambda") return lambda_basis(make_variety_model(VarietyKind::GM4fold));
  throw InputError("unknown basis " + name + " (expected mu, kappa or lambda)");
}

std::string vec_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

std::string gram_text(const IntMatrix& m) { return to_json(m).dump(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice computations for Kuznetsov components of branched double covers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--config", g.config_path, "JSON file with variety and setup definitions")
      ->envname("KU_LATTICE_CONFIG");

  // euler
  std::string variety, gram_text_opt, expr_e, expr_f;
  auto* euler = app.add_subcommand("euler", "Euler pairing chi(E, F) by Hirzebruch-Riemann-Roch");
  euler->add_option("--variety", variety, "Variety name")->required();
  euler->add_option("--gram", gram_text_opt, "Picard Gram matrix of a K3, row-major (e.g. 4,1,1,-2)");
  euler->add_option("E", expr_e, "Class expression")->required();
  euler->add_option("F", expr_f, "Class expression")->required();

  // chern
  std::string expr;
  auto* chern = app.add_subcommand("chern", "Chern character of a class expression");
  chern->add_option("--variety", variety, "Variety name")->required();
  chern->add_option("--gram", gram_text_opt, "Picard Gram matrix of a K3");
  chern->add_option("class", expr, "Class expression")->required();

  // phi
  std::string setup_name;
  bool trace = false;
  auto* phi = app.add_subcommand("phi", "Push a source class through the cover");
  phi->add_option("--setup", setup_name, "qds, qds-line, gm3, gm4 or a configured name")->required();
  phi->add_option("--gram", gram_text_opt, "Picard Gram matrix of the branch K3");
  phi->add_flag("--trace", trace, "Show the intermediate classes");
  phi->add_option("class", expr, "Class expression on the source")->required();

  // image
  std::vector<std::string> member;
  auto* image = app.add_subcommand("image", "Image and kernel lattices of the pushforward");
  image->add_option("--setup", setup_name, "Setup name")->required();
  image->add_option("--gram", gram_text_opt, "Picard Gram matrix of the branch K3");
  image->add_option("--member", member, "Test membership of a target class (a,b)");

  // lift
  std::string fano;
  std::vector<std::string> coords;
  std::optional<long> box;
  bool brute = false;
  auto* lift = app.add_subcommand("lift", "Explicit lift w of v with the wall-inequality verdict");
  lift->add_option("--fano", fano, "qds or gm3")->required();
  lift->add_option("--box", box, "Search box for --brute-force");
  lift->add_flag("--brute-force", brute, "Also enumerate lifts in the box");
  lift->add_option("v", coords, "Target coordinates")->required()->expected(1, 2);

  // lift-all
  auto* lift_all = app.add_subcommand("lift-all", "Wall inequality for every lift of v");
  lift_all->add_option("--setup", setup_name, "Setup name")->required();
  lift_all->add_option("--gram", gram_text_opt, "Picard Gram matrix of the branch K3");
  lift_all->add_option("--box", box, "Search box when the kernel is not negative definite");
  lift_all->add_option("v", coords, "Target coordinates")->required()->expected(1, 2);

  // lattice-check
  std::string family, lattice;
  auto* lattice_check = app.add_subcommand("lattice-check", "Admissibility of a rank-2 Picard lattice");
  lattice_check->add_option("--family", family, "10-x-2, 10-5-0, 10-x-4 or quartic-line (default: inferred)");
  lattice_check->add_option("gram", lattice, "Gram matrix, row-major (e.g. 10,6,6,2)")->required();

  // dim
  std::string basis_name, kind = "enriques";
  auto* dim = app.add_subcommand("dim", "Expected moduli dimension -chi(v,v) + 1 or + 2");
  dim->add_option("--basis", basis_name, "mu, kappa or lambda")->required();
  dim->add_option("--kind", kind, "enriques or cy2")->check(CLI::IsMember({"enriques", "cy2"}));
  dim->add_option("v", coords, "Coordinates")->required()->expected(1, 2);

  // verify
  std::string filter;
  auto* verify = app.add_subcommand("verify", "Recompute every reference value and compare exactly");
  verify->alias("verify-paper");
  verify->add_option("--filter", filter, "Only checks whose id matches this regex");
  bool list = false;
  verify->add_flag("--list", list, "List check ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!g.config_path.empty()) g.config = load_config(g.config_path);
    const std::optional<IntMatrix> gram = gram_option(gram_text_opt);

    if (*euler) {
      const VarietyModel m = resolve_variety(variety, gram, g.cfg());
      const Rational chi = euler_pairing(m, parse_class(m, expr_e), parse_class(m, expr_f));
      emit(g, Json{{"variety", std::string(m.name())}, {"E", expr_e}, {"F", expr_f}, {"chi", to_json(chi)}},
           to_string(chi) + "\n");
    } else if (*chern) {
      const VarietyModel m = resolve_variety(variety, gram, g.cfg());
      const GradedClass ch = parse_class(m, expr);
      Json j{{"class", expr}, {"ch", to_json(ch)}};
      std::string text = "ch = " + ch.to_string() + "\n";
      if (m.is_k3()) {
        const MukaiVector v = mukai_vector(m, ch);
        j["mukai"] = to_json(v);
        text += "v = " + to_string(v) + ", v^2 = " + mukai_pairing(v, v).get_str() + "\n";
      }
      if (auto b = basis_on(m)) {
        try {
          const KnumClass k = express_in_basis(*b, ch);
          j["knum"] = to_json(k);
          text += "[" + to_string(k) + "] in Ku\n";
        } catch (const ConsistencyError&) {
          j["knum"] = nullptr;
        }
      }
      emit(g, j, text);
    } else if (*phi) {
      const CoverSetup s = resolve_setup(setup_name, gram, g.cfg());
      const PhiTrace t = phi_trace(s, parse_class(s.source, expr));
      const KnumClass v = express_in_basis(s.target_basis, t.result);
      Json j{{"setup", s.name}, {"class", expr}, {"result", to_json(v)}, {"ch", to_json(t.result)}};
      std::string text = to_string(v) + "\n";
      if (trace) {
        Json steps = Json::array();
        text = "twisted: " + t.twisted.to_string() + "\npushed:  " + t.pushed.to_string() + "\n";
        for (const auto& st : t.steps) {
          steps.push_back(Json{{"object", st.object}, {"chi", to_json(st.chi)}, {"result", to_json(st.result)}});
          text += "L_" + st.object + " (chi = " + st.chi.get_str() + "): " + st.result.to_string() + "\n";
        }
        j["steps"] = steps;
        text += "result:  " + to_string(v) + "\n";
      }
      emit(g, j, text);
    } else if (*image) {
      const CoverSetup s = resolve_setup(setup_name, gram, g.cfg());
      const PhiMap map = phi_matrix(s);
      const ImageLattice img = image_lattice(map);
      const KernelLattice ker = kernel_lattice(map);
      Json j{{"setup", s.name}, {"matrix", to_json(map.matrix)}, {"source_labels", map.source_labels},
             {"image", to_json(img)}, {"kernel", to_json(ker)}};
      std::ostringstream text;
      text << "matrix " << gram_text(map.matrix) << " on (";
      for (std::size_t i = 0; i < map.source_labels.size(); ++i) text << (i ? "," : "") << map.source_labels[i];
      text << ")\nimage generators " << gram_text(img.generators.transposed()) << ", index " << img.index
           << (img.index == 0 ? " (not full rank)" : "") << "\nkernel basis " << gram_text(ker.basis.transposed())
           << ", gram " << gram_text(ker.gram) << (ker.negative_definite ? ", negative definite" : "") << "\n";
      if (!member.empty()) {
        const KnumClass v{s.target_basis.name, pair_argument(member)};
        const bool in = in_image(img, v);
        j["member"] = Json{{"v", to_json(v)}, {"in_image", in}};
        text << to_string(v) << (in ? " is" : " is not") << " in the image\n";
      }
      emit(g, j, text.str());
    } else if (*lift) {
      const FanoType type = parse_fano_type(fano);
      const IntVector v = pair_argument(coords);
      const LiftCertificate c = closed_form_lift(type, v[0], v[1]);
      Json j = to_json(c);
      std::ostringstream text;
      text << "v = " << to_string(c.v);
      if (!(c.lifted == c.v)) text << " = " << c.multiplicity << " * " << to_string(c.v_primitive) << ", lifting "
                                   << to_string(c.lifted);
      text << "\nlattice " << gram_text(c.gram) << "\nw = " << to_string(c.w) << "  " << vec_text(c.w.coordinates())
           << "\nw^2 = " << c.w_square << " (branch " << c.branch << ")\nw^2 >= -2: " << (c.nonneg_ok ? "yes" : "no")
           << "\nwall inequality: " << (c.wall_ok ? "holds" : "fails") << "\n";
      if (brute) {
        const long b = g.box(box);
        const PhiMap map = phi_matrix(certificate_setup(c));
        const auto found = brute_force_lift(map, c.lifted, b);
        const IntVector w = c.w.coordinates();
        const bool contains = std::find(found.begin(), found.end(), w) != found.end();
        j["brute_force"] = Json{{"box", b}, {"count", found.size()}, {"contains_w", contains},
                                {"min_w_square", found.empty() ? Json(nullptr)
                                                               : to_json(bilinear(source_form(map.setup), found.front(), found.front()))}};
        text << "brute force (box " << b << "): " << found.size() << " lifts with w^2 >= -2, explicit w "
             << (contains ? "found" : "not in box") << "\n";
      }
      emit(g, j, text.str());
    } else if (*lift_all) {
      const CoverSetup s = resolve_setup(setup_name, gram, g.cfg());
      const AllLiftsReport r = all_lifts_inequality(phi_matrix(s), KnumClass{s.target_basis.name, pair_argument(coords)},
                                                    g.box(box));
      std::ostringstream text;
      text << "v = " << to_string(r.v) << ", -chi(v,v) + 1 = " << r.bound << "\n";
      if (r.max_w_square) text << "max w^2 = " << *r.max_w_square << " at " << vec_text(*r.argmax) << "\n";
      text << (r.complete ? "over all lifts" : "within the box only") << ": inequality "
           << (r.inequality_holds ? "holds" : "fails") << "\n";
      emit(g, to_json(r), text.str());
    } else if (*lattice_check) {
      const IntMatrix m = parse_gram(lattice);
      const LatticeFamily fam = family.empty() ? guess_lattice_family(m) : parse_lattice_family(family);
      const PicardLatticeReport r = validate_lattice(m, fam);
      std::ostringstream text;
      text << "gram " << gram_text(r.gram) << " (family " << to_string(r.family) << ")\ndet = " << r.det
           << (r.hyperbolic_ok ? " < 0" : " >= 0, not hyperbolic") << "\nH-orthogonal generator " << vec_text(r.orthogonal)
           << " with square " << r.orthogonal_square << "\nfamily condition (" << r.family_condition
           << "): " << (r.family_condition_ok ? "ok" : "fails") << "\nverdict: " << (r.verdict ? "admissible" : "rejected")
           << "\n";
      emit(g, to_json(r), text.str());
    } else if (*dim) {
      const KuBasis b = basis_named(basis_name);
      const KnumClass v{b.name, pair_argument(coords)};
      const Integer d = expected_dimension(b, v, kind == "cy2" ? ModuliKind::CY2 : ModuliKind::Enriques);
      emit(g, Json{{"v", to_json(v)}, {"kind", kind}, {"dimension", to_json(d)}}, d.get_str() + "\n");
    } else if (*verify) {
      if (list) {
        std::string text;
        for (const auto& id : reference_check_ids()) text += id + "\n";
        emit(g, Json(reference_check_ids()), text);
        return 0;
      }
      const VerificationReport r = verify_reference_values(filter);
      emit(g, to_json(r), to_text(r));
      return r.all_pass() ? 0 : 2;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
