// Command-line front end: every subcommand reads JSON (inline literal or
// file path), writes one JSON artifact to stdout (and to --json-out when
// given), and exits 0 on success / equality, 1 on a certified inequality,
// 2 when no certified answer exists, 3 on bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "hecke/centralizer.hpp"
#include "hecke/errors.hpp"
#include "hecke/json_io.hpp"
#include "hecke/orbital.hpp"
#include "hecke/parahoric.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct Session {
  int n = 2;
  long q = 2;
  int r = 1;
  int precision = 24;
  std::string parahoric;  // "", "iwahori", "maximal", or comma-separated blocks
  unsigned long long seed = 1;
  std::string json_out;
};

hecke::Json session_json(const Session& s) {
  hecke::Json j;
  j["n"] = s.n;
  j["q"] = s.q;
  j["r"] = s.r;
  j["precision"] = s.precision;
  j["parahoric"] = s.parahoric.empty() ? "iwahori" : s.parahoric;
  j["seed"] = s.seed;
  return j;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw hecke::input_error("expected a comma-separated integer list, got: " + text);
    }
  }
  if (out.empty()) throw hecke::input_error("empty integer list: " + text);
  return out;
}

hecke::ParahoricShape shape_from_flag(const std::string& flag, int n,
                                      const std::string& fallback) {
  const std::string& s = flag.empty() ? fallback : flag;
  if (s == "iwahori") return hecke::ParahoricShape::iwahori(n);
  if (s == "maximal") return hecke::ParahoricShape::maximal(n);
  return hecke::ParahoricShape(parse_int_list(s));
}

hecke::Json load_json(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || (arg[0] != '{' && arg[0] != '[')) {
    std::ifstream in(arg);
    if (!in) throw hecke::input_error("cannot open input: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return hecke::Json::parse(text);
  } catch (const hecke::Json::exception& e) {
    throw hecke::input_error(std::string("JSON parse: ") + e.what());
  }
}

int emit(const Session& s, hecke::Json payload, int status) {
  hecke::Json out;
  out["version"] = kVersion;
  out["config"] = session_json(s);
  for (auto& [key, value] : payload.items()) out[key] = std::move(value);
  std::string text = out.dump(2) + "\n";
  if (!s.json_out.empty()) {
    std::ofstream f(s.json_out);
    if (!f) throw hecke::input_error("cannot open output: " + s.json_out);
    f << text;
  }
  std::cout << text;
  return status;
}

// Function input for the integral subcommands: a spherical element is
// repackaged at the one-block level, anything else must already be at a
// parahoric level.  A "field" header, when present, must match the session.
hecke::ParahoricHeckeElement load_function(const hecke::Json& j, long q, int r) {
  const hecke::Json* body = &j;
  if (j.is_object() && j.contains("field")) {
    const auto& tag = j.at("field");
    if (tag.at("q").get<long>() != q || tag.at("r").get<int>() != r)
      throw hecke::input_error("function field header does not match --q/--r");
    body = &j;
  }
  if (body->at("level").is_string() && body->at("level").get<std::string>() == "spherical")
    return hecke::spherical_as_parahoric(hecke::spherical_from_json(*body));
  return hecke::parahoric_from_json(*body);
}

std::vector<std::pair<hecke::Coweight, hecke::LaurentScalar>> load_coeffs(
    const hecke::Json& j) {
  if (!j.is_array()) throw hecke::input_error("coefficient list must be an array");
  std::vector<std::pair<hecke::Coweight, hecke::LaurentScalar>> out;
  for (const auto& term : j) {
    hecke::Coweight mu = term.at("coweight").get<std::vector<int>>();
    out.emplace_back(mu, hecke::laurent_from_json(term.at("coeff")));
  }
  return out;
}

int run_selftest(const Session& s) {
  using namespace hecke;
  hecke::Json results = hecke::Json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok, const std::string& note) {
    hecke::Json r;
    r["name"] = name;
    r["passed"] = ok;
    if (!note.empty()) r["note"] = note;
    results.push_back(r);
    all = all && ok;
  };
  auto check = [&](const std::string& name, auto&& body) {
    try {
      record(name, body(), "");
    } catch (const std::exception& e) {
      record(name, false, e.what());
    }
  };

  check("quadratic relation", [] {
    auto w = AffineWeylElement::simple(2, 1);
    auto Ts = IwahoriHeckeElement::basis(w);
    auto expected = IwahoriHeckeElement::unit(2).scaled(q_power(1)) +
                    Ts.scaled(q_power(1) - LaurentScalar(1));
    return Ts * Ts == expected;
  });
  check("minuscule transform", [] {
    auto f = SphericalHeckeElement::indicator({1, 0});
    return satake(f) == schur(2, {1, 0}) * LaurentScalar::v_power(1);
  });
  check("transform round trip", [] {
    auto P = schur(2, {2, 0});
    return satake(satake_inverse(P)) == P;
  });
  check("tensor trace identity", [&s] {
    SplitMix rng(s.seed);
    for (int trial = 0; trial < 20; ++trial) {
      int d = 2 + static_cast<int>(rng.below(2));
      int r = 1 + static_cast<int>(rng.below(3));
      std::vector<std::vector<std::vector<Rational>>> factors(r);
      for (auto& T : factors) {
        T.assign(d, std::vector<Rational>(d));
        for (auto& row : T)
          for (auto& e : row) e = Rational(rng.below(5) - 2);
      }
      if (!saito_shintani_check(factors)) return false;
    }
    return true;
  });
  check("central element square", [] {
    auto psi = central_element_for(schur(2, {1, 0}), ParahoricShape::iwahori(2));
    return satake(bernstein_image(psi)) == schur(2, {1, 0});
  });
  check("reference order volume", [] {
    LocalField F(2, 1, 24);
    // X^2 + X + (1 + t): residue polynomial X^2 + X + 1 has no root in F_2.
    std::vector<SeriesScalar> low = {SeriesScalar::from_poly(F, 0, {1, 1}),
                                     SeriesScalar::one(F)};
    CentralizerAlgebra A(F, low);
    auto [num, den] = A.unit_volume(A.reference_order());
    return num == den;
  });
  check("base change identity", [] {
    TaggedSpherical f{FieldTag{2, 2}, SphericalHeckeElement::indicator({1, 0})};
    if (!(bc_spherical(f, 1).elem == f.elem)) return false;
    auto down = bc_spherical(f, 2);
    return down.tag == FieldTag{2, 1} && !down.elem.is_zero();
  });

  hecke::Json payload;
  payload["selftest"] = results;
  payload["passed"] = all;
  return emit(s, payload, all ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke algebra and orbital integral computations for GL_n over F_q((t))"};
  app.require_subcommand(1);
  Session s;
  app.add_option("--n", s.n, "matrix rank");
  app.add_option("--q", s.q, "residue field size of the ground field");
  app.add_option("--r", s.r, "degree of the unramified extension");
  app.add_option("--precision", s.precision, "series truncation exponent");
  app.add_option("--parahoric", s.parahoric,
                 "level: 'iwahori', 'maximal', or comma-separated block sizes");
  app.add_option("--seed", s.seed, "seed for deterministic sampling");
  app.add_option("--json-out", s.json_out, "also write the artifact to this file");

  std::string in_a, in_b, coweight_flag, gamma_in, delta_in, fn_in, coeffs_in;
  bool sample = false;
  int ext = 0;
  int margin = 0;

  auto* cmd_satake = app.add_subcommand("satake", "Satake transform of a spherical element");
  cmd_satake->add_option("--in", in_a, "spherical element (JSON file or literal)")->required();
  auto* cmd_inv = app.add_subcommand("satake-inverse", "preimage of a symmetric polynomial");
  cmd_inv->add_option("--in", in_a, "symmetric polynomial (JSON file or literal)")->required();
  auto* cmd_conv = app.add_subcommand("convolve", "spherical convolution product");
  cmd_conv->add_option("--lhs", in_a, "left factor")->required();
  cmd_conv->add_option("--rhs", in_b, "right factor")->required();
  auto* cmd_ic = app.add_subcommand("ic", "basis element with Satake transform s_mu");
  cmd_ic->add_option("--coweight", coweight_flag, "dominant coweight, comma-separated")
      ->required();
  auto* cmd_bern = app.add_subcommand(
      "bernstein", "central element of the level algebra for a symmetric polynomial");
  cmd_bern->add_option("--symfun", in_a, "symmetric polynomial (JSON file or literal)")
      ->required();
  auto* cmd_bc = app.add_subcommand("basechange", "descend an element along a subextension");
  cmd_bc->add_option("--in", in_a, "tagged element (JSON file or literal)")->required();
  cmd_bc->add_option("--ext", ext, "degree of the subextension (default: full descent)");
  auto* cmd_orb = app.add_subcommand("orbital", "orbital integral over the ground field");
  cmd_orb->add_option("--gamma", gamma_in, "matrix (JSON file or literal)")->required();
  cmd_orb->add_option("--function", fn_in, "spherical or parahoric element")->required();
  cmd_orb->add_option("--margin", margin, "extra enumeration radius");
  auto* cmd_torb = app.add_subcommand("twisted-orbital", "twisted orbital integral over the extension");
  cmd_torb->add_option("--delta", delta_in, "matrix over the extension")->required();
  cmd_torb->add_option("--function", fn_in, "parahoric element over the extension")->required();
  cmd_torb->add_option("--margin", margin, "extra enumeration radius");
  auto* cmd_fl = app.add_subcommand(
      "verify-fl", "compare a twisted integral with the plain integral of its descent");
  cmd_fl->add_option("--delta", delta_in, "matrix over the extension");
  cmd_fl->add_flag("--sample", sample, "draw delta deterministically from --seed");
  cmd_fl->add_option("--coeffs", coeffs_in,
                     "array of {coweight, coeff} Schur coefficients (default: unit)");
  auto* cmd_self = app.add_subcommand("selftest", "run the built-in consistency suite");
  for (auto* sub : {cmd_satake, cmd_inv, cmd_conv, cmd_ic, cmd_bern, cmd_bc, cmd_orb,
                    cmd_torb, cmd_fl, cmd_self})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  using namespace hecke;
  try {
    if (cmd_satake->parsed()) {
      auto f = spherical_from_json(load_json(in_a));
      s.n = f.rank();
      Json payload;
      payload["satake"] = symlaurent_to_json(satake(f));
      return emit(s, payload, 0);
    }
    if (cmd_inv->parsed()) {
      auto P = symlaurent_from_json(load_json(in_a), s.n);
      Json payload;
      payload["element"] = spherical_to_json(satake_inverse(P));
      return emit(s, payload, 0);
    }
    if (cmd_conv->parsed()) {
      auto f = spherical_from_json(load_json(in_a));
      auto g = spherical_from_json(load_json(in_b));
      s.n = f.rank();
      Json payload;
      payload["product"] = spherical_to_json(convolve_spherical(f, g));
      return emit(s, payload, 0);
    }
    if (cmd_ic->parsed()) {
      Coweight mu = parse_int_list(coweight_flag);
      s.n = static_cast<int>(mu.size());
      Json payload;
      payload["element"] = spherical_to_json(ic_function(s.n, mu));
      return emit(s, payload, 0);
    }
    if (cmd_bern->parsed()) {
      auto P = symlaurent_from_json(load_json(in_a), s.n);
      auto J = shape_from_flag(s.parahoric, s.n, "iwahori");
      Json payload;
      payload["element"] = parahoric_to_json(central_element_for(P, J));
      return emit(s, payload, 0);
    }
    if (cmd_bc->parsed()) {
      Json j = load_json(in_a);
      if (!j.is_object() || !j.contains("field"))
        throw input_error("base change input needs a {q, r} field header");
      Json payload;
      if (j.at("level").is_string() && j.at("level").get<std::string>() == "spherical") {
        auto f = tagged_spherical_from_json(j);
        payload["element"] = tagged_spherical_to_json(bc_spherical(f, ext ? ext : f.tag.r));
      } else {
        auto h = tagged_parahoric_from_json(j);
        payload["element"] =
            tagged_parahoric_to_json(bc_central_parahoric(h, ext ? ext : h.tag.r));
      }
      return emit(s, payload, 0);
    }
    if (cmd_orb->parsed()) {
      LocalField F(s.q, 1, s.precision);
      auto gamma = matrix_from_json(load_json(gamma_in), F);
      auto f = load_function(load_json(fn_in), s.q, 1);
      s.n = f.rank();
      auto out = orbital_integral(gamma, f, margin);
      Json payload;
      payload["value"] = ratio_to_json(out.value);
      payload["certificate"] = certificate_to_json(out.certificate);
      return emit(s, payload, out.certificate.certified() ? 0 : 2);
    }
    if (cmd_torb->parsed()) {
      LocalField E(s.q, s.r, s.precision);
      auto delta = matrix_from_json(load_json(delta_in), E);
      auto phi = load_function(load_json(fn_in), s.q, s.r);
      s.n = phi.rank();
      auto out = twisted_orbital_integral(delta, phi, s.r, margin);
      Json payload;
      payload["value"] = ratio_to_json(out.value);
      payload["certificate"] = certificate_to_json(out.certificate);
      return emit(s, payload, out.certificate.certified() ? 0 : 2);
    }
    if (cmd_fl->parsed()) {
      LocalField E(s.q, s.r, s.precision);
      if (sample == delta_in.empty())
        throw input_error("give exactly one of --delta and --sample");
      LocalMatrix delta = sample ? sample_delta(E, s.n, s.seed)
                                 : matrix_from_json(load_json(delta_in), E);
      std::vector<std::pair<Coweight, LaurentScalar>> coeffs;
      if (coeffs_in.empty())
        coeffs.emplace_back(Coweight(s.n, 0), LaurentScalar(1));
      else
        coeffs = load_coeffs(load_json(coeffs_in));
      auto J = shape_from_flag(s.parahoric, s.n, "maximal");
      auto rep = verify_fl(delta, coeffs, J, s.r);
      Json payload;
      payload["report"] = fl_report_to_json(rep);
      return emit(s, payload, rep.inconclusive ? 2 : (rep.equal ? 0 : 1));
    }
    return run_selftest(s);
  } catch (const input_error& e) {
    return emit(s, Json{{"error", e.what()}, {"kind", "input"}}, 3);
  } catch (const uncertified_error& e) {
    return emit(s, Json{{"error", e.what()}, {"kind", "uncertified"}}, 2);
  } catch (const precision_error& e) {
    return emit(s, Json{{"error", e.what()}, {"kind", "precision"}}, 2);
  } catch (const consistency_error& e) {
    return emit(s, Json{{"error", e.what()}, {"kind", "consistency"}}, 2);
  }
}
