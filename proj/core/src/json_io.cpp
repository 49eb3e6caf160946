#include "hecke/json_io.hpp"

#include <utility>

#include "hecke/parahoric.hpp"

namespace hecke {

namespace {

// Wraps nlohmann's type errors into the input error channel.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw input_error(std::string(what) + ": " + e.what());
  }
}

ParahoricShape level_from_json(const Json& j, int n) {
  if (j.is_string()) {
    if (j.get<std::string>() == "iwahori") return ParahoricShape::iwahori(n);
    throw input_error("unknown level string: " + j.get<std::string>());
  }
  if (j.is_object() && j.contains("parahoric"))
    return ParahoricShape(j.at("parahoric").get<std::vector<int>>());
  throw input_error("level must be \"iwahori\" or {\"parahoric\": [...]}");
}

Json level_to_json(const ParahoricShape& J) {
  if (J.is_iwahori()) return Json("iwahori");
  return Json{{"parahoric", J.blocks}};
}

}  // namespace

Json laurent_to_json(const LaurentScalar& c) {
  Json out = Json::array();
  for (const auto& [e, a] : c.terms()) out.push_back(Json::array({e, a.str()}));
  return out;
}

LaurentScalar laurent_from_json(const Json& j) {
  return guarded("scalar", [&] {
    if (!j.is_array()) throw input_error("scalar: expected an array of [exponent, coeff]");
    LaurentScalar out;
    for (const auto& term : j) {
      if (!term.is_array() || term.size() != 2)
        throw input_error("scalar: expected [exponent, coeff] pairs");
      int e = term.at(0).get<int>();
      Int a(term.at(1).get<std::string>());
      out += LaurentScalar::term(a, e);
    }
    return out;
  });
}

Json symlaurent_to_json(const SymLaurent& s) {
  Json out = Json::array();
  for (const auto& [m, c] : s.terms())
    out.push_back(Json::array({Json(m), laurent_to_json(c)}));
  return out;
}

SymLaurent symlaurent_from_json(const Json& j, int rank) {
  return guarded("symmetric polynomial", [&] {
    if (!j.is_array()) throw input_error("symmetric polynomial: expected an array");
    SymLaurent out(rank);
    for (const auto& term : j) {
      if (!term.is_array() || term.size() != 2)
        throw input_error("symmetric polynomial: expected [exponents, scalar] pairs");
      Coweight m = term.at(0).get<Coweight>();
      if (static_cast<int>(m.size()) != rank)
        throw input_error("symmetric polynomial: exponent rank mismatch");
      out.set_coeff(dominant_sort(m), laurent_from_json(term.at(1)));
    }
    return out;
  });
}

Json series_to_json(const SeriesScalar& s) {
  Json out;
  if (s.is_zero()) {
    out["valuation"] = 0;
    out["coeffs"] = Json::array();
  } else {
    int v = s.valuation();
    out["valuation"] = v;
    Json coeffs = Json::array();
    for (int e = v; e <= s.top_exponent(); ++e) coeffs.push_back(s.coeff(e));
    out["coeffs"] = std::move(coeffs);
  }
  out["precision"] = s.exact() ? Json(nullptr) : Json(s.cap());
  return out;
}

SeriesScalar series_from_json(const Json& j, const LocalField& F) {
  return guarded("series", [&] {
    int v = j.at("valuation").get<int>();
    std::vector<long> coeffs = j.at("coeffs").get<std::vector<long>>();
    for (long c : coeffs)
      if (c < 0 || c >= F.residue_size())
        throw input_error("series: coefficient index out of range");
    SeriesScalar s = SeriesScalar::from_poly(F, v, std::move(coeffs));
    const Json& prec = j.at("precision");
    if (!prec.is_null()) s = s.truncated(prec.get<int>());
    return s;
  });
}

Json matrix_to_json(const LocalMatrix& g) {
  Json out = Json::array();
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) out.push_back(series_to_json(g.at(i, j)));
  return out;
}

LocalMatrix matrix_from_json(const Json& j, const LocalField& F) {
  return guarded("matrix", [&] {
    if (!j.is_array() || j.empty()) throw input_error("matrix: expected entries");
    int n = 0;
    while (n * n < static_cast<int>(j.size())) ++n;
    if (n * n != static_cast<int>(j.size()))
      throw input_error("matrix: entry count is not a square");
    LocalMatrix g(F, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        g.at(i, k) = series_from_json(j.at(static_cast<size_t>(i * n + k)), F);
    return g;
  });
}

Json spherical_to_json(const SphericalHeckeElement& f) {
  Json out;
  out["level"] = "spherical";
  out["n"] = f.rank();
  Json terms = Json::array();
  for (const auto& [mu, c] : f.terms())
    terms.push_back(Json{{"coweight", mu}, {"coeff", laurent_to_json(c)}});
  out["terms"] = std::move(terms);
  return out;
}

SphericalHeckeElement spherical_from_json(const Json& j) {
  return guarded("spherical element", [&] {
    if (j.at("level").get<std::string>() != "spherical")
      throw input_error("spherical element: wrong level");
    const int n = j.at("n").get<int>();
    SphericalHeckeElement out(n);
    for (const auto& term : j.at("terms")) {
      Coweight mu = term.at("coweight").get<Coweight>();
      if (static_cast<int>(mu.size()) != n)
        throw input_error("spherical element: coweight rank mismatch");
      out.add_term(dominant_sort(mu), laurent_from_json(term.at("coeff")));
    }
    return out;
  });
}

Json parahoric_to_json(const ParahoricHeckeElement& h) {
  Json out;
  out["level"] = level_to_json(h.level());
  out["n"] = h.rank();
  Json terms = Json::array();
  for (const auto& [w, c] : h.values())
    terms.push_back(Json{{"element", w.str()}, {"coeff", laurent_to_json(c)}});
  out["terms"] = std::move(terms);
  return out;
}

ParahoricHeckeElement parahoric_from_json(const Json& j) {
  return guarded("parahoric element", [&] {
    const int n = j.at("n").get<int>();
    ParahoricShape J = level_from_json(j.at("level"), n);
    std::map<AffineWeylElement, LaurentScalar> acc;
    for (const auto& term : j.at("terms")) {
      AffineWeylElement w = AffineWeylElement::parse(term.at("element").get<std::string>());
      if (w.rank() != n) throw input_error("parahoric element: rank mismatch");
      acc[min_double_coset_rep(w, J)] += laurent_from_json(term.at("coeff"));
    }
    ParahoricHeckeElement out(J);
    for (const auto& [w, c] : acc)
      if (!c.is_zero()) out.add_value(w, c);
    return out;
  });
}

Json tagged_spherical_to_json(const TaggedSpherical& f) {
  Json out;
  out["field"] = Json{{"q", f.tag.q}, {"r", f.tag.r}};
  Json body = spherical_to_json(f.elem);
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

TaggedSpherical tagged_spherical_from_json(const Json& j) {
  return guarded("tagged spherical element", [&] {
    const Json& f = j.at("field");
    return TaggedSpherical{FieldTag{f.at("q").get<long>(), f.at("r").get<int>()},
                           spherical_from_json(j)};
  });
}

Json tagged_parahoric_to_json(const TaggedParahoric& h) {
  Json out;
  out["field"] = Json{{"q", h.tag.q}, {"r", h.tag.r}};
  Json body = parahoric_to_json(h.elem);
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

TaggedParahoric tagged_parahoric_from_json(const Json& j) {
  return guarded("tagged parahoric element", [&] {
    const Json& f = j.at("field");
    return TaggedParahoric{FieldTag{f.at("q").get<long>(), f.at("r").get<int>()},
                           parahoric_from_json(j)};
  });
}

Json ratio_to_json(const RatioValue& v) {
  return Json{{"num", laurent_to_json(v.num)},
              {"den", laurent_to_json(v.den)},
              {"display", v.str()}};
}

Json certificate_to_json(const EnumerationCertificate& c) {
  Json out;
  out["precision"] = c.precision;
  out["radius"] = c.radius;
  out["classes_expanded"] = c.classes_expanded;
  out["frontier_discarded"] = c.frontier_discarded;
  out["frontier_clean"] = c.frontier_clean;
  out["support_classes"] = c.support_classes;
  out["orbit_count"] = c.orbit_count;
  out["route_checks"] = c.route_checks;
  out["stabilizer_volumes"] = c.stabilizer_volumes;
  out["certified"] = c.certified();
  return out;
}

Json fl_report_to_json(const FLReport& rep) {
  Json out;
  out["n"] = rep.n;
  out["q"] = rep.q;
  out["r"] = rep.r;
  out["level"] = level_to_json(rep.level);
  out["delta"] = rep.delta;
  Json psi = Json::array();
  for (const auto& [mu, c] : rep.psi_coeffs)
    psi.push_back(Json{{"coweight", mu}, {"coeff", laurent_to_json(c)}});
  out["psi"] = std::move(psi);
  out["norm_charpoly"] = rep.norm_charpoly;
  out["ellipticity"] = rep.ellipticity;
  out["twisted"] = ratio_to_json(rep.twisted);
  out["plain"] = ratio_to_json(rep.plain);
  out["equal"] = rep.equal;
  out["inconclusive"] = rep.inconclusive;
  out["twisted_certificate"] = certificate_to_json(rep.twisted_certificate);
  out["plain_certificate"] = certificate_to_json(rep.plain_certificate);
  return out;
}

}  // namespace hecke
