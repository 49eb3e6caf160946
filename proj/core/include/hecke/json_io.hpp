#pragma once

#include <string>

#include "json.hpp"

#include "hecke/basechange.hpp"
#include "hecke/orbital.hpp"
#include "hecke/spherical.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

// Scalars: array of [exponent, coefficient-string], coefficient strings in
// decimal with optional sign.
Json laurent_to_json(const LaurentScalar& c);
LaurentScalar laurent_from_json(const Json& j);

// Symmetric polynomials: array of [exponent-vector, scalar].
Json symlaurent_to_json(const SymLaurent& s);
SymLaurent symlaurent_from_json(const Json& j, int rank);

// Series: {valuation, coeffs: field-element indices, precision}; precision is
// null for exact values.  Matrices are row-major arrays of series.
Json series_to_json(const SeriesScalar& s);
SeriesScalar series_from_json(const Json& j, const LocalField& F);
Json matrix_to_json(const LocalMatrix& g);
LocalMatrix matrix_from_json(const Json& j, const LocalField& F);

// Hecke elements: {level, n, terms}.  The spherical level stores coweights;
// the iwahori/parahoric levels store elements in text form.
Json spherical_to_json(const SphericalHeckeElement& f);
SphericalHeckeElement spherical_from_json(const Json& j);
Json parahoric_to_json(const ParahoricHeckeElement& h);
ParahoricHeckeElement parahoric_from_json(const Json& j);

// Field-context header {q, r} wrapped around the element body.
Json tagged_spherical_to_json(const TaggedSpherical& f);
TaggedSpherical tagged_spherical_from_json(const Json& j);
Json tagged_parahoric_to_json(const TaggedParahoric& h);
TaggedParahoric tagged_parahoric_from_json(const Json& j);

Json ratio_to_json(const RatioValue& v);
Json certificate_to_json(const EnumerationCertificate& c);
Json fl_report_to_json(const FLReport& rep);

}  // namespace hecke
