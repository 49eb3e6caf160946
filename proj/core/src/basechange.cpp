#include "hecke/basechange.hpp"

#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

std::string FieldTag::str() const {
  std::ostringstream os;
  os << "{q=" << q << ",r=" << r << "}";
  return os.str();
}

namespace {

FieldTag lowered(const FieldTag& tag, int ext) {
  if (ext < 1) throw input_error("extension degree must be positive");
  if (tag.r % ext != 0)
    throw input_error("context " + tag.str() + " admits no degree-" +
                      std::to_string(ext) + " subextension");
  return FieldTag{tag.q, tag.r / ext};
}

}  // namespace

TaggedSpherical bc_spherical(const TaggedSpherical& psi, int ext) {
  FieldTag down = lowered(psi.tag, ext);
  return {down, satake_inverse(satake(psi.elem).substitute_power(ext))};
}

TaggedParahoric bc_central_parahoric(const TaggedParahoric& psi, int ext) {
  FieldTag down = lowered(psi.tag, ext);
  if (!is_central(psi.elem))
    throw input_error("base change of a non-central element at level " +
                      psi.elem.level().str());
  SymLaurent upstairs = satake(bernstein_image(psi.elem));
  SymLaurent downstairs = upstairs.substitute_power(ext);
  ParahoricHeckeElement out = central_element_for(downstairs, psi.elem.level());
  if (!(satake(bernstein_image(out)) == downstairs))
    throw consistency_error("base change square failed at level " +
                            psi.elem.level().str());
  return {down, out};
}

}  // namespace hecke
