#include "fuzzitop/point_map.hpp"

namespace fuzzitop {

PointMap PointMap::identity(const Carrier& c) {
  PointMap m{c, c, {}};
  for (int i = 0; i < c.size(); ++i) m.assign.push_back(i);
  return m;
}

Subset PointMap::image(Subset u) const {
  Subset out;
  for (int x = 0; x < domain.size(); ++x)
    if (u.contains(x)) out.bits |= 1u << apply(x);
  return out;
}

Subset PointMap::preimage(Subset b) const {
  Subset out;
  for (int x = 0; x < domain.size(); ++x)
    if (b.contains(apply(x))) out.bits |= 1u << x;
  return out;
}

bool PointMap::surjective() const {
  Subset img = image(domain.full());
  return img == codomain.full();
}

void PointMap::check() const {
  if (static_cast<int>(assign.size()) != domain.size())
    throw StructuralError("point map is not total");
  for (int v : assign)
    if (v < 0 || v >= codomain.size())
      throw StructuralError("point map value outside codomain");
}

}  // namespace fuzzitop
