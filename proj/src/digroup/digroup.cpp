#include "dgrep/digroup.hpp"

#include <algorithm>

#include "dgrep/error.hpp"

namespace dgrep {

std::string to_string(Element x) {
  return "(" + std::to_string(x.g) + "," + std::to_string(x.alpha) + ")";
}

void Digroup::check_element(Element x) const {
  if (x.g >= group_order() || x.alpha >= halo_size())
    throw Error("element " + to_string(x) + " out of range");
}

std::size_t Digroup::index(Element x) const {
  check_element(x);
  return x.g * halo_size() + x.alpha;
}

Element Digroup::element(std::size_t index) const {
  if (index >= size()) throw Error("element index " + std::to_string(index) + " out of range");
  return {index / halo_size(), index % halo_size()};
}

std::vector<Element> Digroup::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

Element Digroup::vdash(Element x, Element y) const {
  check_element(x);
  check_element(y);
  return {group().mul(x.g, y.g), action_.act(x.g, y.alpha)};
}

Element Digroup::dashv(Element x, Element y) const {
  check_element(x);
  check_element(y);
  return {group().mul(x.g, y.g), x.alpha};
}

std::vector<Element> Digroup::halo() const {
  std::vector<Element> out;
  for (std::size_t a = 0; a < halo_size(); ++a) out.push_back({group().identity(), a});
  return out;
}

bool Digroup::is_bar_unit(Element x) const {
  return x.g == group().identity() && x.alpha < halo_size();
}

Element Digroup::sharp(Element x) const {
  check_element(x);
  std::size_t gi = group().inv(x.g);
  return {gi, action_.act(gi, x.alpha)};
}

Digroup::Inverses Digroup::inverses_at(Element x, Element e) const {
  check_element(x);
  if (!is_bar_unit(e)) throw Error(to_string(e) + " is not a bar-unit");
  std::size_t gi = group().inv(x.g);
  return {{gi, e.alpha}, {gi, action_.act(gi, e.alpha)}};
}

Report check_axioms(const Digroup& d) {
  Report r;
  auto els = d.elements();
  auto units = d.halo();
  auto show3 = [](Element x, Element y, Element z) {
    return to_string(x) + "," + to_string(y) + "," + to_string(z);
  };

  Check& vassoc = r.add("vdash associativity");
  Check& dassoc = r.add("dashv associativity");
  Check& gd3a = r.add("GD3 x|-(y-|z) = (x|-y)-|z");
  Check& gd3b = r.add("GD3 x-|(y-|z) = x-|(y|-z)");
  Check& gd3c = r.add("GD3 (x|-y)|-z = (x-|y)|-z");
  for (Element x : els)
    for (Element y : els)
      for (Element z : els) {
        if (d.vdash(d.vdash(x, y), z) != d.vdash(x, d.vdash(y, z))) Report::fail(vassoc, show3(x, y, z));
        if (d.dashv(d.dashv(x, y), z) != d.dashv(x, d.dashv(y, z))) Report::fail(dassoc, show3(x, y, z));
        if (d.vdash(x, d.dashv(y, z)) != d.dashv(d.vdash(x, y), z)) Report::fail(gd3a, show3(x, y, z));
        if (d.dashv(x, d.dashv(y, z)) != d.dashv(x, d.vdash(y, z))) Report::fail(gd3b, show3(x, y, z));
        if (d.vdash(d.vdash(x, y), z) != d.vdash(d.dashv(x, y), z)) Report::fail(gd3c, show3(x, y, z));
      }

  Check& gd1 = r.add("GD1 bar-units");
  Check& gd2 = r.add("GD2 inverses");
  for (Element e : units)
    for (Element x : els) {
      if (d.dashv(x, e) != x || d.vdash(e, x) != x) Report::fail(gd1, "e=" + to_string(e) + " x=" + to_string(x));
      auto inv = d.inverses_at(x, e);
      if (d.dashv(inv.left, x) != e || d.vdash(x, inv.right) != e)
        Report::fail(gd2, "e=" + to_string(e) + " x=" + to_string(x));
    }
  return r;
}

RightGroup right_group_at(const Digroup& d, Element e) {
  if (!d.is_bar_unit(e)) throw Error(to_string(e) + " is not a bar-unit");
  const FiniteGroup& g = d.group();
  std::size_t n = g.order();
  RightGroup out;
  out.unit = e;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t gi = g.inv(i);
    out.elements.push_back({gi, d.action().act(gi, e.alpha)});
  }
  auto position = [&](Element x) -> std::size_t {
    return static_cast<std::size_t>(std::find(out.elements.begin(), out.elements.end(), x) - out.elements.begin());
  };

  Check& closed = out.verification.add("closed under |-");
  out.table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = position(d.vdash(out.elements[i], out.elements[j]));
      if (k == n) Report::fail(closed, to_string(out.elements[i]) + "|-" + to_string(out.elements[j]));
      else out.table[i][j] = k;
    }

  Check& bij = out.verification.add("bijection with G");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (out.elements[i] == out.elements[j]) Report::fail(bij, std::to_string(i) + "," + std::to_string(j));

  Check& unit = out.verification.add("unit is the bar-unit");
  if (out.elements[g.identity()] != e) Report::fail(unit, to_string(out.elements[g.identity()]));

  // g -> (g^-1, g^-1 . a) reverses products, so the group law is carried by
  // g -> (g, g . a), its composite with inversion.
  Check& transport = out.verification.add("transports multiplication");
  Check& reversal = out.verification.add("inverse map reverses products");
  for (std::size_t a = 0; a < n && closed.ok; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element pa{a, d.action().act(a, e.alpha)}, pb{b, d.action().act(b, e.alpha)};
      std::size_t ab = g.mul(a, b);
      if (d.vdash(pa, pb) != Element{ab, d.action().act(ab, e.alpha)})
        Report::fail(transport, std::to_string(a) + "," + std::to_string(b));
      if (out.table[a][b] != g.mul(b, a)) Report::fail(reversal, std::to_string(a) + "," + std::to_string(b));
    }
  return out;
}

}  // namespace dgrep
