#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dgrep/group.hpp"
#include "dgrep/report.hpp"

namespace dgrep {

/// An element (g, alpha) of the product model G x E.
struct Element {
  std::size_t g = 0;
  std::size_t alpha = 0;

  friend bool operator==(Element, Element) = default;
};

std::string to_string(Element x);

/// Product-model generalized digroup G x E with
///   (g,a) |- (h,b) = (gh, g.b)   and   (g,a) -| (h,b) = (gh, a).
class Digroup {
public:
  Digroup() = default;
  explicit Digroup(GAction action) : action_(std::move(action)) {}

  static Digroup trivial_action(FiniteGroup group, std::size_t halo_size) {
    return Digroup(GAction::trivial(std::move(group), halo_size));
  }

  const FiniteGroup& group() const { return action_.group(); }
  const GAction& action() const { return action_; }
  std::size_t group_order() const { return action_.group().order(); }
  std::size_t halo_size() const { return action_.set_size(); }
  std::size_t size() const { return group_order() * halo_size(); }

  /// Elements are enumerated g-major: index = g * |E| + alpha.
  std::size_t index(Element x) const;
  Element element(std::size_t index) const;
  std::vector<Element> elements() const;

  Element vdash(Element x, Element y) const;
  Element dashv(Element x, Element y) const;

  std::vector<Element> halo() const;
  bool is_bar_unit(Element x) const;

  /// (g,a)^# = (g^-1, g^-1 . a); both x |- x^# and x^# |- x are bar-units.
  Element sharp(Element x) const;

  struct Inverses {
    Element left;   // left -| x == e
    Element right;  // x |- right == e
  };
  /// Left and right inverses of x relative to the bar-unit e. Throws if e is not a bar-unit.
  Inverses inverses_at(Element x, Element e) const;

  friend bool operator==(const Digroup&, const Digroup&) = default;

private:
  void check_element(Element x) const;

  GAction action_;
};

/// Exhaustive check of both associativities, GD1, GD2 and the three GD3 identities.
Report check_axioms(const Digroup& d);

struct RightGroup {
  Element unit;
  /// elements[i] is the right inverse (i^-1, i^-1 . alpha) of group element i.
  std::vector<Element> elements;
  /// table[i][j] = index of elements[i] |- elements[j].
  Table table;
  Report verification;
};

/// The right group at a bar-unit with its |- multiplication table.
RightGroup right_group_at(const Digroup& d, Element e);

}  // namespace dgrep
