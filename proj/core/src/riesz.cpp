#include "pealab/riesz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pealab/error.hpp"

namespace pealab {

std::string_view to_string(RieszProperty p) {
  switch (p) {
    case RieszProperty::Rip:
      return "rip";
    case RieszProperty::Rdp0:
      return "rdp0";
    case RieszProperty::Rdp:
      return "rdp";
    case RieszProperty::Rdp1:
      return "rdp1";
    case RieszProperty::Rdp2:
      return "rdp2";
  }
  return "?";
}

const PropertyResult& RieszReport::get(RieszProperty p) const {
  switch (p) {
    case RieszProperty::Rip:
      return rip;
    case RieszProperty::Rdp0:
      return rdp0;
    case RieszProperty::Rdp:
      return rdp;
    case RieszProperty::Rdp1:
      return rdp1;
    case RieszProperty::Rdp2:
      return rdp2;
  }
  return rip;
}

bool RieszReport::ladder_consistent() const {
  for (std::size_t i = 1; i < kRieszLadder.size(); ++i) {
    if (get(kRieszLadder[i]).holds && !get(kRieszLadder[i - 1]).holds) return false;
  }
  return true;
}

std::optional<RieszProperty> RieszReport::first_failure() const {
  for (auto p : kRieszLadder) {
    if (!get(p).holds) return p;
  }
  return std::nullopt;
}

namespace {

// Precomputed right differences: diff[a][b] = c with a + c = b.
class Calculus {
 public:
  explicit Calculus(const FiniteTable& t) : t_(t), order_(derive_order(t)), n_(t.size()), diff_(n_ * n_) {
    for (ElementId a = 0; a < n_; ++a) {
      for (ElementId c = 0; c < n_; ++c) {
        if (auto s = t.sum(a, c)) diff_[a * n_ + *s] = c;
      }
    }
  }

  const FiniteTable& table() const { return t_; }
  const OrderRelation& order() const { return order_; }
  std::size_t size() const { return n_; }
  std::optional<ElementId> diff(ElementId a, ElementId b) const { return diff_[a * n_ + b]; }

  // (a1, a2) pairs grouped by their defined sum.
  const std::map<ElementId, std::vector<std::pair<ElementId, ElementId>>>& sums() {
    if (sums_.empty()) {
      for (ElementId a = 0; a < n_; ++a) {
        for (ElementId b = 0; b < n_; ++b) {
          if (auto s = t_.sum(a, b)) sums_[*s].emplace_back(a, b);
        }
      }
    }
    return sums_;
  }

  bool com(ElementId a, ElementId b) {
    if (com_.empty()) {
      com_.assign(n_ * n_, 0);
      for (ElementId x = 0; x < n_; ++x) {
        for (ElementId y = 0; y < n_; ++y) com_[x * n_ + y] = pealab::com(t_, order_, x, y) ? 1 : 2;
      }
    }
    return com_[a * n_ + b] == 1;
  }

  bool meet_is_zero(ElementId a, ElementId b) const {
    return partial_meet(order_, a, b) == t_.zero();
  }

  std::vector<Refinement> refine(ElementId a1, ElementId a2, ElementId b1, ElementId b2) const {
    std::vector<Refinement> out;
    for (ElementId d1 = 0; d1 < n_; ++d1) {
      const auto d2 = diff(d1, a1);
      const auto d3 = diff(d1, b1);
      if (!d2 || !d3) continue;
      const auto d4 = diff(*d3, a2);
      if (!d4) continue;
      if (t_.sum(*d2, *d4) == b2) out.push_back({d1, *d2, *d3, *d4});
    }
    return out;
  }

 private:
  const FiniteTable& t_;
  OrderRelation order_;
  std::size_t n_;
  std::vector<std::optional<ElementId>> diff_;
  std::map<ElementId, std::vector<std::pair<ElementId, ElementId>>> sums_;
  std::vector<unsigned char> com_;
};

bool record(PropertyResult& r, RieszWitness w) {
  r.holds = false;
  r.witnesses.push_back(std::move(w));
  return r.witnesses.size() >= kMaxWitnesses;
}

PropertyResult rip(Calculus& c) {
  PropertyResult r;
  const auto& o = c.order();
  const std::size_t n = c.size();
  for (ElementId a1 = 0; a1 < n; ++a1) {
    for (ElementId a2 = 0; a2 < n; ++a2) {
      for (ElementId b1 = 0; b1 < n; ++b1) {
        if (!o.leq(a1, b1) || !o.leq(a2, b1)) continue;
        for (ElementId b2 = 0; b2 < n; ++b2) {
          if (!o.leq(a1, b2) || !o.leq(a2, b2)) continue;
          bool found = false;
          for (ElementId x = 0; x < n && !found; ++x) {
            found = o.leq(a1, x) && o.leq(a2, x) && o.leq(x, b1) && o.leq(x, b2);
          }
          if (!found && record(r, {{a1, a2, b1, b2}, 0})) return r;
        }
      }
    }
  }
  return r;
}

PropertyResult rdp0(Calculus& c) {
  PropertyResult r;
  const auto& o = c.order();
  const auto& t = c.table();
  const std::size_t n = c.size();
  for (ElementId b1 = 0; b1 < n; ++b1) {
    for (ElementId b2 = 0; b2 < n; ++b2) {
      const auto s = t.sum(b1, b2);
      if (!s) continue;
      for (ElementId a = 0; a < n; ++a) {
        if (!o.leq(a, *s)) continue;
        bool found = false;
        for (ElementId d1 = 0; d1 < n && !found; ++d1) {
          if (!o.leq(d1, b1)) continue;
          const auto d2 = c.diff(d1, a);
          found = d2 && o.leq(*d2, b2);
        }
        if (!found && record(r, {{a, b1, b2}, 0})) return r;
      }
    }
  }
  return r;
}

// extra: the additional condition on (d₂, d₃), or null for plain RDP.
PropertyResult decomposition(Calculus& c, const std::function<bool(ElementId, ElementId)>& extra) {
  PropertyResult r;
  for (const auto& [sum, pairs] : c.sums()) {
    for (const auto& [a1, a2] : pairs) {
      for (const auto& [b1, b2] : pairs) {
        const auto refs = c.refine(a1, a2, b1, b2);
        const bool ok = std::any_of(refs.begin(), refs.end(), [&](const Refinement& d) {
          return !extra || extra(d[1], d[2]);
        });
        if (!ok && record(r, {{a1, a2, b1, b2}, refs.size()})) return r;
      }
    }
  }
  return r;
}

}  // namespace

std::vector<Refinement> refinements(const FiniteTable& table, ElementId a1, ElementId a2, ElementId b1,
                                    ElementId b2) {
  return Calculus(table).refine(a1, a2, b1, b2);
}

PropertyResult has_rip(const FiniteTable& table) {
  require_valid(table);
  Calculus c(table);
  return rip(c);
}

PropertyResult has_rdp0(const FiniteTable& table) {
  require_valid(table);
  Calculus c(table);
  return rdp0(c);
}

PropertyResult has_rdp(const FiniteTable& table) {
  require_valid(table);
  Calculus c(table);
  return decomposition(c, nullptr);
}

PropertyResult has_rdp1(const FiniteTable& table) {
  require_valid(table);
  Calculus c(table);
  return decomposition(c, [&c](ElementId d2, ElementId d3) { return c.com(d2, d3); });
}

PropertyResult has_rdp2(const FiniteTable& table) {
  require_valid(table);
  Calculus c(table);
  return decomposition(c, [&c](ElementId d2, ElementId d3) { return c.meet_is_zero(d2, d3); });
}

PropertyResult check_property(const FiniteTable& table, RieszProperty p) {
  switch (p) {
    case RieszProperty::Rip:
      return has_rip(table);
    case RieszProperty::Rdp0:
      return has_rdp0(table);
    case RieszProperty::Rdp:
      return has_rdp(table);
    case RieszProperty::Rdp1:
      return has_rdp1(table);
    case RieszProperty::Rdp2:
      return has_rdp2(table);
  }
  throw StructuralError("unknown Riesz property");
}

RieszReport ladder_report(const FiniteTable& table) {
  require_valid(table);
  Calculus c(table);
  RieszReport report;
  report.rip = rip(c);
  report.rdp0 = rdp0(c);
  report.rdp = decomposition(c, nullptr);
  report.rdp1 = decomposition(c, [&c](ElementId d2, ElementId d3) { return c.com(d2, d3); });
  report.rdp2 = decomposition(c, [&c](ElementId d2, ElementId d3) { return c.meet_is_zero(d2, d3); });
  if (!report.ladder_consistent()) {
    throw ConsistencyError("Riesz results for '" + table.name() + "' violate the implication ladder");
  }
  return report;
}

std::vector<GroupElement> cone_window(const PoGroupPresentation& g, int lo, int hi) {
  std::vector<GroupElement> out;
  const int radius = std::max(std::abs(lo), std::abs(hi));
  for (auto& x : window_elements(g, radius)) {
    const bool in_box = std::all_of(x.coords.begin(), x.coords.end(),
                                    [&](std::int64_t v) { return v >= lo && v <= hi; });
    if (in_box && cone_membership(g, x) == Membership::Yes) out.push_back(std::move(x));
  }
  return out;
}

ConeWindowResult cone_rdp(const std::vector<GroupElement>& window, const PoGroupPresentation& g,
                          RieszProperty p) {
  ConeWindowResult result;
  const std::set<GroupElement> members(window.begin(), window.end());
  const GroupElement zero = zero_element(g);
  auto leq = [&](const GroupElement& x, const GroupElement& y) { return group_leq(g, x, y); };
  auto minus = [&](const GroupElement& x, const GroupElement& y) {  // −x + y, required in the window
    GroupElement d = add(g, neg(g, x), y);
    if (!members.count(d)) {
      throw WindowTooSmall("window lacks " + to_string(d) + " = -" + to_string(x) + " + " + to_string(y));
    }
    return d;
  };
  auto fail = [&](std::vector<GroupElement> w) {
    result.holds_on_window = false;
    result.witnesses.push_back(std::move(w));
    return result.witnesses.size() >= kMaxWitnesses;
  };
  auto below = [&](const GroupElement& x) {
    std::vector<GroupElement> out;
    for (const auto& y : window) {
      if (leq(y, x)) out.push_back(y);
    }
    return out;
  };
  // Group commutation of everything below x with everything below y.
  auto com = [&](const GroupElement& x, const GroupElement& y) {
    for (const auto& x1 : below(x)) {
      for (const auto& y1 : below(y)) {
        if (add(g, x1, y1) != add(g, y1, x1)) return false;
      }
    }
    return true;
  };
  // Window-relative: no nonzero window element lies below both.
  auto meet_zero = [&](const GroupElement& x, const GroupElement& y) {
    return std::none_of(window.begin(), window.end(), [&](const GroupElement& z) {
      return z != zero && leq(z, x) && leq(z, y);
    });
  };

  if (p == RieszProperty::Rip) {
    for (const auto& a1 : window)
      for (const auto& a2 : window)
        for (const auto& b1 : window) {
          if (!leq(a1, b1) || !leq(a2, b1)) continue;
          for (const auto& b2 : window) {
            if (!leq(a1, b2) || !leq(a2, b2)) continue;
            const bool found = std::any_of(window.begin(), window.end(), [&](const GroupElement& c) {
              return leq(a1, c) && leq(a2, c) && leq(c, b1) && leq(c, b2);
            });
            if (!found && fail({a1, a2, b1, b2})) return result;
          }
        }
    return result;
  }

  if (p == RieszProperty::Rdp0) {
    for (const auto& b1 : window)
      for (const auto& b2 : window) {
        const GroupElement s = add(g, b1, b2);
        for (const auto& a : window) {
          if (!leq(a, s)) continue;
          bool found = false;
          for (const auto& d1 : below(b1)) {
            if (!leq(d1, a)) continue;
            const GroupElement d2 = minus(d1, a);
            if (leq(d2, b2)) {
              found = true;
              break;
            }
          }
          if (!found && fail({a, b1, b2})) return result;
        }
      }
    return result;
  }

  std::map<GroupElement, std::vector<std::pair<GroupElement, GroupElement>>> by_sum;
  for (const auto& a1 : window)
    for (const auto& a2 : window) by_sum[add(g, a1, a2)].emplace_back(a1, a2);

  for (const auto& [sum, pairs] : by_sum) {
    for (const auto& [a1, a2] : pairs) {
      for (const auto& [b1, b2] : pairs) {
        bool found = false;
        for (const auto& d1 : below(a1)) {
          if (!leq(d1, b1)) continue;
          const GroupElement d2 = minus(d1, a1);
          const GroupElement d3 = minus(d1, b1);
          if (!leq(d3, a2)) continue;
          const GroupElement d4 = minus(d3, a2);
          if (add(g, d2, d4) != b2 || !cone_contains(g, d4)) continue;
          if (p == RieszProperty::Rdp1 && !com(d2, d3)) continue;
          if (p == RieszProperty::Rdp2 && !meet_zero(d2, d3)) continue;
          found = true;
          break;
        }
        if (!found && fail({a1, a2, b1, b2})) return result;
      }
    }
  }
  return result;
}

}  // namespace pealab
