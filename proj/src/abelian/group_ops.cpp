#include "tdual/abelian/group_ops.hpp"

#include <algorithm>
#include <cctype>

#include "tdual/abelian/normal_forms.hpp"
#include "tdual/errors.hpp"

namespace tdual {

Quotient present(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  SmithForm s = smith_normal_form(relations);
  std::vector<std::size_t> free_idx, tors_idx;
  std::vector<Int> tors;
  for (std::size_t i = 0; i < n; ++i) {
    Int d = i < s.rank ? s.d(i, i) : Int(0);
    if (d == 0) {
      free_idx.push_back(i);
    } else if (d != 1) {
      tors_idx.push_back(i);
      tors.push_back(d);
    }
  }
  std::vector<std::size_t> order = free_idx;
  order.insert(order.end(), tors_idx.begin(), tors_idx.end());
  FgGroup g(free_idx.size(), std::move(tors));
  IntMatrix proj = s.u.select_rows(order);
  IntMatrix section = s.u_inv.select_columns(order);
  return Quotient{g, Hom(FgGroup::free(n), g, std::move(proj)), std::move(section)};
}

Quotient cokernel(const Hom& h) {
  const FgGroup& cod = h.codomain();
  Quotient q = present(IntMatrix::hstack(h.matrix(), cod.torsion_relations()));
  q.projection = Hom(cod, q.group, q.projection.matrix());
  return q;
}

Subgroup kernel(const Hom& h) {
  const FgGroup& dom = h.domain();
  const FgGroup& cod = h.codomain();
  const std::size_t n = dom.generator_count();
  IntMatrix m = IntMatrix::hstack(h.matrix(), cod.torsion_relations());
  IntMatrix kb = kernel_basis(m);
  IntMatrix gens = lattice_basis(kb.block(0, 0, n, kb.cols()));
  // torsion relations of the domain, rewritten in the lattice basis
  std::optional<IntMatrix> rel = solve(gens, dom.torsion_relations());
  if (!rel) throw MembershipFailure("kernel: domain relations outside the kernel lattice");
  Quotient q = present(*rel);
  IntMatrix incl = gens * q.section;
  return Subgroup{q.group, Hom(q.group, dom, std::move(incl))};
}

Subgroup image(const Hom& h) {
  Subgroup k = kernel(h);
  Quotient q = cokernel(k.inclusion);
  return Subgroup{q.group, Hom(q.group, h.codomain(), h.matrix() * q.section)};
}

Quotient quotient_by(const FgGroup& ambient, const std::vector<GroupElement>& gens) {
  IntMatrix m(ambient.generator_count(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].group() != ambient) throw MismatchedGroups("quotient generator outside the ambient group");
    m.set_column(j, gens[j].coords());
  }
  FgGroup src = FgGroup::free(gens.size());
  return cokernel(Hom(src, ambient, std::move(m)));
}

bool contains(const Subgroup& s, const GroupElement& x) {
  const FgGroup& amb = s.inclusion.codomain();
  if (x.group() != amb) throw MismatchedGroups("membership test against a different ambient group");
  IntMatrix a = IntMatrix::hstack(s.inclusion.matrix(), amb.torsion_relations());
  return solve(a, IntMatrix::from_column(x.coords())).has_value();
}

bool same_subgroup(const Subgroup& a, const Subgroup& b) {
  const FgGroup& amb = a.inclusion.codomain();
  if (amb != b.inclusion.codomain()) throw MismatchedGroups("subgroups of different groups");
  for (std::size_t j = 0; j < a.group.generator_count(); ++j)
    if (!contains(b, GroupElement(amb, a.inclusion.matrix().column(j)))) return false;
  for (std::size_t j = 0; j < b.group.generator_count(); ++j)
    if (!contains(a, GroupElement(amb, b.inclusion.matrix().column(j)))) return false;
  return true;
}

bool is_exact_at(const Hom& f, const Hom& g) {
  if (f.codomain() != g.domain())
    throw MismatchedGroups("exactness check: " + f.codomain().to_string() + " is not " +
                           g.domain().to_string());
  return same_subgroup(image(f), kernel(g));
}

bool is_isomorphism(const Hom& h) {
  return kernel(h).group.is_zero() && cokernel(h).group.is_zero();
}

std::optional<Int> element_order(const GroupElement& x) {
  const FgGroup& g = x.group();
  for (std::size_t i = 0; i < g.free_rank(); ++i)
    if (x.coords()[i] != 0) return std::nullopt;
  Int n = 1;
  for (std::size_t i = 0; i < g.torsion().size(); ++i) {
    const Int& d = g.torsion()[i];
    n = lcm(n, d / gcd(x.coords()[g.free_rank() + i], d));
  }
  return n;
}

std::optional<GroupElement> preimage(const Hom& h, const GroupElement& y) {
  if (y.group() != h.codomain()) throw MismatchedGroups("preimage target outside the codomain");
  IntMatrix a = IntMatrix::hstack(h.matrix(), h.codomain().torsion_relations());
  auto x = solve(a, IntMatrix::from_column(y.coords()));
  if (!x) return std::nullopt;
  std::vector<Int> c(h.domain().generator_count());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*x)(i, 0);
  return GroupElement(h.domain(), std::move(c));
}

DirectSum direct_sum(const FgGroup& a, const FgGroup& b) {
  const std::size_t na = a.generator_count();
  const std::size_t nb = b.generator_count();
  Quotient q = present(IntMatrix::block_diagonal(a.torsion_relations(), b.torsion_relations()));
  IntMatrix ia = IntMatrix::vstack(IntMatrix::identity(na), IntMatrix(nb, na));
  IntMatrix ib = IntMatrix::vstack(IntMatrix(na, nb), IntMatrix::identity(nb));
  DirectSum ds;
  ds.group = q.group;
  ds.inject_first = Hom(a, q.group, q.projection.matrix() * ia);
  ds.inject_second = Hom(b, q.group, q.projection.matrix() * ib);
  ds.project_first = Hom(q.group, a, q.section.block(0, 0, na, q.group.generator_count()));
  ds.project_second = Hom(q.group, b, q.section.block(na, 0, nb, q.group.generator_count()));
  return ds;
}

std::string combination_name(const std::vector<std::string>& names, const std::vector<Int>& coeffs) {
  if (names.size() != coeffs.size()) throw MismatchedGroups("name list and coefficients differ in length");
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Int& c = coeffs[i];
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    Int m = abs(c);
    if (m != 1) out += m.get_str() + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

std::vector<Int> parse_combination(const std::vector<std::string>& names, std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  std::vector<Int> out(names.size(), 0);
  if (t.empty()) throw ValidationError("empty class expression");
  if (t == "0") return out;
  std::size_t pos = 0;
  while (pos < t.size()) {
    int sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      if (t[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw ValidationError("malformed class expression '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    int depth = 0;
    while (end < t.size()) {
      char ch = t[end];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && (ch == '+' || ch == '-') && end > pos) break;
      ++end;
    }
    std::string term = t.substr(pos, end - pos);
    pos = end;
    Int coeff = 1;
    std::size_t star = term.find('*');
    if (star != std::string::npos && star > 0 &&
        std::all_of(term.begin(), term.begin() + static_cast<std::ptrdiff_t>(star),
                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      coeff = Int(term.substr(0, star));
      term = term.substr(star + 1);
    }
    auto it = std::find(names.begin(), names.end(), term);
    if (it == names.end()) {
      std::string known;
      for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
      throw ValidationError("unknown generator '" + term + "' (known: " + (known.empty() ? "none" : known) + ")");
    }
    out[static_cast<std::size_t>(it - names.begin())] += sign * coeff;
  }
  return out;
}

}  // namespace tdual
