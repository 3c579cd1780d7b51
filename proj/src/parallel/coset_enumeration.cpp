#include "tdual/parallel/coset_enumeration.hpp"

#include "tdual/errors.hpp"

namespace tdual {

namespace {

std::size_t finite_order(const FgGroup& g) {
  if (!g.is_finite()) throw ValidationError("cannot enumerate an infinite quotient " + g.to_string());
  const Int n = *g.order();
  if (!n.fits_ulong_p()) throw ValidationError("quotient too large to enumerate");
  return n.get_ui();
}

GroupElement representative(const Quotient& q, const FgGroup& ambient, std::size_t i) {
  return GroupElement(ambient, q.section.apply(quotient_element(q.group, i)));
}

}  // namespace

std::vector<Int> quotient_element(const FgGroup& finite, std::size_t i) {
  std::vector<Int> c;
  c.reserve(finite.torsion().size());
  for (const auto& d : finite.torsion()) {
    unsigned long m = d.get_ui();
    c.emplace_back(i % m);
    i /= m;
  }
  return c;
}

std::vector<GroupElement> coset_representatives_serial(const Quotient& q, const FgGroup& ambient) {
  const std::size_t n = finite_order(q.group);
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(representative(q, ambient, i));
  return out;
}

std::vector<GroupElement> coset_representatives(const Quotient& q, const FgGroup& ambient) {
  const std::size_t n = finite_order(q.group);
  std::vector<GroupElement> out(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = representative(q, ambient, static_cast<std::size_t>(i));
  return out;
}

}  // namespace tdual
