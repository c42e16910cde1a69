#include "subsat/sat_to_qubo.hpp"

#include <stdexcept>
#include <string>

namespace subsat {

namespace {

// A literal as an affine form offset + sign * b_var.
struct Affine {
  std::size_t var;
  double offset;
  double sign;
};

Affine literal_form(const Literal& lit) {
  return lit.positive ? Affine{lit.var, 0.0, 1.0} : Affine{lit.var, 1.0, -1.0};
}

void add_affine(QuboBuilder& b, const Affine& a, double scale) {
  b.add_constant(scale * a.offset);
  b.add_linear(a.var, scale * a.sign);
}

// scale * a * b, expanded.
void add_product(QuboBuilder& b, const Affine& x, const Affine& y, double scale) {
  b.add_constant(scale * x.offset * y.offset);
  b.add_linear(y.var, scale * x.offset * y.sign);
  b.add_linear(x.var, scale * y.offset * x.sign);
  b.add_quadratic(x.var, y.var, scale * x.sign * y.sign);
}

}  // namespace

std::size_t count_aux_clauses(const CnfFormula& formula) {
  std::size_t count = 0;
  for (ClauseId c = 0; c < formula.num_clauses(); ++c) {
    if (formula.clause(c).size() == 3) ++count;
  }
  return count;
}

QuboProblem cnf_to_qubo(const CnfFormula& formula) {
  const std::size_t n = formula.num_variables();
  const std::size_t size = n + count_aux_clauses(formula);
  QuboBuilder b(size);
  std::vector<QuboVarTag> roles(size);
  for (std::size_t i = 0; i < n; ++i) roles[i] = {QuboRole::kSatVar, static_cast<std::uint32_t>(i)};

  std::size_t next_aux = n;
  for (ClauseId c = 0; c < formula.num_clauses(); ++c) {
    auto lits = formula.clause(c);
    switch (lits.size()) {
      case 1: {
        b.add_constant(1.0);
        add_affine(b, literal_form(lits[0]), -1.0);
        break;
      }
      case 2: {
        // (1 - l1)(1 - l2) = 1 - l1 - l2 + l1 l2
        const Affine l1 = literal_form(lits[0]);
        const Affine l2 = literal_form(lits[1]);
        b.add_constant(1.0);
        add_affine(b, l1, -1.0);
        add_affine(b, l2, -1.0);
        add_product(b, l1, l2, 1.0);
        break;
      }
      case 3: {
        const std::size_t w = next_aux++;
        roles[w] = {QuboRole::kAux, c};
        const Affine l[3] = {literal_form(lits[0]), literal_form(lits[1]), literal_form(lits[2])};
        const Affine aux{w, 0.0, 1.0};
        // 1 - (l1 + l2 + l3) - w (l1 + l2 + l3) + l1 l2 + l1 l3 + l2 l3 + 2w
        b.add_constant(1.0);
        for (const Affine& li : l) {
          add_affine(b, li, -1.0);
          add_product(b, aux, li, -1.0);
        }
        add_product(b, l[0], l[1], 1.0);
        add_product(b, l[0], l[2], 1.0);
        add_product(b, l[1], l[2], 1.0);
        b.add_linear(w, 2.0);
        break;
      }
      default:
        throw std::invalid_argument("clause " + std::to_string(c) + " has " +
                                    std::to_string(lits.size()) + " literals");
    }
  }
  b.set_roles(std::move(roles));
  return b.build();
}

Bits encode_assignment(const CnfFormula& formula, const QuboProblem& q, const Assignment& x) {
  if (x.size() != formula.num_variables()) {
    throw std::invalid_argument("assignment size does not match formula");
  }
  Bits bits(q.size(), 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const QuboVarTag tag = q.roles()[i];
    if (tag.role == QuboRole::kSatVar) {
      bits[i] = x[tag.index];
      continue;
    }
    int true_literals = 0;
    for (const Literal& lit : formula.clause(tag.index)) {
      if (lit.satisfied_by(x[lit.var] != 0)) ++true_literals;
    }
    // w = 1 is required with three true literals and harmless with two.
    bits[i] = true_literals >= 2 ? 1 : 0;
  }
  return bits;
}

Assignment decode_bits(const QuboProblem& q, std::span<const std::uint8_t> bits,
                       std::size_t num_variables) {
  if (bits.size() != q.size() || q.roles().size() != q.size()) {
    throw std::invalid_argument("bit vector or role map does not match QUBO size");
  }
  Assignment x(num_variables, 0);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const QuboVarTag tag = q.roles()[i];
    if (tag.role != QuboRole::kSatVar) continue;
    if (tag.index >= num_variables) {
      throw std::invalid_argument("role map references variable " + std::to_string(tag.index));
    }
    x[tag.index] = bits[i];
    ++seen;
  }
  if (seen != num_variables) {
    throw std::invalid_argument("role map covers " + std::to_string(seen) + " of " +
                                std::to_string(num_variables) + " variables");
  }
  return x;
}

}  // namespace subsat
