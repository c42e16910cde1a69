#include "subsat/qubo.hpp"

#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace subsat {

std::size_t QuboProblem::nonzeros() const {
  std::size_t count = quadratic_.size();
  for (double c : linear_) {
    if (c != 0.0) ++count;
  }
  return count;
}

QuboBuilder::QuboBuilder(std::size_t size) : linear_(size, 0.0) {}

void QuboBuilder::add_linear(std::size_t i, double c) {
  if (i >= linear_.size()) throw std::out_of_range("QUBO index out of range");
  linear_[i] += c;
}

void QuboBuilder::add_quadratic(std::size_t i, std::size_t j, double c) {
  if (i >= linear_.size() || j >= linear_.size()) {
    throw std::out_of_range("QUBO index out of range");
  }
  if (i == j) {
    linear_[i] += c;
    return;
  }
  if (i > j) std::swap(i, j);
  quadratic_[{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}] += c;
}

void QuboBuilder::set_roles(std::vector<QuboVarTag> roles) {
  if (!roles.empty() && roles.size() != linear_.size()) {
    throw std::invalid_argument("role map size does not match QUBO size");
  }
  roles_ = std::move(roles);
}

QuboProblem QuboBuilder::build() const {
  QuboProblem q;
  q.constant_ = constant_;
  q.linear_ = linear_;
  q.roles_ = roles_;
  std::vector<std::size_t> degree(linear_.size(), 0);
  for (const auto& [key, coeff] : quadratic_) {
    if (coeff == 0.0) continue;
    q.quadratic_.push_back(QuboTerm{key.first, key.second, coeff});
    ++degree[key.first];
    ++degree[key.second];
  }
  q.adj_offsets_.assign(linear_.size() + 1, 0);
  for (std::size_t i = 0; i < linear_.size(); ++i) {
    q.adj_offsets_[i + 1] = q.adj_offsets_[i] + degree[i];
  }
  q.adjacency_.resize(q.adj_offsets_.back());
  std::vector<std::size_t> cursor(q.adj_offsets_.begin(), q.adj_offsets_.end() - 1);
  for (const QuboTerm& t : q.quadratic_) {
    q.adjacency_[cursor[t.i]++] = QuboNeighbour{t.j, t.coeff};
    q.adjacency_[cursor[t.j]++] = QuboNeighbour{t.i, t.coeff};
  }
  return q;
}

double qubo_energy(const QuboProblem& q, std::span<const std::uint8_t> bits) {
  if (bits.size() != q.size()) {
    throw std::invalid_argument("bit vector has " + std::to_string(bits.size()) +
                                " entries, QUBO has " + std::to_string(q.size()));
  }
  double e = q.constant();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) e += q.linear(i);
  }
  for (const QuboTerm& t : q.quadratic()) {
    if (bits[t.i] && bits[t.j]) e += t.coeff;
  }
  return e;
}

double qubo_flip_delta(const QuboProblem& q, std::span<const std::uint8_t> bits, std::size_t i) {
  double field = q.linear(i);
  for (const QuboNeighbour& nb : q.neighbours(i)) {
    if (bits[nb.var]) field += nb.coeff;
  }
  return bits[i] ? -field : field;
}

void write_qubo(const QuboProblem& q, std::ostream& out) {
  std::ostringstream body;
  body << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.linear(i) != 0.0) body << i << ' ' << i << ' ' << q.linear(i) << '\n';
  }
  for (const QuboTerm& t : q.quadratic()) body << t.i << ' ' << t.j << ' ' << t.coeff << '\n';
  std::ostringstream header;
  header << std::setprecision(std::numeric_limits<double>::max_digits10);
  header << "q " << q.size() << ' ' << q.nonzeros() << ' ' << q.constant() << '\n';
  out << header.str() << body.str();
}

QuboProblem read_qubo(std::istream& in) {
  std::string tag;
  std::size_t size = 0;
  std::size_t nnz = 0;
  double constant = 0.0;
  if (!(in >> tag >> size >> nnz >> constant) || tag != "q") {
    throw std::invalid_argument("malformed QUBO header");
  }
  QuboBuilder builder(size);
  builder.add_constant(constant);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t i = 0;
    std::size_t j = 0;
    double c = 0.0;
    if (!(in >> i >> j >> c)) throw std::invalid_argument("truncated QUBO body");
    if (i >= size || j >= size) throw std::invalid_argument("QUBO index out of range");
    builder.add_quadratic(i, j, c);
  }
  return builder.build();
}

}  // namespace subsat
